#ifndef TWISTFORGE_LINALG_HPP
#define TWISTFORGE_LINALG_HPP

#include <vector>

#include "twistforge/scalar.hpp"

namespace twistforge {

using ScalarVector = std::vector<Scalar>;

/// Incrementally maintained reduced row echelon form over the scalar field.
class Echelon {
 public:
  explicit Echelon(std::size_t width) : width_(width) {}

  std::size_t width() const { return width_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<ScalarVector>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Residue of v after elimination against the stored rows.
  ScalarVector reduce(ScalarVector v) const;
  bool contains(const ScalarVector& v) const;
  /// Adds v; returns false when v was already in the span.
  bool insert(ScalarVector v);

 private:
  std::size_t width_;
  std::vector<ScalarVector> rows_;  // sorted by pivot column
  std::vector<std::size_t> pivots_;
};

bool is_zero(const ScalarVector& v);

}  // namespace twistforge

#endif  // TWISTFORGE_LINALG_HPP
