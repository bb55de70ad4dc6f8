#include "twistforge/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace twistforge {

bool is_zero(const ScalarVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

ScalarVector Echelon::reduce(ScalarVector v) const {
  if (v.size() != width_) throw std::invalid_argument("Echelon: vector width mismatch");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Scalar f = v[pivots_[r]];
    if (f.is_zero()) continue;
    for (std::size_t c = 0; c < width_; ++c)
      if (!rows_[r][c].is_zero()) v[c] -= f * rows_[r][c];
  }
  return v;
}

bool Echelon::contains(const ScalarVector& v) const { return is_zero(reduce(v)); }

bool Echelon::insert(ScalarVector v) {
  v = reduce(std::move(v));
  auto lead = std::find_if(v.begin(), v.end(), [](const Scalar& s) { return !s.is_zero(); });
  if (lead == v.end()) return false;
  std::size_t p = static_cast<std::size_t>(lead - v.begin());
  const Scalar inv = Scalar(1) / v[p];
  for (auto& x : v)
    if (!x.is_zero()) x *= inv;
  // Clear the new pivot column from the existing rows.
  for (auto& row : rows_) {
    const Scalar f = row[p];
    if (f.is_zero()) continue;
    for (std::size_t c = 0; c < width_; ++c)
      if (!v[c].is_zero()) row[c] -= f * v[c];
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p);
  auto idx = pos - pivots_.begin();
  pivots_.insert(pos, p);
  rows_.insert(rows_.begin() + idx, std::move(v));
  return true;
}

}  // namespace twistforge
