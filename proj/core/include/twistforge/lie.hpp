#ifndef TWISTFORGE_LIE_HPP
#define TWISTFORGE_LIE_HPP

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "twistforge/gaussian_rational.hpp"
#include "twistforge/linalg.hpp"
#include "twistforge/scalar.hpp"

namespace twistforge {

class InvalidAlgebra : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class AlgebraMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class AlgebraFamily { Generic, Lorentz, Poincare };

/// Sparse vector over basis indices with constant coefficients.
using ConstTerms = std::vector<std::pair<int, GaussianRational>>;

/// Finite-dimensional Lie algebra given by constant structure constants.
///
/// The basis order doubles as the PBW order. Instances are immutable and are
/// shared through std::shared_ptr; elements compare algebras by identity.
class LieAlgebra {
 public:
  class Builder;

  const std::string& name() const { return name_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<std::string>& basis() const { return basis_; }
  const std::string& generator_name(int j) const { return basis_.at(static_cast<std::size_t>(j)); }
  std::optional<int> find(std::string_view generator) const;
  int index(std::string_view generator) const;  // throws std::out_of_range

  /// [g_j, g_k] as sparse terms.
  const ConstTerms& bracket(int j, int k) const { return table_[cell(j, k)]; }
  GaussianRational structure_constant(int j, int k, int l) const;

  bool has_star() const { return !star_.empty(); }
  /// Image of g_j under the star map.
  const ConstTerms& star(int j) const;

  const std::vector<int>& grading() const { return grading_; }
  AlgebraFamily family() const { return family_; }
  /// Generators spanning the abelian momentum ideal (Poincare family only).
  const std::vector<bool>& momentum_mask() const { return momentum_; }
  bool is_momentum(int j) const { return !momentum_.empty() && momentum_[static_cast<std::size_t>(j)]; }

  /// One line per nonzero constant c_{jk}^l with j < k: "[a, b] = c*g".
  std::string structure_table() const;

 private:
  LieAlgebra() = default;
  std::size_t cell(int j, int k) const { return static_cast<std::size_t>(j * dim() + k); }

  std::string name_;
  std::vector<std::string> basis_;
  std::vector<ConstTerms> table_;
  std::vector<ConstTerms> star_;
  std::vector<int> grading_;
  std::vector<bool> momentum_;
  AlgebraFamily family_ = AlgebraFamily::Generic;
};

using AlgebraPtr = std::shared_ptr<const LieAlgebra>;

class LieAlgebra::Builder {
 public:
  Builder(std::string name, std::vector<std::string> basis);
  /// Starts from a copy of an existing algebra.
  explicit Builder(const LieAlgebra& base);

  /// Sets [a, b] (and [b, a] with the opposite sign).
  Builder& bracket(std::string_view a, std::string_view b, const std::vector<std::pair<std::string, GaussianRational>>& terms);
  Builder& bracket(int j, int k, ConstTerms terms);
  Builder& star(std::string_view g, const std::vector<std::pair<std::string, GaussianRational>>& terms);
  Builder& star(int j, ConstTerms terms);
  Builder& grading(std::vector<int> degrees);
  Builder& family(AlgebraFamily f);
  Builder& momenta(const std::vector<std::string>& names);

  /// With validate set, throws InvalidAlgebra unless Jacobi, the star
  /// involution/anti-automorphism property and the grading bound all hold.
  AlgebraPtr build(bool validate = true) const;

 private:
  int idx(std::string_view g) const;
  ConstTerms terms(const std::vector<std::pair<std::string, GaussianRational>>& t) const;
  LieAlgebra a_;
};

/// Element of a Lie algebra: sparse map generator index -> Scalar.
class LieElement {
 public:
  explicit LieElement(AlgebraPtr algebra) : algebra_(std::move(algebra)) {}
  static LieElement generator(const AlgebraPtr& algebra, std::string_view name);
  static LieElement generator(const AlgebraPtr& algebra, int j);

  const AlgebraPtr& algebra() const { return algebra_; }
  const std::map<int, Scalar>& coeffs() const { return coeffs_; }
  Scalar coeff(int j) const;
  bool is_zero() const { return coeffs_.empty(); }

  void add_term(int j, const Scalar& c);
  LieElement& operator+=(const LieElement& o);
  LieElement& operator-=(const LieElement& o);
  LieElement& operator*=(const Scalar& c);
  friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
  friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
  friend LieElement operator*(const Scalar& c, LieElement a) { return a *= c; }
  LieElement operator-() const;

  friend bool operator==(const LieElement& a, const LieElement& b) {
    return a.algebra_ == b.algebra_ && a.coeffs_ == b.coeffs_;
  }

  ScalarVector to_vector() const;
  static LieElement from_vector(const AlgebraPtr& algebra, const ScalarVector& v);

  std::string to_string() const;

 private:
  AlgebraPtr algebra_;
  std::map<int, Scalar> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const LieElement& x);

void require_same_algebra(const AlgebraPtr& a, const AlgebraPtr& b, std::string_view what);

LieElement bracket(const LieElement& x, const LieElement& y);
/// Antilinear star map; parameters conjugate according to their reality flags.
LieElement star(const LieElement& x, const RealityMap& overrides = {});

struct JacobiReport {
  bool ok = true;
  std::vector<std::array<int, 3>> failures;  // lexicographic order
  ConstTerms first_witness;                  // cyclic sum for failures.front()
  std::string witness_text;
};

JacobiReport check_jacobi(const LieAlgebra& a);

struct GradingViolation {
  int j, k, l;
};

/// Generators l with c_{jk}^l != 0 and deg(l) < deg(j) + deg(k).
std::vector<GradingViolation> check_grading(const LieAlgebra& a, const std::vector<int>& degrees);

/// Echelonized basis of the subalgebra generated by the given elements.
std::vector<LieElement> subalgebra_closure(const std::vector<LieElement>& generators);
/// Echelonized basis of the linear span.
std::vector<LieElement> linear_span(const std::vector<LieElement>& elements);

/// Change of basis between two algebras realizing the same Lie algebra.
class BasisMap {
 public:
  /// forward[j]: image of source generator j in the target algebra;
  /// backward[k]: image of target generator k in the source algebra.
  BasisMap(std::string name, AlgebraPtr source, AlgebraPtr target, std::vector<LieElement> forward,
           std::vector<LieElement> backward);

  const std::string& name() const { return name_; }
  const AlgebraPtr& source() const { return source_; }
  const AlgebraPtr& target() const { return target_; }
  const std::vector<LieElement>& forward() const { return forward_; }
  const std::vector<LieElement>& backward() const { return backward_; }

  LieElement apply(const LieElement& x) const;
  LieElement apply_inverse(const LieElement& y) const;
  /// Both round trips are the identity on basis elements.
  bool is_consistent() const;

 private:
  std::string name_;
  AlgebraPtr source_, target_;
  std::vector<LieElement> forward_, backward_;
};

/// Structure constants, star images and momentum mask of `base` re-expressed
/// in a new basis b_a = images[a] (elements of `base`).
LieAlgebra::Builder transport(const AlgebraPtr& base, std::string name, std::vector<std::string> names,
                              const std::vector<LieElement>& images);

}  // namespace twistforge

#endif  // TWISTFORGE_LIE_HPP
