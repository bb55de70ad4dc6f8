#ifndef TWISTFORGE_RMATRIX_HPP
#define TWISTFORGE_RMATRIX_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "twistforge/lie.hpp"

namespace twistforge {

/// Antisymmetric two-tensor sum c_jk g_j ^ g_k (j < k), x ^ y := x(x)y - y(x)x.
class Bivector {
 public:
  using Key = std::pair<int, int>;

  explicit Bivector(AlgebraPtr algebra) : algebra_(std::move(algebra)) {}
  static Bivector wedge(const LieElement& x, const LieElement& y);

  const AlgebraPtr& algebra() const { return algebra_; }
  const std::map<Key, Scalar>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of g_j ^ g_k for any j, k (antisymmetric).
  Scalar coeff(int j, int k) const;

  /// Adds c * g_j ^ g_k (any order; j == k is ignored).
  void add_term(int j, int k, const Scalar& c);
  Bivector& operator+=(const Bivector& o);
  Bivector& operator-=(const Bivector& o);
  Bivector& operator*=(const Scalar& c);
  friend Bivector operator+(Bivector a, const Bivector& b) { return a += b; }
  friend Bivector operator-(Bivector a, const Bivector& b) { return a -= b; }
  friend Bivector operator*(const Scalar& c, Bivector a) { return a *= c; }
  Bivector operator-() const;
  friend bool operator==(const Bivector& a, const Bivector& b) {
    return a.algebra_ == b.algebra_ && a.coeffs_ == b.coeffs_;
  }

  /// Replaces a parameter by a value in every coefficient.
  Bivector substitute(int symbol, const Scalar& value) const;
  /// Terms whose two legs satisfy the predicate.
  template <class Pred>
  Bivector filter(Pred keep) const {
    Bivector out(algebra_);
    for (const auto& [k, c] : coeffs_)
      if (keep(k.first, k.second)) out.coeffs_.emplace(k, c);
    return out;
  }

  /// Echelonized basis of the span of the legs (rows of the coefficient matrix).
  std::vector<LieElement> legs() const;

  std::string to_string() const;

 private:
  AlgebraPtr algebra_;
  std::map<Key, Scalar> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Bivector& r);

/// Alternating three-tensor over sorted generator triples.
class Trivector {
 public:
  using Key = std::array<int, 3>;

  explicit Trivector(AlgebraPtr algebra) : algebra_(std::move(algebra)) {}
  static Trivector wedge(const LieElement& x, const LieElement& y, const LieElement& z);

  const AlgebraPtr& algebra() const { return algebra_; }
  const std::map<Key, Scalar>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  Scalar coeff(int i, int j, int k) const;

  /// Adds c * g_i ^ g_j ^ g_k in any order.
  void add_term(int i, int j, int k, const Scalar& c);
  Trivector& operator+=(const Trivector& o);
  Trivector& operator-=(const Trivector& o);
  Trivector& operator*=(const Scalar& c);
  friend Trivector operator+(Trivector a, const Trivector& b) { return a += b; }
  friend Trivector operator-(Trivector a, const Trivector& b) { return a -= b; }
  friend Trivector operator*(const Scalar& c, Trivector a) { return a *= c; }
  friend bool operator==(const Trivector& a, const Trivector& b) {
    return a.algebra_ == b.algebra_ && a.coeffs_ == b.coeffs_;
  }

  std::string to_string() const;

 private:
  AlgebraPtr algebra_;
  std::map<Key, Scalar> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Trivector& t);

/// delta_x(r) = [x (x) 1 + 1 (x) x, r].
Bivector adjoint_action(const LieElement& x, const Bivector& r);
Trivector adjoint_action(const LieElement& x, const Trivector& t);

/// Schouten bracket of bivectors:
/// [[X^Y, Z^W]] = [X,Z]^Y^W - [X,W]^Y^Z - [Y,Z]^X^W + [Y,W]^X^Z.
Trivector schouten(const Bivector& r1, const Bivector& r2);

/// True when every generator annihilates t under the adjoint action.
bool is_ad_invariant(const Trivector& t);

enum class CybeKind { Homogeneous, Modified, NotCYBE };
std::string to_string(CybeKind k);

struct CybeVerdict {
  CybeKind kind;
  Trivector omega;  // [[r, r]]
  bool invariant;   // ad-invariance of omega
};

CybeVerdict cybe_classify(const Bivector& r);

struct AbcDecomposition {
  Bivector a, b, c;  // momentum^momentum, momentum^Lorentz, Lorentz^Lorentz
};

/// Splits a Poincare bivector by the momentum ideal; throws for other algebras.
AbcDecomposition decompose_abc(const Bivector& r);

struct ConditionResult {
  bool pass;
  Trivector witness;
};

struct ZakrzewskiReport {
  ConditionResult cc;  // [[c, c]] = 0
  ConditionResult bc;  // [[b, c]] = 0
  ConditionResult ac_bb;  // 2[[a, c]] + [[b, b]] ad-invariant (zero allowed)
  ConditionResult ab; // [[a, b]] = 0
  bool all_pass() const { return cc.pass && bc.pass && ac_bb.pass && ab.pass; }
};

ZakrzewskiReport check_zakrzewski_conditions(const Bivector& r);

/// Subalgebra generated by the legs of r.
std::vector<LieElement> support(const Bivector& r);
/// r1 > r2: the support of r2 acts trivially on r1.
bool is_subordinated(const Bivector& r1, const Bivector& r2);
/// Support of r is abelian.
bool is_abelian_type(const Bivector& r);

enum class StarLifting { Direct, Flipped };

/// Applies the star structure legwise under the chosen lifting.
Bivector star(const Bivector& r, StarLifting lifting, const RealityMap& overrides = {});
/// r* = -r.
bool star_reality_check(const Bivector& r, StarLifting lifting, const RealityMap& overrides = {});

struct JordanianPair {
  LieElement x, y;
  Scalar t;
};

/// Data x0, y0, (x_i, y_i, t_i) and deformation parameter xi of a
/// Jordanian-type r-matrix xi * sum_nu y_nu ^ x_nu.
struct JordanianData {
  LieElement x0, y0;
  std::vector<JordanianPair> pairs;
  Scalar xi;
};

struct JordanianCheck {
  bool pass;
  std::string failed_relation;  // empty on success
  std::string witness;
};

/// Relation labels, in the order they are checked.
const std::vector<std::string>& jordanian_relation_labels();

/// Checks the commutation relations of the data and that
/// xi * sum y_nu ^ x_nu equals r.
JordanianCheck verify_jordanian_data(const JordanianData& d, const Bivector& r);

}  // namespace twistforge

#endif  // TWISTFORGE_RMATRIX_HPP
