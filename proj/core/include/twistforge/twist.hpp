#ifndef TWISTFORGE_TWIST_HPP
#define TWISTFORGE_TWIST_HPP

#include <optional>
#include <string>
#include <vector>

#include "twistforge/recipe.hpp"
#include "twistforge/rmatrix.hpp"

namespace twistforge {

/// One exponential factor exp(argument) of a twist.
struct TwistFactor {
  std::string label;
  TExpr argument;
};

/// Ordered factors, leftmost first: F = F_1 F_2 ... F_k.
using TwistPlan = std::vector<TwistFactor>;

std::string to_string(const TwistPlan& plan);

struct Twist {
  std::vector<std::string> labels;
  std::vector<Series> factors;
  Series value;
};

/// Evaluates every factor at order N; a factor whose argument is not of
/// hbar-valuation >= 1 raises ValuationError naming the factor.
Twist build_twist(const TwistPlan& plan, const AlgebraPtr& algebra, const SpecializationMap& m, int order);

/// exp(xi sum x_i (x) y_i exp(-2 t_i sigma)) exp(2 x0 (x) sigma), sigma = log1p(xi y0)/2.
TwistPlan jordanian_twist_plan(const JordanianData& d);
/// exp(1/2 sum x_i ^ y_i) for r = sum y_i ^ x_i.
TwistPlan abelian_twist_plan(const std::vector<std::pair<LieElement, LieElement>>& xy);

struct SeriesCheck {
  bool pass = true;
  int order = 0;
  int failing_degree = -1;
  std::string witness;
};

/// Compares two series degree by degree.
SeriesCheck compare_series(const Series& lhs, const Series& rhs);

/// F^12 (Delta (x) id)(F) = F^23 (id (x) Delta)(F).
SeriesCheck cocycle_check(const Series& f);
/// (eps (x) id)(F) = (id (x) eps)(F) = 1.
SeriesCheck counit_check(const Series& f);

/// F Delta(x) F^{-1} for a rank-1 series x.
Series twisted_coproduct(const Series& f, const Series& x);
/// Delta^F applied to slot `slot` of a rank-2 series t.
Series twisted_coproduct_on_slot(const Series& f, const Series& t, int slot);
/// Coassociativity of Delta^F on x.
SeriesCheck twisted_coassociativity_check(const Series& f, const Series& x);
/// Delta^F(ab) = Delta^F(a) Delta^F(b).
SeriesCheck twisted_homomorphism_check(const Series& f, const Series& a, const Series& b);
/// Homomorphism on every pair of generators and coassociativity on every
/// generator; F^-1 and the generator images are computed once.
SeriesCheck twisted_bialgebra_check(const Series& f);

/// u = sum f1 S(f2).
Series u_element(const Series& f);
/// u S(x) u^{-1}.
Series twisted_antipode(const Series& f, const Series& x);
/// m (S^F (x) id) Delta^F(x) = eps(x) 1.
SeriesCheck twisted_antipode_check(const Series& f, const Series& x);

/// (w^{-1} (x) w^{-1}) F Delta(w) with w = sqrt(u).
Series omega_conjugate(const Series& f);

struct SymmetryVerdict {
  bool symmetric = false;
  GaussianRational c;
  std::string detail;
};

/// Degree-1 part of F against the degree-1 part of the specialized r.
SymmetryVerdict local_r_symmetry_check(const Series& f, const Bivector& r, const SpecializationMap& m);

/// 1 + sum_k (a hbar)^k/k! x(x-1)...(x-k+1) (x) y^k, a = alpha constant.
Series binomial_jordanian(const AlgebraPtr& algebra, int x, int y, const GaussianRational& alpha, int order);

/// Rank-1 series of a single generator at hbar-degree 0.
Series generator_series(const AlgebraPtr& algebra, int g, int order);

}  // namespace twistforge

#endif  // TWISTFORGE_TWIST_HPP
