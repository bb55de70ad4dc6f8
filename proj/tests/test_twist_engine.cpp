#include <doctest.h>

#include "generators.hpp"
#include "twistforge/builtins.hpp"
#include "twistforge/catalog.hpp"
#include "twistforge/twist.hpp"

using namespace twistforge;

namespace {

LieElement G(const AlgebraPtr& a, const char* n) { return LieElement::generator(a, n); }
Scalar P(const char* n) { return Scalar::param(n); }
const Scalar kHalf = Scalar::fraction(1, 2);

// hbar * (random element of U(g)) + hbar^2 * (another)
Series small_series(gen::Gen& g, const AlgebraPtr& a, int order) {
  Series s(a, 1, order);
  for (int d = 1; d <= std::min(order, 2); ++d) s.at(d) = g.u_element(a, 1, 2);
  return s;
}

Series one(const AlgebraPtr& a, int rank, int order) { return Series::unit(a, rank, order); }

GaussianRational constant(const char* name) {
  return SpecializationMap::defaults().at(SymbolTable::index(name)).constant;
}

Series lorentz_r1_twist(int order) {
  const CatalogEntry& e = find_entry("L1");
  return build_twist(*e.twist, e.algebra, SpecializationMap::defaults(), order).value;
}

AlgebraPtr synthetic_jordanian(const GaussianRational& t) {
  LieAlgebra::Builder b("jordanian-t", {"x0", "y0", "x1", "y1"});
  b.bracket("x0", "y0", {{"y0", 1}})
      .bracket("x0", "y1", {{"y1", t}})
      .bracket("x0", "x1", {{"x1", GaussianRational(1) - t}})
      .bracket("x1", "y1", {{"y0", 1}});
  return b.build();
}

}  // namespace

TEST_CASE("series functions invert each other") {
  gen::Gen g(51);
  AlgebraPtr l = lorentz();
  for (int trial = 0; trial < 8; ++trial) {
    Series s = small_series(g, l, 4);
    Series e = series_function(SeriesKind::Exp, s);
    CHECK(series_function(SeriesKind::Log1p, e - one(l, 1, 4)) == s);
    Series r = series_function(SeriesKind::Sqrt1p, s);
    CHECK(r * r == one(l, 1, 4) + s);
    CHECK(series_function(SeriesKind::GeomInv, s) * (one(l, 1, 4) + s) == one(l, 1, 4));
    CHECK(inverse(e) * e == one(l, 1, 4));
    CHECK(e * inverse(e) == one(l, 1, 4));
  }
}

TEST_CASE("arctan matches its Maclaurin series on a single generator") {
  AlgebraPtr l = lorentz();
  UElement x = UElement::generator(l, l->index("h"));
  Series s = Series::monomial(x, 1, 7);
  Series at = series_function(SeriesKind::Arctan, s);
  UElement pow = x;
  for (int k = 0; 2 * k + 1 <= 7; ++k) {
    CHECK(at[2 * k + 1] == pow * GaussianRational(mpq_class(k % 2 ? -1 : 1, 2 * k + 1)));
    pow = pow * x * x;
  }
  for (int d = 0; d <= 7; d += 2) CHECK(at[d].is_zero());
}

TEST_CASE("series product is associative and truncates to the smaller order") {
  gen::Gen g(52);
  AlgebraPtr p = poincare();
  for (int trial = 0; trial < 8; ++trial) {
    Series a = one(p, 1, 3) + small_series(g, p, 3), b = small_series(g, p, 3), c = small_series(g, p, 3);
    CHECK((a * b) * c == a * (b * c));
  }
  Series a3 = one(p, 1, 3), a5 = one(p, 1, 5);
  CHECK((a3 * a5).order() == 3);
}

TEST_CASE("valuation errors") {
  AlgebraPtr l = lorentz();
  Series s = one(l, 1, 3);
  CHECK_THROWS_AS(series_function(SeriesKind::Exp, s), ValuationError);
  CHECK_THROWS_AS(inverse(s * GaussianRational(2)), ValuationError);
  SpecializationMap m = SpecializationMap::defaults();
  m.set("alpha", GaussianRational::fraction(2, 3), 0);
  const CatalogEntry& e = find_entry("L1");
  try {
    build_twist(*e.twist, e.algebra, m, 3);
    FAIL("expected a valuation error");
  } catch (const ValuationError& err) {
    CHECK(std::string(err.what()).find("factor F") == 0);
  }
}

TEST_CASE("recipe evaluation") {
  AlgebraPtr l = lorentz();
  SpecializationMap m = SpecializationMap::defaults();
  EvalContext ctx(l, m);
  UExpr x = u_lie(P("alpha") * G(l, "e+"));
  Series sx = ctx.eval(x, 3);
  CHECK(sx[1] == UElement::generator(l, l->index("e+")) * constant("alpha"));
  CHECK(sx[0].is_zero());
  // a shared node evaluates once and gives the same value in every position
  UExpr sq = u_product({x, x});
  CHECK(ctx.eval(sq, 3) == sx * sx);
  // scale by a Laurent coefficient: (beta/alpha) * (alpha e+) = beta e+
  UExpr scaled = u_scale(P("beta") / P("alpha"), x);
  CHECK(ctx.eval(scaled, 3) == ctx.eval(u_lie(P("beta") * G(l, "e+")), 3));
  // 1/alpha * e+ keeps a negative power of hbar
  CHECK_THROWS_AS(ctx.eval(u_scale(Scalar(1) / P("alpha"), u_lie(G(l, "e+"))), 3), ValuationError);
  CHECK(to_string(u_sum({x, u_scale(-1, x)})) == "alpha*e+ - alpha*e+");
}

TEST_CASE("twist two-tensors: wedge, otimes and exponentials") {
  AlgebraPtr l = lorentz();
  SpecializationMap m = SpecializationMap::defaults();
  EvalContext ctx(l, m);
  UExpr a = u_lie(P("alpha") * G(l, "h")), b = u_lie(P("beta") * G(l, "h'"));
  Series w = ctx.eval(t_wedge(a, b), 3);
  CHECK(w == ctx.eval(t_otimes(a, b), 3) - ctx.eval(t_otimes(b, a), 3));
  CHECK(flip(w) == -w);
  Series e = ctx.eval(t_exp(t_wedge(a, b)), 3);
  CHECK(e == series_function(SeriesKind::Exp, w));
}

TEST_CASE("Abelian twist is a cocycle with degree-one part -r/2") {
  AlgebraPtr p = poincare();
  SpecializationMap m = SpecializationMap::defaults();
  LieElement x = P("alpha1") * G(p, "P1"), y = G(p, "P2");
  TwistPlan plan = abelian_twist_plan({{x, y}});
  Twist t = build_twist(plan, p, m, 4);
  CHECK(cocycle_check(t.value).pass);
  CHECK(counit_check(t.value).pass);
  Bivector r = Bivector::wedge(y, x);
  SymmetryVerdict v = local_r_symmetry_check(t.value, r, m);
  CHECK(v.symmetric);
  CHECK(v.c == GaussianRational::fraction(-1, 2));
  CHECK(t.value[0] == UElement::unit(p, 2));
}

TEST_CASE("non-abelian legs break the cocycle condition") {
  AlgebraPtr l = lorentz();
  SpecializationMap m = SpecializationMap::defaults();
  TwistPlan plan = {{"bad", t_wedge(u_lie(P("alpha") * G(l, "h")), u_lie(G(l, "e-")))}};
  SeriesCheck c = cocycle_check(build_twist(plan, l, m, 2).value);
  CHECK_FALSE(c.pass);
  CHECK(c.failing_degree == 2);
  CHECK_FALSE(c.witness.empty());
}

TEST_CASE("Lorentz Jordanian twist: closed forms") {
  const int N = 5;
  AlgebraPtr l = lorentz();
  SpecializationMap m = SpecializationMap::defaults();
  Series f = lorentz_r1_twist(N);
  GaussianRational alpha = constant("alpha");

  SUBCASE("binomial form") {
    CHECK(compare_series(binomial_jordanian(l, l->index("h"), l->index("e+"), alpha, N), f).pass);
  }
  SUBCASE("u = exp(-alpha h e+)") {
    EvalContext ctx(l, m);
    Series expected = ctx.eval(u_func(SeriesKind::Exp, u_scale(-P("alpha"), u_product({u_lie(G(l, "h")), u_lie(G(l, "e+"))}))), N);
    CHECK(compare_series(u_element(f), expected).pass);
  }
  SUBCASE("omega-conjugate product formula") {
    const int n = 3;
    Series fw = omega_conjugate(f.truncated(n));
    EvalContext ctx(l, m);
    UExpr he = u_product({u_lie(G(l, "h")), u_lie(G(l, "e+"))});
    UExpr unit = u_const(1);
    UExpr sigma = u_scale(kHalf, u_func(SeriesKind::Log1p, u_scale(P("alpha"), u_lie(G(l, "e+")))));
    TExpr product = t_product(
        {t_exp(t_scale(P("alpha") * kHalf, t_sum({t_otimes(he, unit), t_otimes(unit, he)}))),
         t_exp(t_otimes(u_scale(2, u_lie(G(l, "h"))), sigma)),
         t_exp(t_scale(-P("alpha") * kHalf, t_sum({t_otimes(he, unit), t_otimes(u_lie(G(l, "h")), u_lie(G(l, "e+"))),
                                                   t_otimes(u_lie(G(l, "e+")), u_lie(G(l, "h"))), t_otimes(unit, he)})))});
    CHECK(compare_series(fw, ctx.eval(product, n)).pass);
    CHECK(cocycle_check(fw).pass);
    CHECK(counit_check(fw).pass);
  }
  SUBCASE("local r-symmetry") {
    Bivector r1 = lorentz_r(1, l);
    CHECK_FALSE(local_r_symmetry_check(f, r1, m).symmetric);
    SymmetryVerdict v = local_r_symmetry_check(omega_conjugate(f.truncated(3)), r1, m);
    CHECK(v.symmetric);
    CHECK(v.c == GaussianRational::fraction(-1, 2));
  }
}

TEST_CASE("twisted Hopf structure for the Lorentz Jordanian twist") {
  AlgebraPtr l = lorentz();
  Series f = lorentz_r1_twist(3);
  for (int g = 0; g < l->dim(); ++g) {
    CAPTURE(l->generator_name(g));
    Series x = generator_series(l, g, 3);
    CHECK(twisted_coassociativity_check(f, x).pass);
    CHECK(twisted_antipode_check(f, x).pass);
    for (int k = 0; k < l->dim(); ++k) CHECK(twisted_homomorphism_check(f, x, generator_series(l, k, 3)).pass);
  }
  // the twisted coproduct of h is no longer primitive
  Series dh = twisted_coproduct(f, generator_series(l, l->index("h"), 3));
  CHECK_FALSE(dh[1].is_zero());
}

TEST_CASE("Jordanian twist with nonzero t on a synthetic algebra") {
  GaussianRational t = GaussianRational::fraction(1, 3);
  AlgebraPtr a = synthetic_jordanian(t);
  SpecializationMap m = SpecializationMap::defaults();
  JordanianData d{G(a, "x0"), G(a, "y0"), {{G(a, "x1"), G(a, "y1"), Scalar(t)}}, P("xi")};
  TwistPlan plan = jordanian_twist_plan(d);
  REQUIRE(plan.size() == 2);
  CHECK(to_string(plan).find("exp((-2/3)*sigma)") != std::string::npos);
  Series f = build_twist(plan, a, m, 4).value;
  CHECK(cocycle_check(f).pass);
  CHECK(counit_check(f).pass);
  // dropping the exp(-2t sigma) dressing spoils the cocycle
  JordanianData undressed = d;
  undressed.pairs[0].t = Scalar(0);
  CHECK_FALSE(cocycle_check(build_twist(jordanian_twist_plan(undressed), a, m, 4).value).pass);
}

TEST_CASE("twists are insensitive to the evaluation order of shared nodes") {
  const CatalogEntry& e = find_entry("L2");
  SpecializationMap m = SpecializationMap::defaults();
  Series f3 = build_twist(*e.twist, e.algebra, m, 3).value;
  Series f4 = build_twist(*e.twist, e.algebra, m, 4).value;
  CHECK(f4.truncated(3) == f3);
  CHECK(cocycle_check(f3).pass);
}
