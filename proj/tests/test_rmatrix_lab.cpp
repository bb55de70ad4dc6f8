#include <doctest.h>

#include "generators.hpp"
#include "twistforge/builtins.hpp"
#include "twistforge/catalog.hpp"

using namespace twistforge;

namespace {

LieElement G(const AlgebraPtr& a, const char* n) { return LieElement::generator(a, n); }
Scalar P(const char* n) { return Scalar::param(n); }

// ad_x(sum c y^z) = sum c ([x,y]^z + y^[x,z]) term by term.
Bivector ad_oracle(const LieElement& x, const Bivector& r) {
  Bivector out(r.algebra());
  for (const auto& [k, c] : r.coeffs()) {
    LieElement y = LieElement::generator(r.algebra(), k.first), z = LieElement::generator(r.algebra(), k.second);
    out += c * (Bivector::wedge(bracket(x, y), z) + Bivector::wedge(y, bracket(x, z)));
  }
  return out;
}

Bivector transport(const Bivector& r, const BasisMap& m, bool inverse) {
  const AlgebraPtr& target = inverse ? m.source() : m.target();
  Bivector out(target);
  for (const auto& [k, c] : r.coeffs()) {
    LieElement x = LieElement::generator(r.algebra(), k.first), y = LieElement::generator(r.algebra(), k.second);
    out += c * Bivector::wedge(inverse ? m.apply_inverse(x) : m.apply(x), inverse ? m.apply_inverse(y) : m.apply(y));
  }
  return out;
}

RealityMap all(Reality flag, const Bivector& r) {
  RealityMap m;
  for (const auto& [k, c] : r.coeffs())
    for (int s : c.symbols()) m[s] = flag;
  return m;
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

TEST_CASE("wedge and bivector basics") {
  AlgebraPtr l = lorentz();
  Bivector r = Bivector::wedge(G(l, "e+"), G(l, "h"));
  CHECK(r == -Bivector::wedge(G(l, "h"), G(l, "e+")));
  CHECK(Bivector::wedge(G(l, "h"), G(l, "h")).is_zero());
  CHECK(r.coeff(l->index("h"), l->index("e+")) == -r.coeff(l->index("e+"), l->index("h")));
  CHECK(r.legs().size() == 2);
  CHECK(to_tensor(r) ==
        otimes(to_tensor(G(l, "e+")), to_tensor(G(l, "h"))) - otimes(to_tensor(G(l, "h")), to_tensor(G(l, "e+"))));
}

TEST_CASE("Schouten bracket of bivectors is symmetric and bilinear") {
  gen::Gen g(31);
  for (const auto& a : {lorentz(), poincare()}) {
    for (int trial = 0; trial < 20; ++trial) {
      Bivector r1 = g.bivector(a), r2 = g.bivector(a), r3 = g.bivector(a);
      Scalar c = g.light_scalar();
      CHECK(schouten(r1, r2) == schouten(r2, r1));
      CHECK(schouten(r1 + c * r3, r2) == schouten(r1, r2) + c * schouten(r3, r2));
    }
  }
}

TEST_CASE("CYBE tensor oracle agrees with the Schouten bracket") {
  // [r12, r13 + r23] + [r13, r23] computed in U(g)^(x)3 against 1/2 [[r, r]]
  gen::Gen g(32);
  for (const auto& a : {lorentz(), poincare(), lorentz_complex()}) {
    for (int trial = 0; trial < 12; ++trial) {
      Bivector r = g.bivector(a);
      CHECK(cybe_lhs_tensor(r) == to_tensor(schouten(r, r)) * Scalar(kCybeSchoutenFactor));
    }
  }
}

TEST_CASE("adjoint action matches the term-by-term oracle") {
  gen::Gen g(33);
  for (const auto& a : {lorentz(), poincare()}) {
    for (int trial = 0; trial < 20; ++trial) {
      LieElement x = g.element(a);
      Bivector r = g.bivector(a);
      CHECK(adjoint_action(x, r) == ad_oracle(x, r));
    }
  }
}

TEST_CASE("CYBE classification") {
  AlgebraPtr l = lorentz();
  CybeVerdict v1 = cybe_classify(lorentz_r(1, l));
  CHECK(v1.kind == CybeKind::Homogeneous);
  CHECK(v1.omega.is_zero());
  for (int j : {3, 4}) {
    CybeVerdict v = cybe_classify(lorentz_r(j, l));
    CHECK(v.kind == CybeKind::Modified);
    CHECK_FALSE(v.omega.is_zero());
    CHECK(is_ad_invariant(v.omega));
    for (int k = 0; k < l->dim(); ++k) CHECK(adjoint_action(LieElement::generator(l, k), v.omega).is_zero());
  }
  // e+ ^ h' is not a solution: [[r, r]] is nonzero and not invariant
  CybeVerdict bad = cybe_classify(Bivector::wedge(G(l, "e+"), G(l, "h'")) + Bivector::wedge(G(l, "h"), G(l, "e-")));
  CHECK(bad.kind == CybeKind::NotCYBE);
}

TEST_CASE("r4 with the opposite sign of the h ^ h' term is not a modified solution") {
  AlgebraPtr l = lorentz();
  CHECK(cybe_classify(lorentz_r4_alternate(l)).kind == CybeKind::NotCYBE);
  CHECK(cybe_classify(lorentz_r4_alternate(l).substitute(SymbolTable::index("lambda"), Scalar(0))).kind ==
        CybeKind::Modified);
}

TEST_CASE("complex-basis forms of r3 and r4") {
  const BasisMap& m = lorentz_to_complex();
  AlgebraPtr l = lorentz();
  int alpha = SymbolTable::index("alpha");
  // the complex form corresponds to the real form with alpha -> -alpha
  Bivector r3 = transport(lorentz_r3_complex(), m, true);
  CHECK(r3 == lorentz_r(3, l).substitute(alpha, -P("alpha")));
  Bivector r4 = transport(lorentz_r4_complex(), m, true);
  CHECK(r4 == lorentz_r(4, l).substitute(alpha, -P("alpha")));
  CHECK(cybe_classify(lorentz_r3_complex()).kind == CybeKind::Modified);
}

TEST_CASE("a + b + c split and the four conditions") {
  gen::Gen g(34);
  AlgebraPtr p = poincare();
  for (int trial = 0; trial < 25; ++trial) {
    Bivector r = g.bivector(p, 4);
    AbcDecomposition d = decompose_abc(r);
    CHECK(d.a + d.b + d.c == r);
    for (const auto& [k, c] : d.a.coeffs()) CHECK((p->is_momentum(k.first) && p->is_momentum(k.second)));
    for (const auto& [k, c] : d.b.coeffs()) CHECK(p->is_momentum(k.first) != p->is_momentum(k.second));
    for (const auto& [k, c] : d.c.coeffs()) CHECK((!p->is_momentum(k.first) && !p->is_momentum(k.second)));
    ZakrzewskiReport z = check_zakrzewski_conditions(r);
    CHECK(z.cc.pass == schouten(d.c, d.c).is_zero());
    CHECK(z.bc.pass == schouten(d.b, d.c).is_zero());
    CHECK(z.ac_bb.pass == is_ad_invariant(Scalar(2) * schouten(d.a, d.c) + schouten(d.b, d.b)));
    CHECK(z.ab.pass == schouten(d.a, d.b).is_zero());
    // graded pieces of [[r, r]]
    CHECK(schouten(r, r) == schouten(d.c, d.c) + Scalar(2) * schouten(d.b, d.c) + Scalar(2) * schouten(d.a, d.c) +
                                schouten(d.b, d.b) + Scalar(2) * schouten(d.a, d.b));
  }
  CHECK_THROWS(decompose_abc(lorentz_r(1, lorentz())));
}

TEST_CASE("subordination against the leg-wise oracle") {
  gen::Gen g(35);
  for (const auto& a : {lorentz(), poincare()}) {
    for (int trial = 0; trial < 40; ++trial) {
      Bivector r1 = g.bivector(a, 2), r2 = Bivector::wedge(g.element(a, 1), g.element(a, 1));
      bool oracle = true;
      for (const auto& x : r2.legs()) oracle = oracle && ad_oracle(x, r1).is_zero();
      CHECK(is_subordinated(r1, r2) == oracle);
    }
  }
  AlgebraPtr p = poincare();
  Bivector momenta = Bivector::wedge(G(p, "P1"), G(p, "P2"));
  CHECK(is_subordinated(momenta, Bivector::wedge(G(p, "P+"), G(p, "h'"))));
  CHECK_FALSE(is_subordinated(momenta, Bivector::wedge(G(p, "P+"), G(p, "e+"))));
}

TEST_CASE("Abelian type") {
  AlgebraPtr p = poincare();
  CHECK(is_abelian_type(Bivector::wedge(G(p, "P1"), G(p, "P2"))));
  CHECK(is_abelian_type(Bivector::wedge(G(p, "P+"), G(p, "e+"))));
  CHECK_FALSE(is_abelian_type(Bivector::wedge(G(p, "h"), G(p, "e+"))));
  CHECK_FALSE(is_abelian_type(Bivector::wedge(G(p, "P1"), G(p, "e+"))));
}

TEST_CASE("Jordanian data") {
  AlgebraPtr l = lorentz();
  JordanianData d{G(l, "h"), G(l, "e+"), {}, P("alpha")};
  CHECK(verify_jordanian_data(d, lorentz_r(1, l)).pass);

  const CatalogEntry& e = find_entry("2");
  auto it = std::find_if(e.pieces.begin(), e.pieces.end(), [](const Piece& p) { return p.jordanian.has_value(); });
  REQUIRE(it != e.pieces.end());
  JordanianData good = *it->jordanian;
  REQUIRE_FALSE(good.pairs.empty());
  CHECK(verify_jordanian_data(good, it->r).pass);
  JordanianData perturbed = good;
  perturbed.pairs[0].t = Scalar(1);
  JordanianCheck bad = verify_jordanian_data(perturbed, it->r);
  CHECK_FALSE(bad.pass);
  CHECK(bad.failed_relation == "[x0, y_i] = t_i y_i");

  JordanianData wrong_r = good;
  wrong_r.xi = Scalar(2) * good.xi;
  CHECK(verify_jordanian_data(wrong_r, it->r).failed_relation == "xi * sum y_nu ^ x_nu = r");
}

TEST_CASE("Jordanian data with a nonzero t on a synthetic algebra") {
  GaussianRational t = GaussianRational::fraction(1, 3);
  AlgebraPtr a = synthetic_jordanian(t);
  Scalar xi = P("xi");
  Bivector r = xi * (Bivector::wedge(G(a, "y0"), G(a, "x0")) + Bivector::wedge(G(a, "y1"), G(a, "x1")));
  JordanianData d{G(a, "x0"), G(a, "y0"), {{G(a, "x1"), G(a, "y1"), Scalar(t)}}, xi};
  CHECK(verify_jordanian_data(d, r).pass);
  CHECK(cybe_classify(r).kind == CybeKind::Homogeneous);
  d.pairs[0].t = Scalar(0);
  CHECK_FALSE(verify_jordanian_data(d, r).pass);
}

TEST_CASE("reality of the Lorentz r-matrices") {
  AlgebraPtr l = lorentz();
  for (int j = 1; j <= 4; ++j) {
    CAPTURE(j);
    Bivector r = lorentz_r(j, l);
    CHECK(star_reality_check(r, StarLifting::Direct, all(Reality::Imaginary, r)));
    CHECK(star_reality_check(r, StarLifting::Flipped, all(Reality::Real, r)));
    CHECK_FALSE(star_reality_check(r, StarLifting::Direct, all(Reality::Real, r)));
    CHECK_FALSE(star_reality_check(r, StarLifting::Flipped, all(Reality::Imaginary, r)));
  }
}
