#include <doctest.h>

#include "generators.hpp"
#include "twistforge/builtins.hpp"

using namespace twistforge;

namespace {

LieElement G(const AlgebraPtr& a, const char* n) { return LieElement::generator(a, n); }

std::vector<AlgebraPtr> builtin_algebras() { return {lorentz(), lorentz_complex(), poincare_physical(), poincare()}; }

}  // namespace

TEST_CASE("built-in algebras satisfy the Jacobi identity") {
  for (const auto& a : builtin_algebras()) {
    CAPTURE(a->name());
    JacobiReport rep = check_jacobi(*a);
    CHECK(rep.ok);
    CHECK(rep.failures.empty());
  }
}

TEST_CASE("Jacobi violations are reported with a witness") {
  LieAlgebra::Builder b("broken", {"x", "y", "z"});
  b.bracket("x", "y", {{"z", 1}}).bracket("y", "z", {{"x", 1}}).bracket("z", "x", {{"z", 1}});
  AlgebraPtr a = b.build(false);
  JacobiReport rep = check_jacobi(*a);
  CHECK_FALSE(rep.ok);
  CHECK_FALSE(rep.witness_text.empty());
  CHECK_THROWS_AS(b.build(true), InvalidAlgebra);
}

TEST_CASE("frozen tables agree with tables derived by basis transport") {
  CHECK(derive_poincare_light_cone()->structure_table() == poincare()->structure_table());
  CHECK(derive_lorentz_complex()->structure_table() == lorentz_complex()->structure_table());
}

TEST_CASE("bracket is antisymmetric and satisfies Jacobi on random elements") {
  gen::Gen g(21);
  for (const auto& a : builtin_algebras()) {
    for (int trial = 0; trial < 25; ++trial) {
      LieElement x = g.element(a), y = g.element(a), z = g.element(a);
      CHECK(bracket(x, y) == -bracket(y, x));
      CHECK((bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))).is_zero());
    }
  }
}

TEST_CASE("basis maps are consistent Lie algebra isomorphisms") {
  gen::Gen g(22);
  for (const BasisMap* m : {&physical_to_light_cone(), &lorentz_to_complex()}) {
    CAPTURE(m->name());
    CHECK(m->is_consistent());
    for (int trial = 0; trial < 25; ++trial) {
      LieElement x = g.element(m->source()), y = g.element(m->source());
      CHECK(m->apply(bracket(x, y)) == bracket(m->apply(x), m->apply(y)));
      CHECK(m->apply_inverse(m->apply(x)) == x);
    }
  }
}

TEST_CASE("light-cone relations") {
  AlgebraPtr p = poincare();
  CHECK(bracket(G(p, "P-"), G(p, "e+")) == Scalar(-2) * G(p, "P1"));
  CHECK(bracket(G(p, "P1"), G(p, "e+")) == -G(p, "P+"));
  CHECK(bracket(G(p, "e+"), G(p, "e-")) == Scalar(2) * G(p, "h"));
  CHECK(bracket(G(p, "P+"), G(p, "P-")).is_zero());
  CHECK(bracket(G(p, "e+"), G(p, "e'+")).is_zero());
}

TEST_CASE("complex basis splits into two commuting sl(2) copies") {
  AlgebraPtr c = lorentz_complex();
  for (const char* x : {"E1+", "H1", "E1-"})
    for (const char* y : {"E2+", "H2", "E2-"}) CHECK(bracket(G(c, x), G(c, y)).is_zero());
  CHECK(bracket(G(c, "H1"), G(c, "E1+")) == G(c, "E1+"));
  CHECK(bracket(G(c, "E1+"), G(c, "E1-")) == Scalar(2) * G(c, "H1"));
}

TEST_CASE("star is an involutive antilinear anti-automorphism") {
  gen::Gen g(23);
  for (const auto& a : builtin_algebras()) {
    if (!a->has_star()) continue;
    for (int trial = 0; trial < 20; ++trial) {
      LieElement x = g.element(a), y = g.element(a);
      CHECK(star(star(x)) == x);
      CHECK(star(bracket(x, y)) == bracket(star(y), star(x)));
      CHECK(star(Scalar::i() * x) == -Scalar::i() * star(x));
    }
  }
  CHECK(star(G(lorentz(), "h")) == -G(lorentz(), "h"));
  CHECK(star(G(poincare(), "P+")) == G(poincare(), "P+"));
}

TEST_CASE("gradings") {
  AlgebraPtr l = lorentz();
  CHECK(check_grading(*l, l->grading()).empty());
  // deg e+ = deg e'+ = 1, others 0 fails already at [e+, e-] = 2h
  auto bad = check_grading(*l, lorentz_positive_filtration());
  REQUIRE_FALSE(bad.empty());
  AlgebraPtr p = poincare();
  CHECK(check_grading(*p, p->grading()).empty());
  for (int j = 0; j < p->dim(); ++j) CHECK(p->is_momentum(j) == (p->grading()[static_cast<std::size_t>(j)] == 1));
}

TEST_CASE("subalgebra closure and spans") {
  AlgebraPtr l = lorentz();
  CHECK(subalgebra_closure({G(l, "e+"), G(l, "e-")}).size() == 3);
  CHECK(subalgebra_closure({G(l, "e+"), G(l, "e'-")}).size() == 6);
  CHECK(subalgebra_closure({G(l, "e+"), G(l, "e'+")}).size() == 2);
  CHECK(linear_span({G(l, "h"), Scalar(2) * G(l, "h"), G(l, "h'")}).size() == 2);
  AlgebraPtr p = poincare();
  CHECK(subalgebra_closure({G(p, "P-"), G(p, "e+"), G(p, "e'+")}).size() == 6);
}

TEST_CASE("elements of different algebras do not mix") {
  CHECK_THROWS_AS(bracket(G(lorentz(), "h"), G(poincare(), "h")), AlgebraMismatch);
}
