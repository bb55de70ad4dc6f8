#include <doctest.h>

#include "generators.hpp"
#include "twistforge/scalar.hpp"

using namespace twistforge;

namespace {

Scalar P(const char* n) { return Scalar::param(n); }

SpecializationMap unit_degrees() {
  SpecializationMap m = SpecializationMap::defaults();
  return m;
}

}  // namespace

TEST_CASE("gaussian rationals form a field") {
  gen::Gen g(11);
  for (int trial = 0; trial < 300; ++trial) {
    GaussianRational a = g.rational(), b = g.rational(), c = g.rational();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a * b).conj() == a.conj() * b.conj());
    CHECK((a * a.conj()).is_real());
    CHECK((a * a.conj()).re() == a.norm());
    if (!a.is_zero()) {
      CHECK(a * a.inverse() == GaussianRational(1));
      CHECK((b / a) * a == b);
    }
  }
}

TEST_CASE("gaussian rational text round trip") {
  gen::Gen g(12);
  for (int trial = 0; trial < 300; ++trial) {
    GaussianRational z = g.rational();
    CHECK(GaussianRational::parse(z.to_string()) == z);
  }
  CHECK(GaussianRational::parse("i") == GaussianRational::i());
  CHECK(GaussianRational::parse("-i/2") == GaussianRational(0, mpq_class(-1, 2)));
  CHECK(GaussianRational::parse("2/3-i") == GaussianRational(mpq_class(2, 3), -1));
  CHECK(GaussianRational::parse("1/2+3/4*i") == GaussianRational(mpq_class(1, 2), mpq_class(3, 4)));
  CHECK_THROWS_AS(GaussianRational::parse("x"), std::invalid_argument);
  CHECK_THROWS_AS(GaussianRational(0).inverse(), DivisionByZero);
  CHECK_THROWS_AS(GaussianRational::fraction(1, 0), DivisionByZero);
}

TEST_CASE("scalars are stored reduced") {
  Scalar a = P("alpha"), b = P("beta");
  CHECK((a * a - b * b) / (a - b) == a + b);
  CHECK((a / b) * (b / a) == Scalar(1));
  CHECK(((a + 1) / (a * a - 1)) == Scalar(1) / (a - 1));
  CHECK((2 * a) / (4 * a * b) == Scalar::fraction(1, 2) / b);
  CHECK(Scalar(Polynomial(0), Polynomial(7)).is_zero());
  CHECK_THROWS_AS(a / Scalar(0), DivisionByZero);
}

TEST_CASE("scalar field laws on random rational functions") {
  gen::Gen g(13);
  for (int trial = 0; trial < 60; ++trial) {
    Scalar x = g.scalar(), y = g.scalar(), z = g.scalar();
    CHECK((x + y) * z == x * z + y * z);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x - x == Scalar(0));
    if (!y.is_zero()) CHECK((x / y) * y == x);
  }
}

TEST_CASE("polynomial gcd divides both arguments") {
  gen::Gen g(14);
  for (int trial = 0; trial < 40; ++trial) {
    Polynomial p = g.polynomial(2, 2), q = g.polynomial(2, 2), r = g.polynomial(2, 2);
    if (p.is_zero() || q.is_zero() || r.is_zero()) continue;
    Polynomial d = gcd(p * q, p * r);
    CHECK(exact_divide(p * q, d).has_value());
    CHECK(exact_divide(p * r, d).has_value());
    CHECK(exact_divide(d, p).has_value());
  }
}

TEST_CASE("substitution and symbol listing") {
  Scalar a = P("alpha"), b = P("beta");
  Scalar s = (a * b + 1) / (a - b);
  CHECK(s.substitute(SymbolTable::index("beta"), Scalar(0)) == Scalar(1) / a);
  auto syms = s.symbols();
  CHECK(syms.size() == 2);
  CHECK(std::is_sorted(syms.begin(), syms.end()));
}

TEST_CASE("conjugation follows reality flags") {
  Scalar a = P("alpha");
  CHECK(a.conj() == a);
  RealityMap imaginary{{SymbolTable::index("alpha"), Reality::Imaginary}};
  CHECK(a.conj(imaginary) == -a);
  CHECK((Scalar::i() * a).conj(imaginary) == Scalar::i() * a);
  CHECK((Scalar::i() * a).conj() == -Scalar::i() * a);
}

TEST_CASE("specialization to hbar series") {
  SpecializationMap m = unit_degrees();
  HbarLaurent l = specialize_laurent(P("alpha") * P("beta"), m);
  CHECK(l.valuation() == 2);
  CHECK(l.coefficient(2) == GaussianRational::fraction(2, 3) * GaussianRational::fraction(4, 9));

  HbarLaurent q = specialize_laurent(P("alpha") / P("beta"), m);
  CHECK(q.valuation() == 0);
  CHECK(q.coefficient(0) == GaussianRational::fraction(3, 2));

  Scalar c = Scalar::i() * P("beta") / (P("alpha") * P("alpha"));
  HbarLaurent neg = specialize_laurent(c, m);
  CHECK(neg.valuation() == -1);
  CHECK(neg.coefficient(-1) == GaussianRational::i() * GaussianRational::fraction(4, 9) / GaussianRational::fraction(4, 9));
  CHECK_THROWS_AS(specialize(c, m), NonPolynomialSpecialization);
  CHECK_THROWS_AS(specialize_laurent(Scalar(1) / (P("alpha") + 1), m), NonPolynomialSpecialization);

  HbarLaurent mixed = specialize(P("alpha") + P("alpha") * P("beta"), m);
  CHECK(mixed.valuation() == 1);
  CHECK(mixed.degree() == 2);
}

TEST_CASE("specialization respects per-parameter degrees") {
  SpecializationMap m = SpecializationMap::defaults();
  m.set("beta", GaussianRational(3), 2);
  HbarLaurent l = specialize(P("alpha") * P("beta"), m);
  CHECK(l.valuation() == 3);
  CHECK(l.coefficient(3) == GaussianRational(2));
}

TEST_CASE("default constants are pairwise distinct") {
  CHECK(SpecializationMap::defaults().validate().empty());
  SpecializationMap m = SpecializationMap::defaults();
  m.set("alpha1", GaussianRational::fraction(3, 5));
  CHECK_FALSE(m.validate().empty());
  m = SpecializationMap::defaults();
  m.set("gamma", GaussianRational(0));
  CHECK_FALSE(m.validate().empty());
}

TEST_CASE("symbol table") {
  int a = SymbolTable::index("alpha");
  CHECK(SymbolTable::name(a) == "alpha");
  CHECK(SymbolTable::find("alpha") == a);
  CHECK_FALSE(SymbolTable::find("no-such-parameter").has_value());
  CHECK(SymbolTable::declare("alpha") == a);
}
