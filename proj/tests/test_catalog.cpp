#include <doctest.h>

#include "twistforge/builtins.hpp"
#include "twistforge/catalog.hpp"

using namespace twistforge;

namespace {

UElement U(const AlgebraPtr& a, const char* n) { return UElement::generator(a, a->index(n)); }

Series cocycle_defect(const Series& f) {
  return embed(f, 0, 1) * coproduct(f, 0) - embed(f, 1, 2) * coproduct(f, 1);
}

}  // namespace

TEST_CASE("catalog ids and order") {
  std::vector<std::string> expected = {"L1", "L2", "L3", "L4"};
  for (int k = 1; k <= 21; ++k) expected.push_back(std::to_string(k));
  expected.push_back("tilde9");
  expected.push_back("tilde12");
  CHECK(catalog_ids() == expected);
  CHECK(catalog().size() == 27);
  CHECK(twist_equipped_poincare_count() == 18);
  CHECK_THROWS_AS(find_entry("22"), UnknownEntry);
  CHECK_THROWS_AS(find_entry("l1"), UnknownEntry);
}

TEST_CASE("pieces sum to the r-matrix and carry their claimed structure") {
  for (const CatalogEntry& e : catalog()) {
    CAPTURE(e.id);
    CHECK(e.r.algebra() == e.algebra);
    if (e.pieces.empty()) continue;
    Bivector sum(e.algebra);
    for (const Piece& p : e.pieces) {
      CAPTURE(p.label);
      sum += p.r;
      if (p.kind == PieceKind::Abelian) CHECK(is_abelian_type(p.r));
      if (p.jordanian) CHECK(verify_jordanian_data(*p.jordanian, p.r).pass);
    }
    CHECK(sum == e.r);
    for (const SubordinationClaim& c : e.claims) {
      Bivector left(e.algebra);
      for (int k : c.left) left += e.pieces.at(static_cast<std::size_t>(k)).r;
      CHECK(is_subordinated(left, e.pieces.at(static_cast<std::size_t>(c.right)).r));
    }
  }
}

TEST_CASE("CYBE classification matches the recorded expectation") {
  for (const CatalogEntry& e : catalog()) {
    CAPTURE(e.id);
    if (e.expected_cybe == Expectation::ReportOnly) continue;
    CybeKind k = cybe_classify(e.r).kind;
    switch (e.expected_cybe) {
      case Expectation::Homogeneous: CHECK(k == CybeKind::Homogeneous); break;
      case Expectation::Modified: CHECK(k == CybeKind::Modified); break;
      case Expectation::NotCYBE: CHECK(k == CybeKind::NotCYBE); break;
      case Expectation::ReportOnly: break;
    }
  }
}

TEST_CASE("tilde12 violates only the last decomposition condition") {
  ZakrzewskiReport z = check_zakrzewski_conditions(find_entry("tilde12").r);
  CHECK(z.cc.pass);
  CHECK(z.bc.pass);
  CHECK(z.ac_bb.pass);
  CHECK_FALSE(z.ab.pass);
  CHECK_FALSE(find_entry("tilde12").zakrzewski_expected_pass);
}

TEST_CASE("the two Jordanian factors of case 17 commute") {
  const CatalogEntry& e = find_entry("17");
  REQUIRE(e.twist);
  REQUIRE(e.twist->size() == 2);
  SpecializationMap m = SpecializationMap::defaults();
  TwistPlan swapped = {(*e.twist)[1], (*e.twist)[0]};
  Series f = build_twist(*e.twist, e.algebra, m, 4).value;
  CHECK(compare_series(f, build_twist(swapped, e.algebra, m, 4).value).pass);
  CHECK(cocycle_check(f).pass);
}

TEST_CASE("case 10 twist has a third-order cocycle defect") {
  const CatalogEntry& e = find_entry("10");
  REQUIRE(e.twist);
  AlgebraPtr p = e.algebra;
  UElement pp = U(p, "P+"), p1 = U(p, "P1"), pp2 = pp * pp;
  UElement shape = otimes(otimes(p1, pp), pp2) + otimes(otimes(p1, pp2), pp) + otimes(otimes(pp, pp2), p1) +
                   otimes(otimes(pp2, pp), p1);
  for (auto [a1, b1] : {std::pair{1, 1}, std::pair{1, 2}, std::pair{2, 1}}) {
    CAPTURE(a1);
    CAPTURE(b1);
    SpecializationMap m = SpecializationMap::defaults();
    m.set("alpha1", GaussianRational(a1));
    m.set("beta1", GaussianRational(b1));
    Series d = cocycle_defect(build_twist(*e.twist, p, m, 3).value);
    CHECK(d[1].is_zero());
    CHECK(d[2].is_zero());
    CHECK(d[3] == shape * GaussianRational(-a1 * b1 * b1));
  }
  SpecializationMap m = SpecializationMap::defaults();
  m.set("alpha1", GaussianRational(0));
  CHECK(cocycle_check(build_twist(*e.twist, p, m, 3).value).pass);
}

TEST_CASE("every other twist is a counital cocycle to third order") {
  SpecializationMap m = SpecializationMap::defaults();
  for (const CatalogEntry& e : catalog()) {
    if (!e.twist || e.id == "10") continue;
    CAPTURE(e.id);
    Series f = build_twist(*e.twist, e.algebra, m, 3).value;
    CHECK(cocycle_check(f).pass);
    CHECK(counit_check(f).pass);
  }
}

TEST_CASE("dump is stable") {
  std::string a = dump_catalog(), b = dump_catalog();
  CHECK(a == b);
  CHECK(dump_entry(find_entry("L1")).find("omega-conjugated") != std::string::npos);
  for (const std::string& id : catalog_ids()) CHECK(a.find(dump_entry(find_entry(id))) != std::string::npos);
}
