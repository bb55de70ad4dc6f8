#include "twistforge/builtins.hpp"

namespace twistforge {

namespace {

using Terms = std::vector<std::pair<std::string, GaussianRational>>;

const GaussianRational I = GaussianRational::i();

AlgebraPtr make_lorentz() {
  LieAlgebra::Builder b("lorentz", {"e+", "e'+", "h", "h'", "e-", "e'-"});
  b.bracket("h", "e+", {{"e+", 1}})
      .bracket("h", "e-", {{"e-", -1}})
      .bracket("e+", "e-", {{"h", 2}})
      .bracket("h", "e'+", {{"e'+", 1}})
      .bracket("h", "e'-", {{"e'-", -1}})
      .bracket("h'", "e+", {{"e'+", 1}})
      .bracket("h'", "e-", {{"e'-", -1}})
      .bracket("e+", "e'-", {{"h'", 2}})
      .bracket("e-", "e'+", {{"h'", -2}})
      .bracket("h'", "e'+", {{"e+", -1}})
      .bracket("h'", "e'-", {{"e-", 1}})
      .bracket("e'+", "e'-", {{"h", -2}});
  for (const char* g : {"e+", "e'+", "h", "h'", "e-", "e'-"}) b.star(g, {{g, -1}});
  b.grading({1, 1, 0, 0, -1, -1}).family(AlgebraFamily::Lorentz);
  return b.build();
}

AlgebraPtr make_lorentz_complex() {
  LieAlgebra::Builder b("lorentz-complex", {"E1+", "E2+", "H1", "H2", "E1-", "E2-"});
  b.bracket("H1", "E1+", {{"E1+", 1}})
      .bracket("H1", "E1-", {{"E1-", -1}})
      .bracket("E1+", "E1-", {{"H1", 2}})
      .bracket("H2", "E2+", {{"E2+", 1}})
      .bracket("H2", "E2-", {{"E2-", -1}})
      .bracket("E2+", "E2-", {{"H2", 2}});
  b.star("H1", {{"H2", -1}})
      .star("H2", {{"H1", -1}})
      .star("E1+", {{"E2+", -1}})
      .star("E2+", {{"E1+", -1}})
      .star("E1-", {{"E2-", -1}})
      .star("E2-", {{"E1-", -1}});
  b.grading({1, 1, 0, 0, -1, -1}).family(AlgebraFamily::Lorentz);
  return b.build();
}

AlgebraPtr make_poincare_physical() {
  LieAlgebra::Builder b("poincare-physical", {"M1", "M2", "M3", "N1", "N2", "N3", "P0", "P1", "P2", "P3"});
  auto nm = [](const char* letter, int k) { return std::string(letter) + std::to_string(k); };
  // Cyclic (j, k, l) with epsilon_jkl = +1.
  const int cyc[3][3] = {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}};
  for (const auto& t : cyc) {
    int j = t[0], k = t[1], l = t[2];
    b.bracket(nm("M", j), nm("M", k), {{nm("M", l), I}});
    b.bracket(nm("N", j), nm("N", k), {{nm("M", l), -I}});
    b.bracket(nm("M", j), nm("P", k), {{nm("P", l), I}});
    b.bracket(nm("M", k), nm("P", j), {{nm("P", l), -I}});
    b.bracket(nm("M", j), nm("N", k), {{nm("N", l), I}});
    b.bracket(nm("M", k), nm("N", j), {{nm("N", l), -I}});
  }
  for (int j = 1; j <= 3; ++j) {
    b.bracket(nm("N", j), nm("P", j), {{"P0", -I}});
    b.bracket(nm("N", j), "P0", {{nm("P", j), -I}});
  }
  for (const char* g : {"M1", "M2", "M3", "N1", "N2", "N3", "P0", "P1", "P2", "P3"}) b.star(g, {{g, 1}});
  b.grading({0, 0, 0, 0, 0, 0, 1, 1, 1, 1}).family(AlgebraFamily::Poincare).momenta({"P0", "P1", "P2", "P3"});
  return b.build();
}

// Frozen output of derive_poincare_light_cone(); see the regression test.
AlgebraPtr make_poincare() {
  LieAlgebra::Builder b("poincare", {"P+", "P-", "P1", "P2", "e+", "e'+", "h", "h'", "e-", "e'-"});
  b.bracket("P+", "h", {{"P+", -1}});
  b.bracket("P+", "e-", {{"P1", -2}});
  b.bracket("P+", "e'-", {{"P2", -2}});
  b.bracket("P-", "e+", {{"P1", -2}});
  b.bracket("P-", "e'+", {{"P2", 2}});
  b.bracket("P-", "h", {{"P-", 1}});
  b.bracket("P1", "e+", {{"P+", -1}});
  b.bracket("P1", "h'", {{"P2", 1}});
  b.bracket("P1", "e-", {{"P-", -1}});
  b.bracket("P2", "e'+", {{"P+", 1}});
  b.bracket("P2", "h'", {{"P1", -1}});
  b.bracket("P2", "e'-", {{"P-", -1}});
  b.bracket("e+", "h", {{"e+", -1}});
  b.bracket("e+", "h'", {{"e'+", -1}});
  b.bracket("e+", "e-", {{"h", 2}});
  b.bracket("e+", "e'-", {{"h'", 2}});
  b.bracket("e'+", "h", {{"e'+", -1}});
  b.bracket("e'+", "h'", {{"e+", 1}});
  b.bracket("e'+", "e-", {{"h'", 2}});
  b.bracket("e'+", "e'-", {{"h", -2}});
  b.bracket("h", "e-", {{"e-", -1}});
  b.bracket("h", "e'-", {{"e'-", -1}});
  b.bracket("h'", "e-", {{"e'-", -1}});
  b.bracket("h'", "e'-", {{"e-", 1}});
  b.star("P+", {{"P+", 1}});
  b.star("P-", {{"P-", 1}});
  b.star("P1", {{"P1", 1}});
  b.star("P2", {{"P2", 1}});
  b.star("e+", {{"e+", -1}});
  b.star("e'+", {{"e'+", -1}});
  b.star("h", {{"h", -1}});
  b.star("h'", {{"h'", -1}});
  b.star("e-", {{"e-", -1}});
  b.star("e'-", {{"e'-", -1}});
  b.grading({1, 1, 1, 1, 0, 0, 0, 0, 0, 0}).family(AlgebraFamily::Poincare).momenta({"P+", "P-", "P1", "P2"});
  return b.build();
}

std::vector<LieElement> light_cone_images(const AlgebraPtr& phys) {
  auto g = [&](const char* n) { return LieElement::generator(phys, n); };
  Scalar i = Scalar::i();
  return {g("P0") + g("P3"),     g("P0") - g("P3"),     g("P1"),       g("P2"),
          i * (g("N1") + g("M2")), i * (g("M1") - g("N2")), i * g("N3"), i * g("M3"),
          i * (g("N1") - g("M2")), i * (g("M1") + g("N2"))};
}

std::vector<LieElement> complex_images(const AlgebraPtr& lor) {
  auto g = [&](const char* n) { return LieElement::generator(lor, n); };
  Scalar half = Scalar::fraction(1, 2), ih = Scalar(GaussianRational(0, mpq_class(1, 2)));
  return {half * g("e+") + ih * g("e'+"), half * g("e+") - ih * g("e'+"), half * g("h") + ih * g("h'"),
          half * g("h") - ih * g("h'"),   half * g("e-") + ih * g("e'-"), half * g("e-") - ih * g("e'-")};
}

// forward[j] = image of source generator j expressed in the target basis.
std::vector<LieElement> invert_images(const AlgebraPtr& source, const AlgebraPtr& target,
                                      const std::vector<LieElement>& images) {
  const std::size_t n = static_cast<std::size_t>(source->dim());
  Echelon e(2 * n);
  for (std::size_t a = 0; a < n; ++a) {
    ScalarVector row = images[a].to_vector();
    row.resize(2 * n);
    row[n + a] = Scalar(1);
    e.insert(std::move(row));
  }
  std::vector<LieElement> out;
  for (std::size_t j = 0; j < n; ++j) {
    LieElement x(target);
    for (std::size_t a = 0; a < n; ++a) x.add_term(static_cast<int>(a), e.rows()[j][n + a]);
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace

AlgebraPtr lorentz() {
  static const AlgebraPtr a = make_lorentz();
  return a;
}

AlgebraPtr lorentz_complex() {
  static const AlgebraPtr a = make_lorentz_complex();
  return a;
}

AlgebraPtr poincare_physical() {
  static const AlgebraPtr a = make_poincare_physical();
  return a;
}

AlgebraPtr poincare() {
  static const AlgebraPtr a = make_poincare();
  return a;
}

const BasisMap& lorentz_to_complex() {
  static const BasisMap m = [] {
    auto images = complex_images(lorentz());
    return BasisMap("lorentz->complex", lorentz(), lorentz_complex(),
                    invert_images(lorentz(), lorentz_complex(), images), images);
  }();
  return m;
}

const BasisMap& physical_to_light_cone() {
  static const BasisMap m = [] {
    auto images = light_cone_images(poincare_physical());
    return BasisMap("physical->light-cone", poincare_physical(), poincare(),
                    invert_images(poincare_physical(), poincare(), images), images);
  }();
  return m;
}

AlgebraPtr derive_poincare_light_cone() {
  auto b = transport(poincare_physical(), "poincare", poincare()->basis(), light_cone_images(poincare_physical()));
  b.grading({1, 1, 1, 1, 0, 0, 0, 0, 0, 0}).family(AlgebraFamily::Poincare).momenta({"P+", "P-", "P1", "P2"});
  return b.build();
}

AlgebraPtr derive_lorentz_complex() {
  auto b = transport(lorentz(), "lorentz-complex", lorentz_complex()->basis(), complex_images(lorentz()));
  b.grading({1, 1, 0, 0, -1, -1}).family(AlgebraFamily::Lorentz);
  return b.build();
}

std::vector<int> lorentz_positive_filtration() { return {1, 1, 0, 0, 0, 0}; }

}  // namespace twistforge
