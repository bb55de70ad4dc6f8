#include "twistforge/catalog.hpp"

#include <set>

#include "twistforge/builtins.hpp"

namespace twistforge {

std::string to_string(Expectation e) {
  switch (e) {
    case Expectation::Homogeneous: return "Homogeneous";
    case Expectation::Modified: return "Modified";
    case Expectation::NotCYBE: return "NotCYBE";
    case Expectation::ReportOnly: return "report-only";
  }
  return "?";
}

std::string to_string(PieceKind k) {
  switch (k) {
    case PieceKind::Abelian: return "Abelian";
    case PieceKind::Jordanian: return "Jordanian";
    case PieceKind::Other: return "Other";
  }
  return "?";
}

namespace {

Scalar p(const char* name) { return Scalar::param(name); }

struct Gens {
  AlgebraPtr a;
  LieElement operator()(const char* name) const { return LieElement::generator(a, name); }
  Bivector w(const LieElement& x, const LieElement& y) const { return Bivector::wedge(x, y); }
  Bivector w(const char* x, const char* y) const { return Bivector::wedge((*this)(x), (*this)(y)); }
  LieElement p0() const { return Scalar::fraction(1, 2) * ((*this)("P+") + (*this)("P-")); }
  LieElement p3() const { return Scalar::fraction(1, 2) * ((*this)("P+") - (*this)("P-")); }
};

const Scalar kHalf = Scalar::fraction(1, 2);

UExpr L(const LieElement& x) { return u_lie(x); }

TwistFactor exp_of(std::string label, TExpr arg) { return {std::move(label), std::move(arg)}; }

// exp(a ^ b) with a, b Lie elements.
TwistFactor exp_wedge(std::string label, const LieElement& a, const LieElement& b) {
  return exp_of(std::move(label), t_wedge(L(a), L(b)));
}

// Momentum-Lorentz legs beta1 (e+ (x) P1 - e'+ (x) P2) shared by the b_{P+} cases.
TExpr bpplus_pairs(const Gens& g) {
  return t_scale(p("beta1"), t_sum({t_otimes(L(g("e+")), L(g("P1"))), t_scale(-1, t_otimes(L(g("e'+")), L(g("P2"))))}));
}

TExpr jordanian_sigma_plus(const LieElement& x0) { return t_otimes(u_scale(2, L(x0)), sigma_plus()); }

JordanianData bpplus_data(const Gens& g, const LieElement& x1) {
  Scalar zero;
  return {g("h"), g("P+"), {{x1, g("P1"), zero}, {-g("e'+"), g("P2"), zero}}, p("beta1")};
}

Piece piece(std::string label, Bivector r, PieceKind kind, std::optional<JordanianData> j = std::nullopt,
            std::string note = {}) {
  return {std::move(label), std::move(r), kind, std::move(j), std::move(note)};
}

CatalogEntry base(std::string id, std::string family, std::string summary, AlgebraPtr alg, Bivector r,
                  Expectation cybe) {
  bool poincare_family = family == "poincare";
  return {std::move(id), std::move(family), std::move(summary), std::move(alg), std::move(r), cybe,
          poincare_family, poincare_family, {}, {}, std::nullopt, {}};
}

std::vector<CatalogEntry> lorentz_entries() {
  Gens g{lorentz()};
  std::vector<CatalogEntry> out;
  const Scalar a = p("alpha"), b = p("beta"), lam = p("lambda");

  {
    auto e = base("L1", "lorentz", "Jordanian r-matrix alpha e+ ^ h", g.a, lorentz_r(1, g.a), Expectation::Homogeneous);
    e.pieces = {piece("r", e.r, PieceKind::Jordanian, JordanianData{g("h"), g("e+"), {}, a})};
    UExpr sigma = u_named("sigma", u_scale(kHalf, u_func(SeriesKind::Log1p, u_scale(a, L(g("e+"))))));
    e.twist = TwistPlan{exp_of("F", t_otimes(u_scale(2, L(g("h"))), sigma))};
    e.omega_variant = true;
    out.push_back(std::move(e));
  }
  {
    auto e = base("L2", "lorentz", "two-parameter Jordanian-type r-matrix", g.a, lorentz_r(2, g.a),
                  Expectation::Homogeneous);
    e.pieces = {piece("r", e.r, PieceKind::Other, std::nullopt, "sum of two commuting Jordanian sl(2) parts and e'+ ^ e+")};
    UExpr ep = L(g("e+")), epp = L(g("e'+"));
    UExpr sigma = u_named(
        "sigma", u_scale(kHalf, u_func(SeriesKind::Log1p, u_sum({u_scale(2 * a, ep), u_scale(a * a, u_product({ep, ep})),
                                                                  u_scale(a * a, u_product({epp, epp}))}))));
    UExpr phi = u_named("phi", u_func(SeriesKind::Arctan, u_product({u_scale(a, epp), u_func(SeriesKind::GeomInv, u_scale(a, ep))})));
    e.twist = TwistPlan{
        exp_of("F''", t_scale(Scalar::i() * b / (a * a), t_wedge(sigma, phi))),
        exp_of("F'", t_sum({t_otimes(L(g("h")), sigma), t_scale(-1, t_otimes(L(g("h'")), phi))})),
    };
    out.push_back(std::move(e));
  }
  {
    auto e = base("L3", "lorentz", "standard plus Abelian Cartan r-matrix", g.a, lorentz_r(3, g.a), Expectation::Modified);
    Bivector r2 = Scalar(-2) * p("gamma") * g.w("h", "h'");
    e.pieces = {piece("r'", e.r - r2, PieceKind::Other, std::nullopt, "sum of two standard sl(2) r-matrices"),
                piece("r''", r2, PieceKind::Abelian)};
    e.claims = {{{0}, 1}};
    e.twist_note = "quantized by a q-deformation, outside the classical twist framework";
    out.push_back(std::move(e));
  }
  {
    auto e = base("L4", "lorentz", "Belavin-Drinfeld type r-matrix", g.a, lorentz_r(4, g.a), Expectation::Modified);
    Bivector r2 = lam * g.w("e+", "e'+");
    e.pieces = {piece("r'", e.r - r2, PieceKind::Other, std::nullopt, "special case of r3"),
                piece("r''", r2, PieceKind::Abelian)};
    e.twist_note = "quantized by a q-exponential twist, outside the classical twist framework";
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<CatalogEntry> poincare_entries() {
  Gens g{poincare()};
  std::vector<CatalogEntry> out;
  const Scalar a = p("alpha"), at = p("alphat"), a1 = p("alpha1"), a2 = p("alpha2");
  const Scalar b1 = p("beta1"), b2 = p("beta2"), gam = p("gamma"), chi = p("chi");
  const LieElement Pp = g("P+"), Pm = g("P-"), P1 = g("P1"), P2 = g("P2"), P0 = g.p0(), P3 = g.p3();
  const LieElement ep = g("e+"), epp = g("e'+"), h = g("h"), hp = g("h'");
  auto add = [&](CatalogEntry e) { out.push_back(std::move(e)); };
  auto hom = [&](const std::string& id, const std::string& summary) {
    return base(id, "poincare", summary, g.a, poincare_r(id), Expectation::Homogeneous);
  };

  {
    auto e = hom("1", "Cartan c-part plus momentum a-part");
    e.pieces = {piece("r'", a * g.w(Pp, Pm) + at * g.w(P1, P2), PieceKind::Abelian),
                piece("r''", gam * g.w(hp, h), PieceKind::Abelian)};
    e.claims = {{{0}, 1}};
    e.twist = TwistPlan{exp_of("F''", t_scale(gam, t_wedge(L(h), L(hp)))),
                        exp_of("F'", t_sum({t_scale(a, t_wedge(L(Pm), L(Pp))), t_scale(at, t_wedge(L(P2), L(P1)))}))};
    add(std::move(e));
  }
  {
    auto e = hom("2", "Jordanian b_{P+} with two Abelian pieces");
    e.pieces = {piece("r'", b1 * b_pplus(), PieceKind::Jordanian, bpplus_data(g, ep)),
                piece("r''", gam * g.w(epp, ep), PieceKind::Abelian),
                piece("r'''", b2 * g.w(Pp, hp), PieceKind::Abelian)};
    e.claims = {{{0}, 1}, {{0, 1}, 2}};
    e.twist = TwistPlan{exp_of("F'''", t_scale(b2 / b1, t_wedge(L(hp), sigma_plus()))),
                        exp_of("F''", t_scale(gam, t_wedge(L(ep), L(epp)))), exp_of("F'.pairs", bpplus_pairs(g)),
                        exp_of("F'.jordanian", jordanian_sigma_plus(h))};
    add(std::move(e));
  }
  {
    auto e = hom("3", "Jordanian piece with shifted leg and two Abelian pieces");
    const LieElement x1 = ep - (a / b1) * Pp;
    e.pieces = {piece("r'", g.w(P1, b1 * x1) - b1 * g.w(P2, epp) + b1 * g.w(Pp, h), PieceKind::Jordanian,
                      bpplus_data(g, x1)),
                piece("r''", gam * g.w(epp, x1), PieceKind::Abelian),
                piece("r'''", (gam * a / b1) * g.w(epp, Pp), PieceKind::Abelian)};
    e.claims = {{{0}, 1}, {{0, 1}, 2}};
    e.twist = TwistPlan{
        exp_of("F'''", t_scale(gam * a / (b1 * b1), t_wedge(sigma_plus(), L(epp)))),
        exp_of("F''", t_scale(gam, t_wedge(L(x1), L(epp)))),
        exp_of("F'.pairs", t_sum({t_otimes(L(b1 * ep - a * Pp), L(P1)), t_scale(-b1, t_otimes(L(epp), L(P2)))})),
        exp_of("F'.jordanian", jordanian_sigma_plus(h))};
    add(std::move(e));
  }
  {
    auto e = hom("4", "two Abelian pieces");
    e.pieces = {piece("r'", g.w(Pp, a1 * P1 + a2 * P2), PieceKind::Abelian),
                piece("r''", gam * g.w(epp + b1 * P1, ep - b1 * P2), PieceKind::Abelian)};
    e.claims = {{{0}, 1}};
    e.twist = TwistPlan{exp_of("F''", t_scale(gam, t_wedge(L(ep - b1 * P1), L(epp + b1 * P2)))),
                        exp_wedge("F'", a1 * P1 + a2 * P2, Pp)};
    add(std::move(e));
  }
  {
    auto e = hom("5", "Lorentz r-matrix L2 inside the Poincare algebra");
    e.pieces = {piece("r", e.r, PieceKind::Other, std::nullopt, "same r-matrix as L2")};
    e.twist_note = "twist of entry L2";
    add(std::move(e));
  }
  {
    auto e = base("6", "poincare", "modified solution with b_{P2}", g.a, poincare_r("6"), Expectation::Modified);
    e.pieces = {piece("r'", b1 * b_p2(), PieceKind::Other, std::nullopt, "called Jordanian type; no Jordanian data known"),
                piece("r''", gam * g.w(h, ep), PieceKind::Other),
                piece("r'''", b2 * g.w(P2, ep), PieceKind::Abelian)};
    e.claims = {{{0}, 1}, {{0, 1}, 2}};
    e.twist_note = "no twist known";
    add(std::move(e));
  }
  {
    auto e = hom("7", "Jordanian b_{P+} with Abelian P+ ^ h'");
    e.pieces = {piece("r'", b1 * b_pplus(), PieceKind::Jordanian, bpplus_data(g, ep)),
                piece("r''", b2 * g.w(Pp, hp), PieceKind::Abelian)};
    e.claims = {{{0}, 1}};
    e.twist = TwistPlan{exp_of("F''", t_scale(b2 / b1, t_wedge(L(hp), sigma_plus()))), exp_of("F'.pairs", bpplus_pairs(g)),
                        exp_of("F'.jordanian", jordanian_sigma_plus(h))};
    add(std::move(e));
  }
  {
    auto e = hom("8", "Jordanian b_{P+} with Abelian P+ ^ e+");
    e.pieces = {piece("r'", b1 * b_pplus(), PieceKind::Jordanian, bpplus_data(g, ep)),
                piece("r''", b2 * g.w(Pp, ep), PieceKind::Abelian)};
    e.claims = {{{0}, 1}};
    e.twist = TwistPlan{exp_of("F''", t_scale(b2 / b1, t_wedge(L(ep), sigma_plus()))), exp_of("F'.pairs", bpplus_pairs(g)),
                        exp_of("F'.jordanian", jordanian_sigma_plus(h))};
    add(std::move(e));
  }
  {
    auto e = hom("9", "chi acting on both e+ and e'+: Jordanian plus Abelian");
    const Scalar ab = a * b2 / b1, abb = a * b2 / (b1 * b1);
    const LieElement x0 = h + (a / b1) * P2 + abb * P1;
    const LieElement x1 = ep + (b2 / b1) * epp + abb * Pp;
    e.pieces = {piece("r'", g.w(Pp, b1 * h + a * P2 + ab * P1) + g.w(P1, b1 * ep + b2 * epp + ab * Pp),
                      PieceKind::Jordanian, JordanianData{x0, Pp, {{x1, P1, Scalar()}}, b1}),
                piece("r''", chi * g.w(Pp, b1 * ep + b2 * epp + ab * Pp), PieceKind::Abelian)};
    e.claims = {{{0}, 1}};
    e.twist = TwistPlan{exp_of("F''", t_scale(chi, t_wedge(L(x1), sigma_plus()))),
                        exp_of("F'.pairs", t_otimes(L(b1 * ep + b2 * epp + ab * Pp), L(P1))),
                        exp_of("F'.jordanian", jordanian_sigma_plus(x0))};
    add(std::move(e));
  }
  {
    auto e = hom("10", "three Abelian pieces");
    e.pieces = {piece("r'", b1 * g.w(Pp, ep), PieceKind::Abelian),
                piece("r''", g.w(P2, Scalar(2) * a1 * P1 - a2 * Pp), PieceKind::Abelian),
                piece("r'''", g.w(P1, b1 * epp - a1 * Pm + Scalar(2) * a1 * P2), PieceKind::Abelian)};
    e.claims = {{{0}, 1}, {{0, 1}, 2}};
    e.twist = TwistPlan{exp_wedge("F'''", b1 * epp - a1 * Pm + Scalar(2) * a1 * P2, P1),
                        exp_wedge("F''", Scalar(2) * a1 * P1 - a2 * Pp, P2), exp_wedge("F'", b1 * ep, Pp)};
    add(std::move(e));
  }
  {
    auto e = hom("11", "two Abelian pieces");
    e.pieces = {piece("r'", a1 * g.w(Pp, P1), PieceKind::Abelian),
                piece("r''", g.w(P2, b1 * ep - a2 * Pm), PieceKind::Abelian)};
    e.claims = {{{0}, 1}};
    e.twist = TwistPlan{exp_wedge("F''", b1 * ep - a2 * Pm, P2), exp_wedge("F'", a1 * P1, Pp)};
    add(std::move(e));
  }
  {
    auto e = hom("12", "entry tilde12 at alpha2 = 0");
    e.twist_note = "no twist known";
    add(std::move(e));
  }
  auto momentum_pair = [&](const std::string& id, const LieElement& leg, const LieElement& lorentz_leg, const char* summary) {
    auto e = hom(id, summary);
    e.pieces = {piece("r'", a1 * g.w(P0, P3) + a2 * g.w(P1, P2), PieceKind::Abelian),
                piece("r''", b1 * g.w(leg, lorentz_leg), PieceKind::Abelian)};
    e.claims = {{{0}, 1}};
    e.twist = TwistPlan{exp_wedge("F''", b1 * lorentz_leg, leg),
                        exp_of("F'", t_sum({t_scale(a1, t_wedge(L(P3), L(P0))), t_scale(a2, t_wedge(L(P2), L(P1)))}))};
    add(std::move(e));
  };
  momentum_pair("13", P0, hp, "Abelian P0 ^ h' with momentum part");
  momentum_pair("14", P3, hp, "Abelian P3 ^ h' with momentum part");
  momentum_pair("15", Pp, hp, "Abelian P+ ^ h' with momentum part");
  momentum_pair("16", P1, h, "Abelian P1 ^ h with momentum part");
  {
    auto e = hom("17", "Jordanian plus mutually subordinated Abelian piece");
    const LieElement x0 = h + (a2 / b1) * P1;
    e.pieces = {piece("r'", g.w(Pp, b1 * h + a2 * P1), PieceKind::Jordanian, JordanianData{x0, Pp, {}, b1}),
                piece("r''", a1 * g.w(P1, P2), PieceKind::Abelian)};
    e.claims = {{{0}, 1}, {{1}, 0}};
    e.twist = TwistPlan{exp_wedge("F''", a1 * P2, P1), exp_of("F'", jordanian_sigma_plus(x0))};
    add(std::move(e));
  }
  {
    auto e = hom("18", "Abelian plus Jordanian with h, h' mixture");
    const LieElement x0 = h + (b2 / b1) * hp;
    e.pieces = {piece("r'", a * g.w(P1, P2), PieceKind::Abelian),
                piece("r''", g.w(Pp, b1 * h + b2 * hp), PieceKind::Jordanian, JordanianData{x0, Pp, {}, b1})};
    e.claims = {{{0}, 1}};
    e.twist = TwistPlan{exp_of("F''", jordanian_sigma_plus(x0)), exp_wedge("F'", a * P2, P1)};
    add(std::move(e));
  }
  {
    auto e = hom("19", "Abelian momentum r-matrix");
    e.pieces = {piece("r", e.r, PieceKind::Abelian)};
    e.twist = TwistPlan{exp_wedge("F", a * Pp, P1)};
    add(std::move(e));
  }
  {
    auto e = hom("20", "Abelian momentum r-matrix");
    e.pieces = {piece("r", e.r, PieceKind::Abelian)};
    e.twist = TwistPlan{exp_wedge("F", a * P2, P1)};
    add(std::move(e));
  }
  {
    auto e = hom("21", "Abelian momentum r-matrix, two parameters");
    e.pieces = {piece("r", e.r, PieceKind::Abelian)};
    e.twist = TwistPlan{exp_of("F", t_sum({t_scale(a1, t_wedge(L(P3), L(P0))), t_scale(a2, t_wedge(L(P2), L(P1)))}))};
    add(std::move(e));
  }
  {
    auto e = base("tilde9", "poincare", "entry 9 with chi acting on e+ only", g.a, poincare_r("tilde9"), Expectation::ReportOnly);
    e.zakrzewski_expected_pass = false;
    e.twist_note = "replaced by entry 9";
    add(std::move(e));
  }
  {
    auto e = base("tilde12", "poincare", "momentum r-matrix with P- ^ P2 term", g.a, poincare_r("tilde12"), Expectation::NotCYBE);
    e.zakrzewski_expected_pass = false;
    e.twist_note = "not a classical r-matrix for alpha2 != 0";
    add(std::move(e));
  }
  return out;
}

const std::vector<std::string> kPoincareOrder = {"1",  "2",  "3",  "4",  "5",  "6",  "7",  "8",  "9",     "10",     "11", "12",
                                                 "13", "14", "15", "16", "17", "18", "19", "20", "21", "tilde9", "tilde12"};

}  // namespace

Bivector lorentz_r(int j, const AlgebraPtr& algebra) {
  Gens g{algebra};
  const Scalar a = p("alpha"), b = p("beta"), gam = p("gamma"), lam = p("lambda");
  switch (j) {
    case 1: return a * g.w("e+", "h");
    case 2: return a * (g.w("e+", "h") - g.w("e'+", "h'")) + Scalar(2) * b * g.w("e'+", "e+");
    case 3:
      return a * (g.w("e'+", "e-") + g.w("e+", "e'-")) + b * (g.w("e+", "e-") - g.w("e'+", "e'-")) -
             Scalar(2) * gam * g.w("h", "h'");
    case 4: return a * (g.w("e'+", "e-") + g.w("e+", "e'-") + Scalar(2) * g.w("h", "h'")) + lam * g.w("e+", "e'+");
    default: throw UnknownEntry("no Lorentz r-matrix r" + std::to_string(j));
  }
}

Bivector lorentz_r4_alternate(const AlgebraPtr& algebra) {
  Gens g{algebra};
  return p("alpha") * (g.w("e'+", "e-") + g.w("e+", "e'-") - Scalar(2) * g.w("h", "h'")) + p("lambda") * g.w("e+", "e'+");
}

Bivector lorentz_r3_complex() {
  Gens g{lorentz_complex()};
  const Scalar a = p("alpha"), b = p("beta"), gam = p("gamma"), i = Scalar::i();
  return Scalar(2) * (b + i * a) * g.w("E1+", "E1-") + Scalar(2) * (b - i * a) * g.w("E2+", "E2-") +
         Scalar(4) * i * gam * g.w("H2", "H1");
}

Bivector lorentz_r4_complex() {
  Gens g{lorentz_complex()};
  const Scalar a = p("alpha"), lam = p("lambda"), i = Scalar::i();
  return Scalar(2) * i * a * (g.w("E1+", "E1-") - g.w("E2+", "E2-") - Scalar(2) * g.w("H1", "H2")) +
         Scalar(2) * i * lam * g.w("E1+", "E2+");
}

Bivector b_pplus() {
  Gens g{poincare()};
  return g.w("P1", "e+") - g.w("P2", "e'+") + g.w("P+", "h");
}

Bivector b_p2() {
  Gens g{poincare()};
  return Scalar(2) * g.w("P1", "h'") + g.w("P-", "e'+") - g.w("P+", "e'-");
}

UExpr sigma_plus() {
  static const UExpr s = u_named(
      "sigma+", u_scale(kHalf, u_func(SeriesKind::Log1p, u_scale(p("beta1"), u_lie(LieElement::generator(poincare(), "P+"))))));
  return s;
}

Bivector poincare_r(const std::string& id) {
  Gens g{poincare()};
  const Scalar a = p("alpha"), at = p("alphat"), a1 = p("alpha1"), a2 = p("alpha2");
  const Scalar b1 = p("beta1"), b2 = p("beta2"), gam = p("gamma"), chi = p("chi");
  const LieElement Pp = g("P+"), Pm = g("P-"), P1 = g("P1"), P2 = g("P2"), P0 = g.p0(), P3 = g.p3();
  const LieElement ep = g("e+"), epp = g("e'+"), h = g("h"), hp = g("h'");
  const Bivector momenta = a1 * g.w(P0, P3) + a2 * g.w(P1, P2);
  if (id == "1") return gam * g.w(hp, h) + a * g.w(Pp, Pm) + at * g.w(P1, P2);
  if (id == "2") return gam * g.w(epp, ep) + b1 * b_pplus() + b2 * g.w(Pp, hp);
  if (id == "3") return gam * g.w(epp, ep) + b1 * b_pplus() + a * g.w(Pp, P1);
  if (id == "4")
    return gam * (g.w(epp, ep) + b1 * g.w(P1, ep) + b1 * g.w(P2, epp) - b1 * b1 * g.w(P1, P2)) + g.w(Pp, a1 * P1 + a2 * P2);
  if (id == "5") return lorentz_r(2, g.a);
  if (id == "6") return gam * g.w(h, ep) + b1 * b_p2() + b2 * g.w(P2, ep);
  if (id == "7") return b1 * b_pplus() + b2 * g.w(Pp, hp);
  if (id == "8") return b1 * b_pplus() + b2 * g.w(Pp, ep);
  if (id == "9") return g.w(P1, b1 * ep + b2 * epp) + g.w(Pp, b1 * h + chi * (b1 * ep + b2 * epp)) + a * g.w(Pp, P2);
  if (id == "tilde9") return g.w(P1, b1 * ep + b2 * epp) + b1 * g.w(Pp, h + chi * ep) + a * g.w(Pp, P2);
  if (id == "10") return b1 * (g.w(P1, epp) + g.w(Pp, ep)) + a1 * g.w(Pm, P1) + a2 * g.w(Pp, P2);
  if (id == "11") return b1 * g.w(P2, ep) + a1 * g.w(Pp, P1) + a2 * g.w(Pm, P2);
  if (id == "12") return b1 * g.w(Pp, ep) + g.w(Pm, a * Pp + a1 * P1) + at * g.w(Pp, P2);
  if (id == "tilde12") return b1 * g.w(Pp, ep) + g.w(Pm, a * Pp + a1 * P1 + a2 * P2) + at * g.w(Pp, P2);
  if (id == "13") return b1 * g.w(P0, hp) + momenta;
  if (id == "14") return b1 * g.w(P3, hp) + momenta;
  if (id == "15") return b1 * g.w(Pp, hp) + momenta;
  if (id == "16") return b1 * g.w(P1, h) + momenta;
  if (id == "17") return b1 * g.w(Pp, h) + a1 * g.w(P1, P2) + a2 * g.w(Pp, P1);
  if (id == "18") return g.w(Pp, b1 * h + b2 * hp) + a * g.w(P1, P2);
  if (id == "19") return a * g.w(P1, Pp);
  if (id == "20") return a * g.w(P1, P2);
  if (id == "21") return momenta;
  throw UnknownEntry("unknown Poincare entry '" + id + "'");
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> all = lorentz_entries();
    for (auto& e : poincare_entries()) all.push_back(std::move(e));
    return all;
  }();
  return entries;
}

const CatalogEntry& find_entry(const std::string& id) {
  for (const auto& e : catalog())
    if (e.id == id) return e;
  throw UnknownEntry("unknown catalog entry '" + id + "'");
}

std::vector<std::string> catalog_ids() {
  std::vector<std::string> ids;
  for (const auto& e : catalog()) ids.push_back(e.id);
  return ids;
}

int twist_equipped_poincare_count() {
  int n = 0;
  for (const auto& e : catalog())
    if (e.family == "poincare" && e.id.rfind("tilde", 0) != 0 && e.twist) ++n;
  return n;
}

std::vector<int> entry_parameters(const CatalogEntry& e) {
  std::set<int> syms;
  for (const auto& [k, c] : e.r.coeffs())
    for (int s : c.symbols()) syms.insert(s);
  return {syms.begin(), syms.end()};
}

std::string dump_entry(const CatalogEntry& e) {
  std::string out = "entry " + e.id + " (" + e.family + "): " + e.summary + "\n";
  out += "  r = " + e.r.to_string() + "\n";
  out += "  expected CYBE: " + to_string(e.expected_cybe) + "\n";
  if (e.zakrzewski_applicable)
    out += std::string("  a+b+c conditions: ") + (e.expected_cybe == Expectation::ReportOnly ? "report-only" : e.zakrzewski_expected_pass ? "expected to hold" : "expected to fail") + "\n";
  if (e.pieces.empty()) out += "  decomposition: none\n";
  for (const auto& pc : e.pieces) {
    out += "  piece " + pc.label + " [" + to_string(pc.kind) + "] = " + pc.r.to_string() + "\n";
    if (!pc.note.empty()) out += "    note: " + pc.note + "\n";
    if (pc.jordanian) {
      const auto& d = *pc.jordanian;
      out += "    x0 = " + d.x0.to_string() + "; y0 = " + d.y0.to_string() + "; xi = " + d.xi.to_string() + "\n";
      for (std::size_t i = 0; i < d.pairs.size(); ++i)
        out += "    x" + std::to_string(i + 1) + " = " + d.pairs[i].x.to_string() + "; y" + std::to_string(i + 1) + " = " +
               d.pairs[i].y.to_string() + "; t" + std::to_string(i + 1) + " = " + d.pairs[i].t.to_string() + "\n";
    }
  }
  for (const auto& c : e.claims) {
    std::string left;
    for (int i : c.left) left += (left.empty() ? "" : " + ") + e.pieces[static_cast<std::size_t>(i)].label;
    out += "  claim: " + left + " > " + e.pieces[static_cast<std::size_t>(c.right)].label + "\n";
  }
  if (e.twist) {
    out += "  twist:\n";
    for (const auto& f : *e.twist) out += "    " + f.label + " = exp(" + to_string(f.argument) + ")\n";
    if (e.omega_variant) out += "    also checked: omega-conjugated twist (w^-1 (x) w^-1) F Delta(w), w = sqrt(u)\n";
  } else {
    out += "  twist: none (" + e.twist_note + ")\n";
  }
  return out;
}

std::string dump_catalog() {
  std::string out;
  for (const auto& e : catalog()) out += dump_entry(e) + "\n";
  return out;
}

}  // namespace twistforge
