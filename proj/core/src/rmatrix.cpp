#include "twistforge/rmatrix.hpp"

#include <algorithm>
#include <sstream>

namespace twistforge {

namespace {

std::string name_of(const AlgebraPtr& a, int j) { return a->generator_name(j); }

}  // namespace

// ---- Bivector ----

Bivector Bivector::wedge(const LieElement& x, const LieElement& y) {
  require_same_algebra(x.algebra(), y.algebra(), "wedge");
  Bivector r(x.algebra());
  for (const auto& [j, c] : x.coeffs())
    for (const auto& [k, d] : y.coeffs()) r.add_term(j, k, c * d);
  return r;
}

Scalar Bivector::coeff(int j, int k) const {
  if (j == k) return {};
  auto it = coeffs_.find({std::min(j, k), std::max(j, k)});
  if (it == coeffs_.end()) return {};
  return j < k ? it->second : -it->second;
}

void Bivector::add_term(int j, int k, const Scalar& c) {
  if (j == k || c.is_zero()) return;
  Key key{std::min(j, k), std::max(j, k)};
  Scalar v = j < k ? c : -c;
  auto [it, inserted] = coeffs_.try_emplace(key, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

Bivector& Bivector::operator+=(const Bivector& o) {
  require_same_algebra(algebra_, o.algebra_, "Bivector +");
  for (const auto& [k, c] : o.coeffs_) add_term(k.first, k.second, c);
  return *this;
}

Bivector& Bivector::operator-=(const Bivector& o) {
  require_same_algebra(algebra_, o.algebra_, "Bivector -");
  for (const auto& [k, c] : o.coeffs_) add_term(k.first, k.second, -c);
  return *this;
}

Bivector& Bivector::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [k, v] : coeffs_) v *= c;
  return *this;
}

Bivector Bivector::operator-() const {
  Bivector r = *this;
  for (auto& [k, v] : r.coeffs_) v = -v;
  return r;
}

Bivector Bivector::substitute(int symbol, const Scalar& value) const {
  Bivector out(algebra_);
  for (const auto& [k, c] : coeffs_) out.add_term(k.first, k.second, c.substitute(symbol, value));
  return out;
}

std::vector<LieElement> Bivector::legs() const {
  std::vector<LieElement> rows;
  std::map<int, LieElement> by_row;
  for (const auto& [k, c] : coeffs_) {
    by_row.try_emplace(k.first, algebra_).first->second.add_term(k.second, c);
    by_row.try_emplace(k.second, algebra_).first->second.add_term(k.first, -c);
  }
  for (auto& [j, x] : by_row) rows.push_back(std::move(x));
  return linear_span(rows);
}

std::string Bivector::to_string() const {
  std::vector<std::pair<Scalar, std::string>> terms;
  for (const auto& [k, c] : coeffs_) terms.emplace_back(c, name_of(algebra_, k.first) + "^" + name_of(algebra_, k.second));
  return format_linear_combination(terms);
}

std::ostream& operator<<(std::ostream& os, const Bivector& r) { return os << r.to_string(); }

// ---- Trivector ----

Trivector Trivector::wedge(const LieElement& x, const LieElement& y, const LieElement& z) {
  require_same_algebra(x.algebra(), y.algebra(), "wedge");
  require_same_algebra(x.algebra(), z.algebra(), "wedge");
  Trivector t(x.algebra());
  for (const auto& [i, a] : x.coeffs())
    for (const auto& [j, b] : y.coeffs())
      for (const auto& [k, c] : z.coeffs()) t.add_term(i, j, k, a * b * c);
  return t;
}

Scalar Trivector::coeff(int i, int j, int k) const {
  Trivector probe(algebra_);
  probe.add_term(i, j, k, Scalar(1));
  if (probe.is_zero()) return {};
  const auto& [key, sign] = *probe.coeffs_.begin();
  auto it = coeffs_.find(key);
  return it == coeffs_.end() ? Scalar() : it->second * sign;
}

void Trivector::add_term(int i, int j, int k, const Scalar& c) {
  if (c.is_zero() || i == j || j == k || i == k) return;
  Key key{i, j, k};
  bool odd = false;
  // Three-element bubble sort tracking the permutation parity.
  for (int pass = 0; pass < 2; ++pass)
    for (std::size_t m = 0; m + 1 < 3; ++m)
      if (key[m] > key[m + 1]) {
        std::swap(key[m], key[m + 1]);
        odd = !odd;
      }
  Scalar v = odd ? -c : c;
  auto [it, inserted] = coeffs_.try_emplace(key, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

Trivector& Trivector::operator+=(const Trivector& o) {
  require_same_algebra(algebra_, o.algebra_, "Trivector +");
  for (const auto& [k, c] : o.coeffs_) add_term(k[0], k[1], k[2], c);
  return *this;
}

Trivector& Trivector::operator-=(const Trivector& o) {
  require_same_algebra(algebra_, o.algebra_, "Trivector -");
  for (const auto& [k, c] : o.coeffs_) add_term(k[0], k[1], k[2], -c);
  return *this;
}

Trivector& Trivector::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [k, v] : coeffs_) v *= c;
  return *this;
}

std::string Trivector::to_string() const {
  std::vector<std::pair<Scalar, std::string>> terms;
  for (const auto& [k, c] : coeffs_)
    terms.emplace_back(c, name_of(algebra_, k[0]) + "^" + name_of(algebra_, k[1]) + "^" + name_of(algebra_, k[2]));
  return format_linear_combination(terms);
}

std::ostream& operator<<(std::ostream& os, const Trivector& t) { return os << t.to_string(); }

// ---- calculus ----

Bivector adjoint_action(const LieElement& x, const Bivector& r) {
  require_same_algebra(x.algebra(), r.algebra(), "adjoint_action");
  const LieAlgebra& a = *r.algebra();
  Bivector out(r.algebra());
  for (const auto& [g, xc] : x.coeffs())
    for (const auto& [k, c] : r.coeffs()) {
      Scalar f = xc * c;
      for (const auto& [l, e] : a.bracket(g, k.first)) out.add_term(l, k.second, f * Scalar(e));
      for (const auto& [l, e] : a.bracket(g, k.second)) out.add_term(k.first, l, f * Scalar(e));
    }
  return out;
}

Trivector adjoint_action(const LieElement& x, const Trivector& t) {
  require_same_algebra(x.algebra(), t.algebra(), "adjoint_action");
  const LieAlgebra& a = *t.algebra();
  Trivector out(t.algebra());
  for (const auto& [g, xc] : x.coeffs())
    for (const auto& [k, c] : t.coeffs()) {
      Scalar f = xc * c;
      for (const auto& [l, e] : a.bracket(g, k[0])) out.add_term(l, k[1], k[2], f * Scalar(e));
      for (const auto& [l, e] : a.bracket(g, k[1])) out.add_term(k[0], l, k[2], f * Scalar(e));
      for (const auto& [l, e] : a.bracket(g, k[2])) out.add_term(k[0], k[1], l, f * Scalar(e));
    }
  return out;
}

Trivector schouten(const Bivector& r1, const Bivector& r2) {
  require_same_algebra(r1.algebra(), r2.algebra(), "schouten");
  const LieAlgebra& a = *r1.algebra();
  Trivector out(r1.algebra());
  for (const auto& [k1, c1] : r1.coeffs())
    for (const auto& [k2, c2] : r2.coeffs()) {
      const int X = k1.first, Y = k1.second, Z = k2.first, W = k2.second;
      const Scalar c = c1 * c2;
      for (const auto& [l, e] : a.bracket(X, Z)) out.add_term(l, Y, W, c * Scalar(e));
      for (const auto& [l, e] : a.bracket(X, W)) out.add_term(l, Y, Z, -c * Scalar(e));
      for (const auto& [l, e] : a.bracket(Y, Z)) out.add_term(l, X, W, -c * Scalar(e));
      for (const auto& [l, e] : a.bracket(Y, W)) out.add_term(l, X, Z, c * Scalar(e));
    }
  return out;
}

bool is_ad_invariant(const Trivector& t) {
  for (int g = 0; g < t.algebra()->dim(); ++g)
    if (!adjoint_action(LieElement::generator(t.algebra(), g), t).is_zero()) return false;
  return true;
}

std::string to_string(CybeKind k) {
  switch (k) {
    case CybeKind::Homogeneous:
      return "Homogeneous";
    case CybeKind::Modified:
      return "Modified";
    case CybeKind::NotCYBE:
      return "NotCYBE";
  }
  return "?";
}

CybeVerdict cybe_classify(const Bivector& r) {
  Trivector omega = schouten(r, r);
  if (omega.is_zero()) return {CybeKind::Homogeneous, omega, true};
  bool inv = is_ad_invariant(omega);
  return {inv ? CybeKind::Modified : CybeKind::NotCYBE, omega, inv};
}

AbcDecomposition decompose_abc(const Bivector& r) {
  const LieAlgebra& a = *r.algebra();
  if (a.family() != AlgebraFamily::Poincare || a.momentum_mask().empty())
    throw std::invalid_argument("decompose_abc: " + a.name() + " is not a Poincare algebra");
  auto mom = [&](int j) { return a.is_momentum(j); };
  return {r.filter([&](int j, int k) { return mom(j) && mom(k); }),
          r.filter([&](int j, int k) { return mom(j) != mom(k); }),
          r.filter([&](int j, int k) { return !mom(j) && !mom(k); })};
}

ZakrzewskiReport check_zakrzewski_conditions(const Bivector& r) {
  auto [a, b, c] = decompose_abc(r);
  ZakrzewskiReport rep{{true, Trivector(r.algebra())},
                       {true, Trivector(r.algebra())},
                       {true, Trivector(r.algebra())},
                       {true, Trivector(r.algebra())}};
  rep.cc.witness = schouten(c, c);
  rep.cc.pass = rep.cc.witness.is_zero();
  rep.bc.witness = schouten(b, c);
  rep.bc.pass = rep.bc.witness.is_zero();
  rep.ac_bb.witness = Scalar(2) * schouten(a, c) + schouten(b, b);
  rep.ac_bb.pass = rep.ac_bb.witness.is_zero() || is_ad_invariant(rep.ac_bb.witness);
  rep.ab.witness = schouten(a, b);
  rep.ab.pass = rep.ab.witness.is_zero();
  return rep;
}

std::vector<LieElement> support(const Bivector& r) { return subalgebra_closure(r.legs()); }

bool is_subordinated(const Bivector& r1, const Bivector& r2) {
  require_same_algebra(r1.algebra(), r2.algebra(), "is_subordinated");
  for (const auto& x : support(r2))
    if (!adjoint_action(x, r1).is_zero()) return false;
  return true;
}

bool is_abelian_type(const Bivector& r) {
  auto s = support(r);
  for (std::size_t m = 0; m < s.size(); ++m)
    for (std::size_t n = m + 1; n < s.size(); ++n)
      if (!bracket(s[m], s[n]).is_zero()) return false;
  return true;
}

Bivector star(const Bivector& r, StarLifting lifting, const RealityMap& overrides) {
  const AlgebraPtr& alg = r.algebra();
  Bivector out(alg);
  for (const auto& [k, c] : r.coeffs()) {
    LieElement xs = star(LieElement::generator(alg, k.first), overrides);
    LieElement ys = star(LieElement::generator(alg, k.second), overrides);
    // (x^y)* = x*^y* (direct) or y*(x)x* - x*(x)y* = -x*^y* (flipped).
    Scalar cc = c.conj(overrides);
    out += (lifting == StarLifting::Direct ? cc : -cc) * Bivector::wedge(xs, ys);
  }
  return out;
}

bool star_reality_check(const Bivector& r, StarLifting lifting, const RealityMap& overrides) {
  return star(r, lifting, overrides) == -r;
}

const std::vector<std::string>& jordanian_relation_labels() {
  static const std::vector<std::string> labels = {
      "[x0, y0] = y0",        "[x0, y_i] = t_i y_i", "[x0, x_i] = (1 - t_i) x_i",
      "[x_i, y_j] = delta_ij y0", "[x_i, x_j] = 0",   "[y_i, y_j] = 0",
      "[y0, x_j] = 0",        "[y0, y_j] = 0",       "xi * sum y_nu ^ x_nu = r"};
  return labels;
}

JordanianCheck verify_jordanian_data(const JordanianData& d, const Bivector& r) {
  const auto& labels = jordanian_relation_labels();
  const AlgebraPtr& alg = d.x0.algebra();
  const std::size_t n = d.pairs.size();
  auto fail = [&](std::size_t rel, const std::string& where, const LieElement& diff) {
    return JordanianCheck{false, labels[rel], where + ": difference " + diff.to_string()};
  };
  auto idx = [](std::size_t i) { return std::to_string(i + 1); };
  LieElement zero(alg);

  if (auto diff = bracket(d.x0, d.y0) - d.y0; !diff.is_zero()) return fail(0, "[x0, y0]", diff);
  for (std::size_t i = 0; i < n; ++i)
    if (auto diff = bracket(d.x0, d.pairs[i].y) - d.pairs[i].t * d.pairs[i].y; !diff.is_zero())
      return fail(1, "i = " + idx(i), diff);
  for (std::size_t i = 0; i < n; ++i)
    if (auto diff = bracket(d.x0, d.pairs[i].x) - (Scalar(1) - d.pairs[i].t) * d.pairs[i].x; !diff.is_zero())
      return fail(2, "i = " + idx(i), diff);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (auto diff = bracket(d.pairs[i].x, d.pairs[j].y) - (i == j ? d.y0 : zero); !diff.is_zero())
        return fail(3, "i = " + idx(i) + ", j = " + idx(j), diff);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (auto diff = bracket(d.pairs[i].x, d.pairs[j].x); !diff.is_zero())
        return fail(4, "i = " + idx(i) + ", j = " + idx(j), diff);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (auto diff = bracket(d.pairs[i].y, d.pairs[j].y); !diff.is_zero())
        return fail(5, "i = " + idx(i) + ", j = " + idx(j), diff);
  for (std::size_t j = 0; j < n; ++j)
    if (auto diff = bracket(d.y0, d.pairs[j].x); !diff.is_zero()) return fail(6, "j = " + idx(j), diff);
  for (std::size_t j = 0; j < n; ++j)
    if (auto diff = bracket(d.y0, d.pairs[j].y); !diff.is_zero()) return fail(7, "j = " + idx(j), diff);

  Bivector sum = Bivector::wedge(d.y0, d.x0);
  for (const auto& p : d.pairs) sum += Bivector::wedge(p.y, p.x);
  sum *= d.xi;
  if (Bivector diff = sum - r; !diff.is_zero())
    return {false, labels[8], "difference " + diff.to_string()};
  return {true, "", ""};
}

}  // namespace twistforge
