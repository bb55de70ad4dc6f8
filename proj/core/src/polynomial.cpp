#include "twistforge/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace twistforge {

namespace {

Exponents zero_exponents() { return Exponents{}; }

bool divides(const Exponents& d, const Exponents& e) {
  for (std::size_t k = 0; k < kMaxSymbols; ++k)
    if (d[k] > e[k]) return false;
  return true;
}

Exponents add_exp(const Exponents& a, const Exponents& b) {
  Exponents r{};
  for (std::size_t k = 0; k < kMaxSymbols; ++k) {
    unsigned s = unsigned(a[k]) + unsigned(b[k]);
    if (s > 255) throw std::overflow_error("Polynomial: exponent overflow");
    r[k] = static_cast<std::uint8_t>(s);
  }
  return r;
}

Exponents sub_exp(const Exponents& a, const Exponents& b) {
  Exponents r{};
  for (std::size_t k = 0; k < kMaxSymbols; ++k) r[k] = static_cast<std::uint8_t>(a[k] - b[k]);
  return r;
}

}  // namespace

Polynomial::Polynomial(const GaussianRational& c) {
  if (!c.is_zero()) terms_.emplace(zero_exponents(), c);
}

Polynomial Polynomial::symbol(int idx, int power) {
  if (idx < 0 || static_cast<std::size_t>(idx) >= kMaxSymbols) throw std::out_of_range("Polynomial::symbol");
  Exponents e{};
  e[static_cast<std::size_t>(idx)] = static_cast<std::uint8_t>(power);
  return monomial(e, 1);
}

Polynomial Polynomial::monomial(const Exponents& e, const GaussianRational& c) {
  Polynomial p;
  if (!c.is_zero()) p.terms_.emplace(e, c);
  return p;
}

bool Polynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{}); }

GaussianRational Polynomial::constant_term() const {
  auto it = terms_.find(zero_exponents());
  return it == terms_.end() ? GaussianRational() : it->second;
}

int Polynomial::degree_in(int var) const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, int(e[static_cast<std::size_t>(var)]));
  return d;
}

int Polynomial::total_degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (auto x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

int Polynomial::main_var() const {
  int v = -1;
  for (const auto& [e, c] : terms_)
    for (int k = int(kMaxSymbols) - 1; k > v; --k)
      if (e[static_cast<std::size_t>(k)] > 0) {
        v = k;
        break;
      }
  return v;
}

void Polynomial::add_term(const Exponents& e, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(add_exp(ea, eb), ca * cb);
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial& Polynomial::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [e, v] : r.terms_) v = -v;
  return r;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return *this * leading_coefficient().inverse();
}

Polynomial Polynomial::coefficient_of(int var, int k) const {
  Polynomial r;
  auto v = static_cast<std::size_t>(var);
  for (const auto& [e, c] : terms_)
    if (e[v] == k) {
      Exponents e2 = e;
      e2[v] = 0;
      r.terms_.emplace(e2, c);
    }
  return r;
}

std::vector<Polynomial> Polynomial::as_univariate(int var) const {
  std::vector<Polynomial> out(static_cast<std::size_t>(degree_in(var)) + 1);
  auto v = static_cast<std::size_t>(var);
  for (const auto& [e, c] : terms_) {
    Exponents e2 = e;
    e2[v] = 0;
    out[e[v]].terms_.emplace(e2, c);
  }
  return out;
}

Polynomial Polynomial::conj(const RealityMap& overrides) const {
  Polynomial r;
  for (const auto& [e, c] : terms_) {
    GaussianRational cc = c.conj();
    for (std::size_t k = 0; k < kMaxSymbols; ++k) {
      if (e[k] == 0) continue;
      switch (SymbolTable::reality(static_cast<int>(k), overrides)) {
        case Reality::Real:
          break;
        case Reality::Imaginary:
          if (e[k] % 2) cc = -cc;
          break;
        case Reality::Unrestricted:
          throw std::domain_error("conj: parameter '" + SymbolTable::name(static_cast<int>(k)) +
                                  "' has no reality flag");
      }
    }
    r.terms_.emplace(e, cc);
  }
  return r;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (std::size_t k = 0; k < kMaxSymbols; ++k) {
      if (e[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += SymbolTable::name(static_cast<int>(k));
      if (e[k] > 1) mono += "^" + std::to_string(e[k]);
    }
    bool negative = c.is_real() ? sgn(c.re()) < 0 : (sgn(c.re()) == 0 && sgn(c.im()) < 0);
    GaussianRational mag = negative ? -c : c;
    std::string coeff;
    if (mono.empty())
      coeff = mag.to_string();
    else if (!mag.is_one())
      coeff = mag.to_string() + "*";
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    out += coeff + mono;
    first = false;
  }
  return out;
}

std::size_t Polynomial::hash() const {
  std::size_t h = terms_.size();
  for (const auto& [e, c] : terms_) {
    for (auto x : e) h = h * 131u + x;
    h ^= c.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::optional<Polynomial> exact_divide(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw DivisionByZero("exact_divide: division by zero polynomial");
  if (a.is_zero()) return Polynomial();
  if (b.is_constant()) return a * b.leading_coefficient().inverse();
  const Exponents& lb = b.leading_exponents();
  GaussianRational lcb_inv = b.leading_coefficient().inverse();
  Polynomial q;
  Polynomial r = a;
  while (!r.is_zero()) {
    const Exponents& lr = r.leading_exponents();
    if (!divides(lb, lr)) return std::nullopt;
    Polynomial t = Polynomial::monomial(sub_exp(lr, lb), r.leading_coefficient() * lcb_inv);
    q += t;
    r -= t * b;
  }
  return q;
}

namespace {

Polynomial divide_or_throw(const Polynomial& a, const Polynomial& b) {
  auto q = exact_divide(a, b);
  if (!q) throw std::logic_error("Polynomial: expected exact division");
  return *q;
}

Polynomial monomial_gcd(const Polynomial& a, const Polynomial& b) {
  Exponents m;
  m.fill(255);
  for (const auto* p : {&a, &b})
    for (const auto& [e, c] : p->terms())
      for (std::size_t k = 0; k < kMaxSymbols; ++k) m[k] = std::min(m[k], e[k]);
  return Polynomial::monomial(m, 1);
}

// Sparse pseudo-remainder of a by b with respect to var.
Polynomial pseudo_remainder(Polynomial a, const Polynomial& b, int var) {
  int db = b.degree_in(var);
  Polynomial lcb = b.coefficient_of(var, db);
  while (!a.is_zero()) {
    int da = a.degree_in(var);
    if (da < db) break;
    Polynomial lca = a.coefficient_of(var, da);
    a = lcb * a - lca * Polynomial::symbol(var, da - db) * b;
  }
  return a;
}

Polynomial primitive_part(const Polynomial& p, int var) {
  if (p.is_zero()) return p;
  return divide_or_throw(p, content(p, var)).monic();
}

}  // namespace

Polynomial content(const Polynomial& p, int var) {
  Polynomial g;
  for (const auto& c : p.as_univariate(var)) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant() && !g.is_zero()) return Polynomial(1);
  }
  return g;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Polynomial(1);
  if (a.is_monomial() || b.is_monomial()) return monomial_gcd(a, b);
  if (a == b) return a.monic();

  int v = std::max(a.main_var(), b.main_var());
  if (!a.has_var(v)) return gcd(a, content(b, v));
  if (!b.has_var(v)) return gcd(content(a, v), b);

  Polynomial ca = content(a, v);
  Polynomial cb = content(b, v);
  Polynomial g = gcd(ca, cb);
  Polynomial pa = divide_or_throw(a, ca);
  Polynomial pb = divide_or_throw(b, cb);
  if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
  while (!pb.is_zero()) {
    Polynomial r = pseudo_remainder(pa, pb, v);
    pa = std::move(pb);
    pb = primitive_part(r, v);
  }
  return (g * primitive_part(pa, v)).monic();
}

}  // namespace twistforge
