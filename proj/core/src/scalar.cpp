#include "twistforge/scalar.hpp"

#include <algorithm>
#include <set>

namespace twistforge {

Scalar::Scalar(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero("Scalar: zero denominator");
  reduce();
}

Scalar Scalar::param(std::string_view name) { return Polynomial::symbol(SymbolTable::index(name)); }
Scalar Scalar::param(int idx) { return Polynomial::symbol(idx); }

GaussianRational Scalar::constant_value() const {
  if (!is_constant()) throw std::domain_error("Scalar '" + to_string() + "' is not a constant");
  return num_.constant_term() / den_.constant_term();
}

void Scalar::reduce() {
  if (num_.is_zero()) {
    den_ = Polynomial(1);
    return;
  }
  if (den_.is_constant()) {
    num_ *= den_.constant_term().inverse();
    den_ = Polynomial(1);
    return;
  }
  Polynomial g = gcd(num_, den_);
  if (!g.is_constant()) {
    num_ = *exact_divide(num_, g);
    den_ = *exact_divide(den_, g);
  }
  GaussianRational lc = den_.leading_coefficient();
  if (!lc.is_one()) {
    GaussianRational inv = lc.inverse();
    num_ *= inv;
    den_ *= inv;
  }
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (!den_.is_constant()) reduce();
    else if (num_.is_zero()) den_ = Polynomial(1);
    return *this;
  }
  Polynomial g = gcd(den_, o.den_);
  Polynomial a = *exact_divide(o.den_, g);
  Polynomial b = *exact_divide(den_, g);
  num_ = num_ * a + o.num_ * b;
  den_ = den_ * a;
  reduce();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = Scalar();
  if (den_.is_constant() && o.den_.is_constant()) {
    num_ = num_ * o.num_;
    return *this;
  }
  Polynomial g1 = gcd(num_, o.den_);
  Polynomial g2 = gcd(o.num_, den_);
  Polynomial n = *exact_divide(num_, g1) * *exact_divide(o.num_, g2);
  Polynomial d = *exact_divide(den_, g2) * *exact_divide(o.den_, g1);
  num_ = std::move(n);
  den_ = std::move(d);
  reduce();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw DivisionByZero("Scalar: division by an identically zero scalar");
  Scalar inv;
  inv.num_ = o.den_;
  inv.den_ = o.num_;
  inv.reduce();
  return *this *= inv;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num_ = -r.num_;
  return r;
}

Scalar Scalar::conj(const RealityMap& overrides) const { return Scalar(num_.conj(overrides), den_.conj(overrides)); }

namespace {

Scalar substitute_poly(const Polynomial& p, int symbol, const Scalar& value) {
  Scalar out;
  auto coeffs = p.as_univariate(symbol);
  Scalar power(1);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (!coeffs[k].is_zero()) out += Scalar(coeffs[k]) * power;
    if (k + 1 < coeffs.size()) power *= value;
  }
  return out;
}

}  // namespace

Scalar Scalar::substitute(int symbol, const Scalar& value) const {
  return substitute_poly(num_, symbol, value) / substitute_poly(den_, symbol, value);
}

std::vector<int> Scalar::symbols() const {
  std::set<int> out;
  for (const auto* p : {&num_, &den_})
    for (const auto& [e, c] : p->terms())
      for (std::size_t k = 0; k < kMaxSymbols; ++k)
        if (e[k]) out.insert(static_cast<int>(k));
  return {out.begin(), out.end()};
}

std::string Scalar::to_string() const {
  if (den_.is_constant()) return num_.to_string();
  std::string n = num_.to_string();
  if (!num_.is_monomial()) n = "(" + n + ")";
  std::string d = den_.to_string();
  if (!den_.is_monomial() || den_.terms().begin()->first != Exponents{}) {
    bool single_symbol = den_.is_monomial() && den_.total_degree() == 1;
    if (!single_symbol) d = "(" + d + ")";
  }
  return n + "/" + d;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

namespace {

bool reads_negative(const Scalar& c) {
  if (!c.num().is_monomial()) return false;
  const GaussianRational& z = c.num().leading_coefficient();
  return z.is_real() ? sgn(z.re()) < 0 : (sgn(z.re()) == 0 && sgn(z.im()) < 0);
}

}  // namespace

std::string format_linear_combination(const std::vector<std::pair<Scalar, std::string>>& terms) {
  std::string out;
  for (const auto& [coeff, label] : terms) {
    if (coeff.is_zero()) continue;
    bool negative = reads_negative(coeff);
    Scalar mag = negative ? -coeff : coeff;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (label.empty()) {
      bool simple = mag.den().is_constant() && mag.num().is_monomial();
      out += simple ? mag.to_string() : "(" + mag.to_string() + ")";
    } else if (mag.is_one()) {
      out += label;
    } else {
      bool simple = mag.den().is_constant() && mag.num().is_monomial() &&
                    (mag.num().leading_coefficient().is_atomic() || mag.num().is_constant());
      out += (simple ? mag.to_string() : "(" + mag.to_string() + ")") + "*" + label;
    }
  }
  return out.empty() ? "0" : out;
}

HbarLaurent::HbarLaurent(std::map<int, GaussianRational> terms) {
  for (auto& [k, c] : terms)
    if (!c.is_zero()) terms_.emplace(k, std::move(c));
}

int HbarLaurent::valuation() const {
  if (terms_.empty()) throw std::domain_error("HbarLaurent: valuation of zero");
  return terms_.begin()->first;
}

int HbarLaurent::degree() const {
  if (terms_.empty()) throw std::domain_error("HbarLaurent: degree of zero");
  return terms_.rbegin()->first;
}

GaussianRational HbarLaurent::coefficient(int power) const {
  auto it = terms_.find(power);
  return it == terms_.end() ? GaussianRational() : it->second;
}

std::string HbarLaurent::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += c.is_atomic() ? c.to_string() : "(" + c.to_string() + ")";
    if (k != 0) out += "*hbar^" + std::to_string(k);
  }
  return out;
}

SpecializationMap SpecializationMap::defaults() {
  SpecializationMap m;
  auto q = [](long n, long d) { return GaussianRational::fraction(n, d); };
  m.set("alpha", q(2, 3));
  m.set("alphat", q(5, 7));
  m.set("alpha1", q(5, 9));
  m.set("alpha2", q(7, 11));
  m.set("beta", q(4, 9));
  m.set("beta1", q(3, 5));
  m.set("beta2", q(5, 8));
  m.set("gamma", q(2, 7));
  m.set("gamma1", q(6, 11));
  m.set("lambda", q(-1, 1));
  m.set("chi", q(1, 1));
  m.set("xi", q(1, 2));
  return m;
}

void SpecializationMap::set(int symbol, GaussianRational constant, int degree) {
  entries_[symbol] = Entry{degree, std::move(constant)};
}

void SpecializationMap::set(std::string_view name, GaussianRational constant, int degree) {
  set(SymbolTable::index(name), std::move(constant), degree);
}

const SpecializationMap::Entry& SpecializationMap::at(int symbol) const {
  auto it = entries_.find(symbol);
  if (it == entries_.end())
    throw std::out_of_range("no specialization for parameter '" + SymbolTable::name(symbol) + "'");
  return it->second;
}

std::vector<std::string> SpecializationMap::validate() const {
  std::vector<std::string> problems;
  for (const auto& [s, e] : entries_) {
    if (e.constant.is_zero()) problems.push_back(SymbolTable::name(s) + ": constant must be nonzero");
    if (e.degree < 1) problems.push_back(SymbolTable::name(s) + ": hbar-degree must be at least 1");
  }
  for (auto a = entries_.begin(); a != entries_.end(); ++a)
    for (auto b = std::next(a); b != entries_.end(); ++b)
      if (a->second.constant == b->second.constant)
        problems.push_back(SymbolTable::name(a->first) + " and " + SymbolTable::name(b->first) +
                           " share the constant " + a->second.constant.to_string());
  return problems;
}

namespace {

// Polynomial in the parameters -> polynomial in hbar (power -> coefficient).
std::map<int, GaussianRational> to_hbar(const Polynomial& p, const SpecializationMap& m) {
  std::map<int, GaussianRational> out;
  for (const auto& [e, c] : p.terms()) {
    GaussianRational v = c;
    int deg = 0;
    for (std::size_t k = 0; k < kMaxSymbols; ++k) {
      if (e[k] == 0) continue;
      const auto& entry = m.at(static_cast<int>(k));
      for (int r = 0; r < e[k]; ++r) v *= entry.constant;
      deg += entry.degree * e[k];
    }
    out[deg] += v;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

}  // namespace

HbarLaurent specialize_laurent(const Scalar& s, const SpecializationMap& m) {
  auto num = to_hbar(s.num(), m);
  auto den = to_hbar(s.den(), m);
  if (den.empty())
    throw NonPolynomialSpecialization("specialization of '" + s.to_string() + "' sends its denominator to zero");
  if (den.size() != 1)
    throw NonPolynomialSpecialization("specialized denominator of '" + s.to_string() +
                                      "' is not a single power of hbar");
  auto [shift, c] = *den.begin();
  GaussianRational inv = c.inverse();
  std::map<int, GaussianRational> out;
  for (const auto& [k, v] : num) out.emplace(k - shift, v * inv);
  return HbarLaurent(std::move(out));
}

HbarLaurent specialize(const Scalar& s, const SpecializationMap& m) {
  HbarLaurent l = specialize_laurent(s, m);
  if (!l.is_zero() && l.valuation() < 0)
    throw NonPolynomialSpecialization("'" + s.to_string() + "' specializes with hbar in the denominator");
  return l;
}

}  // namespace twistforge
