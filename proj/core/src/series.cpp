#include "twistforge/series.hpp"

namespace twistforge {

Series::Series(AlgebraPtr algebra, int rank, int order) : algebra_(std::move(algebra)), rank_(rank) {
  if (order < 0) throw std::invalid_argument("Series: negative order");
  terms_.assign(static_cast<std::size_t>(order + 1), UElement(algebra_, rank));
}

Series Series::unit(const AlgebraPtr& algebra, int rank, int order) {
  Series s(algebra, rank, order);
  s.at(0) = UElement::unit(algebra, rank);
  return s;
}

Series Series::monomial(const UElement& t, int degree, int order) {
  Series s(t.algebra(), t.rank(), order);
  if (degree <= order) s.at(degree) = t;
  return s;
}

int Series::valuation() const {
  for (int d = 0; d <= order(); ++d)
    if (!(*this)[d].is_zero()) return d;
  return order() + 1;
}

bool Series::is_unit() const {
  if ((*this)[0] != UElement::unit(algebra_, rank_)) return false;
  for (int d = 1; d <= order(); ++d)
    if (!(*this)[d].is_zero()) return false;
  return true;
}

Series Series::truncated(int order) const {
  Series out(algebra_, rank_, std::min(order, this->order()));
  for (int d = 0; d <= out.order(); ++d) out.at(d) = (*this)[d];
  return out;
}

Series& Series::operator+=(const Series& o) {
  if (o.order() < order()) *this = truncated(o.order());
  for (int d = 0; d <= order(); ++d) at(d) += o[d];
  return *this;
}

Series& Series::operator-=(const Series& o) {
  if (o.order() < order()) *this = truncated(o.order());
  for (int d = 0; d <= order(); ++d) at(d) -= o[d];
  return *this;
}

Series& Series::operator*=(const GaussianRational& c) {
  for (auto& t : terms_) t *= c;
  return *this;
}

Series Series::operator-() const {
  Series r = *this;
  for (auto& t : r.terms_) t = -t;
  return r;
}

Series Series::operator*(const Series& o) const {
  const int n = std::min(order(), o.order());
  Series out(algebra_, rank_, n);
  for (int i = 0; i <= n; ++i) {
    if ((*this)[i].is_zero()) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (o[j].is_zero()) continue;
      out.at(i + j) += (*this)[i] * o[j];
    }
  }
  return out;
}

bool operator==(const Series& a, const Series& b) {
  if (a.algebra_ != b.algebra_ || a.rank_ != b.rank_) return false;
  const int n = std::min(a.order(), b.order());
  for (int d = 0; d <= n; ++d)
    if (a[d] != b[d]) return false;
  return true;
}

std::string Series::to_string() const {
  std::string out;
  for (int d = 0; d <= order(); ++d) {
    if ((*this)[d].is_zero()) continue;
    if (!out.empty()) out += "\n";
    out += "hbar^" + std::to_string(d) + ": " + (*this)[d].to_string();
  }
  return out.empty() ? "0" : out;
}

std::string to_string(SeriesKind k) {
  switch (k) {
    case SeriesKind::Exp: return "exp";
    case SeriesKind::Log1p: return "log1p";
    case SeriesKind::Sqrt1p: return "sqrt1p";
    case SeriesKind::Arctan: return "arctan";
    case SeriesKind::GeomInv: return "geom_inv";
  }
  return "?";
}

namespace {

// Maclaurin coefficient a_k of f(x) = sum a_k x^k.
GaussianRational maclaurin(SeriesKind kind, int k) {
  switch (kind) {
    case SeriesKind::Exp: {
      mpz_class f = 1;
      for (int j = 2; j <= k; ++j) f *= j;
      return GaussianRational(mpq_class(1, f));
    }
    case SeriesKind::Log1p:
      if (k == 0) return GaussianRational(0);
      return GaussianRational(mpq_class(k % 2 ? 1 : -1, k));
    case SeriesKind::Sqrt1p: {
      // binom(1/2, k)
      mpq_class c = 1;
      for (int j = 0; j < k; ++j) c *= mpq_class(1, 2) - j, c /= j + 1;
      c.canonicalize();
      return GaussianRational(c);
    }
    case SeriesKind::Arctan:
      if (k % 2 == 0) return GaussianRational(0);
      return GaussianRational(mpq_class((k / 2) % 2 ? -1 : 1, k));
    case SeriesKind::GeomInv:
      return GaussianRational(k % 2 ? -1 : 1);
  }
  return GaussianRational(0);
}

}  // namespace

Series series_function(SeriesKind kind, const Series& s) {
  if (!s[0].is_zero()) throw ValuationError(to_string(kind) + ": argument has a nonzero constant term");
  const int n = s.order();
  Series out = Series::unit(s.algebra(), s.rank(), n) * maclaurin(kind, 0);
  Series power = s;
  for (int k = 1; k <= n && !power.is_zero(); ++k) {
    GaussianRational a = maclaurin(kind, k);
    if (!a.is_zero()) out += power * a;
    if (k < n) power = power * s;
  }
  return out;
}

Series inverse(const Series& s) {
  if (s[0] != UElement::unit(s.algebra(), s.rank())) throw ValuationError("inverse: degree-0 part is not the unit");
  Series g = Series::unit(s.algebra(), s.rank(), s.order());
  for (int d = 1; d <= s.order(); ++d) {
    UElement acc(s.algebra(), s.rank());
    for (int i = 1; i <= d; ++i)
      if (!s[i].is_zero() && !g[d - i].is_zero()) acc -= s[i] * g[d - i];
    g.at(d) = acc;
  }
  return g;
}

Series otimes(const Series& a, const Series& b) {
  const int n = std::min(a.order(), b.order());
  Series out(a.algebra(), a.rank() + b.rank(), n);
  for (int i = 0; i <= n; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= n; ++j)
      if (!b[j].is_zero()) out.at(i + j) += otimes(a[i], b[j]);
  }
  return out;
}

Series coproduct(const Series& s, int slot) {
  return s.map([slot](const UElement& t) { return coproduct(t, slot); }, s.rank() + 1);
}

Series counit(const Series& s, int slot) {
  return s.map([slot](const UElement& t) { return counit(t, slot); }, std::max(1, s.rank() - 1));
}

Series antipode(const Series& s, int slot) {
  return s.map([slot](const UElement& t) { return antipode(t, slot); }, s.rank());
}

Series multiply_slots(const Series& s, int slot) {
  return s.map([slot](const UElement& t) { return multiply_slots(t, slot); }, s.rank() - 1);
}

Series embed(const Series& s, int i, int j) {
  return s.map([i, j](const UElement& t) { return embed(t, i, j); }, 3);
}

Series flip(const Series& s) {
  return s.map([](const UElement& t) { return flip(t); }, 2);
}

Series specialize(const SymTensor& t, const SpecializationMap& m, int order) {
  Series out(t.algebra(), t.rank(), order);
  for (const auto& [k, c] : t.terms()) {
    HbarLaurent l = specialize(c, m);
    for (const auto& [p, v] : l.terms())
      if (p <= order) out.at(p).add_term(k, v);
  }
  return out;
}

}  // namespace twistforge
