#ifndef TWISTFORGE_SERIES_HPP
#define TWISTFORGE_SERIES_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "twistforge/uea.hpp"

namespace twistforge {

/// Raised when a series argument has a nonzero constant (or negative) hbar part
/// where valuation >= 1 is required.
class ValuationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Truncated power series sum_{d=0}^{N} hbar^d T_d with T_d in U(g)^{(x) rank}.
class Series {
 public:
  Series(AlgebraPtr algebra, int rank, int order);
  static Series unit(const AlgebraPtr& algebra, int rank, int order);
  /// t placed at hbar-degree `degree`.
  static Series monomial(const UElement& t, int degree, int order);

  const AlgebraPtr& algebra() const { return algebra_; }
  int rank() const { return rank_; }
  int order() const { return static_cast<int>(terms_.size()) - 1; }

  const UElement& operator[](int d) const { return terms_.at(static_cast<std::size_t>(d)); }
  UElement& at(int d) { return terms_.at(static_cast<std::size_t>(d)); }

  /// Lowest degree with a nonzero part; order() + 1 for the zero series.
  int valuation() const;
  bool is_zero() const { return valuation() > order(); }
  bool is_unit() const;

  Series truncated(int order) const;

  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);
  Series& operator*=(const GaussianRational& c);
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(Series a, const GaussianRational& c) { return a *= c; }
  Series operator-() const;
  /// Truncated Cauchy product; the result has the smaller of the two orders.
  Series operator*(const Series& o) const;
  friend bool operator==(const Series& a, const Series& b);

  /// Per-degree linear map; the rank of the result is taken from f.
  template <class F>
  Series map(F f, int result_rank) const {
    Series out(algebra_, result_rank, order());
    for (int d = 0; d <= order(); ++d)
      if (!(*this)[d].is_zero()) out.at(d) = f((*this)[d]);
    return out;
  }

  std::string to_string() const;

 private:
  AlgebraPtr algebra_;
  int rank_;
  std::vector<UElement> terms_;
};

enum class SeriesKind { Exp, Log1p, Sqrt1p, Arctan, GeomInv };
std::string to_string(SeriesKind k);

/// f(s) by Maclaurin composition; s must have valuation >= 1.
Series series_function(SeriesKind kind, const Series& s);
/// Neumann inverse of a series with degree-0 part 1.
Series inverse(const Series& s);

/// a (x) b degreewise.
Series otimes(const Series& a, const Series& b);
Series coproduct(const Series& s, int slot = 0);
Series counit(const Series& s, int slot);
Series antipode(const Series& s, int slot = 0);
Series multiply_slots(const Series& s, int slot = 0);
Series embed(const Series& s, int i, int j);
Series flip(const Series& s);

/// Specializes every coefficient of a symbolic tensor to a series.
Series specialize(const SymTensor& t, const SpecializationMap& m, int order);

}  // namespace twistforge

#endif  // TWISTFORGE_SERIES_HPP
