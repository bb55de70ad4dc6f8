#ifndef TWISTFORGE_POLYNOMIAL_HPP
#define TWISTFORGE_POLYNOMIAL_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "twistforge/gaussian_rational.hpp"
#include "twistforge/symbols.hpp"

namespace twistforge {

/// Exponent vector over the global symbol table; lexicographic comparison
/// (symbol 0 most significant) is the monomial order.
using Exponents = std::array<std::uint8_t, kMaxSymbols>;

/// Sparse multivariate polynomial over Q(i) in the registered parameters.
class Polynomial {
 public:
  using Terms = std::map<Exponents, GaussianRational>;

  Polynomial() = default;
  Polynomial(const GaussianRational& c);  // NOLINT(google-explicit-constructor)
  Polynomial(long c) : Polynomial(GaussianRational(c)) {}  // NOLINT(google-explicit-constructor)

  static Polynomial symbol(int idx, int power = 1);
  static Polynomial monomial(const Exponents& e, const GaussianRational& c);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  /// Constant term value (zero if absent).
  GaussianRational constant_term() const;
  int degree_in(int var) const;
  int total_degree() const;
  bool has_var(int var) const { return degree_in(var) > 0; }
  /// Highest-index symbol occurring, or -1 for a constant.
  int main_var() const;

  const Exponents& leading_exponents() const { return terms_.rbegin()->first; }
  const GaussianRational& leading_coefficient() const { return terms_.rbegin()->second; }

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const GaussianRational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const GaussianRational& c) { return a *= c; }
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  /// Leading coefficient scaled to one; zero stays zero.
  Polynomial monic() const;
  /// Coefficient of var^k as a polynomial free of var.
  Polynomial coefficient_of(int var, int k) const;
  /// Coefficients c_0..c_d with p = sum c_k var^k.
  std::vector<Polynomial> as_univariate(int var) const;
  Polynomial conj(const RealityMap& overrides = {}) const;

  std::string to_string() const;
  std::size_t hash() const;

 private:
  void add_term(const Exponents& e, const GaussianRational& c);
  Terms terms_;
};

/// Exact quotient a / b, or nullopt when b does not divide a.
std::optional<Polynomial> exact_divide(const Polynomial& a, const Polynomial& b);
/// Monic greatest common divisor (gcd(0, 0) = 0).
Polynomial gcd(const Polynomial& a, const Polynomial& b);
/// Content with respect to var: gcd of the coefficients of powers of var.
Polynomial content(const Polynomial& p, int var);

}  // namespace twistforge

#endif  // TWISTFORGE_POLYNOMIAL_HPP
