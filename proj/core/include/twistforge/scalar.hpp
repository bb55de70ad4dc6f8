#ifndef TWISTFORGE_SCALAR_HPP
#define TWISTFORGE_SCALAR_HPP

#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "twistforge/gaussian_rational.hpp"
#include "twistforge/polynomial.hpp"
#include "twistforge/symbols.hpp"

namespace twistforge {

/// Exact coefficient: a rational function of the formal parameters over Q(i).
///
/// Always stored reduced: gcd(num, den) = 1 and den monic, so two scalars are
/// equal exactly when their numerators and denominators are equal.
class Scalar {
 public:
  Scalar() = default;
  Scalar(const GaussianRational& c) : num_(c) {}  // NOLINT(google-explicit-constructor)
  Scalar(long c) : num_(GaussianRational(c)) {}   // NOLINT(google-explicit-constructor)
  Scalar(const Polynomial& p) : num_(p) {}        // NOLINT(google-explicit-constructor)
  Scalar(Polynomial num, Polynomial den);

  static Scalar param(std::string_view name);
  static Scalar param(int idx);
  static Scalar i() { return GaussianRational::i(); }
  static Scalar fraction(long n, long d) { return GaussianRational::fraction(n, d); }

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_constant() && num_.is_constant() && num_.constant_term().is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  /// Value of a constant scalar; throws otherwise.
  GaussianRational constant_value() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  /// Complex conjugation; parameters follow their reality flags.
  Scalar conj(const RealityMap& overrides = {}) const;
  /// Replaces one parameter by a scalar value.
  Scalar substitute(int symbol, const Scalar& value) const;
  /// Parameters occurring in numerator or denominator, ascending.
  std::vector<int> symbols() const;

  std::string to_string() const;
  std::size_t hash() const { return num_.hash() * 1000003u ^ den_.hash(); }

 private:
  void reduce();
  Polynomial num_;
  Polynomial den_{1};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Formats sum c_k * label_k with sign-aware joins; an empty label marks a
/// pure scalar term and an empty sum prints "0".
std::string format_linear_combination(const std::vector<std::pair<Scalar, std::string>>& terms);

/// Error raised when a specialized expression would need a negative power of
/// the bookkeeping parameter hbar (or a non-monomial hbar denominator).
class NonPolynomialSpecialization : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Laurent polynomial in the single bookkeeping parameter hbar.
class HbarLaurent {
 public:
  HbarLaurent() = default;
  explicit HbarLaurent(std::map<int, GaussianRational> terms);

  const std::map<int, GaussianRational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int valuation() const;  // lowest power; throws on zero
  int degree() const;     // highest power; throws on zero
  GaussianRational coefficient(int power) const;
  std::string to_string() const;

 private:
  std::map<int, GaussianRational> terms_;
};

/// Assignment parameter -> hbar^degree * constant used for series truncation.
class SpecializationMap {
 public:
  struct Entry {
    int degree = 1;
    GaussianRational constant;
  };

  /// The generic constants used by catalog runs (every parameter degree 1).
  static SpecializationMap defaults();

  void set(int symbol, GaussianRational constant, int degree = 1);
  void set(std::string_view name, GaussianRational constant, int degree = 1);
  bool contains(int symbol) const { return entries_.count(symbol) != 0; }
  const Entry& at(int symbol) const;
  const std::map<int, Entry>& entries() const { return entries_; }

  /// Human-readable problems: zero constants, degree < 1, repeated constants.
  std::vector<std::string> validate() const;

 private:
  std::map<int, Entry> entries_;
};

/// Substitutes every parameter p -> hbar^deg(p) * c(p); the denominator must
/// collapse to a single power of hbar.
HbarLaurent specialize_laurent(const Scalar& s, const SpecializationMap& m);
/// As specialize_laurent, but additionally rejects negative powers of hbar.
HbarLaurent specialize(const Scalar& s, const SpecializationMap& m);

}  // namespace twistforge

#endif  // TWISTFORGE_SCALAR_HPP
