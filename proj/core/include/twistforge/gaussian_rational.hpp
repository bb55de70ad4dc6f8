#ifndef TWISTFORGE_GAUSSIAN_RATIONAL_HPP
#define TWISTFORGE_GAUSSIAN_RATIONAL_HPP

#include <compare>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace twistforge {

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Exact element of Q(i): re + im * i with arbitrary-precision rational parts.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(mpq_class re, mpq_class im = 0);

  static GaussianRational i() { return {0, 1}; }
  static GaussianRational fraction(long num, long den);

  /// Parses "p", "p/q", "i", "-i/2", "p/q+r/s*i" and "p/q-i".
  static GaussianRational parse(std::string_view text);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  /// z * conj(z), always real and nonnegative.
  mpq_class norm() const { return re_ * re_ + im_ * im_; }
  GaussianRational inverse() const;

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  /// Total order (real part first); used only for canonical sorting.
  friend std::strong_ordering operator<=>(const GaussianRational& a, const GaussianRational& b);

  std::size_t hash() const;

  /// "2/3", "-i", "3/5*i", "(1+2*i)".
  std::string to_string() const;
  /// True when to_string() needs no parentheses as a factor.
  bool is_atomic() const { return sgn(re_) == 0 || sgn(im_) == 0; }

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

}  // namespace twistforge

#endif  // TWISTFORGE_GAUSSIAN_RATIONAL_HPP
