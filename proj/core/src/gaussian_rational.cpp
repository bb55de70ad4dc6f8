#include "twistforge/gaussian_rational.hpp"

#include <cctype>
#include <functional>

namespace twistforge {

GaussianRational::GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational GaussianRational::fraction(long num, long den) {
  if (den == 0) throw DivisionByZero("GaussianRational::fraction: zero denominator");
  return {mpq_class(num, den)};
}

namespace {

mpq_class parse_rational(std::string_view s) {
  if (s.empty()) return 1;
  std::string str(s);
  if (str == "+") return 1;
  if (str == "-") return -1;
  if (str.front() == '+') str.erase(0, 1);
  mpq_class q;
  if (q.set_str(str, 10) != 0) throw std::invalid_argument("invalid rational literal '" + std::string(s) + "'");
  if (q.get_den() == 0) throw DivisionByZero("zero denominator in '" + std::string(s) + "'");
  q.canonicalize();
  return q;
}

// Parses a signed term that may carry an "i" factor, e.g. "-3/5*i", "i/2", "+i".
void add_term(std::string_view term, mpq_class& re, mpq_class& im) {
  std::string t;
  for (char c : term)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t.empty()) return;
  auto pos = t.find('i');
  if (pos == std::string::npos) {
    re += parse_rational(t);
    return;
  }
  std::string rest = t.substr(0, pos) + t.substr(pos + 1);
  // remove a dangling '*' next to the removed i
  for (auto star = rest.find('*'); star != std::string::npos; star = rest.find('*')) rest.erase(star, 1);
  // "i/2" becomes "/2" -> numerator 1
  if (!rest.empty() && rest.front() == '/') rest.insert(0, "1");
  if (rest.size() >= 2 && (rest[0] == '-' || rest[0] == '+') && rest[1] == '/') rest.insert(1, "1");
  im += parse_rational(rest);
}

}  // namespace

GaussianRational GaussianRational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  // to_string() wraps complex values in parentheses
  if (text.size() >= 2 && text.front() == '(' && text.back() == ')') text = text.substr(1, text.size() - 2);
  if (text.empty()) throw std::invalid_argument("empty Gaussian rational literal");
  mpq_class re = 0, im = 0;
  std::size_t start = 0;
  for (std::size_t k = 1; k <= text.size(); ++k) {
    if (k == text.size() || ((text[k] == '+' || text[k] == '-') && text[k - 1] != '/' && text[k - 1] != 'e')) {
      add_term(text.substr(start, k - start), re, im);
      start = k;
    }
  }
  return {re, im};
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw DivisionByZero("GaussianRational: inverse of zero");
  mpq_class n = norm();
  return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw DivisionByZero("GaussianRational: division by zero");
  if (sgn(o.im_) == 0) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

std::strong_ordering operator<=>(const GaussianRational& a, const GaussianRational& b) {
  int c = cmp(a.re_, b.re_);
  if (c == 0) c = cmp(a.im_, b.im_);
  return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::size_t GaussianRational::hash() const {
  std::hash<std::string> h;
  return h(re_.get_str()) * 31u + h(im_.get_str());
}

std::string GaussianRational::to_string() const {
  if (sgn(im_) == 0) return re_.get_str();
  std::string imag;
  if (im_ == 1)
    imag = "i";
  else if (im_ == -1)
    imag = "-i";
  else
    imag = im_.get_str() + "*i";
  if (sgn(re_) == 0) return imag;
  std::string out = "(" + re_.get_str();
  if (sgn(im_) > 0) out += "+";
  return out + imag + ")";
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.to_string(); }

}  // namespace twistforge
