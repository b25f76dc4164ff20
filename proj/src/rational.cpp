#include "frob/rational.hpp"

#include <boost/integer/common_factor_rt.hpp>

#include "frob/error.hpp"

namespace frob {

Integer floorDiv(const Integer& a, const Integer& b) {
  Integer q = a / b;
  Integer r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

Rational::Rational(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  Integer g = boost::multiprecision::gcd(num_, den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

namespace {

Integer parseInteger(std::string_view text, std::string_view whole) {
  if (text.empty()) throw Error(ErrorKind::SyntaxError, "bad rational '" + std::string(whole) + "'");
  std::size_t i = 0;
  bool negative = false;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    i = 1;
  }
  if (i == text.size()) throw Error(ErrorKind::SyntaxError, "bad rational '" + std::string(whole) + "'");
  Integer v = 0;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c < '0' || c > '9') {
      throw Error(ErrorKind::SyntaxError, "bad rational '" + std::string(whole) + "'");
    }
    v = v * 10 + (c - '0');
  }
  return negative ? Integer(-v) : v;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parseInteger(text, text), 1);
  return Rational(parseInteger(text.substr(0, slash), text),
                  parseInteger(text.substr(slash + 1), text));
}

Integer Rational::floor() const { return floorDiv(num_, den_); }

Integer Rational::ceil() const { return -floorDiv(-num_, den_); }

std::string Rational::str() const { return num_.str() + "/" + den_.str(); }

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
Rational operator-(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}
Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}
Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw Error(ErrorKind::InvalidArgument, "division by zero rational");
  return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  Integer lhs = a.num_ * b.den_;
  Integer rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational simplestInInterval(const Rational& lo, const Rational& hi) {
  if (hi < lo) throw Error(ErrorKind::InvalidArgument, "empty interval");
  // Integer inside: take the one nearest zero.
  Integer c = lo.ceil();
  if (Rational(c, 1) <= hi) {
    if (lo.sign() <= 0 && hi.sign() >= 0) return Rational(0);
    if (lo.sign() > 0) return Rational(c, 1);
    return Rational(hi.floor(), 1);
  }
  // No integer inside, so floor(lo) == floor(hi) and lo is not an integer.
  Integer n = lo.floor();
  Rational nr(n, 1);
  Rational x = simplestInInterval(Rational(1) / (hi - nr), Rational(1) / (lo - nr));
  return nr + Rational(1) / x;
}

}  // namespace frob
