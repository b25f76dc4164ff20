#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace frob {

using Integer = boost::multiprecision::cpp_int;

/// Exact rational in lowest terms with positive denominator; zero is 0/1.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT(implicit)
  Rational(Integer num, Integer den);

  /// Parses "n", "-n" or "n/d".
  static Rational parse(std::string_view text);

  const Integer& numerator() const noexcept { return num_; }
  const Integer& denominator() const noexcept { return den_; }

  Integer floor() const;
  Integer ceil() const;
  bool isInteger() const noexcept { return den_ == 1; }
  int sign() const noexcept { return num_.sign(); }

  /// Always "num/den", including "n/1" for integers.
  std::string str() const;

  Rational operator-() const { return Rational(-num_, den_); }
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

 private:
  void normalize();

  Integer num_;
  Integer den_;
};

/// Floor division for arbitrary signs.
Integer floorDiv(const Integer& a, const Integer& b);

/// The rational with the least denominator in the closed interval [lo, hi]
/// (least absolute numerator among ties), via continued-fraction Stern-Brocot
/// descent.
Rational simplestInInterval(const Rational& lo, const Rational& hi);

}  // namespace frob
