#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>

#include <boost/container/small_vector.hpp>

namespace frob {

using Exponent = std::uint32_t;

/// Exponent vector of a monomial; the length is the ambient variable count.
class Monomial {
 public:
  using Storage = boost::container::small_vector<Exponent, 6>;

  Monomial() = default;
  explicit Monomial(std::size_t arity) : exps_(arity, 0) {}
  Monomial(std::initializer_list<Exponent> exps) : exps_(exps) {}
  explicit Monomial(std::span<const Exponent> exps) : exps_(exps.begin(), exps.end()) {}

  std::size_t arity() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t i) const noexcept { return exps_[i]; }
  Exponent& operator[](std::size_t i) noexcept { return exps_[i]; }
  std::span<const Exponent> exponents() const noexcept { return {exps_.data(), exps_.size()}; }

  std::uint64_t degree() const noexcept;
  bool isOne() const noexcept;
  Exponent maxExponent() const noexcept;

  /// True if this divides other.
  bool divides(const Monomial& other) const noexcept;
  Monomial operator*(const Monomial& other) const;
  /// Requires divides(other) in reverse: other / this.
  Monomial quotient(const Monomial& divisor) const;
  Monomial lcm(const Monomial& other) const;
  /// Componentwise max(0, a_i - b_i).
  Monomial saturatingSub(const Monomial& other) const;
  Monomial scaled(std::uint64_t q) const;
  bool coprime(const Monomial& other) const noexcept;

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.exps_ == b.exps_;
  }

 private:
  Storage exps_;
};

/// Graded reverse lexicographic comparison: negative, zero or positive.
int compareGrevlex(const Monomial& a, const Monomial& b) noexcept;
int compareLex(const Monomial& a, const Monomial& b) noexcept;

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// Orders monomials descending in grevlex (largest first).
struct GrevlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept {
    return compareGrevlex(a, b) > 0;
  }
};

/// Calls fn(Monomial) for every monomial of total degree <= maxDegree in
/// `arity` variables, in no guaranteed order.
void forEachMonomialUpToDegree(std::size_t arity, std::uint64_t maxDegree,
                               const std::function<void(const Monomial&)>& fn);

}  // namespace frob
