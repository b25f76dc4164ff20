#include "frob/monomial.hpp"

#include <algorithm>
#include <cassert>

namespace frob {

std::uint64_t Monomial::degree() const noexcept {
  std::uint64_t d = 0;
  for (Exponent e : exps_) d += e;
  return d;
}

bool Monomial::isOne() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

Exponent Monomial::maxExponent() const noexcept {
  Exponent m = 0;
  for (Exponent e : exps_) m = std::max(m, e);
  return m;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  assert(arity() == other.arity());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  assert(arity() == other.arity());
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
  return r;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  assert(divisor.divides(*this));
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= divisor.exps_[i];
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = std::max(r.exps_[i], other.exps_[i]);
  return r;
}

Monomial Monomial::saturatingSub(const Monomial& other) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    r.exps_[i] = exps_[i] > other.exps_[i] ? exps_[i] - other.exps_[i] : 0;
  }
  return r;
}

Monomial Monomial::scaled(std::uint64_t q) const {
  Monomial r = *this;
  for (auto& e : r.exps_) e = static_cast<Exponent>(e * q);
  return r;
}

bool Monomial::coprime(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  }
  return true;
}

int compareGrevlex(const Monomial& a, const Monomial& b) noexcept {
  std::uint64_t da = a.degree();
  std::uint64_t db = b.degree();
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = a.arity(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

int compareLex(const Monomial& a, const Monomial& b) noexcept {
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
  }
  return 0;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (Exponent e : m.exponents()) {
    h ^= e;
    h *= 0x100000001b3ull;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

namespace {

void enumerate(Monomial& current, std::size_t index, std::uint64_t remaining,
               const std::function<void(const Monomial&)>& fn) {
  if (index == current.arity()) {
    fn(current);
    return;
  }
  for (std::uint64_t e = 0; e <= remaining; ++e) {
    current[index] = static_cast<Exponent>(e);
    enumerate(current, index + 1, remaining - e, fn);
  }
  current[index] = 0;
}

}  // namespace

void forEachMonomialUpToDegree(std::size_t arity, std::uint64_t maxDegree,
                               const std::function<void(const Monomial&)>& fn) {
  Monomial current(arity);
  enumerate(current, 0, maxDegree, fn);
}

}  // namespace frob
