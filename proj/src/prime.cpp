#include "frob/prime.hpp"

#include <string>

#include "frob/error.hpp"

namespace frob {

bool isPrime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeModulus::PrimeModulus(std::uint64_t p) : p_(0) {
  if (p >= (std::uint64_t{1} << 31)) {
    throw Error(ErrorKind::NotPrime, "modulus " + std::to_string(p) + " is not below 2^31");
  }
  if (!isPrime(p)) {
    throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  }
  p_ = static_cast<std::uint32_t>(p);
}

Coeff PrimeModulus::pow(Coeff a, std::uint64_t e) const noexcept {
  std::uint64_t result = 1 % p_;
  std::uint64_t base = a % p_;
  while (e != 0) {
    if (e & 1) result = result * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return static_cast<Coeff>(result);
}

Coeff PrimeModulus::inv(Coeff a) const {
  if (a % p_ == 0) throw Error(ErrorKind::InvalidArgument, "inverse of zero");
  return pow(a, p_ - 2);
}

std::optional<std::uint64_t> PrimeModulus::power(unsigned e) const noexcept {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (q > (std::uint64_t{1} << 62) / p_) return std::nullopt;
    q *= p_;
  }
  return q;
}

std::uint64_t PrimeModulus::powerOrThrow(unsigned e) const {
  auto q = power(e);
  if (!q) {
    throw Error(ErrorKind::BudgetExceeded,
                std::to_string(p_) + "^" + std::to_string(e) + " overflows");
  }
  return *q;
}

std::optional<std::uint64_t> primePowerBase(std::uint64_t q) noexcept {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return q;
  while (q % p == 0) q /= p;
  if (q != 1) return std::nullopt;
  return p;
}

}  // namespace frob
