#pragma once

#include <cstdint>
#include <optional>

namespace frob {

using Coeff = std::uint32_t;

bool isPrime(std::uint64_t n) noexcept;

/// The characteristic p of the prime field. Construction checks primality by
/// trial division; p must lie below 2^31 so products of representatives fit
/// in 64 bits.
class PrimeModulus {
 public:
  explicit PrimeModulus(std::uint64_t p);

  std::uint32_t value() const noexcept { return p_; }

  Coeff reduce(std::int64_t a) const noexcept {
    std::int64_t r = a % static_cast<std::int64_t>(p_);
    return static_cast<Coeff>(r < 0 ? r + p_ : r);
  }
  Coeff reduceUnsigned(std::uint64_t a) const noexcept {
    return static_cast<Coeff>(a % p_);
  }
  Coeff add(Coeff a, Coeff b) const noexcept {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Coeff>(s >= p_ ? s - p_ : s);
  }
  Coeff sub(Coeff a, Coeff b) const noexcept {
    return a >= b ? a - b : static_cast<Coeff>(std::uint64_t{a} + p_ - b);
  }
  Coeff neg(Coeff a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const noexcept {
    return static_cast<Coeff>(std::uint64_t{a} * b % p_);
  }
  Coeff pow(Coeff a, std::uint64_t e) const noexcept;
  /// Inverse of a nonzero element (Fermat).
  Coeff inv(Coeff a) const;

  /// p^e, or nullopt when it would exceed 2^62.
  std::optional<std::uint64_t> power(unsigned e) const noexcept;
  /// p^e; throws BudgetExceeded on overflow.
  std::uint64_t powerOrThrow(unsigned e) const;

  friend bool operator==(const PrimeModulus&, const PrimeModulus&) = default;

 private:
  std::uint32_t p_;
};

/// If q = p^e with p prime and e >= 1, returns p.
std::optional<std::uint64_t> primePowerBase(std::uint64_t q) noexcept;

}  // namespace frob
