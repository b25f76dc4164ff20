#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "frob/polynomial.hpp"

namespace frob {

/// Monomial ideal with a minimal generating set (no generator divides
/// another), kept sorted in descending grevlex order. No generators means the
/// zero ideal.
class MonomialIdeal {
 public:
  MonomialIdeal(std::size_t arity, std::vector<Monomial> generators);

  /// (x_1^q, ..., x_n^q).
  static MonomialIdeal bracketMaximal(std::size_t arity, std::uint64_t q);

  std::size_t arity() const noexcept { return arity_; }
  const std::vector<Monomial>& generators() const noexcept { return gens_; }
  bool isZero() const noexcept { return gens_.empty(); }
  bool isUnit() const noexcept;

  bool contains(const Monomial& m) const noexcept;
  /// Every term is a member.
  bool contains(const Polynomial& f) const noexcept;

  /// (I : m), generated by lcm(g, m) / m.
  MonomialIdeal colon(const Monomial& m) const;
  /// Generated by pairwise lcms.
  MonomialIdeal intersect(const MonomialIdeal& other) const;

  std::string str(const PolyRing& ring) const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::size_t arity_;
  std::vector<Monomial> gens_;
};

/// Multiplies generator exponents by q; throws NotAPrimePower unless
/// q = p^e with e >= 1.
MonomialIdeal bracketPower(const MonomialIdeal& ideal, std::uint64_t q);

}  // namespace frob
