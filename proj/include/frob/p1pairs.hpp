#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "frob/polynomial.hpp"
#include "frob/rational.hpp"

namespace frob {

/// A point of P^1: 0 = [0:1], infinity = [1:0], or a finite nonzero c.
struct MarkedPoint {
  enum class Kind { Zero, Infinity, Finite };
  Kind kind = Kind::Zero;
  std::int64_t value = 0;  // only for Finite

  static MarkedPoint zero() { return {Kind::Zero, 0}; }
  static MarkedPoint infinity() { return {Kind::Infinity, 0}; }
  static MarkedPoint finite(std::int64_t c) { return {Kind::Finite, c}; }

  std::string str() const;
  friend bool operator==(const MarkedPoint&, const MarkedPoint&) = default;
};

/// Boundary sum a_i P_i on P^1 with 0 <= a_i <= 1.
class P1Pair {
 public:
  /// Throws InvalidPair on repeated points, mismatched lengths or
  /// coefficients outside [0, 1].
  P1Pair(std::vector<MarkedPoint> points, std::vector<Rational> coeffs);

  /// "1/2@0,1/2@inf,1/2@1"; an empty string is the empty boundary.
  static P1Pair parse(std::string_view spec);

  const std::vector<MarkedPoint>& points() const noexcept { return points_; }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  std::string str() const;

 private:
  std::vector<MarkedPoint> points_;
  std::vector<Rational> coeffs_;
};

/// The ring F_p[x, y] the pair product lives in.
PolyRing p1Ring(PrimeModulus p);

/// prod_j g_j^{ceil((p^e - 1) a_j)} with 0 -> x, infinity -> y and
/// finite(c) -> x - c y. Throws InvalidPair when two finite points (or a
/// finite point and 0) coincide mod p.
Polynomial pairProduct(const P1Pair& pair, unsigned e, PrimeModulus p);

struct PairVerdict {
  enum class Status { ProvenGFR, ProvenFSplit, NotSplitUpTo, InconclusiveGFRUpTo };
  Status status;
  /// Level of the witness, or eMax for the negative statuses.
  unsigned e;
  std::optional<Monomial> witness;

  std::string statusName() const;
};

/// ProvenFSplit(e) at the first e where the product has a term x^i y^j with
/// i, j <= p^e - 1; otherwise NotSplitUpTo(eMax).
PairVerdict isGloballyFSplit(const P1Pair& pair, PrimeModulus p, unsigned eMax = 6);

/// ProvenGFR(e) at the first e with a term having i, j < p^e - 1; otherwise
/// InconclusiveGFRUpTo(eMax). Negatives are not certified.
PairVerdict isGloballyFRegular(const P1Pair& pair, PrimeModulus p, unsigned eMax = 6);

}  // namespace frob
