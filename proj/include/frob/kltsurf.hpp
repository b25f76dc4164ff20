#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "frob/p1pairs.hpp"
#include "frob/rational.hpp"

namespace frob {

/// Star-shaped dual graph of a minimal resolution: a central curve and two or
/// three arms, each listed from the curve adjacent to the center outward.
class StarGraph {
 public:
  /// Throws InvalidSelfIntersection for entries > -2, InvalidGraph for a
  /// bad arm count or an empty arm.
  StarGraph(std::int64_t centerSelfIntersection, std::vector<std::vector<std::int64_t>> arms);

  /// "center=-2; arm=-2; arm=-2; arm=-2,-2".
  static StarGraph parse(std::string_view spec);

  std::int64_t center() const noexcept { return center_; }
  const std::vector<std::vector<std::int64_t>>& arms() const noexcept { return arms_; }
  std::string str() const;

 private:
  std::int64_t center_;
  std::vector<std::vector<std::int64_t>> arms_;
};

/// |det| of the tridiagonal arm matrix (diagonal e_i, off-diagonal 1).
Integer armDeterminant(const std::vector<std::int64_t>& chain);

/// D = E_0 + sum c_j E_j with (K + D) . E_j = 0 on every arm curve.
struct BoundaryData {
  std::vector<std::vector<Rational>> armCoefficients;
  std::vector<Integer> armDeterminants;
  /// (K + D) . E_0.
  Rational centerExcess;
};

BoundaryData boundaryCoefficients(const StarGraph& graph);

/// (K + D) . E_j for arm curve j given the arm coefficients; zero for a
/// correct solution.
Rational armResidual(const std::vector<std::int64_t>& chain, const std::vector<Rational>& coeffs, std::size_t j);

struct SfrVerdict {
  enum class Status { ProvenSFR, InconclusiveUpTo, NotKltBoundary };
  Status status;
  unsigned e = 0;
  BoundaryData boundary;
  /// Arm types (d_1, d_2, d_3) in sorted order.
  std::vector<Integer> type;
  /// Three-arm type outside (2,2,d), (2,3,3), (2,3,4), (2,3,5).
  bool unusualType = false;
  std::optional<PairVerdict> pairVerdict;

  std::string statusName() const;
};

/// Reduces to the pair (P^1, sum (d_i - 1)/d_i P_i) at 0, inf, 1 in arm order
/// and tests global F-regularity; only positive answers are definitive.
SfrVerdict classifySFR(const StarGraph& graph, PrimeModulus p, unsigned eMax = 6);

}  // namespace frob
