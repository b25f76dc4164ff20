#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "frob/polynomial.hpp"

namespace frob {

/// A projective hypersurface V(f) in P^n with f homogeneous of degree d in
/// n + 1 variables. Irreducibility of f is assumed, not checked.
struct S0Job {
  Polynomial f;
  /// Variable set to 1; empty means the first variable.
  std::string dehomVariable;
  std::vector<unsigned> mValues;
  unsigned eMax = 4;
  /// Guard on the coordinate space and spanning-set sizes.
  std::uint64_t budget = 20'000'000;
};

struct S0Row {
  unsigned m;
  /// m (d - n - 1): the degree bound of the coordinate space.
  std::int64_t degreeBudget;
  /// dim V_e / W_e for e = 1..eMax.
  std::vector<std::uint64_t> dims;
  /// Set when the last two levels agree.
  std::optional<std::uint64_t> stableDim;
};

struct S0Report {
  unsigned d = 0;
  unsigned n = 0;
  std::vector<S0Row> rows;
};

/// dim of the image of Phi_e on f~^{p^e-1} P_l modulo multiples of f~, with
/// l = (d-n-1)(1 + (m-1) p^e), for every m and e. Throws NotHomogeneous,
/// DegenerateDehomogenization or BudgetExceeded.
S0Report s0Dimension(const S0Job& job);

/// One cell of the table; exposed for tests.
std::uint64_t s0Cell(const Polynomial& dehomogenized, unsigned d, unsigned n, unsigned m, unsigned e,
                     std::uint64_t budget = 20'000'000);

}  // namespace frob
