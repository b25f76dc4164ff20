#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "frob/polynomial.hpp"

namespace frob {

/// Root operator: x^j maps to x^{(j - q + 1)/q} when every j_i = q - 1 mod q
/// (q = p^e), else to 0; extended linearly.
Polynomial phiRoot(const Polynomial& g, unsigned e);

struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept {
    return std::lexicographical_compare(a.exponents().begin(), a.exponents().end(), b.exponents().begin(),
                                        b.exponents().end());
  }
};

/// f = sum_a g_a^{p^e} x^a over the free basis x^a of F^e_* S, 0 <= a_i < p^e.
/// Only nonzero parts are stored.
struct RootDecomposition {
  unsigned e = 0;
  std::uint64_t q = 0;
  std::map<Monomial, Polynomial, MonomialLess> parts;

  /// sum_a pow(g_a, q) * x^a.
  Polynomial reconstruct(const PolyRing& ring) const;
};

RootDecomposition rootDecompose(const Polynomial& f, unsigned e);

struct NuEntry {
  unsigned e;
  std::uint64_t nu;
};

/// nu_e(f) = max { r : f^r not in (x_1^{p^e}, ..., x_n^{p^e}) }, e = 1..E.
struct NuChain {
  Polynomial f;
  std::uint32_t p;
  std::vector<NuEntry> entries;
};

/// nu_1 by scanning r upward; nu_{e+1} by scanning only the window
/// [p nu_e, p nu_e + p - 1]. Throws ZeroPolynomial or ConstantTermNonzero.
NuChain nuChain(const Polynomial& f, unsigned eMax);

/// Degrees {floor((a - i) / p^e) : i = 0..p^e - 1} of the line bundles in
/// F^e_* O_{P^1}(a), in descending order.
struct SplittingType {
  std::int64_t a;
  unsigned e;
  std::uint64_t q;
  std::vector<std::int64_t> summands;

  /// sum_i max(0, b_i + k + 1) == max(0, a + k q + 1) for k in [lo, hi].
  bool sectionCountsMatch(std::int64_t lo, std::int64_t hi) const;
};

SplittingType p1SplittingType(std::int64_t a, unsigned e, PrimeModulus p);

}  // namespace frob
