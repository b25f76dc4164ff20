#pragma once

#include <optional>
#include <vector>

#include "frob/frobcore.hpp"
#include "frob/groebner.hpp"
#include "frob/rational.hpp"

namespace frob {

struct FptLevel {
  unsigned e;
  Rational lower;
  Rational upper;
  Rational candidate;
};

/// Exact bracket [nu_E / p^E, (nu_E + 1) / p^E] on the F-pure threshold and
/// the least-denominator rational inside it.
struct FptReport {
  NuChain chain;
  Rational lower;
  Rational upper;
  Rational candidate;
  /// The candidate was identical at the last two levels. A heuristic, not a
  /// certificate.
  bool candidateStable = false;
  std::vector<FptLevel> levels;
};

FptReport fptEstimate(const Polynomial& f, unsigned eMax);

/// tau(f^t) for a principal pair. Writing t = (k + a/(p^c - 1)) / p^d,
/// tau(f^t) = (f^k J)^{[1/p^d]} where J = tau(f^{a/(p^c-1)}) is the first
/// repeated term of J_0 = (f), J_{n+1} = (f^a J_n)^{[1/p^c]}. A repetition
/// there is final, so the result is certified. When p^c exceeds 2^20 the
/// plain chain I_e = (f^{ceil(t p^e)})^{[1/p^e]}, e <= eMax, is used and
/// stabilization is only observed.
struct TestIdealResult {
  Rational t;
  /// Level p^e of the last Frobenius root taken.
  unsigned e = 0;
  GroebnerBasis basis;
  /// A repetition was observed (or the unit ideal reached).
  bool stabilized = false;
  /// Level of the first member of that repetition.
  unsigned stabilizedAt = 0;
  /// One further level agreed as well; implied when certified.
  bool confirmed = false;
  /// The basis is provably tau(f^t).
  bool certified = false;
};

struct TestIdealOptions {
  BuchbergerOptions groebner;
};

/// eMax bounds the fallback chain only. Throws ZeroPolynomial,
/// InvalidArgument for t < 0, BudgetExceeded.
TestIdealResult testIdealPrincipal(const Polynomial& f, const Rational& t, unsigned eMax,
                                   const TestIdealOptions& options = {});

struct Jump {
  Rational t;
  /// Always false: a true jump may sit strictly between grid points.
  bool certified = false;
};

struct JumpScan {
  std::uint64_t denominatorBound = 0;
  std::vector<Jump> jumps;
  /// tau at t = k/N for k = 0..N.
  std::vector<TestIdealResult> grid;
};

/// Evaluates tau on t = k/N, k = 0..N, and reports each k/N where it differs
/// from the previous grid value.
JumpScan jumpScan(const Polynomial& f, std::uint64_t denominatorBound, unsigned eMax,
                  const TestIdealOptions& options = {});

}  // namespace frob
