#include "frob/fpt.hpp"

#include <optional>
#include <stdexcept>

#include "frob/error.hpp"
#include "frob/parallel.hpp"

namespace frob {

FptReport fptEstimate(const Polynomial& f, unsigned eMax) {
  NuChain chain = nuChain(f, eMax);
  std::vector<FptLevel> levels;
  Integer q = 1;
  for (const auto& entry : chain.entries) {
    q *= chain.p;
    Rational lower(Integer(entry.nu), q);
    Rational upper(Integer(entry.nu) + 1, q);
    levels.push_back(FptLevel{entry.e, lower, upper, simplestInInterval(lower, upper)});
  }
  const FptLevel& last = levels.back();
  FptReport report{std::move(chain), last.lower, last.upper, last.candidate, false, {}};
  report.candidateStable = levels.size() >= 2 && levels[levels.size() - 2].candidate == last.candidate;
  report.levels = std::move(levels);
  return report;
}

namespace {

// Largest p^c tried for the exact route; beyond it the level chain is used.
constexpr std::uint64_t kMaxPeriodModulus = std::uint64_t{1} << 20;
constexpr unsigned kMaxFixedPointSteps = 64;

GroebnerBasis basisOf(std::vector<Polynomial> gens, const PolyRing& ring, const TestIdealOptions& options) {
  if (gens.empty()) gens.push_back(Polynomial(ring));
  return buchberger(gens, TermOrder::Grevlex, options.groebner);
}

// Generators of J^{[1/p^e]}: every root part of every generator of J.
std::vector<Polynomial> rootGenerators(const std::vector<Polynomial>& gens, unsigned e) {
  std::vector<Polynomial> out;
  for (const auto& g : gens) {
    for (auto& [a, part] : rootDecompose(g, e).parts) out.push_back(part);
  }
  return out;
}

GroebnerBasis rootIdeal(const Polynomial& f, const Rational& t, unsigned e, const TestIdealOptions& options) {
  const std::uint64_t q = f.modulus().powerOrThrow(e);
  Integer exponent = (t * Rational(Integer(q), 1)).ceil();
  if (exponent > Integer(std::uint64_t{1} << 40)) {
    throw Error(ErrorKind::BudgetExceeded, "power of f too large at level " + std::to_string(e));
  }
  return basisOf(rootGenerators({pow(f, exponent.convert_to<std::uint64_t>())}, e), f.ring(), options);
}

// t = (k + a / (p^c - 1)) / p^d with 0 <= a < p^c - 1.
struct Period {
  unsigned d = 0;
  unsigned c = 1;
  std::uint64_t k = 0;
  std::uint64_t a = 0;
};

std::optional<Period> periodOf(const Rational& t, std::uint64_t p) {
  Period out;
  Integer den = t.denominator();
  while (den % p == 0) {
    den /= p;
    ++out.d;
  }
  // m' = den is prime to p; c is the order of p modulo m'.
  std::uint64_t pc = p;
  if (den > 1) {
    const std::uint64_t m = den.convert_to<std::uint64_t>();
    std::uint64_t r = p % m;
    while (r != 1) {
      if (pc > kMaxPeriodModulus / p) return std::nullopt;
      pc *= p;
      r = static_cast<std::uint64_t>((static_cast<unsigned __int128>(r) * p) % m);
      ++out.c;
    }
  }
  Integer pd = 1;
  for (unsigned i = 0; i < out.d; ++i) pd *= p;
  Rational s = t * Rational(pd, 1);
  Integer k = s.floor();
  if (k > Integer(std::uint64_t{1} << 24)) return std::nullopt;
  Rational frac = s - Rational(k, 1);
  Integer a = frac.numerator() * (Integer(pc) - 1) / frac.denominator();
  out.k = k.convert_to<std::uint64_t>();
  out.a = a.convert_to<std::uint64_t>();
  return out;
}

// tau(f^s) for s = a / (p^c - 1) is fixed by J -> (f^a J)^{[1/p^c]}, and the
// iterates starting from (f) are the chain I_{cn}(s); the first repetition is
// therefore final. tau(f^t) = (f^k tau(f^s))^{[1/p^d]}.
std::optional<TestIdealResult> exactTestIdeal(const Polynomial& f, const Rational& t, const TestIdealOptions& options) {
  const std::uint64_t p = f.modulus().value();
  std::optional<Period> period = periodOf(t, p);
  if (!period) return std::nullopt;
  const PolyRing& ring = f.ring();
  GroebnerBasis j = basisOf({Polynomial::constant(ring, 1)}, ring, options);
  unsigned steps = 0;
  bool repeated = false;
  if (period->a > 0) {
    const Polynomial fa = pow(f, period->a);
    j = basisOf({f}, ring, options);
    for (;;) {
      if (j.isUnitIdeal()) break;
      std::vector<Polynomial> products;
      for (const auto& g : j.generators()) products.push_back(fa * g);
      GroebnerBasis next = basisOf(rootGenerators(products, period->c), ring, options);
      if (!idealContains(next, j)) throw std::logic_error("fixed-point chain failed to ascend");
      ++steps;
      repeated = idealEquals(next, j);
      j = std::move(next);
      if (repeated) break;
      if (steps == kMaxFixedPointSteps) {
        throw Error(ErrorKind::BudgetExceeded, "fixed-point iteration did not settle");
      }
    }
  }
  std::vector<Polynomial> gens;
  const Polynomial fk = pow(f, period->k);
  for (const auto& g : j.generators()) gens.push_back(fk * g);
  if (period->d > 0) gens = rootGenerators(gens, period->d);
  const unsigned level = period->d + period->c * steps;
  const unsigned settledAt = repeated ? level - period->c : level;
  return TestIdealResult{t, level, basisOf(std::move(gens), ring, options), true, settledAt, true, true};
}

}  // namespace

TestIdealResult testIdealPrincipal(const Polynomial& f, const Rational& t, unsigned eMax,
                                   const TestIdealOptions& options) {
  if (f.isZero()) throw Error(ErrorKind::ZeroPolynomial, "test ideal of the zero polynomial");
  if (t.sign() < 0) throw Error(ErrorKind::InvalidArgument, "t must be nonnegative");
  if (eMax == 0) throw Error(ErrorKind::InvalidArgument, "eMax must be at least 1");
  if (auto exact = exactTestIdeal(f, t, options)) return std::move(*exact);

  // Fallback when p^c is out of reach. run counts consecutive equalities
  // I_e == I_{e+1} ending at the current level. One equality is accepted as
  // stabilization; a second, computed even if that means one level past
  // eMax, confirms it. Neither is a proof.
  GroebnerBasis current = rootIdeal(f, t, 1, options);
  unsigned e = 1;
  unsigned run = 0;
  while (run < 2 && e <= eMax && !current.isUnitIdeal()) {
    if (e == eMax && run == 0) break;
    GroebnerBasis next = rootIdeal(f, t, e + 1, options);
    if (!idealContains(next, current)) {
      throw std::logic_error("root ideal chain failed to ascend at level " + std::to_string(e));
    }
    run = idealEquals(current, next) ? run + 1 : 0;
    current = std::move(next);
    ++e;
  }
  // The unit ideal caps the ascending chain, so reaching it is final.
  const bool unit = current.isUnitIdeal();
  const bool stabilized = run >= 1 || unit;
  const unsigned settledAt = run >= 1 ? e - run : (unit ? e : 0);
  return TestIdealResult{t, e, std::move(current), stabilized, settledAt, run >= 2 || unit, unit};
}

JumpScan jumpScan(const Polynomial& f, std::uint64_t denominatorBound, unsigned eMax,
                  const TestIdealOptions& options) {
  if (f.isZero()) throw Error(ErrorKind::ZeroPolynomial, "jump scan of the zero polynomial");
  if (f.constantTerm() != 0) throw Error(ErrorKind::ConstantTermNonzero, "f must vanish at the origin");
  if (denominatorBound < 2) throw Error(ErrorKind::InvalidArgument, "grid denominator must be at least 2");
  const std::uint64_t n = denominatorBound;
  JumpScan scan;
  scan.denominatorBound = n;
  scan.grid = parallelMap(n + 1, [&](std::size_t k) {
    return testIdealPrincipal(f, Rational(Integer(k), Integer(n)), eMax, options);
  });
  for (std::size_t k = 1; k <= n; ++k) {
    if (!idealEquals(scan.grid[k - 1].basis, scan.grid[k].basis)) {
      scan.jumps.push_back(Jump{Rational(Integer(k), Integer(n)), false});
    }
  }
  return scan;
}

}  // namespace frob
