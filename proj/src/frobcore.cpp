#include "frob/frobcore.hpp"

#include <algorithm>

#include "frob/error.hpp"

namespace frob {

namespace {

std::uint64_t levelModulus(const PrimeModulus& p, unsigned e) {
  if (e == 0) throw Error(ErrorKind::InvalidArgument, "Frobenius level e must be at least 1");
  std::uint64_t q = p.powerOrThrow(e);
  if (q >= (std::uint64_t{1} << 31)) {
    throw Error(ErrorKind::BudgetExceeded, "p^e = " + std::to_string(q) + " exceeds the exponent range");
  }
  return q;
}

}  // namespace

Polynomial phiRoot(const Polynomial& g, unsigned e) {
  const std::uint64_t q = levelModulus(g.modulus(), e);
  std::vector<Term> out;
  for (const auto& t : g.terms()) {
    bool survives = true;
    Monomial m(t.mono.arity());
    for (std::size_t i = 0; i < t.mono.arity() && survives; ++i) {
      std::uint64_t j = t.mono[i];
      if (j % q != q - 1) {
        survives = false;
      } else {
        m[i] = static_cast<Exponent>((j - (q - 1)) / q);
      }
    }
    if (survives) out.push_back(Term{std::move(m), t.coeff});
  }
  return Polynomial::fromTerms(g.ring(), std::move(out));
}

Polynomial RootDecomposition::reconstruct(const PolyRing& ring) const {
  Polynomial total(ring);
  for (const auto& [a, g] : parts) total = total + g.frobenius(q).shifted(a);
  return total;
}

RootDecomposition rootDecompose(const Polynomial& f, unsigned e) {
  RootDecomposition d;
  d.e = e;
  d.q = levelModulus(f.modulus(), e);
  std::map<Monomial, std::vector<Term>, MonomialLess> buckets;
  for (const auto& t : f.terms()) {
    Monomial a(t.mono.arity());
    Monomial b(t.mono.arity());
    for (std::size_t i = 0; i < t.mono.arity(); ++i) {
      a[i] = static_cast<Exponent>(t.mono[i] % d.q);
      b[i] = static_cast<Exponent>(t.mono[i] / d.q);
    }
    buckets[a].push_back(Term{std::move(b), t.coeff});
  }
  for (auto& [a, terms] : buckets) {
    d.parts.emplace(a, Polynomial::fromTerms(f.ring(), std::move(terms)));
  }
  return d;
}

NuChain nuChain(const Polynomial& f, unsigned eMax) {
  if (f.isZero()) throw Error(ErrorKind::ZeroPolynomial, "nu chain of the zero polynomial");
  if (f.constantTerm() != 0) {
    throw Error(ErrorKind::ConstantTermNonzero, "f must vanish at the origin for nu_e to be finite");
  }
  if (eMax == 0) throw Error(ErrorKind::InvalidArgument, "eMax must be at least 1");
  const std::uint64_t p = f.modulus().value();
  NuChain chain{f, f.modulus().value(), {}};

  // Upward scan at level 1; f^{n(p-1)+1} always lies in m^[p], so this ends.
  std::uint64_t q = levelModulus(f.modulus(), 1);
  Polynomial power = reduceModBracket(Polynomial::constant(f.ring(), 1), q);
  std::uint64_t nu = 0;
  while (true) {
    Polynomial next = mulTruncated(power, f, q);
    if (next.isZero()) break;
    power = std::move(next);
    ++nu;
  }
  chain.entries.push_back(NuEntry{1, nu});

  for (unsigned e = 2; e <= eMax; ++e) {
    q = levelModulus(f.modulus(), e);
    // f^{p nu} mod m^[pq'] is the exponent-scaled f^{nu} mod m^[q'].
    power = power.frobenius(p);
    nu *= p;
    for (std::uint64_t step = 0; step + 1 < p; ++step) {
      Polynomial next = mulTruncated(power, f, q);
      if (next.isZero()) break;
      power = std::move(next);
      ++nu;
    }
    chain.entries.push_back(NuEntry{e, nu});
  }
  return chain;
}

bool SplittingType::sectionCountsMatch(std::int64_t lo, std::int64_t hi) const {
  auto h0 = [](std::int64_t n) { return std::max<std::int64_t>(0, n + 1); };
  for (std::int64_t k = lo; k <= hi; ++k) {
    std::int64_t lhs = 0;
    for (std::int64_t b : summands) lhs += h0(b + k);
    if (lhs != h0(a + k * static_cast<std::int64_t>(q))) return false;
  }
  return true;
}

SplittingType p1SplittingType(std::int64_t a, unsigned e, PrimeModulus p) {
  const std::uint64_t q = levelModulus(p, e);
  if (q > (std::uint64_t{1} << 24)) throw Error(ErrorKind::BudgetExceeded, "p^e too large to list summands");
  SplittingType s{a, e, q, {}};
  s.summands.reserve(q);
  const auto qi = static_cast<std::int64_t>(q);
  // The degree-(a + kq) sections of O(a) split by the residue of the degree
  // mod q; residue class a - i contributes the summand floor((a - i)/q).
  for (std::int64_t i = 0; i < qi; ++i) {
    std::int64_t n = a - i;
    std::int64_t fl = n >= 0 ? n / qi : -((-n + qi - 1) / qi);
    s.summands.push_back(fl);
  }
  std::sort(s.summands.begin(), s.summands.end(), std::greater<>());
  return s;
}

}  // namespace frob
