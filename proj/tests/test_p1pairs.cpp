#include <algorithm>
#include <array>

#include "frob/p1pairs.hpp"
#include "frob/parser.hpp"
#include "support.hpp"

using namespace frob;
using frobtest::Rng;
using Status = PairVerdict::Status;

namespace {

Polynomial P(std::string_view text, std::uint32_t p) {
  return parsePolynomial(text, PrimeModulus(p), parseVariableList("x,y"));
}

std::uint64_t qOf(std::uint64_t p, unsigned e) {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) q *= p;
  return q;
}

// Oracle product: exponents by integer ceiling, factors by repeated dense
// multiplication.
Polynomial oracleProduct(const P1Pair& pair, unsigned e, std::uint32_t p) {
  const PolyRing ring = frobtest::ringOf(p, 2);
  const std::uint64_t q = qOf(p, e);
  Polynomial acc = Polynomial::constant(ring, 1);
  for (std::size_t i = 0; i < pair.points().size(); ++i) {
    const MarkedPoint& pt = pair.points()[i];
    const Rational& a = pair.coeffs()[i];
    std::uint64_t num = a.numerator().convert_to<std::uint64_t>() * (q - 1);
    std::uint64_t den = a.denominator().convert_to<std::uint64_t>();
    std::uint64_t r = (num + den - 1) / den;
    Polynomial factor = pt.kind == MarkedPoint::Kind::Zero ? Polynomial::variable(ring, 0)
                        : pt.kind == MarkedPoint::Kind::Infinity
                            ? Polynomial::variable(ring, 1)
                            : P("x - " + std::to_string(pt.value) + "*y", p);
    acc = frobtest::naiveMul(acc, frobtest::naivePow(factor, r));
  }
  return acc;
}

bool hasBoundedTerm(const Polynomial& g, std::uint64_t bound) {
  return std::any_of(g.terms().begin(), g.terms().end(),
                     [&](const Term& t) { return t.mono[0] <= bound && t.mono[1] <= bound; });
}

// First level with a bounded term in the oracle product, or 0.
unsigned oracleLevel(const P1Pair& pair, std::uint32_t p, unsigned eMax, bool strict) {
  for (unsigned e = 1; e <= eMax; ++e) {
    std::uint64_t q = qOf(p, e);
    if (hasBoundedTerm(oracleProduct(pair, e, p), strict ? q - 2 : q - 1)) return e;
  }
  return 0;
}

unsigned levelOf(const PairVerdict& v) {
  return v.status == Status::ProvenGFR || v.status == Status::ProvenFSplit ? v.e : 0;
}

unsigned eMaxFor(std::uint32_t p) {
  switch (p) {
    case 2: return 6;
    case 3: return 4;
    case 5: return 3;
    default: return 2;
  }
}

P1Pair randomPair(Rng& rng, std::uint32_t p) {
  std::vector<MarkedPoint> candidates = {MarkedPoint::zero(), MarkedPoint::infinity()};
  for (std::int64_t c = 1; c < p; ++c) candidates.push_back(MarkedPoint::finite(c));
  std::shuffle(candidates.begin(), candidates.end(), rng.engine());
  std::size_t n = static_cast<std::size_t>(rng.range(0, std::min<std::int64_t>(4, static_cast<std::int64_t>(candidates.size()))));
  std::vector<MarkedPoint> points(candidates.begin(), candidates.begin() + static_cast<long>(n));
  std::vector<Rational> coeffs;
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t den = rng.range(1, 6);
    coeffs.emplace_back(Integer(rng.range(0, den)), Integer(den));
  }
  return P1Pair(points, coeffs);
}

const std::array<std::uint32_t, 4> kPrimes = {2, 3, 5, 7};

}  // namespace

TEST(PairProduct, Examples) {
  EXPECT_EQ(pairProduct(P1Pair::parse(""), 3, PrimeModulus(5)), P("1", 5));
  EXPECT_EQ(pairProduct(P1Pair::parse("0@0,0@inf,0@1"), 2, PrimeModulus(3)), P("1", 3));
  EXPECT_EQ(pairProduct(P1Pair::parse("1/2@0,1/2@inf"), 1, PrimeModulus(3)), P("x*y", 3));
  EXPECT_EQ(pairProduct(P1Pair::parse("1/2@0,1/2@inf,1/2@1"), 2, PrimeModulus(2)), P("x^2*y^2*(x-y)^2", 2));
  EXPECT_EQ(pairProduct(P1Pair::parse("1/3@2"), 1, PrimeModulus(5)), P("(x-2*y)^2", 5));
  EXPECT_FROB_ERROR(pairProduct(P1Pair::parse("1/2@1"), 0, PrimeModulus(3)), ErrorKind::InvalidArgument);
}

TEST(PairProduct, AgreesWithOracle) {
  Rng rng(401);
  for (int i = 0; i < 120; ++i) {
    std::uint32_t p = kPrimes[static_cast<std::size_t>(i) % kPrimes.size()];
    P1Pair pair = randomPair(rng, p);
    unsigned e = static_cast<unsigned>(rng.range(1, eMaxFor(p)));
    ASSERT_EQ(pairProduct(pair, e, PrimeModulus(p)), oracleProduct(pair, e, p)) << pair.str() << " p=" << p;
  }
}

TEST(PairVerdicts, Examples) {
  PairVerdict empty = isGloballyFSplit(P1Pair::parse(""), PrimeModulus(5));
  EXPECT_EQ(empty.status, Status::ProvenFSplit);
  EXPECT_EQ(empty.e, 1u);

  const P1Pair halves = P1Pair::parse("1/2@0,1/2@inf,1/2@1");
  PairVerdict s2 = isGloballyFSplit(halves, PrimeModulus(2), 6);
  EXPECT_EQ(s2.status, Status::NotSplitUpTo);
  EXPECT_EQ(s2.e, 6u);
  EXPECT_FALSE(s2.witness.has_value());
  PairVerdict g2 = isGloballyFRegular(halves, PrimeModulus(2), 6);
  EXPECT_EQ(g2.status, Status::InconclusiveGFRUpTo);
  EXPECT_EQ(g2.statusName(), "InconclusiveGFRUpTo");

  PairVerdict s3 = isGloballyFSplit(halves, PrimeModulus(3));
  EXPECT_EQ(s3.status, Status::ProvenFSplit);
  EXPECT_LE(s3.e, 2u);
  // xy(x - y) = x^2 y - x y^2 at e = 1; the least x-exponent wins.
  EXPECT_EQ(*s3.witness, (Monomial{1, 2}));
  PairVerdict g3 = isGloballyFRegular(halves, PrimeModulus(3));
  EXPECT_EQ(g3.status, Status::ProvenGFR);
  EXPECT_EQ(g3.e, 2u);
  EXPECT_EQ(*g3.witness, (Monomial{5, 7}));

  for (std::uint32_t p : {5u, 7u}) EXPECT_EQ(isGloballyFRegular(halves, PrimeModulus(p)).status, Status::ProvenGFR);
  EXPECT_EQ(isGloballyFRegular(P1Pair::parse("1/2@0,2/3@inf,4/5@1"), PrimeModulus(7)).status, Status::ProvenGFR);
  EXPECT_FROB_ERROR(isGloballyFSplit(halves, PrimeModulus(3), 0), ErrorKind::InvalidArgument);
}

TEST(PairVerdicts, AgreeWithOracleScan) {
  Rng rng(411);
  int split = 0, regular = 0, notSplit = 0;
  for (int i = 0; i < 120; ++i) {
    std::uint32_t p = kPrimes[static_cast<std::size_t>(i) % kPrimes.size()];
    P1Pair pair = randomPair(rng, p);
    unsigned eMax = eMaxFor(p);
    PairVerdict s = isGloballyFSplit(pair, PrimeModulus(p), eMax);
    PairVerdict g = isGloballyFRegular(pair, PrimeModulus(p), eMax);
    ASSERT_EQ(levelOf(s), oracleLevel(pair, p, eMax, false)) << pair.str() << " p=" << p;
    ASSERT_EQ(levelOf(g), oracleLevel(pair, p, eMax, true)) << pair.str() << " p=" << p;
    for (const PairVerdict* v : {&s, &g}) {
      if (!v->witness) continue;
      // Minimal witness: least x-exponent, then least y-exponent.
      const bool strict = v == &g;
      const std::uint64_t bound = qOf(p, v->e) - (strict ? 2 : 1);
      Polynomial product = oracleProduct(pair, v->e, p);
      ASSERT_NE(product.coefficientOf(*v->witness), 0u);
      ASSERT_LE((*v->witness)[0], bound);
      ASSERT_LE((*v->witness)[1], bound);
      for (const auto& t : product.terms()) {
        if (t.mono[0] <= bound && t.mono[1] <= bound) {
          ASSERT_TRUE(std::pair(t.mono[0], t.mono[1]) >= std::pair((*v->witness)[0], (*v->witness)[1]));
        }
      }
    }
    split += s.status == Status::ProvenFSplit ? 1 : 0;
    notSplit += s.status == Status::NotSplitUpTo ? 1 : 0;
    regular += g.status == Status::ProvenGFR ? 1 : 0;
  }
  EXPECT_GT(split, 20);
  EXPECT_GT(notSplit, 5);
  EXPECT_GT(regular, 20);
}

// A strict witness is a split witness, so GFR at e forces splitting by e.
TEST(PairVerdicts, RegularImpliesSplit) {
  Rng rng(421);
  int regular = 0;
  for (int i = 0; i < 150; ++i) {
    std::uint32_t p = kPrimes[static_cast<std::size_t>(i) % kPrimes.size()];
    P1Pair pair = randomPair(rng, p);
    PairVerdict g = isGloballyFRegular(pair, PrimeModulus(p), eMaxFor(p));
    if (g.status != Status::ProvenGFR) continue;
    ++regular;
    PairVerdict s = isGloballyFSplit(pair, PrimeModulus(p), eMaxFor(p));
    ASSERT_EQ(s.status, Status::ProvenFSplit) << pair.str();
    ASSERT_LE(s.e, g.e);
  }
  EXPECT_GT(regular, 30);
}

TEST(PairVerdicts, PermutationInvariance) {
  Rng rng(431);
  for (int i = 0; i < 100; ++i) {
    std::uint32_t p = kPrimes[static_cast<std::size_t>(i) % kPrimes.size()];
    P1Pair pair = randomPair(rng, p);
    std::vector<std::size_t> order(pair.points().size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::shuffle(order.begin(), order.end(), rng.engine());
    std::vector<MarkedPoint> points;
    std::vector<Rational> coeffs;
    for (auto k : order) {
      points.push_back(pair.points()[k]);
      coeffs.push_back(pair.coeffs()[k]);
    }
    P1Pair shuffled(points, coeffs);
    for (bool strict : {false, true}) {
      auto run = [&](const P1Pair& q) {
        return strict ? isGloballyFRegular(q, PrimeModulus(p), eMaxFor(p)) : isGloballyFSplit(q, PrimeModulus(p), eMaxFor(p));
      };
      PairVerdict a = run(pair), b = run(shuffled);
      ASSERT_EQ(a.status, b.status);
      ASSERT_EQ(a.e, b.e);
      ASSERT_EQ(a.witness, b.witness);
    }
  }
}

// Swapping x and y exchanges 0 and infinity and fixes the point 1.
TEST(PairVerdicts, SwapZeroAndInfinity) {
  Rng rng(441);
  for (int i = 0; i < 100; ++i) {
    std::uint32_t p = kPrimes[static_cast<std::size_t>(i) % kPrimes.size()];
    std::vector<Rational> c;
    for (int k = 0; k < 3; ++k) {
      std::int64_t den = rng.range(1, 6);
      c.emplace_back(Integer(rng.range(0, den)), Integer(den));
    }
    P1Pair a({MarkedPoint::zero(), MarkedPoint::infinity(), MarkedPoint::finite(1)}, {c[0], c[1], c[2]});
    P1Pair b({MarkedPoint::zero(), MarkedPoint::infinity(), MarkedPoint::finite(1)}, {c[1], c[0], c[2]});
    for (bool strict : {false, true}) {
      auto run = [&](const P1Pair& q) {
        return strict ? isGloballyFRegular(q, PrimeModulus(p), eMaxFor(p)) : isGloballyFSplit(q, PrimeModulus(p), eMaxFor(p));
      };
      PairVerdict va = run(a), vb = run(b);
      ASSERT_EQ(va.status, vb.status) << a.str();
      ASSERT_EQ(va.e, vb.e);
      if (va.witness) {
        ASSERT_NE(pairProduct(b, vb.e, PrimeModulus(p)).coefficientOf(Monomial{(*va.witness)[1], (*va.witness)[0]}), 0u);
      }
    }
  }
}

// Lowering a coefficient divides the product, so the first witness level can
// only move down.
TEST(PairVerdicts, CoefficientMonotonicity) {
  Rng rng(451);
  int lowered = 0;
  for (int i = 0; i < 150; ++i) {
    std::uint32_t p = kPrimes[static_cast<std::size_t>(i) % kPrimes.size()];
    P1Pair pair = randomPair(rng, p);
    if (pair.points().empty()) continue;
    std::vector<Rational> coeffs = pair.coeffs();
    std::size_t k = static_cast<std::size_t>(rng.range(0, static_cast<std::int64_t>(coeffs.size()) - 1));
    std::int64_t den = rng.range(1, 6);
    Rational smaller(Integer(rng.range(0, den)), Integer(den));
    if (coeffs[k] < smaller) std::swap(coeffs[k], smaller);
    coeffs[k] = smaller;
    P1Pair lower(pair.points(), coeffs);
    ++lowered;
    for (bool strict : {false, true}) {
      auto run = [&](const P1Pair& q) {
        return strict ? isGloballyFRegular(q, PrimeModulus(p), eMaxFor(p)) : isGloballyFSplit(q, PrimeModulus(p), eMaxFor(p));
      };
      unsigned hi = levelOf(run(pair)), lo = levelOf(run(lower));
      if (hi != 0) {
        ASSERT_NE(lo, 0u) << lower.str() << " below " << pair.str();
        ASSERT_LE(lo, hi);
      }
    }
  }
  EXPECT_GT(lowered, 100);
}

// Total coefficient above 2 exceeds the degree 2(q - 1) a bounded term allows.
TEST(PairVerdicts, LargeBoundaryNeverSplits) {
  for (std::uint32_t p : kPrimes) {
    PairVerdict v = isGloballyFSplit(P1Pair::parse("1@0,1@inf,1/5@1"), PrimeModulus(p), eMaxFor(p));
    EXPECT_EQ(v.status, Status::NotSplitUpTo);
    EXPECT_EQ(isGloballyFRegular(P1Pair::parse("1@0,1@inf"), PrimeModulus(p), eMaxFor(p)).status,
              Status::InconclusiveGFRUpTo);
    EXPECT_EQ(isGloballyFSplit(P1Pair::parse("1@0,1@inf"), PrimeModulus(p), eMaxFor(p)).status, Status::ProvenFSplit);
  }
}

TEST(P1PairParse, RoundTripAndErrors) {
  P1Pair pair = P1Pair::parse(" 1/2@0 , 2/3@inf, 4/5@3 ");
  EXPECT_EQ(pair.str(), "1/2@0,2/3@inf,4/5@3");
  EXPECT_EQ(P1Pair::parse(pair.str()).str(), pair.str());
  EXPECT_EQ(P1Pair::parse("1@infinity").points()[0], MarkedPoint::infinity());
  EXPECT_FROB_ERROR(P1Pair::parse("1/2@0,1/3@0"), ErrorKind::InvalidPair);
  EXPECT_FROB_ERROR(P1Pair::parse("3/2@0"), ErrorKind::InvalidPair);
  EXPECT_FROB_ERROR(P1Pair::parse("-1/2@0"), ErrorKind::InvalidPair);
  EXPECT_FROB_ERROR(P1Pair::parse("1/2"), ErrorKind::InvalidPair);
  EXPECT_FROB_ERROR(P1Pair::parse("1/2@1/3"), ErrorKind::InvalidPair);
  EXPECT_FROB_ERROR(P1Pair({MarkedPoint::zero()}, {}), ErrorKind::InvalidPair);
  EXPECT_FROB_ERROR(P1Pair({MarkedPoint::finite(0)}, {Rational(1)}), ErrorKind::InvalidPair);
  // 1 and 6 coincide mod 5; 5 coincides with the origin.
  EXPECT_FROB_ERROR(pairProduct(P1Pair::parse("1/2@1,1/2@6"), 1, PrimeModulus(5)), ErrorKind::InvalidPair);
  EXPECT_FROB_ERROR(pairProduct(P1Pair::parse("1/2@5"), 1, PrimeModulus(5)), ErrorKind::InvalidPair);
}
