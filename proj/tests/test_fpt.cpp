#include <algorithm>
#include <array>

#include "frob/fpt.hpp"
#include "frob/parser.hpp"
#include "support.hpp"

using namespace frob;
using frobtest::Rng;

namespace {

Polynomial P(std::string_view text, std::uint32_t p, std::string_view vars = "x,y") {
  return parsePolynomial(text, PrimeModulus(p), parseVariableList(vars));
}

Rational Q(std::string_view text) { return Rational::parse(text); }

// Least denominator by direct search, then least numerator.
Rational bruteSimplest(const Rational& lo, const Rational& hi) {
  for (std::int64_t den = 1;; ++den) {
    Integer num = (lo * Rational(den)).ceil();
    if (Rational(num, Integer(den)) <= hi) return Rational(num, Integer(den));
  }
}

// I_e by the definition: all root parts of f^{ceil(t q)} at level e.
GroebnerBasis directChainMember(const Polynomial& f, const Rational& t, unsigned e) {
  std::uint64_t q = *f.modulus().power(e);
  Integer exponent = (t * Rational(Integer(q), 1)).ceil();
  Polynomial h = frobtest::naivePow(f, exponent.convert_to<std::uint64_t>());
  // Independent root decomposition over the dense representation.
  std::map<std::vector<Exponent>, frobtest::Dense> parts;
  for (const auto& [ex, c] : frobtest::toDense(h)) {
    std::vector<Exponent> a(ex.size()), b(ex.size());
    for (std::size_t i = 0; i < ex.size(); ++i) {
      a[i] = static_cast<Exponent>(ex[i] % q);
      b[i] = static_cast<Exponent>(ex[i] / q);
    }
    parts[a][b] = c;
  }
  std::vector<Polynomial> gens;
  for (const auto& [a, d] : parts) gens.push_back(frobtest::fromDense(f.ring(), d));
  if (gens.empty()) gens.push_back(Polynomial(f.ring()));
  return buchberger(gens);
}

bool contained(const GroebnerBasis& inner, const GroebnerBasis& outer) { return idealContains(outer, inner); }

}  // namespace

TEST(FptEstimate, CuspExamples) {
  FptReport r7 = fptEstimate(P("y^2-x^3", 7), 3);
  EXPECT_EQ(r7.candidate, Q("5/6"));
  EXPECT_TRUE(r7.candidateStable);
  FptReport r5 = fptEstimate(P("y^2-x^3", 5), 4);
  EXPECT_EQ(r5.candidate, Q("5/6") - Q("1/30"));
  EXPECT_EQ(r5.candidate, Q("4/5"));
}

TEST(FptEstimate, SmoothDivisor) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    FptReport r = fptEstimate(P("x", p, "x"), 3);
    Integer q = Integer(p) * p * p;
    EXPECT_EQ(r.lower, Rational(q - 1, q));
    EXPECT_EQ(r.upper, Rational(1));
    EXPECT_EQ(r.candidate, Rational(1));
  }
}

TEST(FptEstimate, ThreeLinesAgreesWithFullScan) {
  Polynomial f = P("x*y*(x+y)", 7);
  FptReport r = fptEstimate(f, 3);
  ASSERT_EQ(r.levels.size(), 3u);
  Integer q = 1;
  for (unsigned e = 1; e <= 3; ++e) {
    q *= 7;
    std::uint64_t nu = frobtest::bruteNu(f, e);
    EXPECT_EQ(r.chain.entries[e - 1].nu, nu);
    Rational lo(Integer(nu), q), hi(Integer(nu) + 1, q);
    EXPECT_EQ(r.levels[e - 1].candidate, bruteSimplest(lo, hi));
  }
  EXPECT_EQ(r.candidate, Q("2/3"));
}

TEST(FptEstimate, ReportInvariants) {
  Rng rng(401);
  for (int i = 0; i < 40; ++i) {
    std::uint32_t p = std::array<std::uint32_t, 4>{2, 3, 5, 7}[static_cast<std::size_t>(i % 4)];
    PolyRing ring = frobtest::ringOf(p, 2);
    Polynomial f = frobtest::randomInMaximal(rng, ring, 4, 4);
    FptReport r = fptEstimate(f, 3);
    Integer q = 1;
    for (std::size_t k = 0; k < r.levels.size(); ++k) {
      q *= p;
      const FptLevel& lv = r.levels[k];
      ASSERT_LE(lv.lower, lv.candidate);
      ASSERT_LE(lv.candidate, lv.upper);
      ASSERT_EQ(lv.upper - lv.lower, Rational(Integer(1), q));
      ASSERT_EQ(lv.candidate, bruteSimplest(lv.lower, lv.upper));
      if (k > 0) {
        ASSERT_LE(r.levels[k - 1].lower, lv.lower);
        ASSERT_LE(lv.upper, r.levels[k - 1].upper);
      }
    }
    ASSERT_EQ(r.candidateStable, r.levels[1].candidate == r.levels[2].candidate);
  }
}

TEST(TestIdeal, Examples) {
  Polynomial x = P("x", 5, "x");
  TestIdealResult half = testIdealPrincipal(x, Q("1/2"), 4);
  EXPECT_TRUE(half.basis.isUnitIdeal());
  EXPECT_TRUE(half.certified);
  TestIdealResult one = testIdealPrincipal(x, Q("1"), 4);
  EXPECT_EQ(one.basis.str(), "(x)");
  EXPECT_TRUE(one.certified);
  Polynomial cusp = P("y^2-x^3", 7);
  TestIdealResult atFpt = testIdealPrincipal(cusp, Q("5/6"), 4);
  EXPECT_FALSE(atFpt.basis.isUnitIdeal());
  EXPECT_EQ(atFpt.basis.str(), "(y, x)");
  EXPECT_TRUE(testIdealPrincipal(cusp, Q("5/6") - Q("1/100"), 4).basis.isUnitIdeal());
  EXPECT_FROB_ERROR(testIdealPrincipal(P("0", 5), Q("1/2"), 3), ErrorKind::ZeroPolynomial);
  EXPECT_FROB_ERROR(testIdealPrincipal(x, Q("-1/2"), 3), ErrorKind::InvalidArgument);
}

// tau(f^{t+1}) = f tau(f^t).
TEST(TestIdeal, Skoda) {
  Polynomial cusp = P("y^2-x^3", 5);
  for (auto t : {"0", "1/3", "4/5", "7/10", "1"}) {
    GroebnerBasis lower = testIdealPrincipal(cusp, Q(t), 3).basis;
    std::vector<Polynomial> shifted;
    for (const auto& g : lower.generators()) shifted.push_back(g * cusp);
    GroebnerBasis want = buchberger(shifted);
    EXPECT_TRUE(idealEquals(testIdealPrincipal(cusp, Q(t) + Rational(1), 3).basis, want)) << t;
  }
}

// The certified value must agree with the defining chain evaluated several
// levels past the point where the fixed-point iteration settled.
TEST(TestIdeal, CertifiedValueMatchesTheDeepChain) {
  struct Case {
    std::string_view f;
    std::uint32_t p;
    std::string_view t;
    unsigned deep;
  };
  const std::array<Case, 8> cases = {{{"y^2-x^3", 2, "5/12", 8},
                                      {"y^2-x^3", 2, "1/2", 6},
                                      {"y^2-x^3", 3, "2/3", 5},
                                      {"y^2-x^3", 3, "11/18", 5},
                                      {"y^2-x^3", 5, "3/4", 4},
                                      {"y^2-x^3", 7, "5/6", 3},
                                      {"x*y*(x+y)", 5, "3/4", 4},
                                      {"x^2*y + y^3 + x^4", 3, "7/12", 5}}};
  for (const auto& c : cases) {
    Polynomial f = P(c.f, c.p);
    TestIdealResult r = testIdealPrincipal(f, Q(c.t), 4);
    ASSERT_TRUE(r.certified);
    GroebnerBasis deep = directChainMember(f, Q(c.t), c.deep);
    EXPECT_TRUE(idealEquals(r.basis, deep)) << c.f << " p=" << c.p << " t=" << c.t << ": " << r.basis.str() << " vs "
                                            << deep.str();
  }
}

TEST(TestIdeal, MonotoneOnTheCuspGrid) {
  for (std::uint32_t p : {5u, 7u}) {
    Polynomial cusp = P("y^2-x^3", p);
    std::vector<GroebnerBasis> taus;
    for (int k = 1; k <= 12; ++k) taus.push_back(testIdealPrincipal(cusp, Rational(Integer(k), Integer(12)), 4).basis);
    for (std::size_t i = 0; i < taus.size(); ++i) {
      for (std::size_t j = i; j < taus.size(); ++j) {
        ASSERT_TRUE(contained(taus[j], taus[i])) << "p=" << p << " k=" << i + 1 << " vs " << j + 1;
      }
    }
  }
}

TEST(TestIdeal, MonotoneOnRandomPairs) {
  Rng rng(411);
  int cases = 0;
  for (int i = 0; i < 100; ++i) {
    std::uint32_t p = std::array<std::uint32_t, 3>{2, 3, 5}[static_cast<std::size_t>(i % 3)];
    PolyRing ring = frobtest::ringOf(p, 2);
    Polynomial f = frobtest::randomInMaximal(rng, ring, 3, 3);
    std::int64_t den = rng.range(1, 12);
    Rational t(Integer(rng.range(0, den)), Integer(den));
    Rational u = t + Rational(Integer(rng.range(0, 3)), Integer(rng.range(1, 6)));
    GroebnerBasis a = testIdealPrincipal(f, t, 4).basis;
    GroebnerBasis b = testIdealPrincipal(f, u, 4).basis;
    ASSERT_TRUE(contained(b, a)) << f << " t=" << t << " u=" << u;
    ++cases;
  }
  EXPECT_EQ(cases, 100);
}

TEST(TestIdeal, CoherentWithFptBracket) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u}) {
    for (auto text : {"y^2-x^3", "x*y*(x+y)", "x^2 + y^5"}) {
      Polynomial f = P(text, p);
      FptReport r = fptEstimate(f, 3);
      Rational width = r.upper - r.lower;
      Rational below = r.lower - width;
      Rational above = r.upper + width;
      if (below.sign() > 0) {
        EXPECT_TRUE(testIdealPrincipal(f, below, 4).basis.isUnitIdeal()) << text << " p=" << p;
      }
      EXPECT_TRUE(testIdealPrincipal(f, r.lower, 4).basis.isUnitIdeal()) << text << " p=" << p;
      EXPECT_FALSE(testIdealPrincipal(f, above, 4).basis.isUnitIdeal()) << text << " p=" << p;
      // For the cusp the candidate is the threshold itself, where tau first
      // becomes proper.
      if (std::string_view(text) == "y^2-x^3") {
        EXPECT_FALSE(testIdealPrincipal(f, r.candidate, 4).basis.isUnitIdeal()) << "p=" << p;
      }
    }
  }
}

TEST(JumpScan, Examples) {
  JumpScan x = jumpScan(P("x", 5, "x"), 4, 4);
  ASSERT_EQ(x.jumps.size(), 1u);
  EXPECT_EQ(x.jumps[0].t, Rational(1));
  EXPECT_FALSE(x.jumps[0].certified);
  JumpScan xy = jumpScan(P("x*y", 5), 4, 4);
  ASSERT_FALSE(xy.jumps.empty());
  EXPECT_EQ(xy.jumps.back().t, Rational(1));
  EXPECT_EQ(fptEstimate(P("x*y", 5), 3).candidate, Rational(1));
  EXPECT_FROB_ERROR(jumpScan(P("x", 5, "x"), 1, 4), ErrorKind::InvalidArgument);
  EXPECT_FROB_ERROR(jumpScan(P("1 + x", 5, "x"), 4, 4), ErrorKind::ConstantTermNonzero);
}

TEST(JumpScan, ReportsExactlyTheGridChanges) {
  Polynomial cusp = P("y^2-x^3", 5);
  JumpScan scan = jumpScan(cusp, 10, 4);
  ASSERT_EQ(scan.grid.size(), 11u);
  std::vector<Rational> expected;
  for (std::size_t k = 1; k <= 10; ++k) {
    if (!idealEquals(scan.grid[k - 1].basis, scan.grid[k].basis)) expected.push_back(Rational(Integer(k), Integer(10)));
  }
  ASSERT_EQ(scan.jumps.size(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) EXPECT_EQ(scan.jumps[i].t, expected[i]);
  for (std::size_t i = 1; i < scan.jumps.size(); ++i) EXPECT_LT(scan.jumps[i - 1].t, scan.jumps[i].t);
  // The smallest jump is the F-pure threshold 4/5.
  ASSERT_FALSE(scan.jumps.empty());
  EXPECT_EQ(scan.jumps.front().t, Q("4/5"));
}

TEST(JumpScan, ScalingByP) {
  for (std::uint32_t p : {2u, 3u}) {
    Polynomial cusp = P("y^2-x^3", p);
    const std::uint64_t n = 6 * p;
    JumpScan scan = jumpScan(cusp, n, 4);
    ASSERT_FALSE(scan.jumps.empty());
    for (const auto& g : scan.grid) EXPECT_TRUE(g.certified);
    for (const auto& j : scan.jumps) {
      Rational scaled = j.t * Rational(p);
      if (scaled > Rational(1) || !(scaled * Rational(static_cast<std::int64_t>(n))).isInteger()) continue;
      bool found = std::any_of(scan.jumps.begin(), scan.jumps.end(), [&](const Jump& other) { return other.t == scaled; });
      EXPECT_TRUE(found) << "p=" << p << ": jump " << j.t << " but not " << scaled;
    }
    EXPECT_EQ(scan.jumps.front().t, fptEstimate(cusp, 4).candidate);
  }
}
