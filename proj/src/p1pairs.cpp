#include "frob/p1pairs.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "frob/error.hpp"

namespace frob {

std::string MarkedPoint::str() const {
  switch (kind) {
    case Kind::Zero: return "0";
    case Kind::Infinity: return "inf";
    case Kind::Finite: return std::to_string(value);
  }
  return "?";
}

P1Pair::P1Pair(std::vector<MarkedPoint> points, std::vector<Rational> coeffs)
    : points_(std::move(points)), coeffs_(std::move(coeffs)) {
  if (points_.size() != coeffs_.size()) throw Error(ErrorKind::InvalidPair, "points and coefficients differ in count");
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i].kind == MarkedPoint::Kind::Finite && points_[i].value == 0) {
      throw Error(ErrorKind::InvalidPair, "finite point 0 must be given as the zero marker");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (points_[i] == points_[j]) throw Error(ErrorKind::InvalidPair, "point " + points_[i].str() + " repeated");
    }
    if (coeffs_[i] < Rational(0) || Rational(1) < coeffs_[i]) {
      throw Error(ErrorKind::InvalidPair, "coefficient " + coeffs_[i].str() + " outside [0, 1]");
    }
  }
}

P1Pair P1Pair::parse(std::string_view spec) {
  std::vector<MarkedPoint> points;
  std::vector<Rational> coeffs;
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  spec = trim(spec);
  if (spec.empty()) return P1Pair({}, {});
  std::size_t start = 0;
  while (start <= spec.size()) {
    std::size_t comma = spec.find(',', start);
    std::string_view item = trim(spec.substr(start, comma == std::string_view::npos ? spec.size() - start : comma - start));
    std::size_t at = item.find('@');
    if (at == std::string_view::npos) {
      throw Error(ErrorKind::InvalidPair, "expected coefficient@point, got '" + std::string(item) + "'");
    }
    Rational a = Rational::parse(trim(item.substr(0, at)));
    std::string_view where = trim(item.substr(at + 1));
    MarkedPoint pt;
    if (where == "inf" || where == "infinity") {
      pt = MarkedPoint::infinity();
    } else if (where == "0") {
      pt = MarkedPoint::zero();
    } else {
      Rational c = Rational::parse(where);
      if (!c.isInteger()) throw Error(ErrorKind::InvalidPair, "finite points must be integers mod p");
      pt = MarkedPoint::finite(c.numerator().convert_to<std::int64_t>());
    }
    points.push_back(pt);
    coeffs.push_back(a);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return P1Pair(std::move(points), std::move(coeffs));
}

std::string P1Pair::str() const {
  std::string out;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (i != 0) out += ",";
    out += coeffs_[i].str() + "@" + points_[i].str();
  }
  return out;
}

PolyRing p1Ring(PrimeModulus p) { return PolyRing(p, {"x", "y"}); }

Polynomial pairProduct(const P1Pair& pair, unsigned e, PrimeModulus p) {
  if (e == 0) throw Error(ErrorKind::InvalidArgument, "Frobenius level e must be at least 1");
  const PolyRing ring = p1Ring(p);
  const std::uint64_t q = p.powerOrThrow(e);
  std::set<Coeff> finiteResidues;
  Polynomial product = Polynomial::constant(ring, 1);
  for (std::size_t i = 0; i < pair.points().size(); ++i) {
    const MarkedPoint& pt = pair.points()[i];
    Polynomial factor(ring);
    switch (pt.kind) {
      case MarkedPoint::Kind::Zero: factor = Polynomial::variable(ring, 0); break;
      case MarkedPoint::Kind::Infinity: factor = Polynomial::variable(ring, 1); break;
      case MarkedPoint::Kind::Finite: {
        Coeff c = p.reduce(pt.value);
        if (c == 0) throw Error(ErrorKind::InvalidPair, "point " + pt.str() + " coincides with 0 mod p");
        if (!finiteResidues.insert(c).second) {
          throw Error(ErrorKind::InvalidPair, "point " + pt.str() + " coincides with another mod p");
        }
        factor = Polynomial::variable(ring, 0) - Polynomial::variable(ring, 1).scaled(c);
        break;
      }
    }
    Integer exponent = (pair.coeffs()[i] * Rational(Integer(q - 1), 1)).ceil();
    product = mul(product, pow(factor, exponent.convert_to<std::uint64_t>()));
  }
  return product;
}

std::string PairVerdict::statusName() const {
  switch (status) {
    case Status::ProvenGFR: return "ProvenGFR";
    case Status::ProvenFSplit: return "ProvenFSplit";
    case Status::NotSplitUpTo: return "NotSplitUpTo";
    case Status::InconclusiveGFRUpTo: return "InconclusiveGFRUpTo";
  }
  return "?";
}

namespace {

// Term x^i y^j with i, j <= bound (strict: < bound); least i, then least j.
std::optional<Monomial> findWitness(const Polynomial& product, std::uint64_t bound, bool strict) {
  std::optional<Monomial> best;
  for (const auto& t : product.terms()) {
    std::uint64_t i = t.mono[0];
    std::uint64_t j = t.mono[1];
    bool ok = strict ? (i < bound && j < bound) : (i <= bound && j <= bound);
    if (!ok) continue;
    if (!best || i < (*best)[0] || (i == (*best)[0] && j < (*best)[1])) best = t.mono;
  }
  return best;
}

PairVerdict scan(const P1Pair& pair, PrimeModulus p, unsigned eMax, bool strict) {
  if (eMax == 0) throw Error(ErrorKind::InvalidArgument, "eMax must be at least 1");
  for (unsigned e = 1; e <= eMax; ++e) {
    const std::uint64_t q = p.powerOrThrow(e);
    Polynomial product = pairProduct(pair, e, p);
    if (auto w = findWitness(product, q - 1, strict)) {
      return PairVerdict{strict ? PairVerdict::Status::ProvenGFR : PairVerdict::Status::ProvenFSplit, e, w};
    }
  }
  return PairVerdict{strict ? PairVerdict::Status::InconclusiveGFRUpTo : PairVerdict::Status::NotSplitUpTo, eMax,
                     std::nullopt};
}

}  // namespace

PairVerdict isGloballyFSplit(const P1Pair& pair, PrimeModulus p, unsigned eMax) {
  return scan(pair, p, eMax, false);
}

PairVerdict isGloballyFRegular(const P1Pair& pair, PrimeModulus p, unsigned eMax) {
  return scan(pair, p, eMax, true);
}

}  // namespace frob
