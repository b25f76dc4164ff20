#include "frob/kltsurf.hpp"

#include <algorithm>
#include <cctype>

#include "frob/error.hpp"

namespace frob {

StarGraph::StarGraph(std::int64_t centerSelfIntersection, std::vector<std::vector<std::int64_t>> arms)
    : center_(centerSelfIntersection), arms_(std::move(arms)) {
  if (center_ > -2) {
    throw Error(ErrorKind::InvalidSelfIntersection, "center self-intersection " + std::to_string(center_) + " > -2");
  }
  if (arms_.size() < 2 || arms_.size() > 3) {
    throw Error(ErrorKind::InvalidGraph, "a star graph needs 2 or 3 arms, got " + std::to_string(arms_.size()));
  }
  for (const auto& arm : arms_) {
    if (arm.empty()) throw Error(ErrorKind::InvalidGraph, "empty arm");
    for (std::int64_t e : arm) {
      if (e > -2) throw Error(ErrorKind::InvalidSelfIntersection, "self-intersection " + std::to_string(e) + " > -2");
    }
  }
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::int64_t parseInt(std::string_view s) {
  s = trim(s);
  Rational r = Rational::parse(s);
  if (!r.isInteger()) throw Error(ErrorKind::InvalidGraph, "expected an integer, got '" + std::string(s) + "'");
  return r.numerator().convert_to<std::int64_t>();
}

}  // namespace

StarGraph StarGraph::parse(std::string_view spec) {
  std::optional<std::int64_t> center;
  std::vector<std::vector<std::int64_t>> arms;
  std::size_t start = 0;
  while (start <= spec.size()) {
    std::size_t sep = spec.find_first_of(";\n", start);
    std::string_view item = trim(spec.substr(start, sep == std::string_view::npos ? spec.size() - start : sep - start));
    if (!item.empty() && item.front() != '#') {
      std::size_t eq = item.find('=');
      if (eq == std::string_view::npos) throw Error(ErrorKind::InvalidGraph, "expected key=value, got '" + std::string(item) + "'");
      std::string_view key = trim(item.substr(0, eq));
      std::string_view value = trim(item.substr(eq + 1));
      if (key == "center") {
        if (center) throw Error(ErrorKind::InvalidGraph, "center given twice");
        center = parseInt(value);
      } else if (key == "arm") {
        std::vector<std::int64_t> chain;
        std::size_t s = 0;
        while (s <= value.size()) {
          std::size_t comma = value.find(',', s);
          chain.push_back(parseInt(value.substr(s, comma == std::string_view::npos ? value.size() - s : comma - s)));
          if (comma == std::string_view::npos) break;
          s = comma + 1;
        }
        arms.push_back(std::move(chain));
      } else {
        throw Error(ErrorKind::InvalidGraph, "unknown key '" + std::string(key) + "'");
      }
    }
    if (sep == std::string_view::npos) break;
    start = sep + 1;
  }
  if (!center) throw Error(ErrorKind::InvalidGraph, "missing center=");
  return StarGraph(*center, std::move(arms));
}

std::string StarGraph::str() const {
  std::string out = "center=" + std::to_string(center_);
  for (const auto& arm : arms_) {
    out += "; arm=";
    for (std::size_t i = 0; i < arm.size(); ++i) {
      if (i != 0) out += ",";
      out += std::to_string(arm[i]);
    }
  }
  return out;
}

Integer armDeterminant(const std::vector<std::int64_t>& chain) {
  if (chain.empty()) throw Error(ErrorKind::InvalidGraph, "empty arm");
  for (std::int64_t e : chain) {
    if (e > -2) throw Error(ErrorKind::InvalidSelfIntersection, "self-intersection " + std::to_string(e) + " > -2");
  }
  // D_k = e_k D_{k-1} - D_{k-2}, D_0 = 1, D_{-1} = 0.
  Integer prev = 0;
  Integer cur = 1;
  for (std::int64_t e : chain) {
    Integer next = Integer(e) * cur - prev;
    prev = cur;
    cur = next;
  }
  return abs(cur);
}

Rational armResidual(const std::vector<std::int64_t>& chain, const std::vector<Rational>& coeffs, std::size_t j) {
  // Smooth rational curve: K.E_j = -2 - E_j^2; the center has coefficient 1.
  Rational left = j == 0 ? Rational(1) : coeffs[j - 1];
  Rational right = j + 1 < coeffs.size() ? coeffs[j + 1] : Rational(0);
  return Rational(-2 - chain[j]) + coeffs[j] * Rational(chain[j]) + left + right;
}

namespace {

// Solves sum over the tridiagonal arm system M c = b, b_j = 2 + e_j - [j = 0],
// by forward elimination in exact rationals.
std::vector<Rational> solveArm(const std::vector<std::int64_t>& chain) {
  const std::size_t k = chain.size();
  std::vector<Rational> diag(k), rhs(k);
  for (std::size_t j = 0; j < k; ++j) {
    diag[j] = Rational(chain[j]);
    rhs[j] = Rational(2 + chain[j] - (j == 0 ? 1 : 0));
  }
  for (std::size_t j = 1; j < k; ++j) {
    if (diag[j - 1].sign() == 0) throw Error(ErrorKind::SingularSystem, "zero pivot in arm system");
    Rational factor = Rational(1) / diag[j - 1];
    diag[j] -= factor;
    rhs[j] -= factor * rhs[j - 1];
  }
  if (diag[k - 1].sign() == 0) throw Error(ErrorKind::SingularSystem, "zero pivot in arm system");
  std::vector<Rational> c(k);
  c[k - 1] = rhs[k - 1] / diag[k - 1];
  for (std::size_t j = k - 1; j-- > 0;) c[j] = (rhs[j] - c[j + 1]) / diag[j];
  return c;
}

}  // namespace

BoundaryData boundaryCoefficients(const StarGraph& graph) {
  BoundaryData data;
  Rational excess(-2);
  for (const auto& arm : graph.arms()) {
    std::vector<Rational> c = solveArm(arm);
    for (std::size_t j = 0; j < arm.size(); ++j) {
      if (armResidual(arm, c, j).sign() != 0) {
        throw Error(ErrorKind::SingularSystem, "adjunction residual nonzero after solve");
      }
    }
    Integer d = armDeterminant(arm);
    if (c.front() != Rational(d - 1, d)) {
      throw Error(ErrorKind::SingularSystem, "adjacent coefficient differs from (d-1)/d");
    }
    excess += c.front();
    data.armCoefficients.push_back(std::move(c));
    data.armDeterminants.push_back(std::move(d));
  }
  // (K + D).E_0 = -2 - E_0^2 + E_0^2 + sum of adjacent coefficients.
  data.centerExcess = excess;
  return data;
}

std::string SfrVerdict::statusName() const {
  switch (status) {
    case Status::ProvenSFR: return "ProvenSFR";
    case Status::InconclusiveUpTo: return "InconclusiveUpTo";
    case Status::NotKltBoundary: return "NotKltBoundary";
  }
  return "?";
}

SfrVerdict classifySFR(const StarGraph& graph, PrimeModulus p, unsigned eMax) {
  SfrVerdict v{SfrVerdict::Status::InconclusiveUpTo, eMax, boundaryCoefficients(graph), {}, false, std::nullopt};
  v.type = v.boundary.armDeterminants;
  std::sort(v.type.begin(), v.type.end());
  if (v.type.size() == 3) {
    const auto& t = v.type;
    bool known = (t[0] == 2 && t[1] == 2) || (t[0] == 2 && t[1] == 3 && (t[2] == 3 || t[2] == 4 || t[2] == 5));
    v.unusualType = !known;
  }
  if (v.boundary.centerExcess.sign() >= 0) {
    v.status = SfrVerdict::Status::NotKltBoundary;
    v.e = 0;
    return v;
  }
  static const MarkedPoint kPoints[] = {MarkedPoint::zero(), MarkedPoint::infinity(), MarkedPoint::finite(1)};
  std::vector<MarkedPoint> points;
  std::vector<Rational> coeffs;
  for (std::size_t i = 0; i < graph.arms().size(); ++i) {
    points.push_back(kPoints[i]);
    coeffs.push_back(v.boundary.armCoefficients[i].front());
  }
  PairVerdict pv = isGloballyFRegular(P1Pair(std::move(points), std::move(coeffs)), p, eMax);
  if (pv.status == PairVerdict::Status::ProvenGFR) {
    v.status = SfrVerdict::Status::ProvenSFR;
    v.e = pv.e;
  }
  v.pairVerdict = pv;
  return v;
}

}  // namespace frob
