#include "frob/s0dim.hpp"

#include <stdexcept>
#include <unordered_map>

#include "frob/error.hpp"
#include "frob/frobcore.hpp"
#include "frob/linalg.hpp"
#include "frob/parallel.hpp"

namespace frob {

namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > (static_cast<unsigned __int128>(1) << 62)) return std::uint64_t{1} << 62;
  }
  return static_cast<std::uint64_t>(r);
}

class Coordinates {
 public:
  Coordinates(std::size_t arity, std::uint64_t maxDegree) {
    forEachMonomialUpToDegree(arity, maxDegree, [&](const Monomial& m) {
      index_.emplace(m, index_.size());
    });
  }
  std::size_t size() const { return index_.size(); }

  std::vector<Coeff> vectorOf(const Polynomial& g) const {
    std::vector<Coeff> v(index_.size(), 0);
    for (const auto& t : g.terms()) {
      auto it = index_.find(t.mono);
      if (it == index_.end()) throw std::logic_error("polynomial leaves the coordinate space");
      v[it->second] = t.coeff;
    }
    return v;
  }

 private:
  std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
};

}  // namespace

std::uint64_t s0Cell(const Polynomial& ft, unsigned d, unsigned n, unsigned m, unsigned e, std::uint64_t budget) {
  const std::int64_t k = static_cast<std::int64_t>(d) - static_cast<std::int64_t>(n) - 1;
  if (k < 0 || m == 0) return 0;
  const PrimeModulus& p = ft.modulus();
  const std::uint64_t q = p.powerOrThrow(e);
  const std::uint64_t target = static_cast<std::uint64_t>(m) * static_cast<std::uint64_t>(k);
  const std::uint64_t l = static_cast<std::uint64_t>(k) * (1 + (m - 1) * q);
  const std::size_t vars = ft.arity();

  if (binomial(target + vars, vars) > budget) {
    throw Error(ErrorKind::BudgetExceeded, "coordinate space of degree " + std::to_string(target) + " too large");
  }
  Coordinates coords(vars, target);

  // W_e = V_e intersected with f~ * P_{target - deg f~}; the quotient has
  // dimension dim(V + U) - dim U with U that multiple space.
  RowEchelon span(p, coords.size());
  const std::int64_t fdeg = ft.totalDegree();
  if (static_cast<std::int64_t>(target) >= fdeg) {
    forEachMonomialUpToDegree(vars, target - static_cast<std::uint64_t>(fdeg), [&](const Monomial& nu) {
      span.insert(coords.vectorOf(ft.shifted(nu)));
    });
  }
  const std::size_t rankU = span.rank();

  // Phi_e(g x^b) for g = f~^{q-1} = sum_a h_a^q x^a: only the part with
  // a + b = q - 1 (mod q) survives, giving h_a x^c where b = q c + q - 1 - a.
  Polynomial g = pow(ft, q - 1);
  RootDecomposition parts = rootDecompose(g, e);
  const std::uint64_t floorDeg = vars * (q - 1);
  std::uint64_t spanned = 0;
  for (const auto& [a, h] : parts.parts) {
    if (span.full()) break;
    std::uint64_t aDeg = a.degree();
    if (l + aDeg < floorDeg) continue;
    std::uint64_t cMax = (l + aDeg - floorDeg) / q;
    spanned += binomial(cMax + vars, vars);
    if (spanned > budget) {
      throw Error(ErrorKind::BudgetExceeded, "spanning set for level " + std::to_string(e) + " too large");
    }
    forEachMonomialUpToDegree(vars, cMax, [&](const Monomial& c) {
      if (!span.full()) span.insert(coords.vectorOf(h.shifted(c)));
    });
  }
  return span.rank() - rankU;
}

S0Report s0Dimension(const S0Job& job) {
  const Polynomial& f = job.f;
  if (f.isZero() || !f.isHomogeneous()) throw Error(ErrorKind::NotHomogeneous, "f must be a nonzero homogeneous polynomial");
  if (f.arity() < 2) throw Error(ErrorKind::InvalidArgument, "a hypersurface needs at least two variables");
  if (job.eMax == 0) throw Error(ErrorKind::InvalidArgument, "eMax must be at least 1");
  const std::string& var = job.dehomVariable.empty() ? f.ring().name(0) : job.dehomVariable;
  Polynomial ft = dehomogenize(f, var);
  if (ft.isConstant()) {
    throw Error(ErrorKind::DegenerateDehomogenization, "f restricted to " + var + " = 1 is constant");
  }
  S0Report report;
  report.d = static_cast<unsigned>(f.totalDegree());
  report.n = static_cast<unsigned>(f.arity() - 1);
  const std::int64_t k = static_cast<std::int64_t>(report.d) - static_cast<std::int64_t>(report.n) - 1;
  for (unsigned m : job.mValues) {
    if (m == 0) throw Error(ErrorKind::InvalidArgument, "m must be positive");
  }
  const std::size_t levels = job.eMax;
  std::vector<std::uint64_t> cells = parallelMap(job.mValues.size() * levels, [&](std::size_t i) {
    return s0Cell(ft, report.d, report.n, job.mValues[i / levels], static_cast<unsigned>(i % levels) + 1, job.budget);
  });
  for (std::size_t mi = 0; mi < job.mValues.size(); ++mi) {
    const unsigned m = job.mValues[mi];
    S0Row row{m, static_cast<std::int64_t>(m) * k, {}, std::nullopt};
    row.dims.assign(cells.begin() + static_cast<std::ptrdiff_t>(mi * levels),
                    cells.begin() + static_cast<std::ptrdiff_t>((mi + 1) * levels));
    if (row.dims.size() >= 2 && row.dims[row.dims.size() - 1] == row.dims[row.dims.size() - 2]) {
      row.stableDim = row.dims.back();
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace frob
