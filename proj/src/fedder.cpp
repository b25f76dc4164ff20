#include "frob/fedder.hpp"

#include <algorithm>

#include "frob/error.hpp"

namespace frob {

FedderVerdict fedderHypersurface(const Polynomial& f, unsigned e) {
  if (f.isZero()) throw Error(ErrorKind::ZeroPolynomial, "Fedder test of the zero polynomial");
  if (f.isConstant()) throw Error(ErrorKind::ConstantInput, "Fedder test of a constant");
  if (e == 0) throw Error(ErrorKind::InvalidArgument, "Frobenius level e must be at least 1");
  const std::uint64_t q = f.modulus().powerOrThrow(e);
  Polynomial g = powModBracket(f, q - 1, q);
  FedderVerdict v;
  v.e = e;
  v.fSplit = !g.isZero();
  if (v.fSplit) v.witness = g.leading().mono;
  return v;
}

MonomialIdeal fedderColon(const MonomialIdeal& ideal, std::uint64_t q) {
  MonomialIdeal bracket = bracketPower(ideal, q);
  const auto& gens = ideal.generators();
  MonomialIdeal colon = bracket.colon(gens.front());
  for (std::size_t i = 1; i < gens.size(); ++i) colon = colon.intersect(bracket.colon(gens[i]));
  return colon;
}

FedderVerdict fedderMonomialIdeal(const MonomialIdeal& ideal, PrimeModulus p, unsigned e) {
  if (ideal.isZero()) throw Error(ErrorKind::ImproperIdeal, "the zero ideal is excluded");
  if (ideal.isUnit() ||
      std::any_of(ideal.generators().begin(), ideal.generators().end(), [](const Monomial& m) { return m.isOne(); })) {
    throw Error(ErrorKind::ImproperIdeal, "ideal is not contained in the maximal ideal");
  }
  if (e == 0) throw Error(ErrorKind::InvalidArgument, "Frobenius level e must be at least 1");
  const std::uint64_t q = p.powerOrThrow(e);
  MonomialIdeal colon = fedderColon(ideal, q);
  FedderVerdict v;
  v.e = e;
  // Generators are sorted grevlex-descending; report the largest survivor.
  for (const auto& g : colon.generators()) {
    if (g.maxExponent() < q) {
      v.fSplit = true;
      v.witness = g;
      break;
    }
  }
  return v;
}

bool isOrdinaryPlaneCubic(const Polynomial& f) {
  if (f.arity() != 3) throw Error(ErrorKind::NotThreeVariables, "a plane cubic needs exactly 3 variables");
  if (f.isZero() || !f.isHomogeneous() || f.totalDegree() != 3) {
    throw Error(ErrorKind::NotDegreeThree, "expected a homogeneous cubic");
  }
  const std::uint64_t p = f.modulus().value();
  // Exact power, independent of the truncated route used by Fedder's test.
  Polynomial g = pow(f, p - 1);
  Monomial target{static_cast<Exponent>(p - 1), static_cast<Exponent>(p - 1), static_cast<Exponent>(p - 1)};
  return g.coefficientOf(target) != 0;
}

}  // namespace frob
