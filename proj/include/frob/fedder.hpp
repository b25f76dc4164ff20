#pragma once

#include <optional>

#include "frob/monomial_ideal.hpp"
#include "frob/polynomial.hpp"

namespace frob {

/// Outcome of Fedder's criterion at level e: split iff a witness monomial of
/// the colon element survives outside m^[p^e].
struct FedderVerdict {
  bool fSplit = false;
  unsigned e = 1;
  std::optional<Monomial> witness;
};

/// For I = (f): (f^q : f) = (f^{q-1}), so R is F-split at the origin iff
/// f^{q-1} has a term with all exponents below q. The witness is the
/// grevlex-largest such term. Throws ZeroPolynomial or ConstantInput.
FedderVerdict fedderHypersurface(const Polynomial& f, unsigned e = 1);

/// Combinatorial (I^[q] : I) for a monomial ideal. Throws ImproperIdeal
/// unless I is nonzero and inside the maximal ideal.
FedderVerdict fedderMonomialIdeal(const MonomialIdeal& ideal, PrimeModulus p, unsigned e = 1);

/// The colon (I^[q] : I) itself.
MonomialIdeal fedderColon(const MonomialIdeal& ideal, std::uint64_t q);

/// Ordinarity of a plane cubic: the coefficient of (xyz)^{p-1} in f^{p-1} is
/// nonzero. Smoothness of f is assumed, not checked. Throws NotThreeVariables
/// or NotDegreeThree.
bool isOrdinaryPlaneCubic(const Polynomial& f);

}  // namespace frob
