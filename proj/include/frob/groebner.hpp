#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "frob/polynomial.hpp"

namespace frob {

enum class TermOrder { Grevlex, Lex };

std::string_view termOrderName(TermOrder order) noexcept;
int compareMonomials(TermOrder order, const Monomial& a, const Monomial& b) noexcept;

/// Reduced Groebner basis: monic generators with pairwise non-divisible
/// leading monomials, sorted ascending by leading monomial. The empty list is
/// the zero ideal.
class GroebnerBasis {
 public:
  GroebnerBasis(PolyRing ring, TermOrder order, std::vector<Polynomial> generators);

  const PolyRing& ring() const noexcept { return ring_; }
  TermOrder order() const noexcept { return order_; }
  const std::vector<Polynomial>& generators() const noexcept { return generators_; }
  const Monomial& leadingMonomial(std::size_t i) const { return leading_[i]; }

  bool isZeroIdeal() const noexcept { return generators_.empty(); }
  bool isUnitIdeal() const noexcept;

  std::string str() const;

 private:
  PolyRing ring_;
  TermOrder order_;
  std::vector<Polynomial> generators_;
  std::vector<Monomial> leading_;
};

struct BuchbergerOptions {
  /// Maximum number of S-polynomial reductions; unset means unbounded.
  std::optional<std::size_t> stepBudget;
};

/// Leading term of f under the order; f must be nonzero.
Term leadingTerm(const Polynomial& f, TermOrder order);

/// Buchberger's algorithm with the normal selection strategy (least lcm
/// first) and the coprime leading monomial criterion. Throws ArityMismatch,
/// ModulusMismatch, InvalidArgument for an empty generator list, and
/// BudgetExceeded when the step budget runs out.
GroebnerBasis buchberger(std::span<const Polynomial> gens, TermOrder order = TermOrder::Grevlex,
                         const BuchbergerOptions& options = {});

/// Remainder of multivariate division by the basis; no term of the result is
/// divisible by a leading monomial of the basis.
Polynomial normalForm(const Polynomial& f, const GroebnerBasis& basis);

bool idealMembership(const Polynomial& f, const GroebnerBasis& basis);

/// True iff every generator of inner lies in outer.
bool idealContains(const GroebnerBasis& outer, const GroebnerBasis& inner);

/// Reduced bases compared term by term; throws OrderMismatch.
bool idealEquals(const GroebnerBasis& a, const GroebnerBasis& b);

}  // namespace frob
