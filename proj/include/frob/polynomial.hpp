#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "frob/monomial.hpp"
#include "frob/prime.hpp"

namespace frob {

/// The ambient ring F_p[x_1, ..., x_n]. Variables are positional; the names
/// only matter for parsing and printing.
class PolyRing {
 public:
  PolyRing(PrimeModulus p, std::vector<std::string> names);

  const PrimeModulus& modulus() const noexcept { return p_; }
  std::uint32_t characteristic() const noexcept { return p_.value(); }
  std::size_t arity() const noexcept { return names_->size(); }
  const std::vector<std::string>& names() const noexcept { return *names_; }
  const std::string& name(std::size_t i) const { return (*names_)[i]; }
  /// Index of a variable name; throws UnknownVariable.
  std::size_t indexOf(std::string_view name) const;

  /// The same variables over another prime.
  PolyRing withModulus(PrimeModulus p) const;
  /// Drops one variable.
  PolyRing without(std::size_t index) const;

  /// Throws ModulusMismatch or ArityMismatch.
  void requireCompatible(const PolyRing& other) const;
  bool compatible(const PolyRing& other) const noexcept {
    return p_ == other.p_ && arity() == other.arity();
  }

 private:
  PrimeModulus p_;
  std::shared_ptr<const std::vector<std::string>> names_;
};

struct Term {
  Monomial mono;
  Coeff coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial over F_p. Terms are kept in descending grevlex order with
/// nonzero coefficients in [1, p-1], so equality is term-list equality.
class Polynomial {
 public:
  explicit Polynomial(PolyRing ring) : ring_(std::move(ring)) {}

  static Polynomial constant(const PolyRing& ring, std::int64_t c);
  static Polynomial variable(const PolyRing& ring, std::size_t index);
  static Polynomial monomial(const PolyRing& ring, Monomial mono, Coeff c = 1);
  /// Combines like terms, reduces and drops zeros, then sorts.
  static Polynomial fromTerms(const PolyRing& ring, std::vector<Term> terms);

  const PolyRing& ring() const noexcept { return ring_; }
  const PrimeModulus& modulus() const noexcept { return ring_.modulus(); }
  std::size_t arity() const noexcept { return ring_.arity(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool isZero() const noexcept { return terms_.empty(); }
  bool isConstant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.isOne()); }
  /// Coefficient of the monomial 1.
  Coeff constantTerm() const noexcept;
  /// Grevlex-leading term; requires nonzero.
  const Term& leading() const { return terms_.front(); }

  /// Total degree; -1 for the zero polynomial.
  std::int64_t totalDegree() const noexcept;
  bool isHomogeneous() const noexcept;
  Coeff coefficientOf(const Monomial& m) const noexcept;

  Polynomial operator-() const;
  Polynomial scaled(Coeff c) const;
  Polynomial shifted(const Monomial& m) const;
  /// Exponent scaling x^a -> x^{q a}; over F_p this is f^q when q is a power of p.
  Polynomial frobenius(std::uint64_t q) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  friend bool operator==(const Polynomial& a, const Polynomial& b) noexcept {
    return a.ring_.compatible(b.ring_) && a.terms_ == b.terms_;
  }

  /// Canonical text: descending grevlex, explicit '*' and '^', " + " between
  /// terms, coefficients as representatives in [1, p-1].
  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const Polynomial& f) { return os << f.str(); }

 private:
  Polynomial(PolyRing ring, std::vector<Term> sortedTerms)
      : ring_(std::move(ring)), terms_(std::move(sortedTerms)) {}

  PolyRing ring_;
  std::vector<Term> terms_;

  friend Polynomial mulTruncated(const Polynomial&, const Polynomial&, std::uint64_t);
};

std::string monomialString(const PolyRing& ring, const Monomial& m);

/// Exact product; throws ModulusMismatch / ArityMismatch.
Polynomial mul(const Polynomial& f, const Polynomial& g);
/// Product with every term having some exponent >= q discarded.
Polynomial mulTruncated(const Polynomial& f, const Polynomial& g, std::uint64_t q);

/// f^r via the base-p digits of r: f^r = prod_i (f^{r_i})^{p^i}.
Polynomial pow(const Polynomial& f, std::uint64_t r);
/// f^r modulo (x_1^q, ..., x_n^q), truncating after every multiplication.
Polynomial powModBracket(const Polynomial& f, std::uint64_t r, std::uint64_t q);

/// Drops every term with some exponent >= q.
Polynomial reduceModBracket(const Polynomial& f, std::uint64_t q);

/// Substitutes 1 for the named variable and removes it from the ring.
Polynomial dehomogenize(const Polynomial& f, std::string_view variable);

}  // namespace frob
