#include "frob/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "frob/error.hpp"

namespace frob {

PolyRing::PolyRing(PrimeModulus p, std::vector<std::string> names)
    : p_(p), names_(std::make_shared<const std::vector<std::string>>(std::move(names))) {}

std::size_t PolyRing::indexOf(std::string_view name) const {
  for (std::size_t i = 0; i < names_->size(); ++i) {
    if ((*names_)[i] == name) return i;
  }
  throw Error(ErrorKind::UnknownVariable, "unknown variable '" + std::string(name) + "'");
}

PolyRing PolyRing::withModulus(PrimeModulus p) const {
  PolyRing r = *this;
  r.p_ = p;
  return r;
}

PolyRing PolyRing::without(std::size_t index) const {
  std::vector<std::string> names = *names_;
  names.erase(names.begin() + static_cast<std::ptrdiff_t>(index));
  return PolyRing(p_, std::move(names));
}

void PolyRing::requireCompatible(const PolyRing& other) const {
  if (!(p_ == other.p_)) {
    throw Error(ErrorKind::ModulusMismatch,
                "moduli " + std::to_string(p_.value()) + " and " + std::to_string(other.p_.value()) + " differ");
  }
  if (arity() != other.arity()) {
    throw Error(ErrorKind::ArityMismatch,
                "arities " + std::to_string(arity()) + " and " + std::to_string(other.arity()) + " differ");
  }
}

namespace {

void sortTerms(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return compareGrevlex(a.mono, b.mono) > 0; });
}

// Keeps the accumulator's nonzero entries, sorted.
std::vector<Term> collect(std::unordered_map<Monomial, Coeff, MonomialHash>& acc) {
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [mono, c] : acc) {
    if (c != 0) out.push_back(Term{mono, c});
  }
  sortTerms(out);
  return out;
}

bool belowBracket(const Monomial& m, std::uint64_t q) {
  for (Exponent e : m.exponents()) {
    if (e >= q) return false;
  }
  return true;
}

}  // namespace

Polynomial Polynomial::constant(const PolyRing& ring, std::int64_t c) {
  Coeff r = ring.modulus().reduce(c);
  if (r == 0) return Polynomial(ring);
  return Polynomial(ring, {Term{Monomial(ring.arity()), r}});
}

Polynomial Polynomial::variable(const PolyRing& ring, std::size_t index) {
  Monomial m(ring.arity());
  m[index] = 1;
  return Polynomial(ring, {Term{std::move(m), 1}});
}

Polynomial Polynomial::monomial(const PolyRing& ring, Monomial mono, Coeff c) {
  if (mono.arity() != ring.arity()) throw Error(ErrorKind::ArityMismatch, "monomial arity differs from ring");
  c = ring.modulus().reduceUnsigned(c);
  if (c == 0) return Polynomial(ring);
  return Polynomial(ring, {Term{std::move(mono), c}});
}

Polynomial Polynomial::fromTerms(const PolyRing& ring, std::vector<Term> terms) {
  std::unordered_map<Monomial, Coeff, MonomialHash> acc;
  acc.reserve(terms.size());
  const auto& p = ring.modulus();
  for (auto& t : terms) {
    if (t.mono.arity() != ring.arity()) throw Error(ErrorKind::ArityMismatch, "term arity differs from ring");
    Coeff& slot = acc[t.mono];
    slot = p.add(slot, p.reduceUnsigned(t.coeff));
  }
  return Polynomial(ring, collect(acc));
}

Coeff Polynomial::constantTerm() const noexcept {
  if (!terms_.empty() && terms_.back().mono.isOne()) return terms_.back().coeff;
  return 0;
}

std::int64_t Polynomial::totalDegree() const noexcept {
  if (terms_.empty()) return -1;
  return static_cast<std::int64_t>(terms_.front().mono.degree());
}

bool Polynomial::isHomogeneous() const noexcept {
  if (terms_.empty()) return true;
  std::uint64_t d = terms_.front().mono.degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const Term& t) { return t.mono.degree() == d; });
}

Coeff Polynomial::coefficientOf(const Monomial& m) const noexcept {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& key) {
    return compareGrevlex(t.mono, key) > 0;
  });
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return 0;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = modulus().neg(t.coeff);
  return r;
}

Polynomial Polynomial::scaled(Coeff c) const {
  c = modulus().reduceUnsigned(c);
  if (c == 0) return Polynomial(ring_);
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = modulus().mul(t.coeff, c);
  return r;
}

Polynomial Polynomial::shifted(const Monomial& m) const {
  if (m.arity() != arity()) throw Error(ErrorKind::ArityMismatch, "monomial arity differs from ring");
  Polynomial r = *this;
  for (auto& t : r.terms_) t.mono = t.mono * m;
  return r;  // grevlex is multiplicative, order is preserved
}

Polynomial Polynomial::frobenius(std::uint64_t q) const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.mono = t.mono.scaled(q);
  return r;  // scaling preserves grevlex order
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  a.ring_.requireCompatible(b.ring_);
  const auto& p = a.modulus();
  std::vector<Term> out;
  out.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() || j < b.terms_.size()) {
    int c = i == a.terms_.size()   ? -1
            : j == b.terms_.size() ? 1
                                   : compareGrevlex(a.terms_[i].mono, b.terms_[j].mono);
    if (c > 0) {
      out.push_back(a.terms_[i++]);
    } else if (c < 0) {
      out.push_back(b.terms_[j++]);
    } else {
      Coeff s = p.add(a.terms_[i].coeff, b.terms_[j].coeff);
      if (s != 0) out.push_back(Term{a.terms_[i].mono, s});
      ++i;
      ++j;
    }
  }
  return Polynomial(a.ring_, std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) { return mul(a, b); }

Polynomial mul(const Polynomial& f, const Polynomial& g) {
  return mulTruncated(f, g, 0);
}

Polynomial mulTruncated(const Polynomial& f, const Polynomial& g, std::uint64_t q) {
  f.ring_.requireCompatible(g.ring_);
  if (f.isZero() || g.isZero()) return Polynomial(f.ring_);
  const auto& p = f.modulus();
  const Polynomial& small = f.size() <= g.size() ? f : g;
  const Polynomial& large = f.size() <= g.size() ? g : f;
  if (small.size() == 1 && q == 0) {
    return large.shifted(small.terms_[0].mono).scaled(small.terms_[0].coeff);
  }
  std::unordered_map<Monomial, Coeff, MonomialHash> acc;
  acc.reserve(std::min<std::size_t>(small.size() * large.size(), 1u << 22));
  for (const auto& s : small.terms_) {
    for (const auto& l : large.terms_) {
      Monomial m = s.mono * l.mono;
      if (q != 0 && !belowBracket(m, q)) continue;
      Coeff& slot = acc[m];
      slot = p.add(slot, p.mul(s.coeff, l.coeff));
    }
  }
  return Polynomial(f.ring_, collect(acc));
}

namespace {

// f^r for small r by repeated multiplication or squaring, truncated at q (0 = none).
Polynomial smallPow(const Polynomial& f, std::uint64_t r, std::uint64_t q) {
  Polynomial one = Polynomial::constant(f.ring(), 1);
  if (q != 0) one = reduceModBracket(one, q);
  if (r == 0) return one;
  if (f.size() <= 8) {
    Polynomial acc = q != 0 ? reduceModBracket(f, q) : f;
    for (std::uint64_t i = 1; i < r && !acc.isZero(); ++i) acc = mulTruncated(acc, f, q);
    return acc;
  }
  Polynomial result = one;
  Polynomial base = q != 0 ? reduceModBracket(f, q) : f;
  while (r != 0) {
    if (r & 1) result = mulTruncated(result, base, q);
    r >>= 1;
    if (r != 0) base = mulTruncated(base, base, q);
  }
  return result;
}

Polynomial digitPow(const Polynomial& f, std::uint64_t r, std::uint64_t q) {
  const std::uint64_t p = f.modulus().value();
  Polynomial result = Polynomial::constant(f.ring(), 1);
  if (q != 0) result = reduceModBracket(result, q);
  std::uint64_t scale = 1;
  while (r != 0) {
    std::uint64_t digit = r % p;
    r /= p;
    if (digit != 0) {
      // Only exponents below q / scale survive the later scaling.
      std::uint64_t innerQ = q == 0 ? 0 : (q + scale - 1) / scale;
      Polynomial part = smallPow(f, digit, innerQ).frobenius(scale);
      result = mulTruncated(result, part, q);
      if (result.isZero()) return result;
    }
    if (r != 0) {
      if (scale > (std::uint64_t{1} << 40) / p) throw Error(ErrorKind::BudgetExceeded, "exponent too large");
      scale *= p;
    }
  }
  return result;
}

}  // namespace

Polynomial pow(const Polynomial& f, std::uint64_t r) { return digitPow(f, r, 0); }

Polynomial powModBracket(const Polynomial& f, std::uint64_t r, std::uint64_t q) {
  if (q == 0) throw Error(ErrorKind::InvalidArgument, "bracket exponent must be positive");
  return digitPow(f, r, q);
}

Polynomial reduceModBracket(const Polynomial& f, std::uint64_t q) {
  std::vector<Term> kept;
  kept.reserve(f.size());
  for (const auto& t : f.terms()) {
    if (belowBracket(t.mono, q)) kept.push_back(t);
  }
  return Polynomial::fromTerms(f.ring(), std::move(kept));
}

Polynomial dehomogenize(const Polynomial& f, std::string_view variable) {
  std::size_t index = f.ring().indexOf(variable);
  PolyRing target = f.ring().without(index);
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m(target.arity());
    for (std::size_t i = 0, j = 0; i < t.mono.arity(); ++i) {
      if (i != index) m[j++] = t.mono[i];
    }
    terms.push_back(Term{std::move(m), t.coeff});
  }
  return Polynomial::fromTerms(target, std::move(terms));
}

std::string monomialString(const PolyRing& ring, const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.arity(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.name(i);
    if (m[i] != 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += " + ";
    if (t.mono.isOne()) {
      out += std::to_string(t.coeff);
    } else if (t.coeff == 1) {
      out += monomialString(ring_, t.mono);
    } else {
      out += std::to_string(t.coeff) + "*" + monomialString(ring_, t.mono);
    }
  }
  return out;
}

}  // namespace frob
