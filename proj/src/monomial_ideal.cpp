#include "frob/monomial_ideal.hpp"

#include <algorithm>

#include "frob/error.hpp"

namespace frob {

namespace {

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  // Ascending degree so divisors come first.
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) { return compareGrevlex(a, b) < 0; });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> kept;
  for (auto& g : gens) {
    bool redundant = std::any_of(kept.begin(), kept.end(), [&](const Monomial& k) { return k.divides(g); });
    if (!redundant) kept.push_back(std::move(g));
  }
  std::sort(kept.begin(), kept.end(), GrevlexDescending{});
  return kept;
}

}  // namespace

MonomialIdeal::MonomialIdeal(std::size_t arity, std::vector<Monomial> generators) : arity_(arity) {
  for (const auto& g : generators) {
    if (g.arity() != arity) throw Error(ErrorKind::ArityMismatch, "generator arity differs from ideal");
  }
  gens_ = minimalize(std::move(generators));
}

MonomialIdeal MonomialIdeal::bracketMaximal(std::size_t arity, std::uint64_t q) {
  std::vector<Monomial> gens;
  for (std::size_t i = 0; i < arity; ++i) {
    Monomial m(arity);
    m[i] = static_cast<Exponent>(q);
    gens.push_back(std::move(m));
  }
  return MonomialIdeal(arity, std::move(gens));
}

bool MonomialIdeal::isUnit() const noexcept {
  return gens_.size() == 1 && gens_.front().isOne();
}

bool MonomialIdeal::contains(const Monomial& m) const noexcept {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::contains(const Polynomial& f) const noexcept {
  return std::all_of(f.terms().begin(), f.terms().end(), [&](const Term& t) { return contains(t.mono); });
}

MonomialIdeal MonomialIdeal::colon(const Monomial& m) const {
  std::vector<Monomial> gens;
  gens.reserve(gens_.size());
  for (const auto& g : gens_) gens.push_back(g.saturatingSub(m));
  return MonomialIdeal(arity_, std::move(gens));
}

MonomialIdeal MonomialIdeal::intersect(const MonomialIdeal& other) const {
  if (other.arity_ != arity_) throw Error(ErrorKind::ArityMismatch, "ideals live in different rings");
  std::vector<Monomial> gens;
  gens.reserve(gens_.size() * other.gens_.size());
  for (const auto& a : gens_) {
    for (const auto& b : other.gens_) gens.push_back(a.lcm(b));
  }
  return MonomialIdeal(arity_, std::move(gens));
}

std::string MonomialIdeal::str(const PolyRing& ring) const {
  if (gens_.empty()) return "(0)";
  std::string out = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i != 0) out += ", ";
    out += monomialString(ring, gens_[i]);
  }
  return out + ")";
}

MonomialIdeal bracketPower(const MonomialIdeal& ideal, std::uint64_t q) {
  if (!primePowerBase(q)) {
    throw Error(ErrorKind::NotAPrimePower, std::to_string(q) + " is not a positive power of a prime");
  }
  std::vector<Monomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.scaled(q));
  return MonomialIdeal(ideal.arity(), std::move(gens));
}

}  // namespace frob
