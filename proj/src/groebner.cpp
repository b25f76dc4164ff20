#include "frob/groebner.hpp"

#include <algorithm>
#include <tuple>

#include "frob/error.hpp"

namespace frob {

std::string_view termOrderName(TermOrder order) noexcept {
  return order == TermOrder::Grevlex ? "grevlex" : "lex";
}

int compareMonomials(TermOrder order, const Monomial& a, const Monomial& b) noexcept {
  return order == TermOrder::Grevlex ? compareGrevlex(a, b) : compareLex(a, b);
}

namespace {

using Terms = std::vector<Term>;

Terms ordered(const Polynomial& f, TermOrder order) {
  Terms t = f.terms();
  if (order != TermOrder::Grevlex) {
    std::sort(t.begin(), t.end(),
              [order](const Term& a, const Term& b) { return compareMonomials(order, a.mono, b.mono) > 0; });
  }
  return t;
}

// f - c * m * g, all term lists descending in the order.
Terms subtractMultiple(const Terms& f, Coeff c, const Monomial& m, const Terms& g, TermOrder order,
                       const PrimeModulus& p) {
  Terms out;
  out.reserve(f.size() + g.size());
  Coeff negc = p.neg(c);
  std::size_t i = 0, j = 0;
  while (i < f.size() || j < g.size()) {
    if (j == g.size()) {
      out.push_back(f[i++]);
      continue;
    }
    Monomial gm = g[j].mono * m;
    int cmp = i == f.size() ? -1 : compareMonomials(order, f[i].mono, gm);
    if (cmp > 0) {
      out.push_back(f[i++]);
    } else if (cmp < 0) {
      out.push_back(Term{std::move(gm), p.mul(negc, g[j].coeff)});
      ++j;
    } else {
      Coeff s = p.add(f[i].coeff, p.mul(negc, g[j].coeff));
      if (s != 0) out.push_back(Term{std::move(gm), s});
      ++i;
      ++j;
    }
  }
  return out;
}

void makeMonic(Terms& f, const PrimeModulus& p) {
  if (f.empty() || f.front().coeff == 1) return;
  Coeff inv = p.inv(f.front().coeff);
  for (auto& t : f) t.coeff = p.mul(t.coeff, inv);
}

struct Working {
  TermOrder order;
  const PrimeModulus* p;
  std::vector<Terms> polys;  // monic, descending

  const Monomial& lead(std::size_t i) const { return polys[i].front().mono; }

  std::optional<std::size_t> divisorOf(const Monomial& m, std::size_t skip = SIZE_MAX) const {
    for (std::size_t i = 0; i < polys.size(); ++i) {
      if (i == skip || polys[i].empty()) continue;
      if (lead(i).divides(m)) return i;
    }
    return std::nullopt;
  }

  // Full remainder of f.
  Terms reduce(Terms f, std::size_t skip = SIZE_MAX) const {
    Terms remainder;
    while (!f.empty()) {
      auto d = divisorOf(f.front().mono, skip);
      if (!d) {
        remainder.push_back(f.front());
        f.erase(f.begin());
        continue;
      }
      Monomial factor = f.front().mono.quotient(lead(*d));
      f = subtractMultiple(f, f.front().coeff, factor, polys[*d], order, *p);
    }
    return remainder;
  }
};

Terms sPolynomial(const Terms& f, const Terms& g, TermOrder order, const PrimeModulus& p) {
  Monomial l = f.front().mono.lcm(g.front().mono);
  Monomial mf = l.quotient(f.front().mono);
  Monomial mg = l.quotient(g.front().mono);
  // Both monic: S = mf*f - mg*g.
  Terms scaledF;
  scaledF.reserve(f.size());
  for (const auto& t : f) scaledF.push_back(Term{t.mono * mf, t.coeff});
  return subtractMultiple(scaledF, 1, mg, g, order, p);
}

}  // namespace

Term leadingTerm(const Polynomial& f, TermOrder order) {
  if (f.isZero()) throw Error(ErrorKind::ZeroPolynomial, "leading term of zero");
  if (order == TermOrder::Grevlex) return f.leading();
  const Term* best = &f.terms().front();
  for (const auto& t : f.terms()) {
    if (compareMonomials(order, t.mono, best->mono) > 0) best = &t;
  }
  return *best;
}

GroebnerBasis::GroebnerBasis(PolyRing ring, TermOrder order, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), order_(order), generators_(std::move(generators)) {
  for (const auto& g : generators_) leading_.push_back(leadingTerm(g, order_).mono);
}

bool GroebnerBasis::isUnitIdeal() const noexcept {
  return generators_.size() == 1 && generators_.front().isConstant() && !generators_.front().isZero();
}

std::string GroebnerBasis::str() const {
  if (generators_.empty()) return "(0)";
  std::string out = "(";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i != 0) out += ", ";
    out += generators_[i].str();
  }
  return out + ")";
}

GroebnerBasis buchberger(std::span<const Polynomial> gens, TermOrder order, const BuchbergerOptions& options) {
  if (gens.empty()) throw Error(ErrorKind::InvalidArgument, "buchberger needs at least one generator");
  const PolyRing& ring = gens.front().ring();
  for (const auto& g : gens) ring.requireCompatible(g.ring());
  const PrimeModulus& p = ring.modulus();

  Working w{order, &p, {}};

  // Seed with inputs interreduced against what is already present, smallest
  // leading monomial first.
  std::vector<Terms> inputs;
  for (const auto& g : gens) {
    if (!g.isZero()) inputs.push_back(ordered(g, order));
  }
  std::sort(inputs.begin(), inputs.end(), [order](const Terms& a, const Terms& b) {
    return compareMonomials(order, a.front().mono, b.front().mono) < 0;
  });
  for (auto& in : inputs) {
    Terms r = w.reduce(std::move(in));
    if (r.empty()) continue;
    makeMonic(r, p);
    w.polys.push_back(std::move(r));
  }

  struct Pair {
    std::size_t i, j;
    Monomial lcm;
  };
  std::vector<Pair> pairs;
  auto addPairsFor = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (w.polys[i].empty()) continue;
      pairs.push_back(Pair{i, j, w.lead(i).lcm(w.lead(j))});
    }
  };
  for (std::size_t j = 0; j < w.polys.size(); ++j) addPairsFor(j);

  std::size_t steps = 0;
  while (!pairs.empty()) {
    // Normal strategy: least lcm, ties broken by indices.
    auto best = std::min_element(pairs.begin(), pairs.end(), [order](const Pair& a, const Pair& b) {
      int c = compareMonomials(order, a.lcm, b.lcm);
      if (c != 0) return c < 0;
      return std::tie(a.j, a.i) < std::tie(b.j, b.i);
    });
    Pair pair = *best;
    *best = pairs.back();
    pairs.pop_back();
    if (w.polys[pair.i].empty() || w.polys[pair.j].empty()) continue;
    if (w.lead(pair.i).coprime(w.lead(pair.j))) continue;

    if (options.stepBudget && steps >= *options.stepBudget) {
      throw Error(ErrorKind::BudgetExceeded,
                  "Buchberger step budget of " + std::to_string(*options.stepBudget) + " exhausted");
    }
    ++steps;
    Terms h = w.reduce(sPolynomial(w.polys[pair.i], w.polys[pair.j], order, p));
    if (h.empty()) continue;
    makeMonic(h, p);
    w.polys.push_back(std::move(h));
    addPairsFor(w.polys.size() - 1);
  }

  // Minimalize: drop generators whose leading monomial is divisible by
  // another (earlier one wins on equality).
  for (std::size_t i = 0; i < w.polys.size(); ++i) {
    if (w.polys[i].empty()) continue;
    for (std::size_t j = 0; j < w.polys.size(); ++j) {
      if (i == j || w.polys[j].empty()) continue;
      if (w.lead(j).divides(w.lead(i)) && (w.lead(j) != w.lead(i) || j < i)) {
        w.polys[i].clear();
        break;
      }
    }
  }
  std::vector<Terms> minimal;
  for (auto& g : w.polys) {
    if (!g.empty()) minimal.push_back(std::move(g));
  }
  w.polys = std::move(minimal);

  // Tail-reduce each generator by the others.
  for (std::size_t i = 0; i < w.polys.size(); ++i) {
    Terms head{w.polys[i].front()};
    Terms tail(w.polys[i].begin() + 1, w.polys[i].end());
    Terms reducedTail = w.reduce(std::move(tail), i);
    head.insert(head.end(), reducedTail.begin(), reducedTail.end());
    w.polys[i] = std::move(head);
  }
  std::sort(w.polys.begin(), w.polys.end(), [order](const Terms& a, const Terms& b) {
    return compareMonomials(order, a.front().mono, b.front().mono) < 0;
  });

  std::vector<Polynomial> out;
  out.reserve(w.polys.size());
  for (auto& g : w.polys) out.push_back(Polynomial::fromTerms(ring, std::move(g)));
  return GroebnerBasis(ring, order, std::move(out));
}

Polynomial normalForm(const Polynomial& f, const GroebnerBasis& basis) {
  basis.ring().requireCompatible(f.ring());
  Working w{basis.order(), &basis.ring().modulus(), {}};
  for (const auto& g : basis.generators()) w.polys.push_back(ordered(g, basis.order()));
  return Polynomial::fromTerms(f.ring(), w.reduce(ordered(f, basis.order())));
}

bool idealMembership(const Polynomial& f, const GroebnerBasis& basis) {
  return normalForm(f, basis).isZero();
}

bool idealContains(const GroebnerBasis& outer, const GroebnerBasis& inner) {
  return std::all_of(inner.generators().begin(), inner.generators().end(),
                     [&](const Polynomial& g) { return idealMembership(g, outer); });
}

bool idealEquals(const GroebnerBasis& a, const GroebnerBasis& b) {
  if (a.order() != b.order()) throw Error(ErrorKind::OrderMismatch, "bases use different term orders");
  a.ring().requireCompatible(b.ring());
  return a.generators() == b.generators();
}

}  // namespace frob
