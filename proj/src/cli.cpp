#include "frob/cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "frob/error.hpp"
#include "frob/fedder.hpp"
#include "frob/fpt.hpp"
#include "frob/frobcore.hpp"
#include "frob/kltsurf.hpp"
#include "frob/p1pairs.hpp"
#include "frob/parallel.hpp"
#include "frob/parser.hpp"
#include "frob/prime.hpp"
#include "frob/s0dim.hpp"

namespace frob::cli {

namespace {

const std::vector<std::string> kCommands = {"fedder", "ordinary", "fpt",     "nu",    "tau",   "jumps",
                                            "p1pair", "kltsurf",  "s0dim", "psplit"};

bool takesPolynomial(const std::string& cmd) {
  return cmd == "fedder" || cmd == "ordinary" || cmd == "fpt" || cmd == "nu" || cmd == "tau" || cmd == "jumps" ||
         cmd == "s0dim";
}

struct Options {
  std::uint32_t p = 0;
  std::string primes;
  std::optional<std::int64_t> residue;
  std::int64_t residueMod = 0;
  std::string vars;
  std::string input;
  std::string graphFile;
  std::string monomialIdeal;
  unsigned level = 1;
  std::optional<unsigned> eMax;
  std::string t;
  std::uint64_t gridN = 12;
  std::vector<unsigned> m{1};
  std::string dehom;
  std::int64_t a = 0;
  std::string format = "text";
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

unsigned defaultEMax(const std::string& cmd) {
  if (cmd == "p1pair" || cmd == "kltsurf") return 6;
  if (cmd == "psplit") return 1;
  return 4;
}

std::string describe(const std::string& cmd) {
  if (cmd == "fedder") return "F-splitting at the origin via Fedder's criterion (hypersurface or monomial ideal)";
  if (cmd == "ordinary") return "Ordinarity of a plane cubic; the cubic is assumed smooth (not checked)";
  if (cmd == "fpt") return "F-pure threshold bracket and least-denominator candidate";
  if (cmd == "nu") return "The nu_e(f) chain";
  if (cmd == "tau") return "Test ideal tau(f^t) of a principal pair";
  if (cmd == "jumps") return "Grid scan for F-jumping numbers in (0, 1] (uncertified)";
  if (cmd == "p1pair") return "Global F-splitting / F-regularity of a pair on P^1";
  if (cmd == "kltsurf") return "Strong F-regularity of a klt surface singularity from its star graph";
  if (cmd == "s0dim") return "Dimensions of Frobenius-stable sections of powers of the canonical sheaf";
  if (cmd == "psplit") return "Line bundle degrees of F^e_* O_{P^1}(a)";
  return "";
}

void configure(CLI::App& app, const std::string& cmd, Options& o, bool sweep) {
  app.description(describe(cmd));
  if (sweep) {
    app.add_option("--primes", o.primes, "Primes: ranges a..b and/or a comma list")->required();
    app.add_option("--residue", o.residue, "Keep only primes congruent to this residue");
    app.add_option("--residue-mod", o.residueMod, "Modulus for --residue");
  } else {
    app.add_option("--p", o.p, "The characteristic")->required();
  }
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));

  if (takesPolynomial(cmd)) {
    app.add_option("--vars", o.vars, "Ordered variable names, e.g. x,y,z")->required();
    auto* in = app.add_option("polynomial", o.input, "Polynomial text, e.g. \"x^3+y^3+z^3\"");
    if (cmd != "fedder") in->required();
  }
  if (cmd == "fedder") {
    app.add_option("--e", o.level, "Frobenius level")->check(CLI::PositiveNumber);
    app.add_option("--monomial-ideal", o.monomialIdeal, "Comma-separated monomial generators instead of a polynomial");
  }
  if (cmd == "fpt" || cmd == "nu" || cmd == "tau" || cmd == "jumps" || cmd == "p1pair" || cmd == "kltsurf" ||
      cmd == "s0dim") {
    app.add_option("--e-max", o.eMax, "Largest Frobenius level")->check(CLI::PositiveNumber);
  }
  if (cmd == "psplit") {
    app.add_option("--e,--e-max", o.eMax, "Frobenius level")->check(CLI::PositiveNumber);
    app.add_option("--a", o.a, "Degree of the line bundle")->required();
  }
  if (cmd == "tau") app.add_option("--t", o.t, "Threshold parameter as num/den")->required();
  if (cmd == "jumps") app.add_option("--n", o.gridN, "Grid denominator N (t = k/N)")->check(CLI::Range(2, 1 << 20));
  if (cmd == "s0dim") {
    app.add_option("--m", o.m, "Powers m of the canonical sheaf")->delimiter(',')->check(CLI::PositiveNumber);
    app.add_option("--dehom", o.dehom, "Variable set to 1 (default: the first)");
  }
  if (cmd == "p1pair") {
    app.add_option("pair", o.input, "Boundary as a1@0,a2@inf,a3@1 with rational a_i")->required();
  }
  if (cmd == "kltsurf") {
    app.add_option("graph", o.input, "Graph as \"center=-2; arm=-2; arm=-2; arm=-2,-2\"");
    app.add_option("--graph-file", o.graphFile, "File holding the graph in the same format")->check(CLI::ExistingFile);
  }
}

std::string joinTokens(const std::vector<std::string>& items, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i != 0) out += sep;
    out += items[i];
  }
  return out;
}

Polynomial polynomialFor(const Options& o, PrimeModulus p) {
  return parsePolynomial(o.input, PolyRing(p, parseVariableList(o.vars)));
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<Record> compute(const std::string& cmd, const Options& o, std::uint32_t prime) {
  const PrimeModulus p(prime);
  const unsigned eMax = o.eMax.value_or(defaultEMax(cmd));
  std::vector<Record> out;
  Record r;
  r["p"] = prime;

  if (cmd == "fedder") {
    FedderVerdict v;
    PolyRing ring(p, parseVariableList(o.vars));
    if (!o.monomialIdeal.empty()) {
      std::vector<Monomial> gens;
      std::string_view spec = o.monomialIdeal;
      std::size_t start = 0;
      while (start <= spec.size()) {
        std::size_t comma = spec.find(',', start);
        Polynomial g = parsePolynomial(spec.substr(start, comma == std::string_view::npos ? spec.size() - start : comma - start), ring);
        if (g.size() != 1) throw Error(ErrorKind::InvalidArgument, "monomial ideal generators must be monomials");
        gens.push_back(g.leading().mono);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
      }
      v = fedderMonomialIdeal(MonomialIdeal(ring.arity(), std::move(gens)), p, o.level);
    } else {
      v = fedderHypersurface(parsePolynomial(o.input, ring), o.level);
    }
    r["e"] = v.e;
    r["F-split"] = v.fSplit;
    r["witness"] = v.witness ? monomialString(ring, *v.witness) : std::string();
    out.push_back(std::move(r));
  } else if (cmd == "ordinary") {
    r["ordinary"] = isOrdinaryPlaneCubic(polynomialFor(o, p));
    out.push_back(std::move(r));
  } else if (cmd == "nu") {
    NuChain chain = nuChain(polynomialFor(o, p), eMax);
    for (const auto& entry : chain.entries) {
      Record row;
      row["p"] = prime;
      row["e"] = entry.e;
      row["nu"] = entry.nu;
      out.push_back(std::move(row));
    }
  } else if (cmd == "fpt") {
    FptReport rep = fptEstimate(polynomialFor(o, p), eMax);
    r["e_max"] = eMax;
    r["nu"] = rep.chain.entries.back().nu;
    r["lower"] = rep.lower.str();
    r["upper"] = rep.upper.str();
    r["candidate"] = rep.candidate.str();
    r["candidate_stable"] = rep.candidateStable;
    out.push_back(std::move(r));
  } else if (cmd == "tau") {
    Rational t = Rational::parse(o.t);
    TestIdealResult res = testIdealPrincipal(polynomialFor(o, p), t, eMax);
    r["t"] = t.str();
    r["level"] = res.e;
    r["stabilized"] = res.stabilized;
    r["stabilized_at"] = res.stabilizedAt;
    r["confirmed"] = res.confirmed;
    r["certified"] = res.certified;
    r["unit_ideal"] = res.basis.isUnitIdeal();
    r["basis"] = res.basis.str();
    out.push_back(std::move(r));
  } else if (cmd == "jumps") {
    JumpScan scan = jumpScan(polynomialFor(o, p), o.gridN, eMax);
    std::vector<std::string> jumps;
    for (const auto& j : scan.jumps) jumps.push_back(j.t.str());
    bool allCertified = std::all_of(scan.grid.begin(), scan.grid.end(), [](const TestIdealResult& g) { return g.certified; });
    r["N"] = o.gridN;
    r["e_max"] = eMax;
    r["jumps"] = joinTokens(jumps, " ");
    r["certified"] = false;
    r["grid_values_certified"] = allCertified;
    out.push_back(std::move(r));
  } else if (cmd == "p1pair") {
    P1Pair pair = P1Pair::parse(o.input);
    PolyRing ring = p1Ring(p);
    PairVerdict split = isGloballyFSplit(pair, p, eMax);
    PairVerdict gfr = isGloballyFRegular(pair, p, eMax);
    r["pair"] = pair.str();
    r["e_max"] = eMax;
    r["split"] = split.statusName();
    r["split_e"] = split.e;
    r["split_witness"] = split.witness ? monomialString(ring, *split.witness) : std::string();
    r["gfr"] = gfr.statusName();
    r["gfr_e"] = gfr.e;
    r["gfr_witness"] = gfr.witness ? monomialString(ring, *gfr.witness) : std::string();
    out.push_back(std::move(r));
  } else if (cmd == "kltsurf") {
    std::string spec = o.graphFile.empty() ? o.input : slurp(o.graphFile);
    StarGraph graph = StarGraph::parse(spec);
    SfrVerdict v = classifySFR(graph, p, eMax);
    std::vector<std::string> type, dets, coeffs;
    for (const auto& d : v.type) type.push_back(d.str());
    for (const auto& d : v.boundary.armDeterminants) dets.push_back(d.str());
    for (const auto& arm : v.boundary.armCoefficients) {
      std::vector<std::string> cs;
      for (const auto& c : arm) cs.push_back(c.str());
      coeffs.push_back(joinTokens(cs, ","));
    }
    r["graph"] = graph.str();
    r["type"] = "(" + joinTokens(type, ",") + ")";
    r["determinants"] = joinTokens(dets, " ");
    r["coefficients"] = joinTokens(coeffs, "; ");
    r["center_excess"] = v.boundary.centerExcess.str();
    r["unusual_type"] = v.unusualType;
    r["status"] = v.statusName();
    r["e"] = v.e;
    out.push_back(std::move(r));
  } else if (cmd == "s0dim") {
    S0Job job{polynomialFor(o, p), o.dehom, o.m, eMax};
    S0Report rep = s0Dimension(job);
    for (const auto& row : rep.rows) {
      std::vector<std::string> dims;
      for (auto d : row.dims) dims.push_back(std::to_string(d));
      Record rec;
      rec["p"] = prime;
      rec["m"] = row.m;
      rec["degree_budget"] = row.degreeBudget;
      rec["dims"] = joinTokens(dims, " ");
      rec["stabilized"] = row.stableDim.has_value();
      rec["stable_dim"] = row.stableDim ? std::to_string(*row.stableDim) : std::string();
      out.push_back(std::move(rec));
    }
  } else if (cmd == "psplit") {
    SplittingType s = p1SplittingType(o.a, eMax, p);
    std::vector<std::string> degs;
    for (auto b : s.summands) degs.push_back(std::to_string(b));
    r["a"] = o.a;
    r["e"] = eMax;
    r["summands"] = joinTokens(degs, " ");
    out.push_back(std::move(r));
  }
  return out;
}

std::string valueString(const Record& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  return v.dump();
}

std::string csvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string usage() {
  std::string out = "usage: frobcalc <command> [options]\n       frobcalc sweep <command> --primes SPEC [options]\n\ncommands:\n";
  for (const auto& c : kCommands) {
    out += "  " + c + std::string(10 - c.size(), ' ') + describe(c) + "\n";
  }
  out += "\nRun 'frobcalc <command> --help' for the options of one command.\n";
  return out;
}

}  // namespace

std::string renderText(const std::vector<Record>& records) {
  std::string out;
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (i != 0) out += "\n";
    for (const auto& [key, value] : records[i].items()) {
      const std::string text = valueString(value);
      out += text.empty() ? key + ":\n" : key + ": " + text + "\n";
    }
  }
  return out;
}

std::string renderCsv(const std::vector<Record>& records) {
  if (records.empty()) return "";
  std::string out;
  std::vector<std::string> header;
  for (const auto& [key, value] : records.front().items()) header.push_back(csvField(key));
  out += joinTokens(header, ",") + "\n";
  for (const auto& rec : records) {
    std::vector<std::string> row;
    for (const auto& [key, value] : rec.items()) row.push_back(csvField(valueString(value)));
    out += joinTokens(row, ",") + "\n";
  }
  return out;
}

std::string renderJson(std::string_view schema, const std::vector<Record>& records) {
  nlohmann::ordered_json doc;
  doc["schema"] = std::string(schema);
  doc["records"] = nlohmann::ordered_json::array();
  for (const auto& r : records) doc["records"].push_back(r);
  return doc.dump() + "\n";
}

std::vector<std::uint32_t> parsePrimeSpec(std::string_view spec, std::optional<std::pair<std::int64_t, std::int64_t>> residue) {
  auto parseNumber = [&](std::string_view s) -> std::uint64_t {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }) || s.size() > 10) {
      throw UsageError("bad prime spec '" + std::string(spec) + "'");
    }
    return std::stoull(std::string(s));
  };
  std::vector<std::uint32_t> primes;
  std::size_t start = 0;
  while (start <= spec.size()) {
    std::size_t comma = spec.find(',', start);
    std::string_view item = spec.substr(start, comma == std::string_view::npos ? spec.size() - start : comma - start);
    std::size_t dots = item.find("..");
    if (dots != std::string_view::npos) {
      std::uint64_t lo = parseNumber(item.substr(0, dots));
      std::uint64_t hi = parseNumber(item.substr(dots + 2));
      if (hi >= (std::uint64_t{1} << 31)) throw UsageError("prime range too large");
      for (std::uint64_t n = lo; n <= hi; ++n) {
        if (isPrime(n)) primes.push_back(static_cast<std::uint32_t>(n));
      }
    } else {
      std::uint64_t n = parseNumber(item);
      if (!isPrime(n) || n >= (std::uint64_t{1} << 31)) throw UsageError(std::to_string(n) + " is not a prime");
      primes.push_back(static_cast<std::uint32_t>(n));
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (residue) {
    auto [r, m] = *residue;
    if (m <= 0) throw UsageError("--residue-mod must be positive");
    std::int64_t want = ((r % m) + m) % m;
    std::erase_if(primes, [&](std::uint32_t p) { return static_cast<std::int64_t>(p) % m != want; });
  }
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  return primes;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  if (args.empty()) {
    err << usage();
    return 2;
  }
  std::size_t first = 0;
  bool sweep = false;
  if (args[0] == "-h" || args[0] == "--help" || args[0] == "help") {
    out << usage();
    return 0;
  }
  if (args[0] == "sweep") {
    sweep = true;
    first = 1;
    if (args.size() < 2) {
      err << "error: sweep needs a command\n" << usage();
      return 2;
    }
    if (args[1] == "-h" || args[1] == "--help") {
      out << usage();
      return 0;
    }
  }
  const std::string cmd = args[first];
  if (std::find(kCommands.begin(), kCommands.end(), cmd) == kCommands.end()) {
    err << "error: unknown command '" << cmd << "'\n" << usage();
    return 2;
  }

  Options o;
  CLI::App app(describe(cmd), std::string("frobcalc ") + (sweep ? "sweep " : "") + cmd);
  configure(app, cmd, o, sweep);
  std::vector<std::string> rest(args.rbegin(), args.rend() - static_cast<std::ptrdiff_t>(first + 1));
  try {
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  if (cmd == "fedder" && o.input.empty() == o.monomialIdeal.empty()) {
    err << "error: fedder takes exactly one of a polynomial or --monomial-ideal\n";
    return 2;
  }
  if (cmd == "kltsurf" && o.input.empty() == o.graphFile.empty()) {
    err << "error: kltsurf takes exactly one of a graph spec or --graph-file\n";
    return 2;
  }
  if (o.residue && o.residueMod == 0) {
    err << "error: --residue requires --residue-mod\n";
    return 2;
  }

  try {
    std::vector<std::uint32_t> primes;
    if (sweep) {
      std::optional<std::pair<std::int64_t, std::int64_t>> residue;
      if (o.residue) residue = std::make_pair(*o.residue, o.residueMod);
      primes = parsePrimeSpec(o.primes, residue);
    } else {
      primes.push_back(o.p);
    }
    std::vector<std::vector<Record>> perPrime =
        parallelMap(primes.size(), [&](std::size_t i) { return compute(cmd, o, primes[i]); });
    std::vector<Record> records;
    for (auto& rs : perPrime) {
      for (auto& r : rs) records.push_back(std::move(r));
    }
    const std::string schema = std::string("frob.") + (sweep ? "sweep." : "") + cmd + ".v1";
    if (o.format == "json") {
      out << renderJson(schema, records);
    } else if (o.format == "csv") {
      out << renderCsv(records);
    } else {
      out << renderText(records);
    }
    return 0;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.name() << ": " << e.what() << "\n";
    return 1;
  }
}

}  // namespace frob::cli
