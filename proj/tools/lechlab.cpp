// Command-line front door: parse ideals, compute invariant reports, run
// inequality checkers, drive searches, emit JSON/CSV.

#include "lechlab/family.hpp"
#include "lechlab/ideal_parse.hpp"
#include "lechlab/json_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

namespace {

using namespace lech;

constexpr int kExitFails = 1;
constexpr int kExitUndecided = 2;
constexpr int kExitUsage = 64;
constexpr int kExitDomain = 65;
constexpr int kExitNotStabilized = 69;
constexpr int kExitInternal = 70;

struct IdealFlags {
  std::string text;
  std::string json;
  std::string family;
  int dim = 0;
};

const char* statementLabel(const std::string& check) {
  if (check == "lech") return "Lech inequality: e(I) <= d! colength";
  if (check == "question-1.1") return "root strengthening: P(e(I)^(1/d)) <= d! colength";
  if (check == "length-conj") return "Stirling mixed-multiplicity bound";
  if (check == "mi-conj") return "e(mI) <= d! colength (strict for d >= 4)";
  if (check == "dim2-sharp") return "dimension-2 sharp bound via r(closure)";
  if (check == "dim2-equality") return "dimension-2 equality iff power of m";
  if (check == "dim3") return "dimension-3 bound e + 3e_1 + 2e_2 <= 6 colength";
  if (check == "mu-conj") return "generator-count bound with Q coefficients";
  if (check == "prop74") return "binomial generator bound (d >= 5)";
  if (check == "dao-smirnov") return "Dao-Smirnov generator bound";
  return "";
}

void writeOutput(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot open output file: " + path);
  out << content;
}

FamilyHVParams parseFamilyTriple(const std::string& text) {
  FamilyHVParams p;
  if (std::sscanf(text.c_str(), "%d,%d,%d", &p.a, &p.b, &p.c) != 3)
    throw ParseError("--family expects a,b,c");
  return p;
}

MonomialIdeal resolveIdeal(const IdealFlags& flags) {
  std::optional<int> dimHint;
  if (flags.dim > 0) dimHint = flags.dim;
  if (!flags.json.empty()) return parseIdealJson(flags.json);
  if (!flags.text.empty()) return parseIdealText(flags.text, dimHint);
  if (!flags.family.empty()) {
    FamilyHVParams p = parseFamilyTriple(flags.family);
    return familyHV(p).first;
  }
  throw ParseError("an ideal is required: --ideal, --ideal-json, or --family");
}

std::vector<std::string> parseChecksList(const std::string& list, int dim) {
  if (list.empty() || list == "all") return applicableChecks(dim);
  std::vector<std::string> checks;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    if (item == "all") return applicableChecks(dim);
    if (!isKnownCheckName(item)) throw ParseError("unknown check name: " + item);
    checks.push_back(item);
  }
  if (checks.empty()) throw ParseError("--checks list is empty");
  return checks;
}

std::string prettyBound(const BoundValue& b) {
  if (b.exact()) return ratToString(b.lo);
  auto approx = [](const Rational& r) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f",
                  static_cast<double>(numerator(r)) / static_cast<double>(denominator(r)));
    return std::string(buf);
  };
  return "[" + approx(b.lo) + ", " + approx(b.hi) + "]";
}

int runCompute(const IdealFlags& flags, bool withClosure, const std::string& format,
               const std::string& outPath) {
  MonomialIdeal ideal = resolveIdeal(flags);
  InvariantReport rep = report(ideal);

  if (format == "pretty") {
    std::ostringstream out;
    out << "ideal      " << ideal.toString() << "\n"
        << "dim        " << ideal.dim() << "\n"
        << "isClosed   " << (rep.isClosed ? "true" : "false") << "\n"
        << "colength   " << rep.colength << "\n"
        << "e          " << rep.multiplicity << "\n"
        << "mu         " << rep.mu << "\n"
        << "ord        " << rep.ord << "\n"
        << "r          " << rep.rInvariant << "\n";
    out << "mixed      (";
    for (size_t i = 0; i < rep.mixed.e.size(); ++i)
      out << (i ? ", " : "") << rep.mixed.e[i];
    out << ")\n"
        << "e(mI)      " << rep.eOfMI << "\n";
    if (withClosure && !rep.isClosed) {
      InvariantReport crep = report(rep.closure);
      out << "closure    " << rep.closure.toString() << "\n"
          << "mu(closure) " << crep.mu << "\n"
          << "colength(closure) " << crep.colength << "\n";
    }
    writeOutput(outPath, out.str());
    return 0;
  }

  Json j;
  j["schema"] = kSchemaVersion;
  Json repJson = reportToJson(rep);
  for (auto& [key, value] : repJson.items()) j[key] = value;
  if (withClosure) j["closureReport"] = reportToJson(report(rep.closure));
  writeOutput(outPath, j.dump(2) + "\n");
  return 0;
}

int runVerify(const IdealFlags& flags, const std::string& checksList, bool expectFail,
              const std::string& format, const std::string& outPath) {
  MonomialIdeal ideal = resolveIdeal(flags);
  InvariantReport rep = report(ideal);
  std::vector<std::string> checks = parseChecksList(checksList, ideal.dim());

  std::vector<InequalityVerdict> verdicts;
  verdicts.reserve(checks.size());
  for (const auto& check : checks) verdicts.push_back(runCheckByName(check, rep));

  bool anyFails = false, anyUndecided = false;
  for (const auto& v : verdicts) {
    anyFails |= v.outcome == Outcome::Fails;
    anyUndecided |= v.outcome == Outcome::Undecided;
  }

  if (format == "pretty") {
    std::ostringstream out;
    out << "ideal " << ideal.toString() << " (dim " << ideal.dim() << ")\n";
    for (const auto& v : verdicts) {
      out << "  " << v.name << ": " << outcomeName(v.outcome) << "  lhs=" << prettyBound(v.lhs)
          << " rhs=" << ratToString(v.rhs);
      if (v.precisionBits > 0) out << " (bits=" << v.precisionBits << ")";
      out << "  [" << statementLabel(v.name) << "]";
      if (v.outcome == Outcome::Fails && expectFail) out << " (expected failure)";
      out << "\n";
    }
    writeOutput(outPath, out.str());
  } else {
    Json j;
    j["schema"] = kSchemaVersion;
    j["ideal"] = idealToJson(ideal);
    Json list = Json::array();
    for (const auto& v : verdicts) list.push_back(verdictToJson(v));
    j["verdicts"] = std::move(list);
    if (expectFail) j["expectFail"] = true;
    writeOutput(outPath, j.dump(2) + "\n");
  }

  if (expectFail) return anyFails ? 0 : kExitFails;
  if (anyFails) return kExitFails;
  if (anyUndecided) return kExitUndecided;
  return 0;
}

int runSearch(SearchConfig config, const std::string& checksList, const std::string& outPath,
              const std::string& csvPath) {
  config.checks = parseChecksList(checksList, config.dim);
  SearchReport report = search(config);

  std::string json = searchReportToJson(report).dump(2) + "\n";
  writeOutput(outPath, json);
  if (!csvPath.empty()) writeOutput(csvPath, searchReportToCsv(report));

  long long fails = 0, undecided = 0;
  for (const auto& [check, tally] : report.tallies) {
    fails += tally.fails;
    undecided += tally.undecided;
  }
  if (fails > 0) return kExitFails;
  if (undecided > 0) return kExitUndecided;
  return 0;
}

int runFamily(int a, int b, int c, const std::string& grid, const std::string& format,
              const std::string& outPath) {
  std::vector<FamilyHVParams> triples;
  if (!grid.empty()) {
    int lo = 0, hi = 0;
    if (std::sscanf(grid.c_str(), "%d..%d", &lo, &hi) != 2 || lo > hi)
      throw ParseError("--grid expects LO..HI");
    for (int x = lo; x <= hi; ++x)
      for (int y = x; y <= hi; ++y)
        for (int z = y; z <= hi; ++z) {
          FamilyHVParams p{x, y, z};
          if (p.admissible()) triples.push_back(p);
        }
    if (triples.empty()) throw DomainError("no admissible triples in the grid");
  } else {
    FamilyHVParams p{a, b, c};
    p.validate();
    triples.push_back(p);
  }

  bool allMatch = true;
  std::ostringstream pretty;
  Json rows = Json::array();
  for (const auto& p : triples) {
    FamilyDiff diff = verifyFamily(p);
    allMatch &= diff.match;
    ClosedFormInvariants cf = familyClosedForms(p);
    bool isMaxPower = (p.a == p.b && p.b == p.c && p.a == 3);
    pretty << "(" << p.a << "," << p.b << "," << p.c << ") mu=" << cf.mu << " e=" << cf.e
           << " e1=" << cf.e1 << " e2=" << cf.e2 << " lambda=" << cf.lambda << " -> "
           << (diff.match ? "match" : "MISMATCH");
    if (isMaxPower) pretty << "  (I = m^3)";
    for (const auto& m : diff.mismatches) pretty << "\n    " << m;
    pretty << "\n";

    Json row;
    row["a"] = p.a;
    row["b"] = p.b;
    row["c"] = p.c;
    row["mu"] = cf.mu;
    row["e"] = cf.e;
    row["e1"] = cf.e1;
    row["e2"] = cf.e2;
    row["lambda"] = cf.lambda;
    row["match"] = diff.match;
    row["mismatches"] = diff.mismatches;
    rows.push_back(std::move(row));
  }

  if (format == "pretty") {
    writeOutput(outPath, pretty.str());
  } else {
    Json j;
    j["schema"] = kSchemaVersion;
    j["family"] = std::move(rows);
    writeOutput(outPath, j.dump(2) + "\n");
  }
  return allMatch ? 0 : kExitFails;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lechlab: exact invariants of m-primary monomial ideals and their "
               "multiplicity-colength inequalities"};
  app.require_subcommand(1);

  IdealFlags flags;
  std::string format = "json";
  std::string outPath;
  std::string checksList;
  bool withClosure = false;
  bool expectFail = false;

  auto addIdealFlags = [&](CLI::App* cmd, bool allowFamily) {
    auto* t = cmd->add_option("--ideal", flags.text, "ideal as monomials, e.g. \"x^3,y^4,x*y\"");
    auto* j = cmd->add_option("--ideal-json", flags.json,
                              "ideal literal {\"dim\":d,\"gens\":[[..],..]}");
    t->excludes(j);
    cmd->add_option("--dim", flags.dim, "ambient dimension (required for the m^n form)");
    if (allowFamily) {
      auto* f = cmd->add_option("--family", flags.family, "family triple a,b,c");
      f->excludes(t);
      f->excludes(j);
    }
    cmd->add_option("--format", format, "json or pretty")->check(CLI::IsMember({"json", "pretty"}));
    cmd->add_option("--out", outPath, "output file (default stdout)");
  };

  auto* compute = app.add_subcommand("compute", "invariant report for one ideal");
  addIdealFlags(compute, false);
  compute->add_flag("--closure", withClosure, "also report the integral closure");

  auto* verify = app.add_subcommand("verify", "run inequality checkers on one ideal");
  addIdealFlags(verify, true);
  verify->add_option("--checks", checksList, "comma-separated check names or 'all'");
  verify->add_flag("--expect-fail", expectFail, "exit 0 exactly when some check FAILS");

  SearchConfig searchConfig;
  bool exhaustive = false;
  std::string csvPath;
  auto* searchCmd = app.add_subcommand("search", "seeded or exhaustive counterexample search");
  searchCmd->add_option("--dim", searchConfig.dim, "ambient dimension (2..4)")->required();
  searchCmd->add_option("--count", searchConfig.count, "number of random ideals");
  searchCmd->add_option("--seed", searchConfig.seed, "base seed");
  searchCmd->add_option("--max-exp", searchConfig.maxExponent, "max pure-power exponent");
  searchCmd->add_option("--jobs", searchConfig.jobs, "worker threads (never changes the report)");
  searchCmd->add_flag("--exhaustive", exhaustive, "enumerate all ideals up to --colength-max");
  searchCmd->add_option("--colength-max", searchConfig.colengthMax,
                        "colength bound for --exhaustive");
  searchCmd->add_option("--checks", checksList, "comma-separated check names or 'all'");
  searchCmd->add_option("--out", outPath, "report JSON file (default stdout)");
  searchCmd->add_option("--csv", csvPath, "per-ideal tightness ratios CSV");

  int familyA = 0, familyB = 0, familyC = 0;
  std::string grid;
  auto* familyCmd = app.add_subcommand("family", "verify the closed-form family");
  familyCmd->add_option("--a", familyA, "family parameter a");
  familyCmd->add_option("--b", familyB, "family parameter b");
  familyCmd->add_option("--c", familyC, "family parameter c");
  familyCmd->add_option("--grid", grid, "verify all admissible triples in LO..HI");
  familyCmd->add_option("--format", format, "json or pretty")
      ->check(CLI::IsMember({"json", "pretty"}));
  familyCmd->add_option("--out", outPath, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (compute->parsed()) return runCompute(flags, withClosure, format, outPath);
    if (verify->parsed()) return runVerify(flags, checksList, expectFail, format, outPath);
    if (searchCmd->parsed()) {
      searchConfig.mode =
          exhaustive ? SearchConfig::Mode::Exhaustive : SearchConfig::Mode::Random;
      return runSearch(searchConfig, checksList, outPath, csvPath);
    }
    if (familyCmd->parsed()) return runFamily(familyA, familyB, familyC, grid, format, outPath);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const NotStabilized& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNotStabilized;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
