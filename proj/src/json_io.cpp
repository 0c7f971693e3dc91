#include "lechlab/json_io.hpp"

#include <sstream>

namespace lech {

namespace {

Json boundToJson(const BoundValue& b) {
  if (b.exact()) return ratToString(b.lo);
  Json j;
  j["lo"] = ratToString(b.lo);
  j["hi"] = ratToString(b.hi);
  return j;
}

double ratioAsDouble(const Rational& r) {
  return static_cast<double>(numerator(r)) / static_cast<double>(denominator(r));
}

}  // namespace

Json idealToJson(const MonomialIdeal& ideal) {
  Json j;
  j["dim"] = ideal.dim();
  Json gens = Json::array();
  for (const auto& g : ideal.gens()) gens.push_back(g.coords());
  j["gens"] = std::move(gens);
  return j;
}

Json reportToJson(const InvariantReport& rep) {
  Json j;
  j["dim"] = rep.ideal.dim();
  Json gens = Json::array();
  for (const auto& g : rep.ideal.gens()) gens.push_back(g.coords());
  j["gens"] = std::move(gens);
  j["isClosed"] = rep.isClosed;
  j["colength"] = rep.colength;
  j["multiplicity"] = rep.multiplicity;
  j["mu"] = rep.mu;
  j["ord"] = rep.ord;
  j["r"] = rep.rInvariant;
  j["mixed"] = rep.mixed.e;
  j["eOfMI"] = rep.eOfMI;
  return j;
}

Json verdictToJson(const InequalityVerdict& verdict) {
  Json j;
  j["name"] = verdict.name;
  j["outcome"] = outcomeName(verdict.outcome);
  j["lhs"] = boundToJson(verdict.lhs);
  j["rhs"] = ratToString(verdict.rhs);
  j["precisionBits"] = verdict.precisionBits;
  j["ideal"] = idealToJson(verdict.payload.ideal);
  return j;
}

Json searchReportToJson(const SearchReport& report) {
  Json j;
  j["schema"] = kSchemaVersion;
  Json cfg;
  cfg["mode"] = report.config.mode == SearchConfig::Mode::Random ? "random" : "exhaustive";
  cfg["dim"] = report.config.dim;
  if (report.config.mode == SearchConfig::Mode::Random) {
    cfg["count"] = report.config.count;
    cfg["seed"] = report.config.seed;
    cfg["maxExponent"] = report.config.maxExponent;
  } else {
    cfg["colengthMax"] = report.config.colengthMax;
  }
  // jobs is intentionally absent: the report is a function of the search
  // space, not of the scheduling.
  Json checkList = Json::array();
  for (const auto& [check, tally] : report.tallies) checkList.push_back(check);
  cfg["checks"] = std::move(checkList);
  j["config"] = std::move(cfg);
  j["idealCount"] = report.idealCount;

  Json tallies;
  for (const auto& [check, tally] : report.tallies) {
    Json t;
    t["strict"] = tally.strict;
    t["equal"] = tally.equal;
    t["fails"] = tally.fails;
    t["skipped"] = tally.skipped;
    t["undecided"] = tally.undecided;
    tallies[check] = std::move(t);
  }
  j["tallies"] = std::move(tallies);

  Json tightness;
  for (const auto& [check, record] : report.minTightness) {
    Json t;
    t["ratio"] = ratToString(record.ratio);
    t["index"] = record.index;
    t["ideal"] = record.ideal;
    tightness[check] = std::move(t);
  }
  j["minTightness"] = std::move(tightness);

  Json failures = Json::array();
  for (size_t i = 0; i < report.failures.size(); ++i) {
    const auto& row = report.failures[i];
    Json f;
    f["index"] = row.index;
    f["check"] = row.check;
    f["outcome"] = outcomeName(row.outcome);
    f["lhs"] = row.lhsLo == row.lhsHi
                   ? Json(ratToString(row.lhsLo))
                   : Json{{"lo", ratToString(row.lhsLo)}, {"hi", ratToString(row.lhsHi)}};
    f["rhs"] = ratToString(row.rhs);
    f["ideal"] = report.failureIdeals[i];
    failures.push_back(std::move(f));
  }
  j["failures"] = std::move(failures);
  j["anomalies"] = report.anomalies;
  j["errors"] = report.errors;
  return j;
}

std::string searchReportToCsv(const SearchReport& report) {
  std::ostringstream out;
  out << "index,ideal,check,outcome,lhs,rhs,ratio\n";
  for (const auto& res : report.rows) {
    if (!res.error.empty() || !res.ideal) continue;
    for (const auto& row : res.outcomes) {
      out << row.index << ",\"" << res.ideal->toString() << "\"," << row.check << ","
          << outcomeName(row.outcome) << "," << ratToString(row.lhsHi) << ","
          << ratToString(row.rhs) << ",";
      if (row.rhs > 0 && row.outcome != Outcome::Skipped)
        out << ratioAsDouble(row.lhsHi / row.rhs);
      out << "\n";
    }
  }
  return out.str();
}

Json polyhedronToJson(const NewtonPolyhedron& np) {
  Json j;
  j["dim"] = np.dim;
  Json facets = Json::array();
  for (const auto& f : np.facets) {
    Json row = Json::array();
    for (const auto& n : f.normal) row.push_back(n.str());
    row.push_back(f.offset.str());
    facets.push_back(std::move(row));
  }
  j["facets"] = std::move(facets);
  Json verts = Json::array();
  for (const auto& v : np.vertices) verts.push_back(v.coords());
  j["vertices"] = std::move(verts);
  return j;
}

}  // namespace lech
