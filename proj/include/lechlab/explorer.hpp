#ifndef LECHLAB_EXPLORER_HPP
#define LECHLAB_EXPLORER_HPP

#include "lechlab/checkers.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lech {

/// Deterministic hash of (seed, index); gives each ideal of a run its own
/// stream so sharding cannot perturb the sequence.
std::uint64_t subSeed(std::uint64_t seed, std::uint64_t index);

/// Seeded m-primary ideal: pure powers uniform in [1, maxExponent], then a
/// capped geometric number of uniform interior box points, minimalized.
MonomialIdeal randomIdeal(int dim, int maxExponent, std::uint64_t seed);

/// Every m-primary monomial ideal with colength <= colengthMax, each once, in
/// a deterministic order. dim = 2 (cap 16) walks partitions; dim = 3 (cap 10)
/// stacks partition chains, plane-partition style.
std::vector<MonomialIdeal> enumerateIdeals(int dim, int colengthMax);

struct SearchConfig {
  enum class Mode { Random, Exhaustive };
  Mode mode = Mode::Random;
  int dim = 2;
  long long count = 0;      // Random
  std::uint64_t seed = 0;   // Random
  int maxExponent = 6;      // Random
  int colengthMax = 0;      // Exhaustive
  std::vector<std::string> checks;  // empty or {"all"}: every applicable check
  int jobs = 1;             // never affects the report
};

struct Tally {
  long long strict = 0, equal = 0, fails = 0, skipped = 0, undecided = 0;
  bool operator==(const Tally&) const = default;
};

struct CheckOutcomeRow {
  long long index = 0;
  std::string check;
  Outcome outcome = Outcome::Skipped;
  Rational lhsLo, lhsHi, rhs;
  int precisionBits = 0;
};

struct PerIdealResult {
  long long index = 0;
  std::optional<MonomialIdeal> ideal;
  std::vector<CheckOutcomeRow> outcomes;
  std::string error;  // nonempty when the engine failed on this ideal
};

struct TightnessRecord {
  Rational ratio;  // lhs/rhs upper bound at the tightest ideal
  long long index = 0;
  std::string ideal;
};

struct SearchReport {
  SearchConfig config;
  long long idealCount = 0;
  std::map<std::string, Tally> tallies;
  std::map<std::string, TightnessRecord> minTightness;
  std::vector<std::string> anomalies;
  std::vector<CheckOutcomeRow> failures;    // FAILS and UNDECIDED witnesses
  std::vector<std::string> failureIdeals;   // parallel to failures
  std::vector<std::string> errors;
  std::vector<PerIdealResult> rows;         // per-ideal detail for CSV export
};

using CheckRunner =
    std::function<InequalityVerdict(const std::string& check, const InvariantReport& rep)>;

SearchReport search(const SearchConfig& config);

/// Same driver with an injected checker dispatch (used to plant synthetic
/// violations in tests).
SearchReport searchWithRunner(const SearchConfig& config, const CheckRunner& runner);

}  // namespace lech

#endif
