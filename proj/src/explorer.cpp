#include "lechlab/explorer.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <set>
#include <sstream>
#include <thread>

namespace lech {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Minimal generators of the complement of a finite downset (staircase cells).
MonomialIdeal idealFromDownset(const std::set<std::vector<int>>& cells, int dim) {
  std::vector<int> hi(dim, 0);
  for (const auto& c : cells)
    for (int k = 0; k < dim; ++k) hi[k] = std::max(hi[k], c[k] + 1);

  std::vector<ExponentVector> gens;
  std::vector<int> v(dim, 0);
  while (true) {
    if (!cells.count(v)) {
      bool minimal = true;
      for (int k = 0; k < dim && minimal; ++k) {
        if (v[k] == 0) continue;
        --v[k];
        if (!cells.count(v)) minimal = false;
        ++v[k];
      }
      if (minimal) gens.emplace_back(v);
    }
    int k = dim - 1;
    while (k >= 0 && v[k] == hi[k]) v[k--] = 0;
    if (k < 0) break;
    ++v[k];
  }
  return MonomialIdeal::minimalize(std::move(gens), dim);
}

// Partitions of exactly n with part i bounded by bound[i] (and by the
// previous part), in a fixed recursive order.
void boundedPartitions(int n, const std::vector<int>& bound, std::vector<int>& parts,
                       const std::function<void(const std::vector<int>&)>& emit) {
  if (n == 0) {
    emit(parts);
    return;
  }
  size_t i = parts.size();
  if (i >= bound.size()) return;
  int maxPart = std::min(bound[i], i > 0 ? parts[i - 1] : n);
  maxPart = std::min(maxPart, n);
  for (int part = maxPart; part >= 1; --part) {
    parts.push_back(part);
    boundedPartitions(n - part, bound, parts, emit);
    parts.pop_back();
  }
}

std::set<std::vector<int>> cellsOfPartition(const std::vector<int>& heights) {
  std::set<std::vector<int>> cells;
  for (int i = 0; i < static_cast<int>(heights.size()); ++i)
    for (int j = 0; j < heights[i]; ++j) cells.insert({i, j});
  return cells;
}

void enumerateDim2(int colengthMax, std::vector<MonomialIdeal>& out) {
  for (int n = 1; n <= colengthMax; ++n) {
    std::vector<int> bound(n, n), parts;
    boundedPartitions(n, bound, parts, [&](const std::vector<int>& heights) {
      out.push_back(idealFromDownset(cellsOfPartition(heights), 2));
    });
  }
}

// Chains of nested partitions stacked along the z axis.
void enumerateDim3Chains(int remaining, const std::vector<int>& prev,
                         std::vector<std::vector<int>>& levels,
                         const std::function<void(const std::vector<std::vector<int>>&)>& emit) {
  for (int size = remaining; size >= 1; --size) {
    std::vector<int> parts;
    boundedPartitions(size, prev, parts, [&](const std::vector<int>& level) {
      levels.push_back(level);
      if (remaining - size == 0)
        emit(levels);
      else
        enumerateDim3Chains(remaining - size, level, levels, emit);
      levels.pop_back();
    });
  }
}

void enumerateDim3(int colengthMax, std::vector<MonomialIdeal>& out) {
  for (int n = 1; n <= colengthMax; ++n) {
    std::vector<std::vector<int>> levels;
    std::vector<int> top(n, n);
    enumerateDim3Chains(n, top, levels, [&](const std::vector<std::vector<int>>& chain) {
      std::set<std::vector<int>> cells;
      for (int t = 0; t < static_cast<int>(chain.size()); ++t)
        for (int i = 0; i < static_cast<int>(chain[t].size()); ++i)
          for (int j = 0; j < chain[t][i]; ++j) cells.insert({i, j, t});
      out.push_back(idealFromDownset(cells, 3));
    });
  }
}

std::string describeOutcomeRow(const CheckOutcomeRow& row, const std::string& idealText) {
  std::ostringstream msg;
  msg << "index " << row.index << " check " << row.check << " outcome "
      << outcomeName(row.outcome) << " ideal " << idealText;
  return msg.str();
}

}  // namespace

std::uint64_t subSeed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(seed ^ (0x9E3779B97F4A7C15ULL * (index + 1)));
}

MonomialIdeal randomIdeal(int dim, int maxExponent, std::uint64_t seed) {
  if (dim < 2 || dim > 4) throw DomainError("randomIdeal supports 2 <= dim <= 4");
  if (maxExponent < 1) throw DomainError("maxExponent must be >= 1");
  std::mt19937_64 rng(seed);
  auto draw = [&rng](int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); };

  std::vector<int> pure(dim);
  std::vector<ExponentVector> points;
  for (int k = 0; k < dim; ++k) {
    pure[k] = 1 + draw(maxExponent);
    points.push_back(ExponentVector::unit(dim, k, pure[k]));
  }
  const int cap = 2 * dim + 4;
  for (int i = 0; i < cap; ++i) {
    if (draw(4) == 0) break;
    std::vector<int> v(dim);
    for (int k = 0; k < dim; ++k) v[k] = draw(pure[k]);
    if (std::all_of(v.begin(), v.end(), [](int x) { return x == 0; })) continue;
    points.emplace_back(std::move(v));
  }
  return MonomialIdeal::minimalize(std::move(points), dim);
}

std::vector<MonomialIdeal> enumerateIdeals(int dim, int colengthMax) {
  if (colengthMax < 1) throw DomainError("colength bound must be >= 1");
  std::vector<MonomialIdeal> out;
  if (dim == 2) {
    if (colengthMax > 16) throw DomainError("dim-2 enumeration is capped at colength 16");
    enumerateDim2(colengthMax, out);
  } else if (dim == 3) {
    if (colengthMax > 10) throw DomainError("dim-3 enumeration is capped at colength 10");
    enumerateDim3(colengthMax, out);
  } else {
    throw DomainError("exhaustive enumeration supports dim 2 and 3");
  }
  return out;
}

SearchReport search(const SearchConfig& config) {
  return searchWithRunner(config, [](const std::string& check, const InvariantReport& rep) {
    return runCheckByName(check, rep);
  });
}

SearchReport searchWithRunner(const SearchConfig& config, const CheckRunner& runner) {
  std::vector<std::string> checks = config.checks;
  if (checks.empty() || std::find(checks.begin(), checks.end(), "all") != checks.end())
    checks = applicableChecks(config.dim);
  for (const auto& c : checks)
    if (!isKnownCheckName(c)) throw DomainError("unknown check name: " + c);

  std::vector<MonomialIdeal> pool;
  long long count = 0;
  if (config.mode == SearchConfig::Mode::Exhaustive) {
    pool = enumerateIdeals(config.dim, config.colengthMax);
    count = static_cast<long long>(pool.size());
  } else {
    if (config.count < 1) throw DomainError("random search needs count >= 1");
    if (config.dim < 2 || config.dim > 4) throw DomainError("search supports 2 <= dim <= 4");
    count = config.count;
  }

  std::vector<PerIdealResult> results(static_cast<size_t>(count));
  std::atomic<long long> nextIndex{0};
  auto worker = [&]() {
    while (true) {
      long long i = nextIndex.fetch_add(1);
      if (i >= count) return;
      PerIdealResult& res = results[static_cast<size_t>(i)];
      res.index = i;
      try {
        MonomialIdeal ideal =
            config.mode == SearchConfig::Mode::Exhaustive
                ? pool[static_cast<size_t>(i)]
                : randomIdeal(config.dim, config.maxExponent,
                              subSeed(config.seed, static_cast<std::uint64_t>(i)));
        res.ideal = ideal;
        InvariantReport rep = report(ideal);
        for (const auto& check : checks) {
          InequalityVerdict v = runner(check, rep);
          CheckOutcomeRow row;
          row.index = i;
          row.check = check;
          row.outcome = v.outcome;
          row.lhsLo = v.lhs.lo;
          row.lhsHi = v.lhs.hi;
          row.rhs = v.rhs;
          row.precisionBits = v.precisionBits;
          res.outcomes.push_back(std::move(row));
        }
      } catch (const std::exception& e) {
        res.outcomes.clear();
        res.error = e.what();
      }
    }
  };

  const int jobs = std::max(1, config.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    threads.reserve(static_cast<size_t>(jobs));
    for (int j = 0; j < jobs; ++j) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }

  // Aggregation walks results in index order, so the report cannot depend on
  // scheduling.
  SearchReport summary;
  summary.config = config;
  summary.idealCount = count;
  for (const auto& check : checks) summary.tallies[check];

  for (const auto& res : results) {
    std::string idealText = res.ideal ? res.ideal->toString() : "<unavailable>";
    if (!res.error.empty()) {
      summary.errors.push_back("index " + std::to_string(res.index) + ": " + res.error);
      continue;
    }
    for (const auto& row : res.outcomes) {
      Tally& tally = summary.tallies[row.check];
      switch (row.outcome) {
        case Outcome::HoldsStrict: ++tally.strict; break;
        case Outcome::HoldsEqual: ++tally.equal; break;
        case Outcome::Fails: ++tally.fails; break;
        case Outcome::Skipped: ++tally.skipped; break;
        case Outcome::Undecided: ++tally.undecided; break;
      }

      if (row.outcome == Outcome::Fails || row.outcome == Outcome::Undecided) {
        summary.failures.push_back(row);
        summary.failureIdeals.push_back(idealText);
      }

      bool decided = row.outcome == Outcome::HoldsStrict || row.outcome == Outcome::HoldsEqual ||
                     row.outcome == Outcome::Fails;
      if (decided && row.rhs > 0) {
        Rational ratio = row.lhsHi / row.rhs;
        auto it = summary.minTightness.find(row.check);
        if (it == summary.minTightness.end() || ratio < it->second.ratio)
          summary.minTightness[row.check] = TightnessRecord{ratio, row.index, idealText};
      }

      bool anomaly = false;
      if (isTheoremAt(row.check, config.dim) && row.outcome == Outcome::Fails) anomaly = true;
      if (row.check == "mi-conj" && config.dim >= 4 && row.outcome == Outcome::HoldsEqual)
        anomaly = true;  // the d >= 4 bound is strict
      if (row.check == "question-1.1" && row.outcome == Outcome::Undecided) anomaly = true;
      if (row.check == "dao-smirnov" && config.dim == 2 && row.outcome == Outcome::HoldsStrict)
        anomaly = true;  // dimension two is an equality
      if (anomaly) summary.anomalies.push_back(describeOutcomeRow(row, idealText));
    }
  }
  summary.rows = std::move(results);
  return summary;
}

}  // namespace lech
