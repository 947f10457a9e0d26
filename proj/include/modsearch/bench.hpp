#pragma once

// Benchmark harness over (algorithm, scenario, size) grids.
//
// For every size and trial one dataset is generated; for every scenario one
// query is drawn from it; every algorithm then searches that identical
// (dataset, query) pair. Per trial the harness records the instrumented
// pass/comparison counts and one timing sample: `warmup` untimed calls
// followed by `repetitions` back-to-back uninstrumented calls on a
// monotonic clock, divided by `repetitions`.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "dataset.hpp"
#include "errors.hpp"
#include "rng.hpp"
#include "search.hpp"
#include "stats.hpp"

namespace modsearch {

/// Keeps `value` observable so the optimizer cannot discard the computation
/// that produced it.
template <class T>
inline void do_not_optimize(const T& value) {
#if defined(__GNUC__) || defined(__clang__)
  asm volatile("" : : "r,m"(value) : "memory");
#else
  static volatile const void* sink;
  sink = &value;
#endif
}

/// Makes `value` opaque to the optimizer, so loop-invariant calls on it are
/// not hoisted.
template <class T>
inline void launder_value(T& value) {
#if defined(__GNUC__) || defined(__clang__)
  asm volatile("" : "+r,m"(value) : : "memory");
#else
  volatile T copy = value;
  value = copy;
#endif
}

/// A single caller-supplied (dataset, query) pair run in place of generated
/// trials.
struct FixedInput {
  SortedArray data;
  Element query = 0;
  std::optional<Scenario> scenario;  // label; classified from the query when unset
};

struct BenchConfig {
  std::vector<std::size_t> sizes{1'000, 10'000, 100'000, 1'000'000};
  std::vector<Scenario> scenarios{std::begin(kAllScenarios), std::end(kAllScenarios)};
  std::vector<Algorithm> algorithms{Algorithm::binary, Algorithm::modified};
  std::size_t repetitions = 1000;
  std::size_t trials = 30;
  std::uint64_t seed = 0;
  std::size_t warmup = 100;
  std::int64_t min_gap = 1;
  std::int64_t max_gap = 10;
  std::optional<FixedInput> fixed;

  void validate() const {
    if (repetitions < 1) throw usage_error("repetitions must be >= 1");
    if (trials < 1) throw usage_error("trials must be >= 1");
    if (algorithms.empty()) throw usage_error("no algorithms selected");
    if (fixed) {
      if (fixed->data.empty()) throw usage_error("fixed dataset must be non-empty");
      return;
    }
    if (sizes.empty()) throw usage_error("no sizes selected");
    if (scenarios.empty()) throw usage_error("no scenarios selected");
    for (const auto n : sizes) {
      if (n == 0) throw usage_error("sizes must be positive");
    }
  }
};

struct BenchCell {
  Scenario scenario = Scenario::first_half;
  Algorithm algorithm = Algorithm::binary;
  std::size_t n = 0;
  std::size_t trials = 0;
  std::size_t repetitions = 0;
  double mean_time_ns = 0;
  double median_time_ns = 0;
  double stddev_time_ns = 0;
  double mean_passes = 0;
  std::uint64_t max_passes = 0;
  double mean_comparisons = 0;

  bool operator==(const BenchCell&) const = default;
};

/// CSV row order: scenario, then algorithm, then n (enum declaration order
/// for the first two).
inline bool cell_order(const BenchCell& l, const BenchCell& r) {
  return std::tuple(l.scenario, l.algorithm, l.n) < std::tuple(r.scenario, r.algorithm, r.n);
}

/// Hash of the exact input one algorithm received in one trial.
struct TrialFingerprint {
  Scenario scenario;
  std::size_t n;
  std::size_t trial;
  Algorithm algorithm;
  std::uint64_t fingerprint;
};

struct BenchReport {
  std::vector<BenchCell> cells;
  std::vector<TrialFingerprint> fingerprints;
};

inline std::uint64_t fingerprint(std::span<const Element> a, Element x) noexcept {
  std::uint64_t h = mix64(a.size());
  for (const Element e : a) h = mix64(h ^ static_cast<std::uint64_t>(e));
  return mix64(h ^ static_cast<std::uint64_t>(x));
}

namespace detail {

inline double time_per_search_ns(Algorithm algo, std::span<const Element> a, Element x, std::size_t warmup,
                                 std::size_t repetitions) {
  for (std::size_t i = 0; i < warmup; ++i) {
    Element q = x;
    launder_value(q);
    do_not_optimize(find(algo, a, q));
  }
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < repetitions; ++i) {
    Element q = x;
    launder_value(q);
    do_not_optimize(find(algo, a, q));
  }
  const auto stop = std::chrono::steady_clock::now();
  const std::chrono::duration<double, std::nano> elapsed = stop - start;
  return elapsed.count() / static_cast<double>(repetitions);
}

struct CellSamples {
  std::vector<double> times;
  std::vector<double> passes;
  std::vector<double> comparisons;
  std::uint64_t max_passes = 0;
};

}  // namespace detail

/// Runs the grid single-threaded. Pass and comparison statistics depend only
/// on the config; timings do not.
inline BenchReport run(const BenchConfig& config) {
  config.validate();

  using Key = std::tuple<Scenario, Algorithm, std::size_t>;
  std::map<Key, detail::CellSamples> samples;
  BenchReport report;

  auto measure = [&](Scenario scenario, std::size_t trial, std::span<const Element> data, Element query) {
    for (const Algorithm algo : config.algorithms) {
      report.fingerprints.push_back({scenario, data.size(), trial, algo, fingerprint(data, query)});
      const SearchOutcome counted = search(algo, data, query);
      auto& cell = samples[Key{scenario, algo, data.size()}];
      cell.passes.push_back(static_cast<double>(counted.metrics.passes));
      cell.comparisons.push_back(static_cast<double>(counted.metrics.comparisons));
      cell.max_passes = std::max(cell.max_passes, counted.metrics.passes);
      cell.times.push_back(detail::time_per_search_ns(algo, data, query, config.warmup, config.repetitions));
    }
  };

  if (config.fixed) {
    const auto& fx = *config.fixed;
    const Scenario label = fx.scenario.value_or(classify_query(fx.data, fx.query));
    for (std::size_t trial = 0; trial < config.trials; ++trial) measure(label, trial, fx.data, fx.query);
  } else {
    for (const std::size_t n : config.sizes) {
      for (std::size_t trial = 0; trial < config.trials; ++trial) {
        const SortedArray data =
            generate({n, derive_seed(config.seed, {1, n, trial}), config.min_gap, config.max_gap});
        for (const Scenario scenario : config.scenarios) {
          Element query = 0;
          try {
            query = pick_query(scenario, data, derive_seed(config.seed, {2, n, trial, std::uint64_t(scenario)}));
          } catch (const scenario_infeasible& e) {
            throw scenario_infeasible(std::string(e.what()) + " (n=" + std::to_string(n) +
                                      ", trial=" + std::to_string(trial) + ")");
          }
          measure(scenario, trial, data, query);
        }
      }
    }
  }

  for (const auto& [key, s] : samples) {
    const auto& [scenario, algo, n] = key;
    const Summary t = summarize(s.times);
    BenchCell cell;
    cell.scenario = scenario;
    cell.algorithm = algo;
    cell.n = n;
    cell.trials = s.times.size();
    cell.repetitions = config.repetitions;
    cell.mean_time_ns = t.mean;
    cell.median_time_ns = t.median;
    cell.stddev_time_ns = t.stddev;
    cell.mean_passes = summarize(s.passes).mean;
    cell.max_passes = s.max_passes;
    cell.mean_comparisons = summarize(s.comparisons).mean;
    report.cells.push_back(cell);
  }
  std::sort(report.cells.begin(), report.cells.end(), cell_order);
  return report;
}

}  // namespace modsearch
