#pragma once

// Differential fuzzing of the search algorithms against the linear-scan
// oracle, counterexample shrinking, and a per-input invariant checker.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"
#include "rng.hpp"
#include "search.hpp"

namespace modsearch {

struct FuzzConfig {
  std::size_t cases = 100'000;
  std::size_t max_n = 512;
  std::uint64_t seed = 0;
  bool duplicates_allowed = true;

  void validate() const {
    if (cases < 1) throw usage_error("cases must be >= 1");
    if (max_n < 1) throw usage_error("max_n must be >= 1");
  }
};

struct FuzzCase {
  std::vector<Element> array;
  Element x = 0;
};

/// An input on which `algorithm` disagrees with the oracle on presence, or
/// reports a matching index whose cell is not x.
struct Divergence {
  std::size_t case_index = 0;
  std::vector<Element> array;
  Element x = 0;
  Algorithm algorithm = Algorithm::modified_paper;
  std::optional<std::size_t> got;
  std::optional<std::size_t> expected;  // linear_search result
};

inline std::string format_result(std::optional<std::size_t> r) {
  return r ? "Found(" + std::to_string(*r) + ")" : std::string("NotFound");
}

inline std::string format_array(std::span<const Element> a) {
  std::string s = "[";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(a[i]);
  }
  return s + "]";
}

/// Case `index` of the corpus defined by `config`; independent of every
/// other case. Sizes are uniform in [0, max_n]. Gaps between neighbours are
/// uniform in [0, 3] with duplicates, [1, 4] without. Queries: 50% a present
/// value at a uniform position, 25% an absent value inside [a[0], a[n-1]]
/// (out of range when the array has no gap wider than 1), 25% an absent
/// value just outside the range.
inline FuzzCase make_case(const FuzzConfig& config, std::size_t index) {
  Engine eng(derive_seed(config.seed, {index}));
  FuzzCase fc;
  const auto n = static_cast<std::size_t>(uniform_below(eng, config.max_n + 1));
  const std::int64_t min_gap = config.duplicates_allowed ? 0 : 1;
  const std::int64_t max_gap = config.duplicates_allowed ? 3 : 4;

  fc.array.resize(n);
  Element v = uniform_between(eng, -1000, 1000);
  for (std::size_t i = 0; i < n; ++i) {
    if (i) v += uniform_between(eng, min_gap, max_gap);
    fc.array[i] = v;
  }

  const auto kind = uniform_below(eng, 4);
  if (n == 0) {
    fc.x = uniform_between(eng, -1000, 1000);
    return fc;
  }
  const auto& a = fc.array;
  if (kind <= 1) {
    fc.x = a[uniform_below(eng, n)];
    return fc;
  }
  if (kind == 2 && n >= 2) {
    const std::size_t gaps = n - 1;
    const std::size_t start = uniform_below(eng, gaps);
    for (std::size_t k = 0; k < gaps; ++k) {
      const std::size_t i = (start + k) % gaps;
      if (a[i + 1] - a[i] > 1) {
        fc.x = uniform_between(eng, a[i] + 1, a[i + 1] - 1);
        return fc;
      }
    }
  }
  const Element offset = uniform_between(eng, 1, 3);
  fc.x = coin_flip(eng) ? a.front() - offset : a.back() + offset;
  return fc;
}

/// Returns the divergence of `algo` on (a, x), if any.
inline std::optional<Divergence> check_case(Algorithm algo, std::span<const Element> a, Element x,
                                            std::size_t case_index = 0) {
  const auto expected = linear_search(a, x).index;
  const auto got = search(algo, a, x).index;
  const bool wrong_status = got.has_value() != expected.has_value();
  const bool wrong_cell = got && (*got >= a.size() || a[*got] != x);
  if (!wrong_status && !wrong_cell) return std::nullopt;
  return Divergence{case_index, std::vector<Element>(a.begin(), a.end()), x, algo, got, expected};
}

/// Runs `config.cases` cases; divergences are returned in case order.
inline std::vector<Divergence> fuzz(const FuzzConfig& config, Algorithm algo) {
  config.validate();
  std::vector<Divergence> out;
  for (std::size_t i = 0; i < config.cases; ++i) {
    const FuzzCase fc = make_case(config, i);
    if (auto d = check_case(algo, fc.array, fc.x, i)) out.push_back(std::move(*d));
  }
  return out;
}

/// Greedy delta-debugging minimization. At each chunk size (halving from
/// n/2 down to 1) it first tries keeping a single chunk, then dropping a
/// single chunk, and accepts the first candidate that still diverges. Sweeps
/// repeat until none removes anything, so the result is a fixpoint and
/// shrink(shrink(d)) == shrink(d).
inline Divergence shrink(const Divergence& d) {
  auto current = check_case(d.algorithm, d.array, d.x, d.case_index);
  if (!current) throw usage_error("shrink: input is not a divergence for " + std::string(to_string(d.algorithm)));

  auto try_candidate = [&](std::vector<Element> candidate) {
    if (auto next = check_case(d.algorithm, candidate, d.x, d.case_index)) {
      current = std::move(next);
      return true;
    }
    return false;
  };

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t chunk = std::max<std::size_t>(current->array.size() / 2, 1); !changed; chunk /= 2) {
      const auto& arr = current->array;
      for (std::size_t start = 0; start < arr.size() && !changed; start += chunk) {
        const auto b = arr.begin() + static_cast<std::ptrdiff_t>(start);
        const auto e = arr.begin() + static_cast<std::ptrdiff_t>(std::min(arr.size(), start + chunk));
        if (e - b < static_cast<std::ptrdiff_t>(arr.size())) changed = try_candidate(std::vector<Element>(b, e));
      }
      for (std::size_t start = 0; start < current->array.size() && !changed; start += chunk) {
        const auto& a = current->array;
        const auto b = a.begin() + static_cast<std::ptrdiff_t>(start);
        const auto e = a.begin() + static_cast<std::ptrdiff_t>(std::min(a.size(), start + chunk));
        std::vector<Element> candidate(a.begin(), b);
        candidate.insert(candidate.end(), e, a.end());
        changed = try_candidate(std::move(candidate));
      }
      if (chunk <= 1) break;
    }
  }
  return *current;
}

/// "case=<i> n=<len> x=<v> algo=<name> got=<..> expected=<..>" followed by
/// a line holding the shrunken array.
inline std::string format_divergence(const Divergence& d, const Divergence& shrunk) {
  return "case=" + std::to_string(d.case_index) + " n=" + std::to_string(d.array.size()) +
         " x=" + std::to_string(d.x) + " algo=" + std::string(to_string(d.algorithm)) +
         " got=" + format_result(d.got) + " expected=" + format_result(d.expected) + "\n" +
         format_array(shrunk.array);
}

struct InvariantCheck {
  std::string name;
  bool passed = false;
  std::string observed;
};

struct InvariantReport {
  std::vector<InvariantCheck> checks;
  std::vector<std::pair<Algorithm, SearchOutcome>> outcomes;
  // Set when the published variant disagrees with the oracle. This is the
  // known loop-condition defect, reported but not counted as a failure.
  std::optional<std::string> documented_divergence;

  bool all_passed() const {
    for (const auto& c : checks) {
      if (!c.passed) return false;
    }
    return true;
  }

  const SearchOutcome& outcome(Algorithm a) const {
    for (const auto& [algo, o] : outcomes) {
      if (algo == a) return o;
    }
    throw usage_error("no outcome recorded for " + std::string(to_string(a)));
  }
};

/// Evaluates every search invariant that applies to (a, x). `a` must be
/// sorted.
inline InvariantReport check_invariants(std::span<const Element> a, Element x) {
  InvariantReport report;
  const std::size_t n = a.size();
  const auto oracle = linear_search(a, x);

  auto add = [&](std::string name, bool ok, std::string observed) {
    report.checks.push_back({std::move(name), ok, std::move(observed)});
  };
  auto metrics_str = [](const Metrics& m) {
    return "passes=" + std::to_string(m.passes) + " comparisons=" + std::to_string(m.comparisons);
  };

  for (const Algorithm algo : kAllAlgorithms) {
    const auto name = std::string(to_string(algo));
    const TracedOutcome first = search_with_trace(algo, a, x);
    const TracedOutcome second = search_with_trace(algo, a, x);
    const auto& out = first.outcome;
    const auto& m = out.metrics;
    report.outcomes.emplace_back(algo, out);

    const bool sound = !out.found() || (*out.index < n && a[*out.index] == x);
    add("soundness/" + name, sound, format_result(out.index));

    if (algo != Algorithm::modified_paper) {
      add("completeness/" + name, out.found() == oracle.found(),
          format_result(out.index) + " vs oracle " + format_result(oracle.index));
    } else if (out.found() != oracle.found()) {
      report.documented_divergence = "modified-paper returned " + format_result(out.index) + ", oracle " +
                                     format_result(oracle.index);
    }

    add("passes-le-comparisons/" + name, m.passes <= m.comparisons, metrics_str(m));
    add("trace-length/" + name, first.trace.size() == m.passes,
        "trace=" + std::to_string(first.trace.size()) + " passes=" + std::to_string(m.passes));

    bool ordered = true;
    for (const auto& s : first.trace) ordered = ordered && s.low <= s.mid && s.mid <= s.high;
    add("trace-low-mid-high/" + name, ordered, std::to_string(first.trace.size()) + " steps");

    const bool same = first.outcome == second.outcome && first.trace == second.trace;
    add("determinism/" + name, same, same ? "identical" : "differs");

    if (n >= 1 && (algo == Algorithm::binary || algo == Algorithm::modified)) {
      const auto bound = bisection_pass_bound(n);
      add("pass-bound/" + name, m.passes <= bound,
          "passes=" + std::to_string(m.passes) + " bound=" + std::to_string(bound));
    }

    if (algo == Algorithm::modified) {
      add("comparisons-per-pass/modified", m.comparisons <= 7 * m.passes, metrics_str(m));
      if (n >= 1 && (x == a.front() || x == a.back() || x < a.front() || x > a.back())) {
        add("one-pass/modified", m.passes == 1, "passes=" + std::to_string(m.passes));
      }
    }
  }
  return report;
}

}  // namespace modsearch
