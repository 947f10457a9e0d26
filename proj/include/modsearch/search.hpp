#pragma once

// Instrumented search algorithms over sorted int64 arrays: a linear scan
// (the reference oracle), classic bisection, and the endpoint-checking
// modified bisection in two forms. `modified_search` loops while
// low <= high; `modified_search_paper` keeps the original low < high
// condition and therefore misses a match left in a single unexamined cell.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace modsearch {

using Element = std::int64_t;

// Signed so that `high = mid - 1` at mid == 0 terminates the loop cleanly.
using Index = std::int64_t;

/// Returns the position of the first i with a[i] > a[i+1], if any.
inline std::optional<std::size_t> first_unsorted(std::span<const Element> a) {
  const auto it = std::adjacent_find(a.begin(), a.end(), [](Element l, Element r) { return l > r; });
  if (it == a.end()) return std::nullopt;
  return static_cast<std::size_t>(it - a.begin()) + 1;
}

/// Owning, non-decreasing sequence of elements. Construction validates order.
class SortedArray {
public:
  SortedArray() = default;

  explicit SortedArray(std::vector<Element> elems) : elems_(std::move(elems)) {
    if (const auto bad = first_unsorted(elems_)) {
      throw usage_error("array is not sorted: element " + std::to_string(*bad) + " (" +
                        std::to_string(elems_[*bad]) + ") is smaller than its predecessor (" +
                        std::to_string(elems_[*bad - 1]) + ")");
    }
  }

  SortedArray(std::initializer_list<Element> init) : SortedArray(std::vector<Element>(init)) {}

  std::span<const Element> view() const noexcept { return elems_; }
  operator std::span<const Element>() const noexcept { return elems_; }

  const std::vector<Element>& elems() const noexcept { return elems_; }
  std::size_t size() const noexcept { return elems_.size(); }
  bool empty() const noexcept { return elems_.empty(); }
  Element operator[](std::size_t i) const { return elems_[i]; }
  auto begin() const noexcept { return elems_.begin(); }
  auto end() const noexcept { return elems_.end(); }

  bool operator==(const SortedArray&) const = default;

private:
  std::vector<Element> elems_;
};

/// Work counters for one search call.
///
/// `passes` counts entered loop iterations. `comparisons` counts
/// element-vs-query relational tests; index-vs-index tests are free.
/// `accesses` counts array cell loads, where each of the low/high/mid
/// cells is loaded at most once per pass.
struct Metrics {
  std::uint64_t passes = 0;
  std::uint64_t comparisons = 0;
  std::uint64_t accesses = 0;

  bool operator==(const Metrics&) const = default;
};

struct SearchOutcome {
  std::optional<std::size_t> index;  // nullopt == not found
  Metrics metrics;

  bool found() const noexcept { return index.has_value(); }
  bool operator==(const SearchOutcome&) const = default;
};

enum class Action { range_reject, found_at_low, found_at_high, found_at_mid, go_left, go_right };

inline std::string_view to_string(Action a) {
  switch (a) {
    case Action::range_reject: return "range-reject";
    case Action::found_at_low: return "found-at-low";
    case Action::found_at_high: return "found-at-high";
    case Action::found_at_mid: return "found-at-mid";
    case Action::go_left: return "go-left";
    case Action::go_right: return "go-right";
  }
  return "?";
}

/// One pass of a search loop. For the linear scan, low == high == mid is the
/// examined cell.
struct TraceStep {
  std::size_t pass_index = 0;  // 1-based
  Index low = 0;
  Index high = 0;
  Index mid = 0;
  Action action = Action::go_right;

  bool operator==(const TraceStep&) const = default;
};

struct TracedOutcome {
  SearchOutcome outcome;
  std::vector<TraceStep> trace;
};

enum class Algorithm { linear, binary, modified, modified_paper };

inline constexpr Algorithm kAllAlgorithms[] = {Algorithm::linear, Algorithm::binary, Algorithm::modified,
                                               Algorithm::modified_paper};

inline std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::linear: return "linear";
    case Algorithm::binary: return "binary";
    case Algorithm::modified: return "modified";
    case Algorithm::modified_paper: return "modified-paper";
  }
  return "?";
}

inline Algorithm parse_algorithm(std::string_view name) {
  for (const Algorithm a : kAllAlgorithms) {
    if (to_string(a) == name) return a;
  }
  throw usage_error("unknown algorithm '" + std::string(name) +
                    "' (expected linear, binary, modified or modified-paper)");
}

/// floor(log2(n)) + 1 for n >= 1; the worst-case pass count of bisection.
constexpr std::uint64_t bisection_pass_bound(std::size_t n) noexcept { return std::bit_width(n); }

namespace detail {

// Probe policies. The search kernels are written once and instantiated with
// either a counting probe (metrics and optional trace) or a no-op probe used
// for timing.

struct NullProbe {
  static Element load(std::span<const Element> a, Index i) noexcept { return a[static_cast<std::size_t>(i)]; }
  static bool test(bool r) noexcept { return r; }
  static void step(Index, Index, Index, Action) noexcept {}
};

class CountingProbe {
public:
  explicit CountingProbe(std::vector<TraceStep>* trace = nullptr) : trace_(trace) {}

  Element load(std::span<const Element> a, Index i) noexcept {
    ++metrics_.accesses;
    return a[static_cast<std::size_t>(i)];
  }

  bool test(bool r) noexcept {
    ++metrics_.comparisons;
    return r;
  }

  void step(Index low, Index high, Index mid, Action action) {
    ++metrics_.passes;
    if (trace_ != nullptr) trace_->push_back({static_cast<std::size_t>(metrics_.passes), low, high, mid, action});
  }

  const Metrics& metrics() const noexcept { return metrics_; }

private:
  Metrics metrics_;
  std::vector<TraceStep>* trace_;
};

template <class Probe>
std::optional<std::size_t> linear_kernel(std::span<const Element> a, Element x, Probe& probe) {
  const auto n = static_cast<Index>(a.size());
  for (Index i = 0; i < n; ++i) {
    if (probe.test(probe.load(a, i) == x)) {
      probe.step(i, i, i, Action::found_at_mid);
      return static_cast<std::size_t>(i);
    }
    probe.step(i, i, i, Action::go_right);
  }
  return std::nullopt;
}

template <class Probe>
std::optional<std::size_t> binary_kernel(std::span<const Element> a, Element x, Probe& probe) {
  Index low = 0;
  Index high = static_cast<Index>(a.size()) - 1;
  while (low <= high) {
    const Index mid = low + (high - low) / 2;
    const Element v = probe.load(a, mid);
    if (probe.test(v == x)) {
      probe.step(low, high, mid, Action::found_at_mid);
      return static_cast<std::size_t>(mid);
    }
    if (probe.test(v > x)) {
      probe.step(low, high, mid, Action::go_left);
      high = mid - 1;
    } else {
      probe.step(low, high, mid, Action::go_right);
      low = mid + 1;
    }
  }
  return std::nullopt;
}

// Per pass, in order: reject if x lies outside [a[low], a[high]], match at
// low, match at high, then a three-way test at mid that also drops the
// already-examined endpoint on the side that is kept.
template <bool InclusiveLoop, class Probe>
std::optional<std::size_t> modified_kernel(std::span<const Element> a, Element x, Probe& probe) {
  if (a.empty()) return std::nullopt;
  Index low = 0;
  Index high = static_cast<Index>(a.size()) - 1;
  while (InclusiveLoop ? low <= high : low < high) {
    const Index mid = low + (high - low) / 2;
    const Element at_low = probe.load(a, low);
    if (probe.test(at_low > x)) {
      probe.step(low, high, mid, Action::range_reject);
      return std::nullopt;
    }
    const Element at_high = probe.load(a, high);
    if (probe.test(at_high < x)) {
      probe.step(low, high, mid, Action::range_reject);
      return std::nullopt;
    }
    if (probe.test(at_low == x)) {
      probe.step(low, high, mid, Action::found_at_low);
      return static_cast<std::size_t>(low);
    }
    if (probe.test(at_high == x)) {
      probe.step(low, high, mid, Action::found_at_high);
      return static_cast<std::size_t>(high);
    }
    const Element at_mid = probe.load(a, mid);
    if (probe.test(at_mid == x)) {
      probe.step(low, high, mid, Action::found_at_mid);
      return static_cast<std::size_t>(mid);
    }
    if (probe.test(at_mid > x)) {
      probe.step(low, high, mid, Action::go_left);
      high = mid - 1;
      ++low;
    } else if (probe.test(at_mid < x)) {
      probe.step(low, high, mid, Action::go_right);
      low = mid + 1;
      --high;
    }
  }
  return std::nullopt;
}

template <class Probe>
std::optional<std::size_t> dispatch(Algorithm algo, std::span<const Element> a, Element x, Probe& probe) {
  switch (algo) {
    case Algorithm::linear: return linear_kernel(a, x, probe);
    case Algorithm::binary: return binary_kernel(a, x, probe);
    case Algorithm::modified: return modified_kernel<true>(a, x, probe);
    case Algorithm::modified_paper: return modified_kernel<false>(a, x, probe);
  }
  throw usage_error("unknown algorithm");
}

template <class Kernel>
SearchOutcome run_counted(Kernel kernel) {
  CountingProbe probe;
  auto index = kernel(probe);
  return {index, probe.metrics()};
}

}  // namespace detail

/// Left-to-right scan; returns the first matching index. Does not require
/// sorted input.
inline SearchOutcome linear_search(std::span<const Element> a, Element x) {
  return detail::run_counted([&](auto& p) { return detail::linear_kernel(a, x, p); });
}

/// Classic bisection with a three-way test at mid.
inline SearchOutcome binary_search(std::span<const Element> a, Element x) {
  return detail::run_counted([&](auto& p) { return detail::binary_kernel(a, x, p); });
}

/// Endpoint-checking bisection, looping while low <= high.
inline SearchOutcome modified_search(std::span<const Element> a, Element x) {
  return detail::run_counted([&](auto& p) { return detail::modified_kernel<true>(a, x, p); });
}

/// Endpoint-checking bisection exactly as originally published, including
/// its `low < high` loop condition. Returns NotFound for an empty array.
inline SearchOutcome modified_search_paper(std::span<const Element> a, Element x) {
  return detail::run_counted([&](auto& p) { return detail::modified_kernel<false>(a, x, p); });
}

inline SearchOutcome search(Algorithm algo, std::span<const Element> a, Element x) {
  return detail::run_counted([&](auto& p) { return detail::dispatch(algo, a, x, p); });
}

/// Same outcome as `search`, plus one TraceStep per pass.
inline TracedOutcome search_with_trace(Algorithm algo, std::span<const Element> a, Element x) {
  TracedOutcome out;
  detail::CountingProbe probe(&out.trace);
  out.outcome.index = detail::dispatch(algo, a, x, probe);
  out.outcome.metrics = probe.metrics();
  return out;
}

inline TracedOutcome search_with_trace(std::string_view algo, std::span<const Element> a, Element x) {
  return search_with_trace(parse_algorithm(algo), a, x);
}

/// Uninstrumented search, for timing loops.
inline std::optional<std::size_t> find(Algorithm algo, std::span<const Element> a, Element x) {
  detail::NullProbe probe;
  return detail::dispatch(algo, a, x, probe);
}

}  // namespace modsearch
