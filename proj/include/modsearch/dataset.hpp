#pragma once

// Seeded dataset generation, query selection for the four benchmark
// scenarios, and loading of dataset files / inline lists.

#include <charconv>
#include <cstdint>
#include <fstream>
#include <istream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "rng.hpp"
#include "search.hpp"

namespace modsearch {

enum class Scenario { first_half, first_or_last, absent_out_of_range, absent_in_range };

inline constexpr Scenario kAllScenarios[] = {Scenario::first_half, Scenario::first_or_last,
                                             Scenario::absent_out_of_range, Scenario::absent_in_range};

inline std::string_view to_string(Scenario s) {
  switch (s) {
    case Scenario::first_half: return "first-half";
    case Scenario::first_or_last: return "first-or-last";
    case Scenario::absent_out_of_range: return "absent-out-of-range";
    case Scenario::absent_in_range: return "absent-in-range";
  }
  return "?";
}

inline Scenario parse_scenario(std::string_view name) {
  for (const Scenario s : kAllScenarios) {
    if (to_string(s) == name) return s;
  }
  throw usage_error("unknown scenario '" + std::string(name) +
                    "' (expected first-half, first-or-last, absent-out-of-range or absent-in-range)");
}

struct DatasetSpec {
  std::size_t size = 1;
  std::uint64_t seed = 0;
  std::int64_t min_gap = 1;
  std::int64_t max_gap = 10;
};

/// Strictly increasing array: elems[i] = sum of the first i+1 gaps, each gap
/// drawn uniformly from [min_gap, max_gap] with an Engine seeded by
/// `spec.seed`.
inline SortedArray generate(const DatasetSpec& spec) {
  if (spec.size == 0) throw usage_error("dataset size must be positive");
  if (spec.min_gap < 1) throw usage_error("min_gap must be >= 1");
  if (spec.max_gap < spec.min_gap) throw usage_error("max_gap must be >= min_gap");
  if (static_cast<std::uint64_t>(spec.max_gap) >
      static_cast<std::uint64_t>(std::numeric_limits<Element>::max()) / spec.size) {
    throw usage_error("dataset values would overflow int64");
  }

  Engine eng(spec.seed);
  std::vector<Element> elems(spec.size);
  Element value = 0;
  for (auto& e : elems) {
    value += uniform_between(eng, spec.min_gap, spec.max_gap);
    e = value;
  }
  return SortedArray(std::move(elems));
}

/// Chooses a query element realizing `scenario` on `a` (non-empty, strictly
/// increasing).
inline Element pick_query(Scenario scenario, std::span<const Element> a, std::uint64_t seed) {
  if (a.empty()) throw usage_error("cannot pick a query from an empty array");
  const std::size_t n = a.size();
  Engine eng(seed);
  switch (scenario) {
    case Scenario::first_half: {
      if (n == 1) return a[0];
      return a[uniform_below(eng, n / 2)];
    }
    case Scenario::first_or_last:
      return coin_flip(eng) ? a.front() : a.back();
    case Scenario::absent_out_of_range:
      if (a.back() == std::numeric_limits<Element>::max()) {
        throw scenario_infeasible("absent-out-of-range: largest element is INT64_MAX");
      }
      return a.back() + 1;
    case Scenario::absent_in_range: {
      if (n >= 2) {
        // Scan cyclically from a random gap for the first gap wider than 1.
        const std::size_t gaps = n - 1;
        const std::size_t start = uniform_below(eng, gaps);
        for (std::size_t k = 0; k < gaps; ++k) {
          const std::size_t i = (start + k) % gaps;
          if (a[i + 1] - a[i] > 1) return a[i] + 1;
        }
      }
      throw scenario_infeasible("absent-in-range: no gap wider than 1 in an array of " + std::to_string(n) +
                                " elements");
    }
  }
  throw usage_error("unknown scenario");
}

/// Labels an explicit query by the scenario it realizes on `a`. A present
/// element that is neither first nor last is labelled first-half.
inline Scenario classify_query(std::span<const Element> a, Element x) {
  const auto hit = linear_search(a, x);
  if (hit.found()) {
    if (hit.index == 0 || a.back() == x) return Scenario::first_or_last;
    return Scenario::first_half;
  }
  if (a.empty() || x < a.front() || x > a.back()) return Scenario::absent_out_of_range;
  return Scenario::absent_in_range;
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

inline std::optional<Element> parse_element(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  Element v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace detail

/// Reads a dataset: one decimal integer per line, non-decreasing. Errors
/// name the first offending line (1-based).
inline SortedArray load_dataset(std::istream& in, std::string_view source = "<input>") {
  std::vector<Element> elems;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto v = detail::parse_element(line);
    if (!v) {
      throw load_error(std::string(source) + ":" + std::to_string(lineno) + ": not a decimal integer: '" + line +
                       "'");
    }
    if (!elems.empty() && *v < elems.back()) {
      throw load_error(std::string(source) + ":" + std::to_string(lineno) + ": value " + std::to_string(*v) +
                       " is smaller than the previous value " + std::to_string(elems.back()) +
                       " (data must be non-decreasing)");
    }
    elems.push_back(*v);
  }
  return SortedArray(std::move(elems));
}

inline SortedArray load_dataset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw load_error("cannot open dataset file '" + path + "'");
  return load_dataset(in, path);
}

/// Parses "1,2,3" (whitespace allowed). An empty or blank string is the
/// empty array.
inline SortedArray parse_inline(std::string_view text) {
  std::vector<Element> elems;
  if (detail::trim(text).empty()) return SortedArray{};
  std::size_t item = 0;
  for (;;) {
    ++item;
    const auto comma = text.find(',');
    const auto token = text.substr(0, comma);
    const auto v = detail::parse_element(token);
    if (!v) throw load_error("inline item " + std::to_string(item) + ": not a decimal integer: '" +
                             std::string(detail::trim(token)) + "'");
    if (!elems.empty() && *v < elems.back()) {
      throw load_error("inline item " + std::to_string(item) + ": value " + std::to_string(*v) +
                       " is smaller than the previous value " + std::to_string(elems.back()) +
                       " (data must be non-decreasing)");
    }
    elems.push_back(*v);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return SortedArray(std::move(elems));
}

}  // namespace modsearch
