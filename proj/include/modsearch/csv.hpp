#pragma once

// Bench report CSV. Columns are fixed by kCsvHeader; floating-point fields
// use shortest round-trip formatting (std::to_chars), lines end in '\n',
// rows are sorted by (scenario, algorithm, n). Timing statistics are
// nanoseconds per search: mean, lower-middle median, population stddev.

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bench.hpp"
#include "errors.hpp"

namespace modsearch {

inline constexpr std::string_view kCsvHeader =
    "scenario,algorithm,n,trials,repetitions,mean_time_ns,median_time_ns,stddev_time_ns,mean_passes,max_passes,"
    "mean_comparisons";

namespace detail {

template <class T>
std::string format_number(T v) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

template <class T>
bool parse_number(std::string_view s, T& out) {
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return !s.empty() && ec == std::errc{} && ptr == s.data() + s.size();
}

inline std::vector<std::string_view> split_commas(std::string_view line) {
  std::vector<std::string_view> out;
  for (;;) {
    const auto comma = line.find(',');
    out.push_back(line.substr(0, comma));
    if (comma == std::string_view::npos) break;
    line.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace detail

inline void write_csv(std::span<const BenchCell> cells, std::ostream& out) {
  if (cells.empty()) throw usage_error("write_csv: empty report");
  std::vector<BenchCell> sorted(cells.begin(), cells.end());
  std::stable_sort(sorted.begin(), sorted.end(), cell_order);

  using detail::format_number;
  out << kCsvHeader << '\n';
  for (const auto& c : sorted) {
    out << to_string(c.scenario) << ',' << to_string(c.algorithm) << ',' << format_number(c.n) << ','
        << format_number(c.trials) << ',' << format_number(c.repetitions) << ',' << format_number(c.mean_time_ns)
        << ',' << format_number(c.median_time_ns) << ',' << format_number(c.stddev_time_ns) << ','
        << format_number(c.mean_passes) << ',' << format_number(c.max_passes) << ','
        << format_number(c.mean_comparisons) << '\n';
  }
}

inline void write_csv_file(std::span<const BenchCell> cells, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_error("cannot open '" + path + "' for writing");
  write_csv(cells, out);
  out.flush();
  if (!out) throw io_error("write to '" + path + "' failed");
}

/// Parses a CSV produced by write_csv. Errors name the 1-based line.
inline std::vector<BenchCell> parse_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw load_error("line 1: missing CSV header");
  if (line != kCsvHeader) throw load_error("line 1: unexpected CSV header '" + line + "'");

  std::vector<BenchCell> cells;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    const auto where = "line " + std::to_string(lineno) + ": ";
    const auto f = detail::split_commas(line);
    if (f.size() != 11) {
      throw load_error(where + "expected 11 fields, got " + std::to_string(f.size()) + " in '" + line + "'");
    }
    BenchCell c;
    try {
      c.scenario = parse_scenario(f[0]);
      c.algorithm = parse_algorithm(f[1]);
    } catch (const usage_error& e) {
      throw load_error(where + e.what());
    }
    using detail::parse_number;
    const bool ok = parse_number(f[2], c.n) && parse_number(f[3], c.trials) && parse_number(f[4], c.repetitions) &&
                    parse_number(f[5], c.mean_time_ns) && parse_number(f[6], c.median_time_ns) &&
                    parse_number(f[7], c.stddev_time_ns) && parse_number(f[8], c.mean_passes) &&
                    parse_number(f[9], c.max_passes) && parse_number(f[10], c.mean_comparisons);
    if (!ok) throw load_error(where + "malformed numeric field in '" + line + "'");
    cells.push_back(c);
  }
  return cells;
}

inline std::vector<BenchCell> parse_csv_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw load_error("cannot open CSV file '" + path + "'");
  return parse_csv(in);
}

}  // namespace modsearch
