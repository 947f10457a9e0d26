// modsearch: single searches with pass traces, benchmark grids, differential
// fuzzing and SVG report rendering.
//
// Exit codes: 0 success / found, 1 not found (search), 2 usage or input
// error, 3 divergences found (fuzz).

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "modsearch/modsearch.hpp"

namespace {

namespace ms = modsearch;

constexpr int kExitFound = 0;
constexpr int kExitNotFound = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDivergence = 3;

struct DataArgs {
  std::string data_file;
  std::optional<std::string> inline_list;

  void add(CLI::App& cmd) {
    auto* data = cmd.add_option("--data", data_file, "dataset file: one integer per line, non-decreasing");
    auto* inl = cmd.add_option("--inline", inline_list, "comma-separated non-decreasing integers");
    data->excludes(inl);
  }

  bool given() const { return !data_file.empty() || inline_list.has_value(); }

  ms::SortedArray load() const {
    if (inline_list) return ms::parse_inline(*inline_list);
    if (data_file.empty()) throw ms::usage_error("one of --data or --inline is required");
    return ms::load_dataset_file(data_file);
  }
};

struct SearchArgs {
  std::string algo = "modified";
  DataArgs data;
  ms::Element x = 0;
  bool trace = false;
};

int cmd_search(const SearchArgs& args) {
  const ms::Algorithm algo = ms::parse_algorithm(args.algo);
  const ms::SortedArray a = args.data.load();
  const ms::TracedOutcome r = ms::search_with_trace(algo, a, args.x);
  if (args.trace) {
    for (const auto& s : r.trace) {
      std::cout << "Pass " << s.pass_index << ": low=" << s.low << " high=" << s.high << " mid=" << s.mid
                << " action=" << ms::to_string(s.action) << '\n';
    }
  }
  const auto& o = r.outcome;
  std::cout << "index=" << (o.index ? static_cast<long long>(*o.index) : -1LL) << " passes=" << o.metrics.passes
            << " comparisons=" << o.metrics.comparisons << '\n';
  return o.found() ? kExitFound : kExitNotFound;
}

struct BenchArgs {
  std::vector<std::size_t> sizes;
  std::vector<std::string> scenarios;
  std::vector<std::string> algos;
  std::size_t repetitions = 1000;
  std::size_t trials = 30;
  std::size_t warmup = 100;
  std::uint64_t seed = 0;
  std::int64_t min_gap = 1;
  std::int64_t max_gap = 10;
  DataArgs data;
  std::optional<ms::Element> x;
  std::string out = "bench.csv";
};

int cmd_bench(const BenchArgs& args) {
  ms::BenchConfig config;
  if (!args.sizes.empty()) config.sizes = args.sizes;
  if (!args.scenarios.empty()) {
    config.scenarios.clear();
    for (const auto& s : args.scenarios) config.scenarios.push_back(ms::parse_scenario(s));
  }
  if (!args.algos.empty()) {
    config.algorithms.clear();
    for (const auto& a : args.algos) config.algorithms.push_back(ms::parse_algorithm(a));
  }
  config.repetitions = args.repetitions;
  config.trials = args.trials;
  config.warmup = args.warmup;
  config.seed = args.seed;
  config.min_gap = args.min_gap;
  config.max_gap = args.max_gap;

  if (args.data.given() != args.x.has_value()) {
    throw ms::usage_error("--x and --data/--inline must be given together");
  }
  if (args.x) {
    ms::FixedInput fixed{args.data.load(), *args.x, std::nullopt};
    if (!args.scenarios.empty()) {
      if (config.scenarios.size() != 1) throw ms::usage_error("a fixed input takes at most one --scenarios label");
      fixed.scenario = config.scenarios.front();
    }
    config.fixed = std::move(fixed);
  }

  const ms::BenchReport report = ms::run(config);
  ms::write_csv_file(report.cells, args.out);
  std::cout << "wrote " << args.out << " (" << report.cells.size() << " cells)\n";
  return 0;
}

struct FuzzArgs {
  std::string algo;
  std::size_t cases = 100'000;
  std::size_t max_n = 512;
  std::uint64_t seed = 0;
  bool no_duplicates = false;
  std::size_t limit = 0;
};

int cmd_fuzz(const FuzzArgs& args) {
  ms::FuzzConfig config;
  config.cases = args.cases;
  config.max_n = args.max_n;
  config.seed = args.seed;
  config.duplicates_allowed = !args.no_duplicates;
  const ms::Algorithm algo = ms::parse_algorithm(args.algo);

  const auto found = ms::fuzz(config, algo);
  std::size_t printed = 0;
  for (const auto& d : found) {
    if (args.limit != 0 && printed == args.limit) {
      std::cout << "... " << found.size() - printed << " more not shown\n";
      break;
    }
    std::cout << ms::format_divergence(d, ms::shrink(d)) << '\n';
    ++printed;
  }
  std::cout << "algo=" << ms::to_string(algo) << " cases=" << config.cases << " divergences=" << found.size()
            << '\n';
  return found.empty() ? 0 : kExitDivergence;
}

struct ReportArgs {
  std::string in;
  std::string out;
  std::string out_dir = ".";
  std::string scenario;
  std::string metric = "time";
};

int cmd_report(const ReportArgs& args) {
  const ms::Metric metric = ms::parse_metric(args.metric);
  auto cells = ms::parse_csv_file(args.in);
  if (cells.empty()) throw ms::load_error(args.in + ": no data rows to plot");

  if (!args.scenario.empty()) {
    const ms::Scenario keep = ms::parse_scenario(args.scenario);
    std::erase_if(cells, [keep](const ms::BenchCell& c) { return c.scenario != keep; });
    if (cells.empty()) throw ms::load_error(args.in + ": no rows for scenario " + args.scenario);
  }

  std::vector<ms::Scenario> present;
  for (const ms::Scenario s : ms::kAllScenarios) {
    if (std::any_of(cells.begin(), cells.end(), [s](const ms::BenchCell& c) { return c.scenario == s; })) {
      present.push_back(s);
    }
  }
  if (!args.out.empty() && present.size() != 1) {
    throw ms::usage_error("--out writes one chart; the CSV holds " + std::to_string(present.size()) +
                          " scenarios (use --scenario or --out-dir)");
  }

  for (const ms::Scenario s : present) {
    std::vector<ms::BenchCell> subset;
    std::copy_if(cells.begin(), cells.end(), std::back_inserter(subset),
                 [s](const ms::BenchCell& c) { return c.scenario == s; });
    const std::string path =
        args.out.empty() ? (std::filesystem::path(args.out_dir) / ms::svg_file_name(s)).string() : args.out;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ms::io_error("cannot open '" + path + "' for writing");
    out << ms::render_svg(subset, metric);
    if (!out.flush()) throw ms::io_error("write to '" + path + "' failed");
    std::cout << "wrote " << path << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Instrumented linear, binary and modified binary search laboratory"};
  app.require_subcommand(1);

  SearchArgs search;
  auto* search_cmd = app.add_subcommand("search", "run one search and print its result and pass count");
  search_cmd->add_option("--algo", search.algo, "linear | binary | modified | modified-paper")->capture_default_str();
  search.data.add(*search_cmd);
  search_cmd->add_option("--x", search.x, "element to search for")->required();
  search_cmd->add_flag("--trace", search.trace, "print one line per pass");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "time algorithms over a (scenario, size) grid and write CSV");
  bench_cmd->add_option("--sizes", bench.sizes, "dataset sizes")->delimiter(',');
  bench_cmd->add_option("--scenarios", bench.scenarios, "first-half,first-or-last,absent-out-of-range,absent-in-range")
      ->delimiter(',');
  bench_cmd->add_option("--algos", bench.algos, "algorithms (default binary,modified)")->delimiter(',');
  bench_cmd->add_option("--repetitions", bench.repetitions, "timed searches per trial")->capture_default_str();
  bench_cmd->add_option("--trials", bench.trials, "(dataset, query) draws per cell")->capture_default_str();
  bench_cmd->add_option("--warmup", bench.warmup, "untimed searches before each timing")->capture_default_str();
  bench_cmd->add_option("--seed", bench.seed)->capture_default_str();
  bench_cmd->add_option("--min-gap", bench.min_gap)->capture_default_str();
  bench_cmd->add_option("--max-gap", bench.max_gap)->capture_default_str();
  bench.data.add(*bench_cmd);
  bench_cmd->add_option("--x", bench.x, "fixed query (with --data or --inline)");
  bench_cmd->add_option("--out", bench.out, "output CSV path")->capture_default_str();

  FuzzArgs fuzz;
  auto* fuzz_cmd = app.add_subcommand("fuzz", "differential test one algorithm against the linear oracle");
  fuzz_cmd->add_option("--algo", fuzz.algo, "linear | binary | modified | modified-paper")->required();
  fuzz_cmd->add_option("--cases", fuzz.cases)->capture_default_str();
  fuzz_cmd->add_option("--max-n", fuzz.max_n)->capture_default_str();
  fuzz_cmd->add_option("--seed", fuzz.seed)->capture_default_str();
  fuzz_cmd->add_flag("--no-duplicates", fuzz.no_duplicates, "generate strictly increasing arrays");
  fuzz_cmd->add_option("--limit", fuzz.limit, "print at most this many divergences (0 = all)")
      ->capture_default_str();

  ReportArgs report;
  auto* report_cmd = app.add_subcommand("report", "render bench CSV as SVG line charts");
  report_cmd->add_option("--in", report.in, "bench CSV")->required();
  report_cmd->add_option("--out", report.out, "single SVG output (one scenario)");
  report_cmd->add_option("--out-dir", report.out_dir, "directory for fig_<scenario>.svg files")
      ->capture_default_str();
  report_cmd->add_option("--scenario", report.scenario, "only plot this scenario");
  report_cmd->add_option("--metric", report.metric, "time | passes")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*search_cmd) return cmd_search(search);
    if (*bench_cmd) return cmd_bench(bench);
    if (*fuzz_cmd) return cmd_fuzz(fuzz);
    if (*report_cmd) return cmd_report(report);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
