#pragma once

// Line charts of bench cells: x = n on a log10 axis, y = mean time per
// search (ns) or mean passes, one polyline per algorithm.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "bench.hpp"
#include "errors.hpp"

namespace modsearch {

enum class Metric { time, passes };

inline Metric parse_metric(std::string_view name) {
  if (name == "time") return Metric::time;
  if (name == "passes") return Metric::passes;
  throw usage_error("unknown metric '" + std::string(name) + "' (expected time or passes)");
}

inline std::string svg_file_name(Scenario s) { return "fig_" + std::string(to_string(s)) + ".svg"; }

namespace detail {

inline std::string xml_escape(std::string_view s) {
  std::string out;
  for (const char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

inline std::string fmt(double v, const char* spec = "%.2f") {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

inline std::string_view scenario_title(Scenario s) {
  switch (s) {
    case Scenario::first_half: return "Searching an element in the first half";
    case Scenario::first_or_last: return "Searching the first/last element";
    case Scenario::absent_out_of_range: return "Searching an absent, out-of-range element";
    case Scenario::absent_in_range: return "Searching an absent, in-range element";
  }
  return "";
}

}  // namespace detail

/// Renders the cells of one scenario. Throws usage_error if `cells` is
/// empty or mixes scenarios.
inline std::string render_svg(std::span<const BenchCell> cells, Metric metric) {
  if (cells.empty()) throw usage_error("nothing to plot");
  const Scenario scenario = cells.front().scenario;
  for (const auto& c : cells) {
    if (c.scenario != scenario) throw usage_error("render_svg: cells span more than one scenario");
  }

  constexpr double width = 800, height = 500;
  constexpr double left = 90, right = 170, top = 50, bottom = 60;
  const double plot_w = width - left - right;
  const double plot_h = height - top - bottom;

  auto value_of = [metric](const BenchCell& c) { return metric == Metric::time ? c.mean_time_ns : c.mean_passes; };

  std::map<Algorithm, std::vector<const BenchCell*>> series;
  std::set<std::size_t> xs;
  double y_max = 0;
  for (const auto& c : cells) {
    series[c.algorithm].push_back(&c);
    xs.insert(std::max<std::size_t>(c.n, 1));
    y_max = std::max(y_max, value_of(c));
  }
  y_max = y_max > 0 ? y_max * 1.1 : 1.0;

  double x_lo = std::log10(static_cast<double>(*xs.begin()));
  double x_hi = std::log10(static_cast<double>(*xs.rbegin()));
  if (x_hi - x_lo < 1e-9) {
    x_lo -= 0.5;
    x_hi += 0.5;
  }
  auto px = [&](std::size_t n) {
    const double lx = std::log10(static_cast<double>(std::max<std::size_t>(n, 1)));
    return left + (lx - x_lo) / (x_hi - x_lo) * plot_w;
  };
  auto py = [&](double v) { return top + plot_h - v / y_max * plot_h; };

  static constexpr std::string_view palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd"};
  using detail::fmt;
  using detail::xml_escape;

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n"
      << "<text x=\"" << width / 2 << "\" y=\"28\" text-anchor=\"middle\" font-family=\"sans-serif\" "
      << "font-size=\"16\">" << xml_escape(detail::scenario_title(scenario)) << " ("
      << xml_escape(to_string(scenario)) << ")</text>\n";

  // Axes.
  svg << "<g stroke=\"black\" stroke-width=\"1\">\n"
      << "<line x1=\"" << left << "\" y1=\"" << top + plot_h << "\" x2=\"" << left + plot_w << "\" y2=\""
      << top + plot_h << "\"/>\n"
      << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\"" << top + plot_h
      << "\"/>\n</g>\n";

  svg << "<g font-family=\"sans-serif\" font-size=\"11\">\n";
  for (const auto n : xs) {
    const double x = px(n);
    svg << "<line x1=\"" << fmt(x) << "\" y1=\"" << top + plot_h << "\" x2=\"" << fmt(x) << "\" y2=\""
        << top + plot_h + 5 << "\" stroke=\"black\"/>\n"
        << "<text x=\"" << fmt(x) << "\" y=\"" << top + plot_h + 18 << "\" text-anchor=\"middle\">" << n
        << "</text>\n";
  }
  constexpr int y_ticks = 5;
  for (int i = 0; i <= y_ticks; ++i) {
    const double v = y_max * i / y_ticks;
    const double y = py(v);
    svg << "<line x1=\"" << left - 5 << "\" y1=\"" << fmt(y) << "\" x2=\"" << left + plot_w << "\" y2=\""
        << fmt(y) << "\" stroke=\"#dddddd\"/>\n"
        << "<text x=\"" << left - 8 << "\" y=\"" << fmt(y + 4) << "\" text-anchor=\"end\">" << fmt(v, "%.4g")
        << "</text>\n";
  }
  svg << "<text x=\"" << left + plot_w / 2 << "\" y=\"" << height - 15
      << "\" text-anchor=\"middle\" font-size=\"13\">number of elements n (log scale)</text>\n"
      << "<text x=\"20\" y=\"" << top + plot_h / 2 << "\" text-anchor=\"middle\" font-size=\"13\" "
      << "transform=\"rotate(-90 20 " << top + plot_h / 2 << ")\">"
      << (metric == Metric::time ? "mean time per search (ns)" : "mean passes") << "</text>\n</g>\n";

  std::size_t color = 0;
  for (auto& [algo, points] : series) {
    std::sort(points.begin(), points.end(), [](const BenchCell* l, const BenchCell* r) { return l->n < r->n; });
    const auto stroke = palette[color % std::size(palette)];
    svg << "<polyline fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"2\" data-algorithm=\""
        << xml_escape(to_string(algo)) << "\" points=\"";
    for (std::size_t i = 0; i < points.size(); ++i) {
      svg << (i ? " " : "") << fmt(px(points[i]->n)) << ',' << fmt(py(value_of(*points[i])));
    }
    svg << "\"/>\n";
    for (const auto* p : points) {
      svg << "<circle cx=\"" << fmt(px(p->n)) << "\" cy=\"" << fmt(py(value_of(*p))) << "\" r=\"3\" fill=\""
          << stroke << "\"/>\n";
    }
    const double ly = top + 10 + 22 * static_cast<double>(color);
    svg << "<line x1=\"" << left + plot_w + 20 << "\" y1=\"" << ly << "\" x2=\"" << left + plot_w + 50
        << "\" y2=\"" << ly << "\" stroke=\"" << stroke << "\" stroke-width=\"2\"/>\n"
        << "<text x=\"" << left + plot_w + 56 << "\" y=\"" << ly + 4
        << "\" font-family=\"sans-serif\" font-size=\"12\">" << xml_escape(to_string(algo)) << "</text>\n";
    ++color;
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace modsearch
