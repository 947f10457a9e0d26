#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "modsearch/svg.hpp"

namespace ms = modsearch;
namespace pt = boost::property_tree;

namespace {

std::vector<ms::BenchCell> two_algorithms(ms::Scenario s) {
  std::vector<ms::BenchCell> cells;
  for (const auto a : {ms::Algorithm::binary, ms::Algorithm::modified}) {
    for (const std::size_t n : {1000u, 10000u, 100000u}) {
      ms::BenchCell c;
      c.scenario = s;
      c.algorithm = a;
      c.n = n;
      c.mean_time_ns = a == ms::Algorithm::binary ? 20.0 + n / 1e4 : 5.0;
      c.mean_passes = a == ms::Algorithm::binary ? 10 : 1;
      cells.push_back(c);
    }
  }
  return cells;
}

std::size_t count_polylines(const pt::ptree& node) {
  std::size_t n = 0;
  for (const auto& [name, child] : node) {
    if (name == "polyline") ++n;
    n += count_polylines(child);
  }
  return n;
}

pt::ptree parse_xml(const std::string& text) {
  std::istringstream in(text);
  pt::ptree tree;
  pt::read_xml(in, tree);
  return tree;
}

}  // namespace

TEST(RenderSvg, WellFormedWithOnePolylinePerAlgorithm) {
  for (const auto metric : {ms::Metric::time, ms::Metric::passes}) {
    const auto svg = ms::render_svg(two_algorithms(ms::Scenario::first_or_last), metric);
    pt::ptree tree;
    ASSERT_NO_THROW(tree = parse_xml(svg));
    EXPECT_EQ(count_polylines(tree.get_child("svg")), 2u);
    EXPECT_NE(svg.find("data-algorithm=\"modified\""), std::string::npos);
  }
}

TEST(RenderSvg, SinglePointSeries) {
  auto cells = two_algorithms(ms::Scenario::first_half);
  cells.resize(1);
  const auto tree = parse_xml(ms::render_svg(cells, ms::Metric::time));
  EXPECT_EQ(count_polylines(tree.get_child("svg")), 1u);
}

TEST(RenderSvg, AxisLabelFollowsMetric) {
  const auto cells = two_algorithms(ms::Scenario::absent_in_range);
  EXPECT_NE(ms::render_svg(cells, ms::Metric::passes).find("mean passes"), std::string::npos);
  EXPECT_NE(ms::render_svg(cells, ms::Metric::time).find("mean time per search (ns)"), std::string::npos);
}

TEST(RenderSvg, Errors) {
  EXPECT_THROW(ms::render_svg(std::vector<ms::BenchCell>{}, ms::Metric::time), ms::usage_error);
  auto mixed = two_algorithms(ms::Scenario::first_half);
  mixed.back().scenario = ms::Scenario::first_or_last;
  EXPECT_THROW(ms::render_svg(mixed, ms::Metric::time), ms::usage_error);
  EXPECT_THROW(ms::parse_metric("latency"), ms::usage_error);
}

TEST(RenderSvg, FileNames) {
  EXPECT_EQ(ms::svg_file_name(ms::Scenario::absent_out_of_range), "fig_absent-out-of-range.svg");
}
