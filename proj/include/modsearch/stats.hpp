#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

#include "errors.hpp"

namespace modsearch {

struct Summary {
  double mean = 0;
  double median = 0;
  double stddev = 0;  // population
};

/// Mean, lower-middle median and population standard deviation.
inline Summary summarize(std::span<const double> samples) {
  if (samples.empty()) throw usage_error("summarize: no samples");
  const auto n = static_cast<double>(samples.size());

  double sum = 0;
  for (const double s : samples) sum += s;
  const double mean = sum / n;

  double sq = 0;
  for (const double s : samples) sq += (s - mean) * (s - mean);

  std::vector<double> sorted(samples.begin(), samples.end());
  const auto mid = sorted.begin() + static_cast<std::ptrdiff_t>((sorted.size() - 1) / 2);
  std::nth_element(sorted.begin(), mid, sorted.end());

  return {mean, *mid, std::sqrt(sq / n)};
}

}  // namespace modsearch
