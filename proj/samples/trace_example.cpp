// Prints pass-by-pass traces of classic and modified binary search on a
// small array, for a query at the first position, one in the second half,
// and one beyond the last element.

#include <iostream>

#include "modsearch/search.hpp"

int main() {
  namespace ms = modsearch;
  const ms::SortedArray a{2, 13, 17, 29, 37, 77, 89, 145, 159, 201};

  for (const ms::Element x : {2, 77, 220}) {
    for (const auto algo : {ms::Algorithm::binary, ms::Algorithm::modified}) {
      const auto r = ms::search_with_trace(algo, a, x);
      std::cout << ms::to_string(algo) << ", x=" << x << '\n';
      for (const auto& s : r.trace) {
        std::cout << "  Pass " << s.pass_index << ": low=" << s.low << " high=" << s.high << " mid=" << s.mid
                  << " action=" << ms::to_string(s.action) << '\n';
      }
      std::cout << "  -> " << (r.outcome.found() ? "index " + std::to_string(*r.outcome.index) : "not found")
                << ", total passes " << r.outcome.metrics.passes << "\n\n";
    }
  }
}
