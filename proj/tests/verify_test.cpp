#include <gtest/gtest.h>

#include <vector>

#include "modsearch/verify.hpp"
#include "test_support.hpp"

namespace ms = modsearch;

TEST(Fuzz, CorrectAlgorithmsHaveNoDivergences) {
  for (const std::uint64_t seed : {1u, 2u, 3u}) {
    ms::FuzzConfig c;
    c.seed = seed;
    for (const auto algo : {ms::Algorithm::linear, ms::Algorithm::binary, ms::Algorithm::modified}) {
      EXPECT_TRUE(ms::fuzz(c, algo).empty()) << ms::to_string(algo) << " seed " << seed;
    }
  }
}

TEST(Fuzz, PublishedVariantDiverges) {
  ms::FuzzConfig c;
  c.cases = 10'000;
  const auto found = ms::fuzz(c, ms::Algorithm::modified_paper);
  ASSERT_FALSE(found.empty());
  for (std::size_t i = 1; i < found.size(); ++i) ASSERT_LT(found[i - 1].case_index, found[i].case_index);
  for (const auto& d : found) {
    // Every miss is a present element reported absent.
    ASSERT_TRUE(ms::testing::contains(d.array, d.x));
    ASSERT_FALSE(d.got.has_value());
    ASSERT_TRUE(d.expected.has_value());
  }
}

TEST(Fuzz, DivergesWithoutDuplicatesToo) {
  ms::FuzzConfig c;
  c.cases = 10'000;
  c.duplicates_allowed = false;
  EXPECT_FALSE(ms::fuzz(c, ms::Algorithm::modified_paper).empty());
}

TEST(Fuzz, CorpusIsReproducible) {
  ms::FuzzConfig c;
  c.seed = 77;
  for (std::size_t i = 0; i < 200; ++i) {
    const auto a = ms::make_case(c, i);
    const auto b = ms::make_case(c, i);
    ASSERT_EQ(a.array, b.array);
    ASSERT_EQ(a.x, b.x);
    ASSERT_TRUE(std::is_sorted(a.array.begin(), a.array.end()));
    ASSERT_LE(a.array.size(), c.max_n);
  }
}

TEST(Fuzz, QueryMix) {
  ms::FuzzConfig c;
  c.seed = 5;
  c.duplicates_allowed = false;
  std::size_t present = 0, in_range = 0, out_range = 0, nonempty = 0;
  for (std::size_t i = 0; i < 20'000; ++i) {
    const auto fc = ms::make_case(c, i);
    if (fc.array.empty()) continue;
    ++nonempty;
    if (ms::testing::contains(fc.array, fc.x)) {
      ++present;
    } else if (fc.x > fc.array.front() && fc.x < fc.array.back()) {
      ++in_range;
    } else {
      ++out_range;
    }
  }
  EXPECT_NEAR(present / double(nonempty), 0.5, 0.02);
  EXPECT_NEAR(in_range / double(nonempty), 0.25, 0.02);
  EXPECT_NEAR(out_range / double(nonempty), 0.25, 0.02);
}

TEST(Fuzz, InvalidConfig) {
  ms::FuzzConfig c;
  c.cases = 0;
  EXPECT_THROW(ms::fuzz(c, ms::Algorithm::binary), ms::usage_error);
  c.cases = 1;
  c.max_n = 0;
  EXPECT_THROW(ms::fuzz(c, ms::Algorithm::binary), ms::usage_error);
}

TEST(Shrink, PaperWitnessShrinksToItselfOrSmaller) {
  const ms::Divergence d{0, {1, 2, 3, 4}, 3, ms::Algorithm::modified_paper, std::nullopt, 2};
  const auto s = ms::shrink(d);
  EXPECT_LE(s.array.size(), 4u);
  EXPECT_TRUE(ms::check_case(s.algorithm, s.array, s.x).has_value());
  EXPECT_TRUE(ms::testing::contains(s.array, s.x));
}

TEST(Shrink, RejectsNonDivergence) {
  const ms::Divergence d{0, {1, 2, 3, 4}, 3, ms::Algorithm::modified, std::nullopt, 2};
  EXPECT_THROW(ms::shrink(d), ms::usage_error);
}

TEST(Shrink, PreservesDivergenceNeverGrowsAndIsIdempotent) {
  ms::FuzzConfig c;
  c.cases = 10'000;
  const auto found = ms::fuzz(c, ms::Algorithm::modified_paper);
  ASSERT_FALSE(found.empty());
  std::size_t checked = 0;
  for (const auto& d : found) {
    const auto s = ms::shrink(d);
    ASSERT_LE(s.array.size(), d.array.size());
    ASSERT_TRUE(ms::check_case(s.algorithm, s.array, s.x).has_value());
    ASSERT_EQ(s.algorithm, d.algorithm);
    ASSERT_EQ(s.x, d.x);
    const auto again = ms::shrink(s);
    ASSERT_EQ(again.array, s.array);
    ASSERT_LE(s.array.size(), 4u) << ms::format_array(s.array);
    if (++checked == 200) break;
  }
}

TEST(Shrink, LargeMissBecomesSmall) {
  ms::FuzzConfig c;
  c.cases = 10'000;
  for (const auto& d : ms::fuzz(c, ms::Algorithm::modified_paper)) {
    if (d.array.size() < 100) continue;
    const auto s = ms::shrink(d);
    EXPECT_LE(s.array.size(), d.array.size());
    EXPECT_LT(s.array.size(), 100u);
    return;
  }
  FAIL() << "no divergence with n >= 100 found";
}

TEST(FormatDivergence, Layout) {
  const ms::Divergence d{12, {1, 2, 3, 4}, 3, ms::Algorithm::modified_paper, std::nullopt, 2};
  EXPECT_EQ(ms::format_divergence(d, ms::shrink(d)).substr(0, 67),
            "case=12 n=4 x=3 algo=modified-paper got=NotFound expected=Found(2)\n");
  EXPECT_EQ(ms::format_result(5), "Found(5)");
  EXPECT_EQ(ms::format_array(std::vector<ms::Element>{-1, 0, 7}), "[-1,0,7]");
}

TEST(CheckInvariants, PaperFirstElement) {
  const auto r = ms::check_invariants(ms::testing::kPaperArray, 2);
  EXPECT_TRUE(r.all_passed());
  EXPECT_FALSE(r.documented_divergence.has_value());
  EXPECT_EQ(r.outcome(ms::Algorithm::modified).metrics.passes, 1u);
  bool saw_one_pass = false;
  for (const auto& c : r.checks) saw_one_pass |= c.name == "one-pass/modified";
  EXPECT_TRUE(saw_one_pass);
}

TEST(CheckInvariants, SingletonDocumentsPaperMiss) {
  const std::vector<ms::Element> a{7};
  const auto r = ms::check_invariants(a, 7);
  EXPECT_TRUE(r.all_passed());
  EXPECT_EQ(r.outcome(ms::Algorithm::modified).metrics.passes, 1u);
  EXPECT_EQ(r.outcome(ms::Algorithm::binary).metrics.passes, 1u);
  EXPECT_FALSE(r.outcome(ms::Algorithm::modified_paper).found());
  EXPECT_TRUE(r.documented_divergence.has_value());
}

TEST(CheckInvariants, EmptyArray) {
  const auto r = ms::check_invariants({}, 3);
  EXPECT_TRUE(r.all_passed());
  for (const auto& [algo, o] : r.outcomes) {
    EXPECT_FALSE(o.found()) << ms::to_string(algo);
    EXPECT_EQ(o.metrics.passes, 0u);
  }
}

TEST(CheckInvariants, RandomInputsAllPass) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 5'000; ++i) {
    const auto in = ms::testing::random_input(rng, 40);
    const auto r = ms::check_invariants(in.a, in.x);
    for (const auto& c : r.checks) ASSERT_TRUE(c.passed) << c.name << ": " << c.observed;
  }
}
