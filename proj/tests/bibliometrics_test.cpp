#include "uniperf/bibliometrics.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "uniperf/error.hpp"

namespace uniperf {
namespace {

MedianTable two_categories() {
  MedianTable t;
  t.set(2005, "A", 4.0);
  t.set(2005, "B", 6.0);
  t.set(2005, "C", 7.0);
  t.set(2006, "A", 5.0);
  return t;
}

TEST(StandardizeCitations, AveragesMediansOfAllCategories) {
  const auto t = two_categories();
  const std::vector<std::string> ab{"A", "B"};
  EXPECT_DOUBLE_EQ(standardize_citations(12, 2005, ab, t), 2.4);
  EXPECT_DOUBLE_EQ(standardize_citations(0, 2005, ab, t), 0.0);
  const std::vector<std::string> c{"C"};
  EXPECT_DOUBLE_EQ(standardize_citations(7, 2005, c, t), 1.0);
}

TEST(StandardizeCitations, MissingKeyNamesIt) {
  const auto t = two_categories();
  const std::vector<std::string> cats{"Z"};
  try {
    standardize_citations(3, 2005, cats, t);
    FAIL();
  } catch (const DataError& e) {
    EXPECT_NE(std::string(e.what()).find("Z"), std::string::npos);
  }
}

TEST(StandardizeCitations, ZeroMedianFallsBackToMean) {
  MedianTable t;
  t.set(2007, "Q", 0.0, 2.0);
  t.set(2007, "R", 0.0);
  const std::vector<std::string> q{"Q"};
  const std::vector<std::string> r{"R"};
  EXPECT_DOUBLE_EQ(standardize_citations(0, 2007, q, t), 0.0);
  EXPECT_DOUBLE_EQ(standardize_citations(3, 2007, q, t), 1.5);
  EXPECT_DOUBLE_EQ(standardize_citations(0, 2007, r, t), 0.0);
  EXPECT_THROW(standardize_citations(3, 2007, r, t), DataError);
}

TEST(StandardizeCitations, HomogeneousInCitationsAndMedians) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.5, 30.0);
  for (int i = 0; i < 100; ++i) {
    MedianTable t, doubled;
    const double m1 = u(rng), m2 = u(rng), c = u(rng);
    t.set(2004, "A", m1);
    t.set(2004, "B", m2);
    doubled.set(2004, "A", 2 * m1);
    doubled.set(2004, "B", 2 * m2);
    const std::vector<std::string> cats{"A", "B"};
    EXPECT_NEAR(standardize_citations(c, 2004, cats, t),
                standardize_citations(2 * c, 2004, cats, doubled), 1e-12);
  }
}

TEST(FractionalCount, Standard) {
  const std::vector<int> two{1, 3};
  const std::vector<int> one{1};
  const std::vector<int> none;
  EXPECT_DOUBLE_EQ(fractional_count_standard(5, two), 0.4);
  EXPECT_DOUBLE_EQ(fractional_count_standard(1, one), 1.0);
  EXPECT_DOUBLE_EQ(fractional_count_standard(4, none), 0.0);
}

TEST(FractionalCount, LifeScienceExamples) {
  const std::vector<int> ends{1, 6};
  const std::vector<int> second{2};
  const std::vector<int> sole{1};
  const std::vector<int> middle{3};
  EXPECT_NEAR(fractional_count_life_science(6, ends, true), 0.80, 1e-12);
  EXPECT_NEAR(fractional_count_life_science(6, second, false), 0.15, 1e-12);
  EXPECT_NEAR(fractional_count_life_science(1, sole, true), 1.0, 1e-12);
  EXPECT_NEAR(fractional_count_life_science(1, sole, false), 1.0, 1e-12);
  EXPECT_NEAR(fractional_count_life_science(5, middle, false), 0.10, 1e-12);
}

TEST(PositionalWeights, SmallBylinesRenormalize) {
  // Same-university: two authors split evenly.
  auto w = positional_weights(2, BylineScheme::kSameUniversity);
  EXPECT_NEAR(w[0], 0.5, 1e-12);
  EXPECT_NEAR(w[1], 0.5, 1e-12);
  // Mixed, three authors: 0.30 / 0.15 / 0.30 rescaled by 0.75.
  w = positional_weights(3, BylineScheme::kMixed);
  EXPECT_NEAR(w[0], 0.4, 1e-12);
  EXPECT_NEAR(w[1], 0.2, 1e-12);
  EXPECT_NEAR(w[2], 0.4, 1e-12);
  // Mixed, four authors: no pool, 0.90 rescaled.
  w = positional_weights(4, BylineScheme::kMixed);
  EXPECT_NEAR(w[0], 0.30 / 0.90, 1e-12);
  EXPECT_NEAR(w[1], 0.15 / 0.90, 1e-12);
}

TEST(PositionalWeights, SumToOneAndFullBylineCountsOnce) {
  for (auto scheme : {BylineScheme::kSameUniversity, BylineScheme::kMixed}) {
    for (int n = 1; n <= 50; ++n) {
      const auto w = positional_weights(n, scheme);
      ASSERT_EQ(static_cast<int>(w.size()), n);
      EXPECT_NEAR(std::accumulate(w.begin(), w.end(), 0.0), 1.0, 1e-12) << n;
      for (double x : w) EXPECT_GE(x, 0.0);
      std::vector<int> all(n);
      std::iota(all.begin(), all.end(), 1);
      EXPECT_NEAR(fractional_count_life_science(
                      n, all, scheme == BylineScheme::kSameUniversity),
                  1.0, 1e-12);
    }
  }
}

TEST(SchemeFor, InfersFromPositionsUnlessOverridden) {
  PublicationRecord p{"p", 2005, 1, {"A"}, 6, {1, 6}, true, std::nullopt};
  EXPECT_EQ(scheme_for(p), BylineScheme::kSameUniversity);
  p.dmu_author_positions = {1};
  EXPECT_EQ(scheme_for(p), BylineScheme::kMixed);
  p.first_last_same_university = true;
  EXPECT_EQ(scheme_for(p), BylineScheme::kSameUniversity);
}

TEST(ScientificStrength, EmptyAndSingle) {
  MedianTable t;
  t.set(2005, "A", 5.0);
  EXPECT_DOUBLE_EQ(scientific_strength({}, t), 0.0);
  const std::vector<PublicationRecord> one{
      {"p", 2005, 10, {"A"}, 1, {1}, false, std::nullopt}};
  EXPECT_DOUBLE_EQ(scientific_strength(one, t), 2.0);
}

TEST(ScientificStrength, ThreePublicationsMatchHandSum) {
  const auto t = two_categories();
  const std::vector<PublicationRecord> pubs{
      // 12 / mean(4, 6) = 2.4, two of five authors -> 0.96
      {"p1", 2005, 12, {"A", "B"}, 5, {2, 4}, false, std::nullopt},
      // 7 / 7 = 1, mixed byline of six, second author -> 0.15
      {"p2", 2005, 7, {"C"}, 6, {2}, true, std::nullopt},
      // 15 / 5 = 3, same-university ends of four -> 0.8
      {"p3", 2006, 15, {"A"}, 4, {1, 4}, true, std::nullopt},
  };
  const double expected = 2.4 * 0.4 + 1.0 * 0.15 + 3.0 * 0.8;
  EXPECT_NEAR(scientific_strength(pubs, t), expected, 1e-12);

  // Additive over disjoint lists.
  const std::span<const PublicationRecord> all(pubs);
  EXPECT_NEAR(scientific_strength(all.first(1), t) + scientific_strength(all.subspan(1), t),
              scientific_strength(all, t), 1e-12);
}

TEST(BuildMedianTable, MidpointForEvenCounts) {
  const std::vector<ReferenceCitation> ref{
      {2005, "A", 1}, {2005, "A", 9}, {2005, "A", 3}, {2005, "A", 4},
      {2005, "B", 2}, {2005, "B", 8}, {2005, "B", 5}};
  const auto t = build_median_table(ref);
  EXPECT_DOUBLE_EQ(t.at(2005, "A").median, 3.5);
  EXPECT_DOUBLE_EQ(*t.at(2005, "A").mean, 4.25);
  EXPECT_DOUBLE_EQ(t.at(2005, "B").median, 5.0);
}

}  // namespace
}  // namespace uniperf
