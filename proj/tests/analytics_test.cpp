#include "uniperf/analytics.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "support.hpp"
#include "uniperf/error.hpp"

namespace uniperf {
namespace {

TEST(PercentileRank, EndpointsAndMidpoint) {
  const std::vector<double> s{0.3, 1.0, 0.0, 0.5};
  EXPECT_DOUBLE_EQ(percentile_rank(s, 1.0), 100.0);
  EXPECT_DOUBLE_EQ(percentile_rank(s, 0.0), 0.0);
  const std::vector<double> three{1, 2, 3};
  EXPECT_DOUBLE_EQ(percentile_rank(three, 2), 50.0);
}

TEST(PercentileRank, TiesShareHalfCredit) {
  const std::vector<double> s{1, 2, 2, 3};
  EXPECT_DOUBLE_EQ(percentile_rank(s, 2), 100.0 * 1.5 / 3.0);
}

TEST(PercentileRank, Errors) {
  const std::vector<double> one{0.4};
  EXPECT_THROW(percentile_rank(one, 0.4), DataError);
  const std::vector<double> two{0.4, 0.5};
  EXPECT_THROW(percentile_rank(two, 0.6), DataError);
}

TEST(PercentileRank, OrderIsomorphism) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> grid(0, 20);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> s(2 + trial % 15);
    for (auto& v : s) v = grid(rng) / 20.0;  // coarse grid forces ties
    std::vector<double> t;
    for (double v : s) t.push_back(std::exp(3.0 * v) - 7.0);
    for (std::size_t i = 0; i < s.size(); ++i) {
      EXPECT_DOUBLE_EQ(percentile_rank(s, s[i]), percentile_rank(t, t[i]));
    }
  }
}

TEST(AggregateWeighted, SingleRowIsIdentity) {
  WeightedScores row;
  row.scores = {0.4, 0.5, 0.2, {}};
  row.weight = 123.0;
  const std::vector<WeightedScores> rows{row};
  const auto a = aggregate_weighted(rows);
  EXPECT_DOUBLE_EQ(a.te, 0.4);
  EXPECT_DOUBLE_EQ(a.ae, 0.5);
  EXPECT_DOUBLE_EQ(a.ce, 0.2);
  EXPECT_DOUBLE_EQ(a.total_weight, 123.0);
}

TEST(AggregateWeighted, Errors) {
  EXPECT_THROW(aggregate_weighted({}), DataError);
  WeightedScores row;
  row.weight = 0.0;
  const std::vector<WeightedScores> rows{row};
  EXPECT_THROW(aggregate_weighted(rows), DataError);
}

TEST(AggregateWeighted, NilOutputPolicy) {
  WeightedScores nil;
  nil.weight = 100.0;
  WeightedScores active;
  active.scores = {0.8, 0.5, 0.4, {}};
  active.weight = 100.0;
  const std::vector<WeightedScores> rows{nil, active};
  const auto excluded = aggregate_weighted(rows, NilOutputPolicy::kExcludeFromAverage);
  EXPECT_DOUBLE_EQ(excluded.te, 0.8);
  EXPECT_DOUBLE_EQ(excluded.total_weight, 200.0);
  const auto included = aggregate_weighted(rows, NilOutputPolicy::kInclude);
  EXPECT_DOUBLE_EQ(included.te, 0.4);
  const std::vector<WeightedScores> only_nil{nil};
  EXPECT_DOUBLE_EQ(aggregate_weighted(only_nil).ce, 0.0);
}

TEST(AggregateWeighted, ReferenceInstitutionRows) {
  const auto y = aggregate_weighted(testing::weighted(testing::cost_table("univ_y_biology.csv")));
  EXPECT_NEAR(y.total_weight, 114918.70, 0.01);
  EXPECT_NEAR(y.te, 0.239, 0.01);
  EXPECT_NEAR(y.ae, 0.635, 0.01);
  EXPECT_NEAR(y.ce, 0.160, 0.01);
  const auto x = aggregate_weighted(testing::weighted(testing::cost_table("univ_x.csv")));
  EXPECT_NEAR(x.te, 0.352, 0.01);
  EXPECT_NEAR(x.ae, 0.684, 0.01);
  EXPECT_NEAR(x.ce, 0.228, 0.01);
}

TEST(AggregateWeighted, WithinConstituentRangeAndScaleInvariant) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_real_distribution<double> w(1.0, 1000.0);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<WeightedScores> rows(1 + trial % 10);
    for (auto& r : rows) {
      r.scores.te = u(rng);
      r.scores.ae = u(rng);
      r.scores.ce = r.scores.te * r.scores.ae;
      r.weight = w(rng);
    }
    const auto a = aggregate_weighted(rows);
    double lo = 1, hi = 0;
    for (const auto& r : rows) {
      lo = std::min(lo, r.scores.te);
      hi = std::max(hi, r.scores.te);
    }
    EXPECT_GE(a.te, lo - 1e-12);
    EXPECT_LE(a.te, hi + 1e-12);
    for (auto& r : rows) r.weight *= 17.5;
    const auto b = aggregate_weighted(rows);
    EXPECT_NEAR(a.te, b.te, 1e-12);
    EXPECT_NEAR(a.ae, b.ae, 1e-12);
    EXPECT_NEAR(a.ce, b.ce, 1e-12);
  }
}

TEST(Histogram, PrintedCostEfficiencyColumn) {
  std::vector<double> ce, ae;
  for (const auto& p : testing::chim08_printed()) {
    ce.push_back(p.ce);
    ae.push_back(p.ae);
  }
  const auto h = histogram(ce);
  EXPECT_EQ(h.modal_bin(), 1u);
  EXPECT_EQ(h.counts[1], 11u);
  EXPECT_NEAR(h.median, 0.383, 1e-9);
  EXPECT_NEAR(histogram(ae).median, 0.8785, 1e-9);
}

TEST(Histogram, EdgesAndAllOnes) {
  const std::vector<double> ones(5, 1.0);
  const auto h = histogram(ones);
  EXPECT_EQ(h.counts[4], 5u);
  EXPECT_EQ(h.counts[0] + h.counts[1] + h.counts[2] + h.counts[3], 0u);

  const std::vector<double> edges{0.0, 0.2, 0.4, 0.6, 0.8, 1.0};
  const auto e = histogram(edges);
  EXPECT_EQ(e.counts, (std::array<std::size_t, 5>{1, 1, 1, 1, 2}));
  EXPECT_THROW(histogram({}), DataError);
  const std::vector<double> bad{1.5};
  EXPECT_THROW(histogram(bad), DataError);
}

TEST(Histogram, CountsSumToInput) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int n = 1; n < 60; ++n) {
    std::vector<double> s(n);
    for (auto& v : s) v = u(rng);
    const auto h = histogram(s);
    std::size_t total = 0;
    for (auto c : h.counts) total += c;
    EXPECT_EQ(total, static_cast<std::size_t>(n));
  }
}

std::map<std::string, EfficiencyScores> printed_scores() {
  std::map<std::string, EfficiencyScores> out;
  for (const auto& p : testing::chim08_printed()) out[p.id] = {p.te, p.ae, p.ce, {}};
  return out;
}

TEST(EfficiencyMatrix, ReferenceQuadrants) {
  const auto q = efficiency_matrix(printed_scores(), 0.5);
  EXPECT_EQ(q.low_te_low_ae, 1u);
  EXPECT_EQ(q.low_te_high_ae, 14u);
  EXPECT_EQ(q.high_te_high_ae, 13u);
  EXPECT_EQ(q.high_te_low_ae, 0u);
}

TEST(EfficiencyMatrix, BoundariesAndMonotoneThreshold) {
  const auto s = printed_scores();
  EXPECT_EQ(efficiency_matrix(s, 0.0).high_te_high_ae, s.size());
  std::map<std::string, EfficiencyScores> ones{{"a", {1, 1, 1, {}}}, {"b", {1, 1, 1, {}}}};
  EXPECT_EQ(efficiency_matrix(ones).high_te_high_ae, 2u);
  std::size_t previous = s.size();
  for (int i = 0; i <= 20; ++i) {
    const auto q = efficiency_matrix(s, i / 20.0);
    EXPECT_EQ(q.total(), s.size());
    EXPECT_LE(q.high_te_high_ae, previous);
    previous = q.high_te_high_ae;
  }
}

TEST(ProductivityRatio, ReferenceRatios) {
  EXPECT_NEAR(productivity_ratio(24.970, DmuInput::make("a", "X", 5, 10, 15)), 0.832, 0.001);
  EXPECT_NEAR(productivity_ratio(151.659, DmuInput::make("b", "X", 47, 65, 53)), 0.919, 0.001);
  EXPECT_DOUBLE_EQ(productivity_ratio(0.0, DmuInput::make("c", "X", 1, 1, 1)), 0.0);
}

TEST(EligibilityFilter, Boundaries) {
  auto d = eligibility_filter(28, 0.8);
  EXPECT_TRUE(d.include);
  d = eligibility_filter(23, 0.9);
  EXPECT_FALSE(d.include);
  EXPECT_EQ(d.reason, EligibilityReason::kTooFewUniversities);
  d = eligibility_filter(30, 0.49);
  EXPECT_FALSE(d.include);
  EXPECT_EQ(d.reason, EligibilityReason::kLowPublishingFraction);
  EXPECT_TRUE(eligibility_filter(24, 0.5).include);
  EXPECT_THROW(eligibility_filter(30, 1.2), DataError);
}

TEST(RankDivergence, Cases) {
  const std::vector<RankedValue> a{{"x", 3}, {"y", 2}, {"z", 1}};
  for (const auto& d : rank_divergence(a, a)) EXPECT_EQ(d.delta, 0);

  const std::vector<RankedValue> swapped{{"x", 2}, {"y", 3}, {"z", 1}};
  const auto d = rank_divergence(a, swapped);
  EXPECT_EQ(d[0].delta, 1);
  EXPECT_EQ(d[1].delta, -1);
  EXPECT_EQ(d[2].delta, 0);

  const std::vector<RankedValue> other{{"x", 3}, {"y", 2}, {"w", 1}};
  EXPECT_THROW(rank_divergence(a, other), DataError);
}

TEST(RankDivergence, PiemonteShiftsFromSecondToFourth) {
  const auto ds = testing::chim08();
  std::vector<RankedValue> by_ce, by_ratio;
  for (const auto& p : testing::chim08_printed()) by_ce.push_back({p.id, p.ce});
  for (const auto& rec : ds.dmus) {
    by_ratio.push_back({rec.input.dmu_id, productivity_ratio(rec.ss, rec.input)});
  }
  for (const auto& d : rank_divergence(by_ce, by_ratio)) {
    if (d.dmu_id != "Piemonte Orient. Avogadro") continue;
    EXPECT_EQ(d.ce_rank, 2u);
    EXPECT_EQ(d.ratio_rank, 4u);
    EXPECT_EQ(d.delta, 2);
  }
}

}  // namespace
}  // namespace uniperf
