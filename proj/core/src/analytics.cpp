#include "uniperf/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "uniperf/error.hpp"

namespace uniperf {

double percentile_rank(std::span<const double> scores, double target) {
  if (scores.size() < 2) {
    throw DataError("percentile rank needs at least two scores");
  }
  std::size_t worse = 0;
  std::size_t equal = 0;
  for (double s : scores) {
    if (s < target) {
      ++worse;
    } else if (s == target) {
      ++equal;
    }
  }
  if (equal == 0) throw DataError("percentile target is not among the scores");
  const double tied_others = static_cast<double>(equal - 1);
  return 100.0 * (static_cast<double>(worse) + 0.5 * tied_others) /
         static_cast<double>(scores.size() - 1);
}

AggregateScores aggregate_weighted(std::span<const WeightedScores> rows,
                                   NilOutputPolicy nil_policy) {
  if (rows.empty()) throw DataError("nothing to aggregate");
  AggregateScores agg;
  double averaged_weight = 0.0;
  for (const auto& row : rows) {
    if (!(row.weight > 0.0) || !std::isfinite(row.weight)) {
      throw DataError("aggregation weights must be positive");
    }
    agg.total_weight += row.weight;
    const auto& s = row.scores;
    const bool nil = s.te == 0.0 && s.ae == 0.0 && s.ce == 0.0;
    if (nil && nil_policy == NilOutputPolicy::kExcludeFromAverage) continue;
    averaged_weight += row.weight;
    agg.te += s.te * row.weight;
    agg.ae += s.ae * row.weight;
    agg.ce += s.ce * row.weight;
  }
  if (averaged_weight > 0.0) {
    agg.te /= averaged_weight;
    agg.ae /= averaged_weight;
    agg.ce /= averaged_weight;
  }
  return agg;
}

std::size_t Histogram::modal_bin() const {
  return static_cast<std::size_t>(
      std::max_element(counts.begin(), counts.end()) - counts.begin());
}

double median(std::vector<double> values) {
  if (values.empty()) throw DataError("median of an empty list");
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  return n % 2 == 1 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

Histogram histogram(std::span<const double> scores) {
  if (scores.empty()) throw DataError("histogram of an empty list");
  static constexpr std::array<double, kHistogramBins - 1> kEdges{0.2, 0.4, 0.6,
                                                                 0.8};
  Histogram h;
  for (double s : scores) {
    if (!(s >= 0.0 && s <= 1.0)) {
      throw DataError("histogram scores must lie in [0, 1]");
    }
    std::size_t bin = 0;
    for (double e : kEdges) {
      if (s >= e) ++bin;
    }
    ++h.counts[bin];
  }
  h.median = median({scores.begin(), scores.end()});
  return h;
}

QuadrantSummary efficiency_matrix(
    const std::map<std::string, EfficiencyScores>& scores, double threshold) {
  QuadrantSummary q;
  for (const auto& [id, s] : scores) {
    const bool high_te = s.te >= threshold;
    const bool high_ae = s.ae >= threshold;
    if (high_te) {
      ++(high_ae ? q.high_te_high_ae : q.high_te_low_ae);
    } else {
      ++(high_ae ? q.low_te_high_ae : q.low_te_low_ae);
    }
  }
  return q;
}

double productivity_ratio(double ss, const DmuInput& dmu) {
  return ss / dmu.total_years();
}

const char* to_string(EligibilityReason reason) {
  switch (reason) {
    case EligibilityReason::kEligible:
      return "eligible";
    case EligibilityReason::kTooFewUniversities:
      return "robustness: too few active universities";
    case EligibilityReason::kLowPublishingFraction:
      return "significance: too few publishing scientists";
  }
  return "unknown";
}

EligibilityDecision eligibility_filter(std::size_t universities_active,
                                       double fraction_publishing,
                                       const EligibilityThresholds& t) {
  if (!(fraction_publishing >= 0.0 && fraction_publishing <= 1.0)) {
    throw DataError("publishing fraction must lie in [0, 1]");
  }
  if (fraction_publishing < t.min_publishing_fraction) {
    return {false, EligibilityReason::kLowPublishingFraction};
  }
  if (universities_active < t.min_universities) {
    return {false, EligibilityReason::kTooFewUniversities};
  }
  return {true, EligibilityReason::kEligible};
}

namespace {

std::map<std::string, std::size_t> competition_ranks(
    std::span<const RankedValue> values) {
  std::map<std::string, std::size_t> ranks;
  for (const auto& v : values) {
    std::size_t better = 0;
    for (const auto& other : values) {
      if (other.value > v.value) ++better;
    }
    if (!ranks.emplace(v.dmu_id, better + 1).second) {
      throw DataError("duplicate DMU '" + v.dmu_id + "' in ranking");
    }
  }
  return ranks;
}

}  // namespace

std::vector<RankDelta> rank_divergence(std::span<const RankedValue> by_ce,
                                       std::span<const RankedValue> by_ratio) {
  const auto ce = competition_ranks(by_ce);
  const auto ratio = competition_ranks(by_ratio);
  if (ce.size() != ratio.size() ||
      !std::equal(ce.begin(), ce.end(), ratio.begin(),
                  [](const auto& a, const auto& b) { return a.first == b.first; })) {
    throw DataError("rank divergence needs the same DMU set in both rankings");
  }
  std::vector<RankDelta> out;
  for (const auto& v : by_ce) {
    RankDelta d;
    d.dmu_id = v.dmu_id;
    d.ce_rank = ce.at(v.dmu_id);
    d.ratio_rank = ratio.at(v.dmu_id);
    d.delta = static_cast<long>(d.ratio_rank) - static_cast<long>(d.ce_rank);
    out.push_back(std::move(d));
  }
  return out;
}

}  // namespace uniperf
