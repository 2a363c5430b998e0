#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "uniperf/domain.hpp"

namespace uniperf {

// Percentile rank on a 0..100 scale, 100 best:
//   100 · (#strictly worse + ½ · #tied others) / (|scores| − 1).
// `target` must occur in `scores`; fewer than two scores is a DataError.
double percentile_rank(std::span<const double> scores, double target);

struct PercentileScore {
  double score = 0.0;
  double r_pct = 0.0;
};

struct WeightedScores {
  EfficiencyScores scores;
  double weight = 0.0;  // k€
};

enum class NilOutputPolicy {
  // Rows scored (0, 0, 0) for lack of output add to the total weight but
  // not to the averages.
  kExcludeFromAverage,
  kInclude,
};

struct AggregateScores {
  double te = 0.0;
  double ae = 0.0;
  double ce = 0.0;
  double total_weight = 0.0;
  std::optional<double> te_pct;
  std::optional<double> ae_pct;
  std::optional<double> ce_pct;
};

// Σ score·weight / Σ weight for each of TE, AE and CE.
AggregateScores aggregate_weighted(
    std::span<const WeightedScores> rows,
    NilOutputPolicy nil_policy = NilOutputPolicy::kExcludeFromAverage);

inline constexpr std::size_t kHistogramBins = 5;

struct Histogram {
  // [0,.2) [.2,.4) [.4,.6) [.6,.8) [.8,1]
  std::array<std::size_t, kHistogramBins> counts{};
  double median = 0.0;

  std::size_t modal_bin() const;
  static double lower_edge(std::size_t bin) { return 0.2 * bin; }
  static double upper_edge(std::size_t bin) { return 0.2 * (bin + 1); }
};

Histogram histogram(std::span<const double> scores);

// Midpoint of the two central order statistics for even counts.
double median(std::vector<double> values);

struct QuadrantSummary {
  std::size_t low_te_low_ae = 0;
  std::size_t low_te_high_ae = 0;
  std::size_t high_te_high_ae = 0;
  std::size_t high_te_low_ae = 0;

  std::size_t total() const {
    return low_te_low_ae + low_te_high_ae + high_te_high_ae + high_te_low_ae;
  }
};

// A score counts as high when it is >= threshold.
QuadrantSummary efficiency_matrix(
    const std::map<std::string, EfficiencyScores>& scores,
    double threshold = 0.5);

// SS per staff-year.
double productivity_ratio(double ss, const DmuInput& dmu);

enum class EligibilityReason {
  kEligible,
  kTooFewUniversities,       // robustness of the DEA application
  kLowPublishingFraction,    // significance of publications as output proxy
};

const char* to_string(EligibilityReason reason);

struct EligibilityThresholds {
  std::size_t min_universities = 24;
  double min_publishing_fraction = 0.5;
};

struct EligibilityDecision {
  bool include = false;
  EligibilityReason reason = EligibilityReason::kEligible;
};

EligibilityDecision eligibility_filter(std::size_t universities_active,
                                       double fraction_publishing,
                                       const EligibilityThresholds& t = {});

struct RankedValue {
  std::string dmu_id;
  double value = 0.0;
};

struct RankDelta {
  std::string dmu_id;
  std::size_t ce_rank = 0;
  std::size_t ratio_rank = 0;
  long delta = 0;  // ratio_rank − ce_rank
};

// Ranks are 1-based, best (largest) first; ties share the better rank.
// Output follows the order of `by_ce`.
std::vector<RankDelta> rank_divergence(std::span<const RankedValue> by_ce,
                                       std::span<const RankedValue> by_ratio);

}  // namespace uniperf
