#pragma once

#include <optional>
#include <string>
#include <vector>

#include "uniperf/analytics.hpp"
#include "uniperf/config.hpp"
#include "uniperf/dea.hpp"
#include "uniperf/domain.hpp"
#include "uniperf/ingest.hpp"

namespace uniperf {

struct DmuReportRow {
  DmuInput input;
  double ss = 0.0;
  double cost = 0.0;  // k€
  EfficiencyScores scores;
  // Within-SDS percentile ranks; absent for single-DMU SDSs.
  std::optional<double> te_pct;
  std::optional<double> ae_pct;
  std::optional<double> ce_pct;
  double ss_per_staff_year = 0.0;
  long rank_delta = 0;  // SS/staff-year rank minus CE rank
};

struct SdsReport {
  std::string sds_id;
  std::string uda;
  std::size_t universities = 0;
  double publishing_fraction = 0.0;
  EligibilityDecision eligibility;
  // The fields below are filled only for included SDSs.
  std::vector<DmuReportRow> rows;  // staff-file order
  Histogram te_hist;
  Histogram ae_hist;
  Histogram ce_hist;
  QuadrantSummary quadrants;
};

struct InstitutionGroup {
  std::string uda;  // empty for the whole-institution aggregate
  std::vector<std::string> sds_ids;
  AggregateScores aggregate;
};

struct InstitutionReport {
  std::string dmu_id;
  std::vector<InstitutionGroup> by_uda;  // sorted by UDA
  InstitutionGroup overall;
};

struct AssessmentReport {
  AssessmentConfig config;
  SsMode mode = SsMode::kPassthrough;
  std::vector<SdsReport> sds;                   // sorted by sds_id
  std::vector<InstitutionReport> institutions;  // sorted by dmu_id

  const SdsReport* find_sds(const std::string& sds_id) const;
  const InstitutionReport* find_institution(const std::string& dmu_id) const;
};

// Per-SDS datasets with SS resolved (computed or passed through), keyed and
// ordered by sds_id.
std::vector<SdsDataset> build_sds_datasets(const AssessmentDataset& data);

// Share of staff-years sitting in DMUs with positive SS.
double staff_share_with_output(const SdsDataset& ds);

// Full pipeline: SS, eligibility, DEA, percentiles, histograms, quadrants,
// institution aggregates with national percentiles.
AssessmentReport run_assessment(const AssessmentDataset& data,
                                const AssessmentConfig& config);

}  // namespace uniperf
