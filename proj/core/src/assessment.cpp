#include "uniperf/assessment.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "uniperf/bibliometrics.hpp"
#include "uniperf/error.hpp"

namespace uniperf {

const SdsReport* AssessmentReport::find_sds(const std::string& sds_id) const {
  for (const auto& s : sds) {
    if (s.sds_id == sds_id) return &s;
  }
  return nullptr;
}

const InstitutionReport* AssessmentReport::find_institution(
    const std::string& dmu_id) const {
  for (const auto& i : institutions) {
    if (i.dmu_id == dmu_id) return &i;
  }
  return nullptr;
}

std::vector<SdsDataset> build_sds_datasets(const AssessmentDataset& data) {
  using Key = std::pair<std::string, std::string>;
  std::map<Key, std::vector<PublicationRecord>> pubs;
  for (const auto& p : data.publications) {
    pubs[{p.sds_id, p.dmu_id}].push_back(p.record);
  }

  std::map<std::string, SdsDataset> by_sds;
  for (const auto& row : data.staff) {
    auto& ds = by_sds[row.input.sds_id];
    ds.sds_id = row.input.sds_id;
    double ss = 0.0;
    if (data.mode == SsMode::kComputed) {
      if (auto it = pubs.find({row.input.sds_id, row.input.dmu_id});
          it != pubs.end()) {
        ss = scientific_strength(it->second, data.medians);
      }
    } else {
      if (!row.ss) {
        throw DataError("missing ss for " + row.input.dmu_id + " in " +
                        row.input.sds_id);
      }
      ss = *row.ss;
    }
    ds.dmus.push_back({row.input, ss});
  }

  std::vector<SdsDataset> out;
  for (auto& [id, ds] : by_sds) {
    require_valid(ds);
    out.push_back(std::move(ds));
  }
  return out;
}

double staff_share_with_output(const SdsDataset& ds) {
  double total = 0.0;
  double active = 0.0;
  for (const auto& rec : ds.dmus) {
    total += rec.input.total_years();
    if (rec.ss > 0.0) active += rec.input.total_years();
  }
  return total > 0.0 ? active / total : 0.0;
}

namespace {

void attach_percentiles(SdsReport& report) {
  if (report.rows.size() < 2) return;
  std::vector<double> te, ae, ce;
  for (const auto& r : report.rows) {
    te.push_back(r.scores.te);
    ae.push_back(r.scores.ae);
    ce.push_back(r.scores.ce);
  }
  for (auto& r : report.rows) {
    r.te_pct = percentile_rank(te, r.scores.te);
    r.ae_pct = percentile_rank(ae, r.scores.ae);
    r.ce_pct = percentile_rank(ce, r.scores.ce);
  }
}

void attach_distributions(SdsReport& report, double threshold) {
  std::vector<double> te, ae, ce;
  std::map<std::string, EfficiencyScores> by_id;
  std::vector<RankedValue> by_ce, by_ratio;
  for (const auto& r : report.rows) {
    te.push_back(r.scores.te);
    ae.push_back(r.scores.ae);
    ce.push_back(r.scores.ce);
    by_id[r.input.dmu_id] = r.scores;
    by_ce.push_back({r.input.dmu_id, r.scores.ce});
    by_ratio.push_back({r.input.dmu_id, r.ss_per_staff_year});
  }
  report.te_hist = histogram(te);
  report.ae_hist = histogram(ae);
  report.ce_hist = histogram(ce);
  report.quadrants = efficiency_matrix(by_id, threshold);
  const auto deltas = rank_divergence(by_ce, by_ratio);
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    report.rows[i].rank_delta = deltas[i].delta;
  }
}

SdsReport assess_sds(const SdsDataset& ds, const AssessmentConfig& config) {
  SdsReport report;
  report.sds_id = ds.sds_id;
  report.universities = ds.dmus.size();
  auto frac = config.publishing_fraction.find(ds.sds_id);
  report.publishing_fraction = frac != config.publishing_fraction.end()
                                   ? frac->second
                                   : staff_share_with_output(ds);
  report.eligibility = config.apply_filter
                           ? eligibility_filter(report.universities,
                                                report.publishing_fraction,
                                                config.eligibility)
                           : EligibilityDecision{true, EligibilityReason::kEligible};
  if (!report.eligibility.include) return report;

  EvaluateOptions options;
  options.workers = config.workers;
  const auto scores = evaluate_sds(ds, config.costs, options);
  for (const auto& rec : ds.dmus) {
    DmuReportRow row;
    row.input = rec.input;
    row.ss = rec.ss;
    row.cost = staff_cost(rec.input, config.costs);
    row.scores = scores.at(rec.input.dmu_id);
    row.ss_per_staff_year = productivity_ratio(rec.ss, rec.input);
    report.rows.push_back(std::move(row));
  }
  attach_percentiles(report);
  attach_distributions(report, config.quadrant_threshold);
  return report;
}

// National percentile of each institution's aggregate among all
// institutions holding an aggregate for the same group.
void rank_groups(std::vector<InstitutionGroup*>& groups) {
  if (groups.size() < 2) return;
  std::vector<double> te, ae, ce;
  for (const auto* g : groups) {
    te.push_back(g->aggregate.te);
    ae.push_back(g->aggregate.ae);
    ce.push_back(g->aggregate.ce);
  }
  for (auto* g : groups) {
    g->aggregate.te_pct = percentile_rank(te, g->aggregate.te);
    g->aggregate.ae_pct = percentile_rank(ae, g->aggregate.ae);
    g->aggregate.ce_pct = percentile_rank(ce, g->aggregate.ce);
  }
}

std::vector<InstitutionReport> build_institutions(
    const std::vector<SdsReport>& sds, NilOutputPolicy nil_policy) {
  struct Pending {
    std::map<std::string, std::vector<WeightedScores>> rows_by_uda;
    std::map<std::string, std::vector<std::string>> sds_by_uda;
    std::vector<WeightedScores> all_rows;
    std::vector<std::string> all_sds;
  };
  std::map<std::string, Pending> pending;
  for (const auto& s : sds) {
    for (const auto& r : s.rows) {
      auto& p = pending[r.input.dmu_id];
      WeightedScores w{r.scores, r.cost};
      p.rows_by_uda[s.uda].push_back(w);
      p.sds_by_uda[s.uda].push_back(s.sds_id);
      p.all_rows.push_back(w);
      p.all_sds.push_back(s.sds_id);
    }
  }

  std::vector<InstitutionReport> out;
  for (auto& [dmu, p] : pending) {
    InstitutionReport inst;
    inst.dmu_id = dmu;
    for (const auto& [uda, rows] : p.rows_by_uda) {
      inst.by_uda.push_back(
          {uda, p.sds_by_uda[uda], aggregate_weighted(rows, nil_policy)});
    }
    inst.overall = {"", p.all_sds, aggregate_weighted(p.all_rows, nil_policy)};
    out.push_back(std::move(inst));
  }

  std::map<std::string, std::vector<InstitutionGroup*>> peers;
  std::vector<InstitutionGroup*> overall;
  for (auto& inst : out) {
    for (auto& g : inst.by_uda) peers[g.uda].push_back(&g);
    overall.push_back(&inst.overall);
  }
  for (auto& [uda, groups] : peers) rank_groups(groups);
  rank_groups(overall);
  return out;
}

}  // namespace

AssessmentReport run_assessment(const AssessmentDataset& data,
                                const AssessmentConfig& config) {
  config.validate();
  if (data.staff.empty()) throw DataError("empty dataset: nothing to assess");

  std::map<std::string, std::string> uda_of;
  for (const auto& s : data.staff) uda_of.emplace(s.input.sds_id, s.uda);

  AssessmentReport report;
  report.config = config;
  report.mode = data.mode;
  for (const auto& ds : build_sds_datasets(data)) {
    auto sds = assess_sds(ds, config);
    sds.uda = uda_of.at(ds.sds_id);
    report.sds.push_back(std::move(sds));
  }
  report.institutions = build_institutions(report.sds, config.nil_output);
  return report;
}

}  // namespace uniperf
