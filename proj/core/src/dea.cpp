#include "uniperf/dea.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <future>
#include <sstream>

#include "uniperf/error.hpp"

namespace uniperf {

namespace {

constexpr std::size_t kInputs = 3;

std::array<double, kInputs> inputs_of(const DmuInput& dmu) {
  return {dmu.fp_years, dmu.ap_years, dmu.rf_years};
}

// Per-input scale so the scaled rows stay near unit magnitude.
std::array<double, kInputs> input_scales(const SdsDataset& ds) {
  std::array<double, kInputs> scale{1.0, 1.0, 1.0};
  for (std::size_t k = 0; k < kInputs; ++k) {
    double mx = 0.0;
    for (const auto& rec : ds.dmus) mx = std::max(mx, inputs_of(rec.input)[k]);
    if (mx > 0.0) scale[k] = mx;
  }
  return scale;
}

void require_positive_output(std::size_t dmu0, const SdsDataset& ds) {
  if (dmu0 >= ds.dmus.size()) {
    throw SolverError("DMU index " + std::to_string(dmu0) + " out of range");
  }
  if (!(ds.dmus[dmu0].ss > 0.0)) {
    throw SolverError("DMU '" + ds.dmus[dmu0].input.dmu_id +
                      "' has nil output; its scores are fixed at zero");
  }
}

double clamp_score(double v, const char* what) {
  if (v < -kScoreClampBand || v > 1.0 + kScoreClampBand) {
    std::ostringstream msg;
    msg << what << " score " << v << " outside [0, 1]";
    throw SolverError(msg.str());
  }
  return std::clamp(v, 0.0, 1.0);
}

}  // namespace

TechnicalEfficiency technical_efficiency(std::size_t dmu0, const SdsDataset& ds,
                                         const SimplexOptions& options) {
  require_positive_output(dmu0, ds);
  const std::size_t n = ds.dmus.size();
  const double ss0 = ds.dmus[dmu0].ss;
  const auto x0 = inputs_of(ds.dmus[dmu0].input);
  const auto scale = input_scales(ds);

  // Variables: θ, λ_1..λ_n.
  LinearProgram lp;
  lp.objective.assign(n + 1, 0.0);
  lp.objective[0] = 1.0;

  std::vector<double> out_row(n + 1, 0.0);
  for (std::size_t j = 0; j < n; ++j) out_row[j + 1] = ds.dmus[j].ss / ss0;
  lp.add_constraint(std::move(out_row), Sense::kGreaterEqual, 1.0);

  for (std::size_t k = 0; k < kInputs; ++k) {
    const double s = x0[k] > 0.0 ? x0[k] : scale[k];
    std::vector<double> row(n + 1, 0.0);
    row[0] = -x0[k] / s;
    for (std::size_t j = 0; j < n; ++j) {
      row[j + 1] = inputs_of(ds.dmus[j].input)[k] / s;
    }
    lp.add_constraint(std::move(row), Sense::kLessEqual, 0.0);
  }

  const auto sol = solve_lp(lp, options);
  if (sol.status != LpStatus::kOptimal) {
    throw SolverError(std::string("envelopment LP ") + to_string(sol.status));
  }
  TechnicalEfficiency out;
  out.te = clamp_score(sol.objective, "technical efficiency");
  out.lambda.assign(sol.x.begin() + 1, sol.x.end());
  return out;
}

double cost_efficiency(std::size_t dmu0, const SdsDataset& ds,
                       const CostVector& costs, const SimplexOptions& options) {
  require_positive_output(dmu0, ds);
  costs.validate();
  const std::size_t n = ds.dmus.size();
  const double ss0 = ds.dmus[dmu0].ss;
  const double actual = staff_cost(ds.dmus[dmu0].input, costs);
  const std::array<double, kInputs> w{costs.full, costs.associate,
                                      costs.assistant};
  const auto scale = input_scales(ds);

  // Variables: λ_1..λ_n, then the chosen input bundle x_FP, x_AP, x_RF.
  LinearProgram lp;
  lp.objective.assign(n + kInputs, 0.0);
  for (std::size_t k = 0; k < kInputs; ++k) lp.objective[n + k] = w[k] / actual;

  for (std::size_t k = 0; k < kInputs; ++k) {
    std::vector<double> row(n + kInputs, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
      row[j] = inputs_of(ds.dmus[j].input)[k] / scale[k];
    }
    row[n + k] = -1.0 / scale[k];
    lp.add_constraint(std::move(row), Sense::kLessEqual, 0.0);
  }
  std::vector<double> out_row(n + kInputs, 0.0);
  for (std::size_t j = 0; j < n; ++j) out_row[j] = ds.dmus[j].ss / ss0;
  lp.add_constraint(std::move(out_row), Sense::kGreaterEqual, 1.0);

  const auto sol = solve_lp(lp, options);
  if (sol.status != LpStatus::kOptimal) {
    throw SolverError(std::string("cost LP ") + to_string(sol.status));
  }
  return clamp_score(sol.objective, "cost efficiency");
}

double allocative_efficiency(double te, double ce) {
  if (te < 0.0 || ce < 0.0) {
    throw SolverError("negative efficiency score");
  }
  if (ce > te + kScoreClampBand) {
    std::ostringstream msg;
    msg << "cost efficiency " << ce << " exceeds technical efficiency " << te;
    throw SolverError(msg.str());
  }
  if (te == 0.0) return 0.0;
  return std::clamp(ce / te, 0.0, 1.0);
}

std::map<std::string, EfficiencyScores> evaluate_sds(
    const SdsDataset& ds, const CostVector& costs,
    const EvaluateOptions& options) {
  require_valid(ds);
  costs.validate();
  const std::size_t n = ds.dmus.size();
  std::vector<EfficiencyScores> scores(n);

  auto score_one = [&](std::size_t i) {
    const auto& rec = ds.dmus[i];
    if (rec.ss == 0.0) return;
    try {
      auto te = technical_efficiency(i, ds, options.simplex);
      double ce = cost_efficiency(i, ds, costs, options.simplex);
      ce = std::min(ce, te.te);
      auto& s = scores[i];
      s.te = te.te;
      s.ce = ce;
      s.ae = allocative_efficiency(te.te, ce);
      for (std::size_t j = 0; j < n; ++j) {
        if (te.lambda[j] > 0.0) {
          s.reference_weights[ds.dmus[j].input.dmu_id] = te.lambda[j];
        }
      }
    } catch (const SolverError& e) {
      throw SolverError("SDS " + ds.sds_id + ", DMU '" + rec.input.dmu_id +
                        "': " + e.what());
    }
  };

  const unsigned workers = std::max(1u, std::min<unsigned>(options.workers, n));
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) score_one(i);
  } else {
    std::vector<std::future<void>> tasks;
    for (unsigned w = 0; w < workers; ++w) {
      tasks.push_back(std::async(std::launch::async, [&, w] {
        for (std::size_t i = w; i < n; i += workers) score_one(i);
      }));
    }
    for (auto& t : tasks) t.get();
  }

  std::map<std::string, EfficiencyScores> out;
  for (std::size_t i = 0; i < n; ++i) {
    out.emplace(ds.dmus[i].input.dmu_id, std::move(scores[i]));
  }
  return out;
}

}  // namespace uniperf
