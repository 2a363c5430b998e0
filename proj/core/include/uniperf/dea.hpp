#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "uniperf/domain.hpp"
#include "uniperf/simplex.hpp"

namespace uniperf {

// Scores are clamped into [0, 1] when they stray by at most this much.
inline constexpr double kScoreClampBand = 1e-7;

struct TechnicalEfficiency {
  double te = 0.0;
  std::vector<double> lambda;  // aligned with ds.dmus
};

// Input-oriented envelopment LP under constant returns to scale:
//   min θ  s.t.  Σ λ_j ss_j >= ss_0,  Σ λ_j x_jk <= θ x_0k (k = FP, AP, RF),
//   λ >= 0.
// Requires ss_0 > 0.
TechnicalEfficiency technical_efficiency(std::size_t dmu0, const SdsDataset& ds,
                                         const SimplexOptions& options = {});

// Minimum cost of producing ss_0 with any input bundle the reference
// technology admits, over the DMU's actual cost. Requires ss_0 > 0.
double cost_efficiency(std::size_t dmu0, const SdsDataset& ds,
                       const CostVector& costs,
                       const SimplexOptions& options = {});

// ae = ce / te, or 0 when te is 0. Throws SolverError when ce exceeds te by
// more than the clamp band.
double allocative_efficiency(double te, double ce);

struct EvaluateOptions {
  // DMU evaluations fan out over this many threads; results do not depend
  // on it.
  unsigned workers = 1;
  SimplexOptions simplex;
};

// Scores every DMU of one SDS. Nil-output DMUs get (0, 0, 0) without
// solving, but still take part in everyone else's reference technology.
std::map<std::string, EfficiencyScores> evaluate_sds(
    const SdsDataset& ds, const CostVector& costs,
    const EvaluateOptions& options = {});

}  // namespace uniperf
