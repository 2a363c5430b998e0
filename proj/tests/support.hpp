#pragma once

#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "uniperf/analytics.hpp"
#include "uniperf/csv.hpp"
#include "uniperf/domain.hpp"
#include "uniperf/ingest.hpp"

namespace uniperf::testing {

inline std::filesystem::path data_dir() { return UNIPERF_TEST_DATA_DIR; }

struct PrintedScores {
  std::string id;
  double te, ae, ce;
};

struct PrintedCostRow {
  std::string sds_id;
  double cost;
  double te, ae, ce;
};

// The 28 Pharmaceutical-chemistry DMUs with their reference SS.
inline SdsDataset chim08() {
  InputFiles files;
  files.staff = data_dir() / "chim08_staff.csv";
  const auto data = ingest(files);
  SdsDataset ds;
  ds.sds_id = "CHIM/08";
  for (const auto& row : data.staff) ds.dmus.push_back({row.input, *row.ss});
  return ds;
}

inline std::vector<PrintedScores> chim08_printed() {
  const auto t = csv::Table::read(data_dir() / "chim08_expected.csv");
  std::vector<PrintedScores> out;
  for (const auto& r : t.rows()) {
    out.push_back({r.fields[0], csv::parse_double(t, r, 1),
                   csv::parse_double(t, r, 2), csv::parse_double(t, r, 3)});
  }
  return out;
}

// Reference per-SDS cost and score rows of an institution.
inline std::vector<PrintedCostRow> cost_table(const std::string& file) {
  const auto t = csv::Table::read(data_dir() / file);
  std::vector<PrintedCostRow> out;
  for (const auto& r : t.rows()) {
    out.push_back({r.fields[0], csv::parse_double(t, r, 1),
                   csv::parse_double(t, r, 2), csv::parse_double(t, r, 3),
                   csv::parse_double(t, r, 4)});
  }
  return out;
}

inline std::vector<WeightedScores> weighted(const std::vector<PrintedCostRow>& rows) {
  std::vector<WeightedScores> out;
  for (const auto& r : rows) {
    WeightedScores w;
    w.scores.te = r.te;
    w.scores.ae = r.ae;
    w.scores.ce = r.ce;
    w.weight = r.cost;
    out.push_back(w);
  }
  return out;
}

// Random SDS with `dmus` units and `inputs` active inputs (the rest zero for
// every unit). A few outputs are zero when `allow_nil` is set.
inline SdsDataset random_sds(std::mt19937_64& rng, int dmus, int inputs,
                             bool allow_nil = false) {
  std::uniform_real_distribution<double> x(0.5, 20.0);
  std::uniform_real_distribution<double> y(0.1, 50.0);
  std::bernoulli_distribution nil(0.15);
  SdsDataset ds;
  ds.sds_id = "RND/01";
  for (int j = 0; j < dmus; ++j) {
    DmuInput in;
    in.dmu_id = "U" + std::to_string(j);
    in.sds_id = ds.sds_id;
    in.fp_years = x(rng);
    in.ap_years = inputs >= 2 ? x(rng) : 0.0;
    in.rf_years = inputs >= 3 ? x(rng) : 0.0;
    const double ss = allow_nil && j > 0 && nil(rng) ? 0.0 : y(rng);
    ds.dmus.push_back({in, ss});
  }
  return ds;
}

}  // namespace uniperf::testing
