// uniperf: research efficiency assessment from staff and publication files.
//
//   uniperf validate --staff staff.csv [--publications pubs.csv --medians medians.csv]
//   uniperf assess --staff staff.csv --out report/ --format csv,json,svg
//   uniperf sds-report --staff staff.csv --sds CHIM/08
//   uniperf institution-report --staff staff.csv --university Univ_X
//
// Exit codes: 0 success, 1 data error, 2 solver error, 3 I/O error.

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "uniperf/assessment.hpp"
#include "uniperf/config.hpp"
#include "uniperf/emit.hpp"
#include "uniperf/error.hpp"
#include "uniperf/ingest.hpp"

namespace {

enum ExitCode { kOk = 0, kDataError = 1, kSolverError = 2, kIoError = 3 };

struct CommonOptions {
  std::string staff;
  std::string publications;
  std::string medians;
  std::string from_report;
  std::string config;
  std::string out;
  std::string format = "csv,json";
  std::optional<double> threshold_quadrant;
  bool no_filter = false;
};

void add_common(CLI::App* cmd, CommonOptions& o) {
  auto* staff = cmd->add_option("--staff", o.staff,
                                "Staff file: dmu_id,sds_id,fp_years,ap_years,rf_years[,ss]");
  auto* report = cmd->add_option("--from-report", o.from_report,
                                 "Re-assess the DMUs stored in a JSON report");
  staff->excludes(report);
  report->excludes(staff);
  cmd->add_option("--publications", o.publications, "Publications file");
  cmd->add_option("--medians", o.medians, "Median citations file");
  cmd->add_option("--config", o.config,
                  std::string("JSON config (default: $") + uniperf::kConfigEnvVar + ")");
  cmd->add_option("--out", o.out, "Output directory");
  cmd->add_option("--format", o.format, "Comma-separated: csv,json,svg")
      ->capture_default_str();
  cmd->add_option("--threshold-quadrant", o.threshold_quadrant,
                  "High/low split for the efficiency matrix");
  cmd->add_flag("--no-filter", o.no_filter, "Assess every SDS regardless of eligibility");
}

uniperf::AssessmentDataset load(const CommonOptions& o) {
  if (!o.from_report.empty()) return uniperf::ingest_report(o.from_report);
  if (o.staff.empty()) throw uniperf::DataError("--staff or --from-report is required");
  uniperf::InputFiles files;
  files.staff = o.staff;
  if (!o.publications.empty()) files.publications = o.publications;
  if (!o.medians.empty()) files.medians = o.medians;
  return uniperf::ingest(files);
}

uniperf::AssessmentConfig config_for(const CommonOptions& o) {
  auto config = uniperf::resolve_config(
      o.config.empty() ? std::nullopt
                       : std::optional<std::filesystem::path>(o.config));
  if (o.threshold_quadrant) config.quadrant_threshold = *o.threshold_quadrant;
  if (o.no_filter) config.apply_filter = false;
  config.validate();
  return config;
}

void maybe_emit(const uniperf::AssessmentReport& report, const CommonOptions& o) {
  if (o.out.empty()) return;
  const auto written = uniperf::emit(report, uniperf::parse_formats(o.format), o.out);
  for (const auto& path : written) std::cerr << "wrote " << path.string() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Research efficiency assessment (input-oriented CRS DEA)"};
  app.require_subcommand(1);

  CommonOptions validate_opts, assess_opts, sds_opts, inst_opts;
  std::string sds_id, university;

  auto* validate = app.add_subcommand("validate", "Ingest and cross-check input files");
  add_common(validate, validate_opts);
  auto* assess = app.add_subcommand("assess", "Run the full assessment pipeline");
  add_common(assess, assess_opts);
  auto* sds = app.add_subcommand("sds-report", "Score table for one SDS");
  add_common(sds, sds_opts);
  sds->add_option("--sds", sds_id, "SDS identifier")->required();
  auto* inst = app.add_subcommand("institution-report",
                                  "One university across its SDSs");
  add_common(inst, inst_opts);
  inst->add_option("--university", university, "University (dmu_id)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kDataError;
  }

  try {
    if (*validate) {
      const auto data = load(validate_opts);
      const auto datasets = uniperf::build_sds_datasets(data);
      std::cout << "ok: " << data.staff.size() << " staff rows, "
                << data.publications.size() << " publications, "
                << datasets.size() << " SDSs ("
                << (data.mode == uniperf::SsMode::kComputed ? "computed" : "passthrough")
                << " SS)\n";
      return kOk;
    }
    if (*assess) {
      const auto report = uniperf::run_assessment(load(assess_opts), config_for(assess_opts));
      for (const auto& s : report.sds) {
        std::cout << s.sds_id << ": "
                  << (s.eligibility.include ? std::to_string(s.rows.size()) + " DMUs"
                                            : std::string("excluded, ") +
                                                  uniperf::to_string(s.eligibility.reason))
                  << '\n';
      }
      maybe_emit(report, assess_opts);
      return kOk;
    }
    if (*sds) {
      const auto report = uniperf::run_assessment(load(sds_opts), config_for(sds_opts));
      const auto* s = report.find_sds(sds_id);
      if (!s) throw uniperf::DataError("unknown SDS '" + sds_id + "'");
      uniperf::print_sds_report(std::cout, *s, report.config.precision);
      maybe_emit(report, sds_opts);
      return kOk;
    }
    if (*inst) {
      const auto report = uniperf::run_assessment(load(inst_opts), config_for(inst_opts));
      const auto* i = report.find_institution(university);
      if (!i) throw uniperf::DataError("no assessed SDS for university '" + university + "'");
      uniperf::print_institution_report(std::cout, *i, report);
      maybe_emit(report, inst_opts);
      return kOk;
    }
  } catch (const uniperf::DataError& e) {
    std::cerr << "data error: " << e.what() << '\n';
    return kDataError;
  } catch (const uniperf::SolverError& e) {
    std::cerr << "solver error: " << e.what() << '\n';
    return kSolverError;
  } catch (const uniperf::IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kIoError;
  }
  return kOk;
}
