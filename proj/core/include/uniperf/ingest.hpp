#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "uniperf/domain.hpp"

namespace uniperf {

struct StaffRow {
  DmuInput input;
  std::optional<double> ss;  // precomputed Scientific Strength
  std::string uda;           // defaults to the SDS prefix before '/'
};

struct PublicationRow {
  std::string dmu_id;
  std::string sds_id;
  PublicationRecord record;
};

enum class SsMode {
  kComputed,     // from publications and medians
  kPassthrough,  // taken from the staff file's ss column
};

struct AssessmentDataset {
  std::vector<StaffRow> staff;
  std::vector<PublicationRow> publications;
  MedianTable medians;
  SsMode mode = SsMode::kPassthrough;
};

struct InputFiles {
  std::filesystem::path staff;
  std::optional<std::filesystem::path> publications;
  std::optional<std::filesystem::path> medians;
};

std::string default_uda(const std::string& sds_id);

// Reads and cross-checks the input files. Publications switch the dataset
// to computed SS; without any, every staff row must carry ss.
AssessmentDataset ingest(const InputFiles& files);

// Rebuilds a passthrough dataset from a JSON report written by emit(),
// at full stored precision.
AssessmentDataset ingest_report(const std::filesystem::path& report_json);

}  // namespace uniperf
