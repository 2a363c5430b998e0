#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "uniperf/analytics.hpp"
#include "uniperf/domain.hpp"

namespace uniperf {

// Environment variable naming the config file used when --config is absent.
inline constexpr const char* kConfigEnvVar = "UNIPERF_CONFIG";

struct AssessmentConfig {
  CostVector costs;
  double quadrant_threshold = 0.5;
  EligibilityThresholds eligibility;
  bool apply_filter = true;
  // Share of an SDS's scientists with at least one publication, per SDS.
  // SDSs missing here use the staff-year share of DMUs with positive SS.
  std::map<std::string, double> publishing_fraction;
  NilOutputPolicy nil_output = NilOutputPolicy::kExcludeFromAverage;
  int precision = 3;
  std::string census_date;
  unsigned workers = 1;

  void validate() const;
};

AssessmentConfig config_from_json(const nlohmann::json& j);
nlohmann::ordered_json to_json(const AssessmentConfig& config);
AssessmentConfig load_config(const std::filesystem::path& path);

// --config wins, then $UNIPERF_CONFIG, then built-in defaults.
AssessmentConfig resolve_config(const std::optional<std::filesystem::path>& path);

}  // namespace uniperf
