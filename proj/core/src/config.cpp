#include "uniperf/config.hpp"

#include <cstdlib>
#include <fstream>

#include "uniperf/error.hpp"

namespace uniperf {

void AssessmentConfig::validate() const {
  costs.validate();
  if (!(quadrant_threshold >= 0.0 && quadrant_threshold <= 1.0)) {
    throw DataError("quadrant threshold must lie in [0, 1]");
  }
  if (!(eligibility.min_publishing_fraction >= 0.0 &&
        eligibility.min_publishing_fraction <= 1.0)) {
    throw DataError("minimum publishing fraction must lie in [0, 1]");
  }
  for (const auto& [sds, f] : publishing_fraction) {
    if (!(f >= 0.0 && f <= 1.0)) {
      throw DataError("publishing fraction for " + sds + " must lie in [0, 1]");
    }
  }
  if (precision < 1 || precision > 12) {
    throw DataError("reporting precision must be between 1 and 12 decimals");
  }
  if (workers < 1) throw DataError("workers must be at least 1");
}

AssessmentConfig config_from_json(const nlohmann::json& j) {
  AssessmentConfig c;
  try {
    if (auto it = j.find("costs"); it != j.end()) {
      c.costs.full = it->value("full", c.costs.full);
      c.costs.associate = it->value("associate", c.costs.associate);
      c.costs.assistant = it->value("assistant", c.costs.assistant);
    }
    c.quadrant_threshold = j.value("quadrant_threshold", c.quadrant_threshold);
    if (auto it = j.find("eligibility"); it != j.end()) {
      c.eligibility.min_universities =
          it->value("min_universities", c.eligibility.min_universities);
      c.eligibility.min_publishing_fraction = it->value(
          "min_publishing_fraction", c.eligibility.min_publishing_fraction);
      c.apply_filter = it->value("enabled", c.apply_filter);
    }
    if (auto it = j.find("publishing_fraction"); it != j.end()) {
      c.publishing_fraction = it->get<std::map<std::string, double>>();
    }
    if (auto it = j.find("nil_output"); it != j.end()) {
      const auto mode = it->get<std::string>();
      if (mode == "exclude") {
        c.nil_output = NilOutputPolicy::kExcludeFromAverage;
      } else if (mode == "include") {
        c.nil_output = NilOutputPolicy::kInclude;
      } else {
        throw DataError("nil_output must be \"exclude\" or \"include\"");
      }
    }
    c.precision = j.value("precision", c.precision);
    c.census_date = j.value("census_date", c.census_date);
    c.workers = j.value("workers", c.workers);
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("config: ") + e.what());
  }
  c.validate();
  return c;
}

nlohmann::ordered_json to_json(const AssessmentConfig& c) {
  nlohmann::ordered_json j;
  j["costs"] = {{"full", c.costs.full},
                {"associate", c.costs.associate},
                {"assistant", c.costs.assistant}};
  j["quadrant_threshold"] = c.quadrant_threshold;
  j["eligibility"] = {
      {"enabled", c.apply_filter},
      {"min_universities", c.eligibility.min_universities},
      {"min_publishing_fraction", c.eligibility.min_publishing_fraction}};
  j["publishing_fraction"] = c.publishing_fraction;
  j["nil_output"] =
      c.nil_output == NilOutputPolicy::kInclude ? "include" : "exclude";
  j["precision"] = c.precision;
  j["census_date"] = c.census_date;
  j["workers"] = c.workers;
  return j;
}

AssessmentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw DataError(path.string() + ": " + e.what());
  }
  return config_from_json(j);
}

AssessmentConfig resolve_config(
    const std::optional<std::filesystem::path>& path) {
  if (path) return load_config(*path);
  if (const char* env = std::getenv(kConfigEnvVar); env && *env) {
    return load_config(env);
  }
  return AssessmentConfig{};
}

}  // namespace uniperf
