#pragma once

#include <filesystem>
#include <iosfwd>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "uniperf/assessment.hpp"

namespace uniperf {

enum class Format { kCsv, kJson, kSvg };

// Parses "csv,json,svg" style lists.
std::set<Format> parse_formats(std::string_view text);

// Fixed-point rendering at the given number of decimals.
std::string fixed(double value, int precision);

// Full-precision structured report.
nlohmann::ordered_json to_json(const AssessmentReport& report);

// dmu_id,SS,FP,AP,RF,TE,AE,CE for one SDS.
void write_sds_scores_csv(std::ostream& out, const SdsReport& sds, int precision);
// sds_id plus the per-SDS columns, every included SDS.
void write_scores_csv(std::ostream& out, const AssessmentReport& report);
void write_institutions_csv(std::ostream& out, const AssessmentReport& report);
void write_eligibility_csv(std::ostream& out, const AssessmentReport& report);

std::string histogram_svg(const Histogram& h, const std::string& title);
std::string quadrant_svg(const SdsReport& sds, double threshold);

// Human-readable tables for the CLI.
void print_sds_report(std::ostream& out, const SdsReport& sds, int precision);
void print_institution_report(std::ostream& out, const InstitutionReport& inst,
                              const AssessmentReport& report);

// Writes the requested formats into out_dir (created if missing). Output is
// byte-identical for identical input. Returns the written paths in order.
std::vector<std::filesystem::path> emit(const AssessmentReport& report,
                                        const std::set<Format>& formats,
                                        const std::filesystem::path& out_dir);

// "CHIM/08" -> "CHIM-08": usable in file names.
std::string file_stem(std::string_view sds_id);

}  // namespace uniperf
