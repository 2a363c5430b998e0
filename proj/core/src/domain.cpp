#include "uniperf/domain.hpp"

#include <cmath>
#include <set>
#include <sstream>

#include "uniperf/error.hpp"

namespace uniperf {

namespace {

bool non_negative(double v) { return std::isfinite(v) && v >= 0.0; }

std::string input_problem(const DmuInput& dmu) {
  if (!non_negative(dmu.fp_years) || !non_negative(dmu.ap_years) ||
      !non_negative(dmu.rf_years)) {
    return "staff-years must be finite and non-negative";
  }
  if (dmu.total_years() <= 0.0) return "zero total input";
  return {};
}

}  // namespace

void CostVector::validate() const {
  for (double c : {full, associate, assistant}) {
    if (!std::isfinite(c) || c <= 0.0) {
      throw DataError("cost vector entries must be strictly positive");
    }
  }
}

DmuInput DmuInput::make(std::string dmu_id, std::string sds_id, double fp,
                        double ap, double rf) {
  DmuInput dmu{std::move(dmu_id), std::move(sds_id), fp, ap, rf};
  if (auto problem = input_problem(dmu); !problem.empty()) {
    throw DataError("DMU '" + dmu.dmu_id + "' in " + dmu.sds_id + ": " +
                    problem);
  }
  return dmu;
}

DmuInput scaled(const DmuInput& dmu, double factor) {
  DmuInput out = dmu;
  out.fp_years *= factor;
  out.ap_years *= factor;
  out.rf_years *= factor;
  return out;
}

double staff_cost(const DmuInput& dmu, const CostVector& costs) {
  return dmu.fp_years * costs.full + dmu.ap_years * costs.associate +
         dmu.rf_years * costs.assistant;
}

void PublicationRecord::validate() const {
  auto fail = [&](const std::string& what) {
    throw DataError("publication '" + pub_id + "': " + what);
  };
  if (!std::isfinite(citations) || citations < 0.0) fail("negative citations");
  if (total_authors < 1) fail("total_authors must be at least 1");
  if (categories.empty()) fail("no subject category");
  std::set<int> seen;
  for (int p : dmu_author_positions) {
    if (p < 1 || p > total_authors) {
      fail("author position " + std::to_string(p) + " outside 1.." +
           std::to_string(total_authors));
    }
    if (!seen.insert(p).second) {
      fail("duplicate author position " + std::to_string(p));
    }
  }
}

void MedianTable::set(int year, std::string category, double median,
                      std::optional<double> mean) {
  if (!std::isfinite(median) || median < 0.0) {
    throw DataError("median for (" + std::to_string(year) + ", " + category +
                    ") must be non-negative");
  }
  if (mean && (!std::isfinite(*mean) || *mean < 0.0)) {
    throw DataError("mean for (" + std::to_string(year) + ", " + category +
                    ") must be non-negative");
  }
  entries_[{year, std::move(category)}] = MedianEntry{median, mean};
}

bool MedianTable::contains(int year, const std::string& category) const {
  return entries_.count({year, category}) > 0;
}

const MedianEntry& MedianTable::at(int year,
                                   const std::string& category) const {
  auto it = entries_.find({year, category});
  if (it == entries_.end()) {
    throw DataError("missing median for (year " + std::to_string(year) +
                    ", category " + category + ")");
  }
  return it->second;
}

std::vector<Violation> validate_dataset(const SdsDataset& ds) {
  std::vector<Violation> out;
  std::set<std::string> ids;
  for (const auto& rec : ds.dmus) {
    const auto& id = rec.input.dmu_id;
    if (!ids.insert(id).second) out.push_back({id, "duplicate dmu_id"});
    if (!std::isfinite(rec.ss) || rec.ss < 0.0) {
      out.push_back({id, "negative output (ss)"});
    }
    if (auto problem = input_problem(rec.input); !problem.empty()) {
      out.push_back({id, problem});
    }
  }
  return out;
}

const SdsDataset& require_valid(const SdsDataset& ds) {
  auto violations = validate_dataset(ds);
  if (violations.empty()) return ds;
  std::ostringstream msg;
  msg << "invalid dataset " << ds.sds_id << ":";
  for (const auto& v : violations) msg << " [" << v.dmu_id << ": " << v.message << "]";
  throw DataError(msg.str());
}

}  // namespace uniperf
