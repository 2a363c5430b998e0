#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace uniperf {

// Average cost of one staff-year per academic rank, in k€.
struct CostVector {
  double full = 111.700;
  double associate = 79.700;
  double assistant = 56.650;

  // Throws DataError unless all three are finite and strictly positive.
  void validate() const;
};

// Research staff of one university within one subfield (SDS). Staff-years
// are rationals; fractional tenure is allowed.
struct DmuInput {
  std::string dmu_id;
  std::string sds_id;
  double fp_years = 0.0;  // full professors
  double ap_years = 0.0;  // associate professors
  double rf_years = 0.0;  // assistant professors

  // Checked factory: rejects negative or non-finite staff-years and a zero
  // total.
  static DmuInput make(std::string dmu_id, std::string sds_id, double fp,
                       double ap, double rf);

  double total_years() const { return fp_years + ap_years + rf_years; }
};

DmuInput scaled(const DmuInput& dmu, double factor);

// Cost of the DMU's research staff: Σ staff-years · unit cost.
double staff_cost(const DmuInput& dmu, const CostVector& costs);

struct PublicationRecord {
  std::string pub_id;
  int year = 0;
  double citations = 0.0;
  std::vector<std::string> categories;
  int total_authors = 1;
  // 1-based byline positions held by the assessed DMU's authors.
  std::vector<int> dmu_author_positions;
  bool life_science = false;
  // Overrides the positional scheme choice for life-science records. When
  // unset, first and last author are taken to share the university iff the
  // DMU holds both positions.
  std::optional<bool> first_last_same_university;

  void validate() const;
};

struct MedianEntry {
  double median = 0.0;
  // Mean citations of the reference set, used only when the median divisor
  // collapses to zero.
  std::optional<double> mean;
};

class MedianTable {
 public:
  using Key = std::pair<int, std::string>;

  void set(int year, std::string category, double median,
           std::optional<double> mean = std::nullopt);
  bool contains(int year, const std::string& category) const;
  // Throws DataError naming the key when absent.
  const MedianEntry& at(int year, const std::string& category) const;
  std::size_t size() const { return entries_.size(); }
  const std::map<Key, MedianEntry>& entries() const { return entries_; }

 private:
  std::map<Key, MedianEntry> entries_;
};

struct EfficiencyScores {
  double te = 0.0;
  double ae = 0.0;
  double ce = 0.0;
  // dmu_id -> λ from the optimal envelopment solution (non-zero entries only).
  std::map<std::string, double> reference_weights;
};

struct DmuRecord {
  DmuInput input;
  double ss = 0.0;
};

struct SdsDataset {
  std::string sds_id;
  std::vector<DmuRecord> dmus;
};

struct Violation {
  std::string dmu_id;
  std::string message;
};

// Lists every invariant violation; empty means the dataset is valid.
std::vector<Violation> validate_dataset(const SdsDataset& ds);

// Throws DataError carrying all violations.
const SdsDataset& require_valid(const SdsDataset& ds);

}  // namespace uniperf
