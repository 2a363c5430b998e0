#include "uniperf/bibliometrics.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "uniperf/error.hpp"

namespace uniperf {

double standardize_citations(double citations, int year,
                             std::span<const std::string> categories,
                             const MedianTable& medians) {
  if (categories.empty()) throw DataError("publication without category");
  double median_sum = 0.0;
  double mean_sum = 0.0;
  bool all_means = true;
  for (const auto& cat : categories) {
    const auto& entry = medians.at(year, cat);
    median_sum += entry.median;
    if (entry.mean) {
      mean_sum += *entry.mean;
    } else {
      all_means = false;
    }
  }
  const double n = static_cast<double>(categories.size());
  const double divisor = median_sum / n;
  if (divisor > 0.0) return citations / divisor;
  if (citations == 0.0) return 0.0;

  const double fallback = mean_sum / n;
  if (all_means && fallback > 0.0) return citations / fallback;
  std::ostringstream msg;
  msg << "zero median divisor for year " << year << " categories";
  for (const auto& cat : categories) msg << ' ' << cat;
  msg << " and no positive reference mean to fall back on";
  throw DataError(msg.str());
}

double fractional_count_standard(int total_authors,
                                 std::span<const int> dmu_author_positions) {
  return static_cast<double>(dmu_author_positions.size()) / total_authors;
}

std::vector<double> positional_weights(int n, BylineScheme scheme) {
  if (n < 1) throw DataError("byline needs at least one author");
  const bool same = scheme == BylineScheme::kSameUniversity;
  const double edge = same ? 0.40 : 0.30;
  const double near_edge = same ? 0.0 : 0.15;
  const double pool = same ? 0.20 : 0.10;

  std::vector<double> w(n, 0.0);
  std::vector<bool> assigned(n, false);
  auto put = [&](int pos, double value) {
    if (!assigned[pos - 1]) {
      w[pos - 1] = value;
      assigned[pos - 1] = true;
    }
  };
  put(1, edge);
  put(n, edge);
  if (!same) {
    put(std::min(2, n), near_edge);
    put(std::max(n - 1, 1), near_edge);
  }
  const auto rest = std::count(assigned.begin(), assigned.end(), false);
  for (int i = 0; i < n; ++i) {
    if (!assigned[i]) w[i] = pool / static_cast<double>(rest);
  }

  const double total = std::accumulate(w.begin(), w.end(), 0.0);
  for (auto& x : w) x /= total;
  return w;
}

double fractional_count_life_science(int total_authors,
                                     std::span<const int> dmu_author_positions,
                                     bool first_last_same_university) {
  const auto w = positional_weights(
      total_authors, first_last_same_university ? BylineScheme::kSameUniversity
                                                : BylineScheme::kMixed);
  double f = 0.0;
  for (int p : dmu_author_positions) f += w.at(p - 1);
  return std::clamp(f, 0.0, 1.0);
}

BylineScheme scheme_for(const PublicationRecord& pub) {
  bool same = false;
  if (pub.first_last_same_university) {
    same = *pub.first_last_same_university;
  } else {
    const auto& pos = pub.dmu_author_positions;
    same = std::find(pos.begin(), pos.end(), 1) != pos.end() &&
           std::find(pos.begin(), pos.end(), pub.total_authors) != pos.end();
  }
  return same ? BylineScheme::kSameUniversity : BylineScheme::kMixed;
}

StandardizedPublication standardize(const PublicationRecord& pub,
                                    const MedianTable& medians) {
  pub.validate();
  StandardizedPublication out;
  out.pub_id = pub.pub_id;
  out.c_bar =
      standardize_citations(pub.citations, pub.year, pub.categories, medians);
  out.f = pub.life_science
              ? fractional_count_life_science(
                    pub.total_authors, pub.dmu_author_positions,
                    scheme_for(pub) == BylineScheme::kSameUniversity)
              : fractional_count_standard(pub.total_authors,
                                          pub.dmu_author_positions);
  out.contribution = out.c_bar * out.f;
  return out;
}

double scientific_strength(std::span<const PublicationRecord> pubs,
                           const MedianTable& medians) {
  double ss = 0.0;
  for (const auto& pub : pubs) ss += standardize(pub, medians).contribution;
  return ss;
}

MedianTable build_median_table(std::span<const ReferenceCitation> reference) {
  std::map<MedianTable::Key, std::vector<double>> groups;
  for (const auto& r : reference) {
    if (r.citations < 0.0) throw DataError("negative reference citations");
    groups[{r.year, r.category}].push_back(r.citations);
  }
  MedianTable table;
  for (auto& [key, values] : groups) {
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    const double median = n % 2 == 1
                              ? values[n / 2]
                              : 0.5 * (values[n / 2 - 1] + values[n / 2]);
    const double mean =
        std::accumulate(values.begin(), values.end(), 0.0) / n;
    table.set(key.first, key.second, median, mean);
  }
  return table;
}

}  // namespace uniperf
