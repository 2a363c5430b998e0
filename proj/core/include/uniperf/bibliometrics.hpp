#pragma once

#include <span>
#include <string>
#include <vector>

#include "uniperf/domain.hpp"

namespace uniperf {

struct StandardizedPublication {
  std::string pub_id;
  double c_bar = 0.0;  // field-standardized citations
  double f = 0.0;      // fractional count in [0, 1]
  double contribution = 0.0;
};

// Citations divided by the mean of the per-category medians for that year.
// A zero divisor with positive citations falls back to the mean of the
// reference means; without them it is a DataError.
double standardize_citations(double citations, int year,
                             std::span<const std::string> categories,
                             const MedianTable& medians);

double fractional_count_standard(int total_authors,
                                 std::span<const int> dmu_author_positions);

enum class BylineScheme {
  kSameUniversity,  // first and last author from the same university
  kMixed,
};

// Per-position weights for a byline of n authors, renormalized to sum to 1.
//
// kSameUniversity: 0.40 first, 0.40 last, 0.20 shared by the rest.
// kMixed: 0.30 first and last, 0.15 second and second-to-last, 0.10 shared
// by the rest. A position filling several roles keeps only its most
// prominent one (first/last before second/second-to-last), so small bylines
// do not double count.
std::vector<double> positional_weights(int total_authors, BylineScheme scheme);

double fractional_count_life_science(int total_authors,
                                     std::span<const int> dmu_author_positions,
                                     bool first_last_same_university);

BylineScheme scheme_for(const PublicationRecord& pub);

StandardizedPublication standardize(const PublicationRecord& pub,
                                    const MedianTable& medians);

// SS = Σ c̄ · f over the DMU's publications; 0 for an empty list.
double scientific_strength(std::span<const PublicationRecord> pubs,
                           const MedianTable& medians);

struct ReferenceCitation {
  int year = 0;
  std::string category;
  double citations = 0.0;
};

// Builds medians (midpoint of the central order statistics for even counts)
// and means per (year, category) from raw reference citations.
MedianTable build_median_table(std::span<const ReferenceCitation> reference);

}  // namespace uniperf
