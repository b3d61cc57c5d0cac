#pragma once

#include <cstdint>

#include "rlc/linalg.hpp"

namespace rlc {

/// Exact minimum distance by the Brouwer-Zimmermann information-set method.
///
/// The span is reduced to a basis of its rank r, then re-reduced several
/// times with pivots preferring columns not yet covered, giving systematic
/// generator matrices G_1, G_2, ... whose new pivot sets N_j are disjoint.
/// Messages of weight w = 1, 2, ... (first nonzero entry 1) are encoded with
/// every G_j. A codeword never produced by weight <= w messages has at least
/// w + 1 - (r - |N_j|) nonzeros inside each N_j, which gives the running lower
/// bound; the search ends when the best weight found meets it.
///
/// Returns the minimum nonzero codeword weight, or 0 if the span is {0}.
struct MinDistanceResult {
  int distance = 0;
  std::uint64_t codewords_visited = 0;
};

MinDistanceResult min_distance(const GeneratorSet& g);

/// Decides d_min >= d, stopping as soon as either bound settles it.
struct ThresholdResult {
  bool at_least = false;
  std::uint64_t codewords_visited = 0;
};

ThresholdResult min_distance_at_least(const GeneratorSet& g, int d);

}  // namespace rlc
