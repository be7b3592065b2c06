#pragma once

#include <array>
#include <utility>

#include "gem/subcomplex.hpp"

namespace gem {

// Unordered partition of four colors into two unordered pairs, stored
// normalized: each pair sorted, first pair holds the smallest color.
struct PairPartition {
  std::array<int, 2> first;
  std::array<int, 2> second;

  friend bool operator==(const PairPartition&, const PairPartition&) = default;
};

// Normalizes and checks that the two pairs partition exactly the four given
// colors; throws BadPairPartition otherwise.
PairPartition make_pair_partition(std::array<int, 2> a, std::array<int, 2> b,
                                  const std::vector<int>& colors);

// Splitting data of a closed rank-3 graph along the jacket that misses the
// two given pairs. The jacket surface splits the dual 3-manifold into two
// handlebodies; candidate attaching curves for the two sides are the
// bicolored cycles of the missing pairs (kept verbatim, duplicates and all).
struct HeegaardData {
  PairPartition pairs;
  std::vector<int> jacket_order;  // canonical order of the realizing jacket
  int face_count;
  int genus;  // computed from chi and from 1 + V/2 - F/2; both must agree
  std::vector<BicoloredCycle> alpha_candidates;  // pairs.first cycles
  std::vector<BicoloredCycle> beta_candidates;   // pairs.second cycles
  int skeleton_genus;  // genus of the dual 1-skeleton thickening, E - V + 1
  int comparison;      // genus - skeleton_genus == -(V + F)/2
};

HeegaardData heegaard_split(const ColoredGraph& g, const PairPartition& pairs);

// Genus of the neighborhood of the dual complex 1-skeleton (V = 2n nodes,
// E = 4n lines): E - V + 1 = 2n + 1. Returns (genus, comparison) where
// comparison is against the splitting surface of the given pair partition.
std::pair<int, int> dual_skeleton_genus(const ColoredGraph& g,
                                        const PairPartition& pairs);

// The three pair partitions of a rank-3 graph's colors, lexical order.
std::vector<PairPartition> heegaard_partitions();

}  // namespace gem
