#pragma once

#include <cstdint>
#include <vector>

#include "qtm/bfs.hpp"
#include "qtm/perm.hpp"
#include "qtm/symmetry.hpp"

namespace qtm {

struct DistRow {
  int dist = 0;
  std::uint64_t positions = 0;
  std::uint64_t classes_m = 0;     // unique wrt M (~)
  std::uint64_t classes_minv = 0;  // unique wrt M + inversion (≈)
};

// Per-layer class counts of a layered search (one row per depth).
std::vector<DistRow> layer_class_table(const LayeredBfs& bfs,
                                       const SymmetryGroup& M,
                                       int threads = 1);

enum class Subgroup { FixEdges, FixCubiePositions };

// Elements of the edge-fixing subgroup within max_dist, with exact
// distances: single identity-seed meet-in-the-middle over depth-6 halves,
// taking the minimum split length per corner rank.
struct FixEdgesScan {
  std::vector<std::uint32_t> rank;
  std::vector<std::uint8_t> dist;
};
FixEdgesScan scan_fix_edges(int max_dist, const EdgeBlockIndex& idx,
                            int threads = 1);

// Orientation-only elements (every cubie in place) within max_dist: pairs
// of half elements whose cubie-position parts cancel.
struct FixCubiesScan {
  std::vector<Perm48> elem;
  std::vector<std::uint8_t> dist;
};
FixCubiesScan scan_fix_cubies(int max_dist, const EdgeBlockIndex& idx,
                              int threads = 1);

// Even-distance rows 0..max_dist for the chosen subgroup. max_dist <= 12
// in this split; deeper tables need the full seed sweep.
std::vector<DistRow> distance_distribution(Subgroup sub, int max_dist,
                                           const EdgeBlockIndex& idx,
                                           const SymmetryGroup& M,
                                           int threads = 1);

}  // namespace qtm
