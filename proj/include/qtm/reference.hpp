#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "qtm/perm.hpp"
#include "qtm/symmetry.hpp"

namespace qtm::ref {

// Straightforward serial implementations used as oracles for the kernel
// code: plain set-based search, explicit class construction, exhaustive
// word walks. Slow on purpose; keep them simple.

// layer sets of the edge or cube group by naive frontier expansion
std::vector<std::set<EdgePerm>> edge_layers(int depth);
std::vector<std::set<Perm48>> cube_layers(int depth);

// canonical ≈-form via the full explicit class
EdgePerm canon_edge_approx(const EdgePerm& g, const SymmetryGroup& M);

// every element reachable by a word of length <= depth that fixes all
// edge facelets, with its exact distance (exhaustive pruned walk over
// words; prunes only reducible words, so every geodesic survives)
std::map<CornerPerm, int> walk_fix_edges(int depth);

}  // namespace qtm::ref
