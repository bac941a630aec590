#pragma once

#include <cstdint>
#include <vector>

#include "qtm/bfs.hpp"
#include "qtm/perm.hpp"
#include "qtm/symmetry.hpp"
#include "qtm/words.hpp"

namespace qtm {

// The set of all cube elements of length <= bound whose edge projection is
// g, with one witness word each. Since the edge part is shared, members
// are stored as corner parts. Sorted by (witness length, witness, corner),
// so products enumerate shortest-first deterministically.
struct Slice {
  EdgePerm g;
  int bound = 0;
  std::vector<CornerPerm> corner;
  std::vector<PackedWord> word;

  std::size_t size() const { return corner.size(); }
};

// S(n, g) via the (n-6, 6) split: union over h of S(n-6, h) * S(6, h^-1 g).
// Requires n - 6 <= idx.max_depth; empty when no word of length <= n
// projects to g. Witnesses keep the shortest word, ties lexicographic.
Slice build_slice(int n, const EdgePerm& g, const EdgeBlockIndex& idx,
                  int threads = 1);

// S(n, g)^-1 = S(n, g^-1): members inverted, witnesses inverted.
Slice invert_slice(const Slice& s);

// h^-1 S h for h = M.elems[m]: members conjugated, witnesses relabelled
// through the T-action; word lengths unchanged.
Slice conjugate_slice(const Slice& s, const SymmetryGroup& M, int m);

}  // namespace qtm
