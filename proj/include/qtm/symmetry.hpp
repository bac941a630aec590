#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "qtm/perm.hpp"
#include "qtm/words.hpp"

namespace qtm {

// The symmetry group M: closure of the two printed generators k1, k2.
// Conjugation by any element of M permutes T (the 12 generators and
// inverses), so it preserves word length; relations ~ (conjugacy) and
// ≈ (conjugacy up to inversion) both build on this action.
struct SymmetryGroup {
  std::vector<Perm48> elems;  // sorted by natural order; closed, with identity
  // per element, forward/inverse lookup tables split by orbit
  std::vector<std::array<std::uint8_t, 24>> edge_fwd, edge_inv;
  std::vector<std::array<std::uint8_t, 24>> corner_fwd, corner_inv;
  // t_action[m][t] = 0-based index of elems[m]^-1 * s[t+1] * elems[m] in s
  std::vector<std::array<std::uint8_t, 12>> t_action;

  int size() const { return static_cast<int>(elems.size()); }

  // h^-1 g h for h = elems[m]
  EdgePerm conj_edge(const EdgePerm& g, int m) const;
  CornerPerm conj_corner(const CornerPerm& g, int m) const;
  Perm48 conj(const Perm48& g, int m) const;

  // Relabel a word through the conjugation action: the result evaluates to
  // elems[m]^-1 * evaluate_word(w) * elems[m] and has the same length.
  Word relabel_word(const Word& w, int m) const;
  PackedWord relabel_word(const PackedWord& w, int m) const;

  // Lexicographically minimal member of the ~ / ≈ class (kernels used by
  // the big canonicalization sweeps; early-abort comparison).
  EdgePerm canon_edge_sim(const EdgePerm& g) const;
  EdgePerm canon_edge_approx(const EdgePerm& g) const;
  CornerPerm canon_corner_sim(const CornerPerm& g) const;
  CornerPerm canon_corner_approx(const CornerPerm& g) const;
  Perm48 canon_full_sim(const Perm48& g) const;
  Perm48 canon_full_approx(const Perm48& g) const;
};

// Build the closure of {k1, k2}; throws if the closure exceeds the sanity
// bound or some element fails to map T to T under conjugation.
const SymmetryGroup& symmetry_group();

// {h^-1 g h : h in M}, deduplicated and sorted (relation ~).
std::vector<Perm48> class_sim(const Perm48& g, const SymmetryGroup& M);
// class_sim(g) ∪ class_sim(g^-1) (relation ≈).
std::vector<Perm48> class_approx(const Perm48& g, const SymmetryGroup& M);

// One representative per ≈-class intersecting the input: the minimal
// member of each class that is present in the input. Deterministic and
// order-independent.
std::vector<Perm48> reduce_reps(std::vector<Perm48> in, const SymmetryGroup& M);
std::vector<EdgePerm> reduce_reps_edge(std::vector<EdgePerm> in,
                                       const SymmetryGroup& M);

}  // namespace qtm
