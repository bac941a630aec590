#pragma once

#include <array>
#include <cstdint>

#include "qtm/perm.hpp"
#include "qtm/words.hpp"

namespace qtm {

// Corner cubie layout: 8 facelet triples moved rigidly by every generator.
// triple[i] lists the slot's facelets clockwise as seen from outside the
// cube, starting at the U/D-face reference facelet; orientation is counted
// along that cycle. Values are internal corner indices (facelet - 25).
struct CubieLayout {
  std::array<std::array<std::uint8_t, 3>, 8> triple;
  std::array<std::uint8_t, 24> slot_of;   // facelet -> cubie slot
  std::array<std::uint8_t, 24> twist_of;  // facelet -> position in the slot cycle
  std::array<std::array<std::uint8_t, 2>, 12> edge_pair;  // edge cubies, facelets 0..23
  std::array<std::uint8_t, 24> edge_cubie_of;
};

// The twelve generators s[1..12] = [U,L,F,B,R,D,U',L',F',B',R',D'],
// rebuilt from the facelet diagram. Construction validates the orbit
// split, face-turn orders, cubie rigidity and the printed symmetry action
// of k1 and k2 on T, and throws std::logic_error on any mismatch.
struct GeneratorSet {
  std::array<Perm48, 12> s;
  std::array<EdgePerm, 12> s_edge;
  std::array<CornerPerm, 12> s_corner;
  CubieLayout layout;

  const Perm48& gen(Move m) const { return s[m - 1]; }
  const EdgePerm& gen_edge(Move m) const { return s_edge[m - 1]; }
  const CornerPerm& gen_corner(Move m) const { return s_corner[m - 1]; }
};

// Singleton accessor; construction runs the full validation once.
const GeneratorSet& generator_set();

// The two symmetry generators, as printed (full cycle form).
Perm48 symmetry_k1();
Perm48 symmetry_k2();

// Left-to-right product of s[n] over the word. Empty word -> identity.
Perm48 evaluate_word(const Word& w);
EdgePerm evaluate_word_edges(const Word& w);

// Orbit-split check: {1..24} and {25..48} map into themselves.
bool respects_orbit_split(const Perm48& p);

// Parity of every word representing p: permutation parity of the induced
// corner-cubie permutation (each quarter turn is a 4-cycle on cubies).
bool word_parity_odd(const Perm48& p);

}  // namespace qtm
