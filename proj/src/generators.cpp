#include "qtm/generators.hpp"

#include <initializer_list>
#include <stdexcept>
#include <string>

#include "qtm/errors.hpp"

namespace qtm {
namespace {

// Facelet diagram data (1-based labels). Each face: the 8 facelets of the
// face read clockwise from its top-left corner, and the 12 facelets of the
// adjacent strip listed so that a clockwise quarter turn maps strip[i] to
// strip[(i+3) % 12].
struct FaceSpec {
  std::array<int, 8> ring;
  std::array<int, 12> strip;
};

constexpr std::array<FaceSpec, 6> kFaces{{
    // U
    {{25, 1, 26, 2, 29, 4, 36, 8},
     {27, 22, 33, 31, 6, 40, 38, 11, 46, 45, 17, 44}},
    // L
    {{31, 6, 40, 12, 47, 20, 28, 3},
     {25, 8, 36, 27, 15, 35, 32, 14, 41, 42, 19, 46}},
    // F
    {{27, 22, 33, 18, 43, 23, 35, 15},
     {36, 4, 29, 45, 9, 37, 39, 16, 32, 47, 12, 40}},
    // B
    {{38, 11, 46, 19, 42, 24, 30, 5},
     {26, 1, 25, 31, 3, 28, 41, 7, 34, 48, 13, 44}},
    // R
    {{45, 17, 44, 13, 48, 21, 37, 9},
     {26, 2, 29, 30, 5, 38, 39, 10, 34, 33, 18, 43}},
    // D
    {{32, 16, 39, 10, 34, 7, 41, 14},
     {28, 20, 47, 35, 23, 43, 37, 21, 48, 30, 24, 42}},
}};

// Corner cubie triples, clockwise from the U/D reference facelet.
constexpr std::array<std::array<int, 3>, 8> kCornerTriples{{
    {25, 31, 46},  // up-left-back
    {26, 38, 44},  // up-back-right
    {36, 27, 40},  // up-front-left
    {29, 45, 33},  // up-right-front
    {32, 47, 35},  // down-left-front
    {39, 43, 37},  // down-front-right
    {41, 42, 28},  // down-back-left
    {34, 48, 30},  // down-right-back
}};

constexpr std::array<std::array<int, 2>, 12> kEdgePairs{{
    {1, 11},  // up-back
    {2, 17},  // up-right
    {4, 22},  // up-front
    {8, 6},   // up-left
    {15, 12}, // front-left
    {18, 9},  // front-right
    {5, 13},  // back-right
    {19, 3},  // back-left
    {16, 23}, // down-front
    {10, 21}, // down-right
    {14, 20}, // down-left
    {7, 24},  // down-back
}};

Perm48 perm_from_cycles(
    std::initializer_list<std::initializer_list<int>> cycles) {
  Perm48 p = Perm48::identity();
  for (const auto& cyc : cycles) {
    auto it = cyc.begin();
    int first = *it, prev = *it;
    ++it;
    for (; it != cyc.end(); ++it) {
      p.img[prev - 1] = static_cast<std::uint8_t>(*it - 1);
      prev = *it;
    }
    p.img[prev - 1] = static_cast<std::uint8_t>(first - 1);
  }
  return p;
}

Perm48 build_face_turn(const FaceSpec& f) {
  Perm48 p = Perm48::identity();
  for (int i = 0; i < 8; ++i)
    p.img[f.ring[i] - 1] = static_cast<std::uint8_t>(f.ring[(i + 2) % 8] - 1);
  for (int i = 0; i < 12; ++i)
    p.img[f.strip[i] - 1] =
        static_cast<std::uint8_t>(f.strip[(i + 3) % 12] - 1);
  return p;
}

[[noreturn]] void fail(const std::string& what) {
  throw std::logic_error("generator construction: " + what);
}

CubieLayout build_layout(const std::array<Perm48, 12>& s) {
  CubieLayout lay{};
  lay.slot_of.fill(255);
  for (int i = 0; i < 8; ++i) {
    for (int k = 0; k < 3; ++k) {
      int f = kCornerTriples[i][k] - 25;
      lay.triple[i][k] = static_cast<std::uint8_t>(f);
      lay.slot_of[f] = static_cast<std::uint8_t>(i);
      lay.twist_of[f] = static_cast<std::uint8_t>(k);
    }
  }
  for (int i = 0; i < 24; ++i)
    if (lay.slot_of[i] == 255) fail("corner triples do not partition 25..48");

  lay.edge_cubie_of.fill(255);
  for (int i = 0; i < 12; ++i) {
    for (int k = 0; k < 2; ++k) {
      int f = kEdgePairs[i][k] - 1;
      lay.edge_pair[i][k] = static_cast<std::uint8_t>(f);
      lay.edge_cubie_of[f] = static_cast<std::uint8_t>(i);
    }
  }
  for (int i = 0; i < 24; ++i)
    if (lay.edge_cubie_of[i] == 255) fail("edge pairs do not partition 1..24");

  // Rigidity: every generator maps each triple/pair onto a triple/pair,
  // and moves cubies in 4-cycles.
  for (const Perm48& g : s) {
    Perm8 csig{};
    for (int i = 0; i < 8; ++i) {
      int dst = lay.slot_of[g.img[24 + lay.triple[i][0]] - 24];
      for (int k = 1; k < 3; ++k)
        if (lay.slot_of[g.img[24 + lay.triple[i][k]] - 24] != dst)
          fail("a face turn tears a corner cubie apart");
      csig.img[i] = static_cast<std::uint8_t>(dst);
    }
    Perm<12> esig{};
    for (int i = 0; i < 12; ++i) {
      int dst = lay.edge_cubie_of[g.img[lay.edge_pair[i][0]]];
      if (lay.edge_cubie_of[g.img[lay.edge_pair[i][1]]] != dst)
        fail("a face turn tears an edge cubie apart");
      esig.img[i] = static_cast<std::uint8_t>(dst);
    }
    int cmoved = 0, emoved = 0;
    for (int i = 0; i < 8; ++i) cmoved += csig.img[i] != i;
    for (int i = 0; i < 12; ++i) emoved += esig.img[i] != i;
    if (cmoved != 4 || emoved != 4)
      fail("a face turn is not a 4-cycle on cubies");
  }
  return lay;
}

GeneratorSet build_validated() {
  GeneratorSet gs{};
  for (int f = 0; f < 6; ++f) gs.s[f] = build_face_turn(kFaces[f]);
  for (int f = 0; f < 6; ++f) gs.s[f + 6] = inverse(gs.s[f]);

  for (int f = 0; f < 6; ++f) {
    Perm48 p = gs.s[f];
    for (int k = 0; k < 3; ++k) p = compose(p, gs.s[f]);
    if (!p.is_identity()) fail("face turn does not have order 4");
  }
  for (const Perm48& g : gs.s)
    if (!respects_orbit_split(g)) fail("orbit split {1..24},{25..48} broken");

  gs.layout = build_layout(gs.s);
  for (int i = 0; i < 12; ++i) {
    gs.s_edge[i] = edge_part(gs.s[i]);
    gs.s_corner[i] = corner_part(gs.s[i]);
  }

  // Binding oracle: conjugation by k1 and k2 must reproduce the printed
  // action cycles on T exactly.
  const Perm48 k1 = symmetry_k1();
  const Perm48 k2 = symmetry_k2();
  auto conj = [](const Perm48& x, const Perm48& h) {
    return compose(compose(inverse(h), x), h);
  };
  // action written as images: act[t] = index of h^-1 s[t] h, 0-based
  constexpr std::array<int, 12> kAct1{9, 10, 6, 11, 7, 8, 3, 4, 0, 5, 1, 2};
  constexpr std::array<int, 12> kAct2{4, 0, 2, 3, 5, 1, 10, 6, 8, 9, 11, 7};
  for (int t = 0; t < 12; ++t) {
    if (conj(gs.s[t], k1) != gs.s[kAct1[t]])
      fail("k1 conjugation action mismatch at generator " +
           std::to_string(t + 1));
    if (conj(gs.s[t], k2) != gs.s[kAct2[t]])
      fail("k2 conjugation action mismatch at generator " +
           std::to_string(t + 1));
  }
  return gs;
}

}  // namespace

const GeneratorSet& generator_set() {
  static const GeneratorSet gs = build_validated();
  return gs;
}

Perm48 symmetry_k1() {
  return perm_from_cycles({{1, 24, 16, 22},
                           {2, 19, 10, 15},
                           {3, 21, 12, 17},
                           {4, 11, 7, 23},
                           {5, 14, 18, 8},
                           {6, 13, 20, 9},
                           {25, 48, 32, 45},
                           {26, 41, 39, 36},
                           {27, 44, 42, 37},
                           {28, 43, 40, 38},
                           {29, 31, 34, 47},
                           {30, 35, 33, 46}});
}

Perm48 symmetry_k2() {
  return perm_from_cycles({{1, 5, 7, 19},
                           {2, 10, 14, 8},
                           {3, 11, 13, 24},
                           {4, 18, 16, 15},
                           {6, 17, 21, 20},
                           {9, 23, 12, 22},
                           {25, 44, 34, 28},
                           {26, 48, 41, 31},
                           {27, 33, 43, 35},
                           {29, 37, 32, 40},
                           {30, 42, 46, 38},
                           {36, 45, 39, 47}});
}

bool respects_orbit_split(const Perm48& p) {
  for (int i = 0; i < 24; ++i)
    if (p.img[i] >= 24) return false;
  for (int i = 24; i < 48; ++i)
    if (p.img[i] < 24) return false;
  return true;
}

Perm48 evaluate_word(const Word& w) {
  const GeneratorSet& gs = generator_set();
  Perm48 p = Perm48::identity();
  for (Move m : w) {
    if (m < 1 || m > 12)
      throw InputError("move index out of range 1..12: " + std::to_string(m));
    p = compose(p, gs.gen(m));
  }
  return p;
}

EdgePerm evaluate_word_edges(const Word& w) {
  const GeneratorSet& gs = generator_set();
  EdgePerm p = EdgePerm::identity();
  for (Move m : w) {
    if (m < 1 || m > 12)
      throw InputError("move index out of range 1..12: " + std::to_string(m));
    p = compose(p, gs.gen_edge(m));
  }
  return p;
}

bool word_parity_odd(const Perm48& p) {
  const CubieLayout& lay = generator_set().layout;
  CornerPerm c = corner_part(p);
  Perm8 sig{};
  for (int i = 0; i < 8; ++i)
    sig.img[i] = lay.slot_of[c.img[lay.triple[i][0]]];
  return !parity_even(sig);
}

}  // namespace qtm
