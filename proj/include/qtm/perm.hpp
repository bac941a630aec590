#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <numeric>
#include <string>

namespace qtm {

// Permutation on N points, 0-based internally. img[i] is the image of
// point i; products apply the left factor first, matching the convention
// under which conjugation h^-1 g h relabels g through h.
template <int N>
struct Perm {
  std::array<std::uint8_t, N> img{};

  static Perm identity() {
    Perm p;
    std::iota(p.img.begin(), p.img.end(), std::uint8_t{0});
    return p;
  }

  std::uint8_t operator[](int i) const { return img[i]; }

  bool is_identity() const {
    for (int i = 0; i < N; ++i)
      if (img[i] != i) return false;
    return true;
  }

  friend bool operator==(const Perm&, const Perm&) = default;
  // Natural order: lexicographic on images, as used for canonical
  // representatives and sorted element sets.
  friend auto operator<=>(const Perm& a, const Perm& b) {
    for (int i = 0; i < N; ++i)
      if (a.img[i] != b.img[i]) return a.img[i] <=> b.img[i];
    return std::strong_ordering::equal;
  }
};

using Perm48 = Perm<48>;   // all 48 movable facelets (1..48 in I/O)
using EdgePerm = Perm<24>; // edge facelets, points 1..24
using CornerPerm = Perm<24>; // corner facelets, points 25..48 stored as 0..23
using Perm8 = Perm<8>;     // corner cubie slots

template <int N>
inline Perm<N> compose(const Perm<N>& p, const Perm<N>& q) {
  Perm<N> r;
  for (int i = 0; i < N; ++i) r.img[i] = q.img[p.img[i]];
  return r;
}

template <int N>
inline Perm<N> inverse(const Perm<N>& p) {
  Perm<N> r;
  for (int i = 0; i < N; ++i) r.img[p.img[i]] = static_cast<std::uint8_t>(i);
  return r;
}

template <int N>
inline bool parity_even(const Perm<N>& p) {
  // cycle-count parity
  std::array<bool, N> seen{};
  int transpositions = 0;
  for (int i = 0; i < N; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = p.img[j]) {
      seen[j] = true;
      ++len;
    }
    transpositions += len - 1;
  }
  return (transpositions & 1) == 0;
}

inline EdgePerm edge_part(const Perm48& p) {
  EdgePerm e;
  for (int i = 0; i < 24; ++i) e.img[i] = p.img[i];
  return e;
}

inline CornerPerm corner_part(const Perm48& p) {
  CornerPerm c;
  for (int i = 0; i < 24; ++i)
    c.img[i] = static_cast<std::uint8_t>(p.img[24 + i] - 24);
  return c;
}

inline Perm48 assemble(const EdgePerm& e, const CornerPerm& c) {
  Perm48 p;
  for (int i = 0; i < 24; ++i) p.img[i] = e.img[i];
  for (int i = 0; i < 24; ++i)
    p.img[24 + i] = static_cast<std::uint8_t>(c.img[i] + 24);
  return p;
}

// 24 images x 5 bits, packed big-endian by position so that integer order
// equals the natural (lexicographic) order on permutations.
struct Key120 {
  std::uint64_t hi = 0, lo = 0;
  friend bool operator==(const Key120&, const Key120&) = default;
  friend auto operator<=>(const Key120& a, const Key120& b) {
    if (auto c = a.hi <=> b.hi; c != 0) return c;
    return a.lo <=> b.lo;
  }
};

inline Key120 pack24(const Perm<24>& p) {
  Key120 k;
  for (int i = 0; i < 12; ++i)
    k.hi |= static_cast<std::uint64_t>(p.img[i]) << (5 * (11 - i));
  for (int i = 0; i < 12; ++i)
    k.lo |= static_cast<std::uint64_t>(p.img[12 + i]) << (5 * (11 - i));
  return k;
}

inline Perm<24> unpack24(const Key120& k) {
  Perm<24> p;
  for (int i = 0; i < 12; ++i)
    p.img[i] = static_cast<std::uint8_t>((k.hi >> (5 * (11 - i))) & 0x1f);
  for (int i = 0; i < 12; ++i)
    p.img[12 + i] = static_cast<std::uint8_t>((k.lo >> (5 * (11 - i))) & 0x1f);
  return p;
}

// Disjoint-cycle text, 1-based with `base` added to every point (25 for
// corner perms). Identity prints as "()".
template <int N>
std::string cycle_string(const Perm<N>& p, int base = 1) {
  std::array<bool, N> seen{};
  std::string out;
  for (int i = 0; i < N; ++i) {
    if (seen[i] || p.img[i] == i) continue;
    out += '(';
    int j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += ',';
      out += std::to_string(j + base);
      first = false;
      j = p.img[j];
    }
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

}  // namespace qtm
