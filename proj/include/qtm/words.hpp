#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qtm/perm.hpp"

namespace qtm {

// A generator word: entries 1..12 meaning s[n] with
// s = [U,L,F,B,R,D,U',L',F',B',R',D']. No implicit cancellation.
using Move = std::uint8_t;
using Word = std::vector<Move>;

constexpr int kNumMoves = 12;

inline Move move_inverse(Move m) {
  return static_cast<Move>(m <= 6 ? m + 6 : m - 6);
}

// Word for the inverse element: reversed, entries swapped n <-> n+-6.
Word invert_word(const Word& w);

// Face-turn notation -> word. Tokens are U,L,F,B,R,D with optional
// suffix ' (inverse) or 2 (two quarter turns), whitespace-separated.
Word parse_moves(std::string_view text);

// "U F' B ..." rendering; quarter turns only, no 2-compression.
std::string format_moves(const Word& w);

// Nibble-packed word of up to 22 moves (one nibble per move, 0 = unused).
struct PackedWord {
  std::uint8_t len = 0;
  std::array<std::uint8_t, 11> nib{};

  static PackedWord pack(const Word& w);
  static PackedWord concat(const PackedWord& a, const PackedWord& b);
  Word unpack() const;
  Move move_at(int i) const {
    std::uint8_t b = nib[i >> 1];
    return static_cast<Move>(i & 1 ? b >> 4 : b & 0x0f);
  }
  void set_move(int i, Move m) {
    std::uint8_t& b = nib[i >> 1];
    if (i & 1)
      b = static_cast<std::uint8_t>((b & 0x0f) | (m << 4));
    else
      b = static_cast<std::uint8_t>((b & 0xf0) | m);
  }
  friend bool operator==(const PackedWord&, const PackedWord&) = default;
  // (length, lexicographic) order used for deterministic witness tie-breaks
  friend auto operator<=>(const PackedWord& a, const PackedWord& b) {
    if (auto c = a.len <=> b.len; c != 0) return c;
    for (int i = 0; i < a.len; ++i)
      if (auto c = a.move_at(i) <=> b.move_at(i); c != 0) return c;
    return std::strong_ordering::equal;
  }
};

// BFS words of depth <= 8 fit one nibble per move in a uint32.
inline std::uint32_t word32_append(std::uint32_t w, int depth, Move m) {
  return w | (static_cast<std::uint32_t>(m) << (4 * depth));
}

inline Move word32_move(std::uint32_t w, int i) {
  return static_cast<Move>((w >> (4 * i)) & 0x0f);
}

inline PackedWord word32_to_packed(std::uint32_t w, int len) {
  PackedWord p;
  p.len = static_cast<std::uint8_t>(len);
  for (int i = 0; i < len; ++i) p.set_move(i, word32_move(w, i));
  return p;
}

}  // namespace qtm
