#pragma once

#include <array>
#include <cstdint>

#include "qtm/perm.hpp"

namespace qtm {

constexpr std::uint32_t kCornerGroupOrder = 88179840;  // 8! * 3^7
constexpr std::uint32_t kFixEdgesOrder = 44089920;     // even-sigma half
constexpr std::uint32_t kOrientSpan = 2187;            // 3^7

// A corner configuration split into cubie permutation and orientation.
// ori[j] is the twist of the cubie now sitting at slot j, measured along
// the slot's fixed facelet 3-cycle; the sum is 0 mod 3 for every element
// of the corner group.
struct CornerState {
  Perm8 sigma;
  std::array<std::uint8_t, 8> ori{};
  friend bool operator==(const CornerState&, const CornerState&) = default;
};

// Splits a rigid corner permutation; throws DomainError if some generator
// image tears a cubie or mirrors its facelet cycle.
CornerState corner_decompose(const CornerPerm& c);
CornerPerm corner_recompose(const CornerState& st);

// Lehmer rank of an 8-point permutation under the natural order.
std::uint16_t lehmer_rank8(const Perm8& sigma);
Perm8 lehmer_unrank8(std::uint16_t r);

// Base-3 value of the first seven trits, cubie 1 most significant; the
// eighth trit is implied by the twist sum. Throws DomainError on a bad sum.
std::uint16_t orient_rank(const std::array<std::uint8_t, 8>& ori);
std::array<std::uint8_t, 8> orient_unrank(std::uint16_t r);

// The bijection onto [1, 88179840]: 3^7 * lehmer + orient + 1.
std::uint32_t corner_rank(const CornerPerm& c);
CornerPerm corner_unrank(std::uint32_t rank);

// Sigma-parity straight from a rank (parity of the Lehmer digit sum).
bool rank_sigma_even(std::uint32_t rank);

// rank(unrank(r)) == r for every r in [lo, hi]; full range is the
// surjectivity test that pins the bijection down.
bool rank_roundtrip_ok(std::uint32_t lo, std::uint32_t hi, int threads = 1);

}  // namespace qtm
