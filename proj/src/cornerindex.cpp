#include "qtm/cornerindex.hpp"

#include <atomic>
#include <bit>

#include "qtm/errors.hpp"
#include "qtm/generators.hpp"
#include "qtm/parallel.hpp"

namespace qtm {
namespace {

constexpr std::array<std::uint32_t, 8> kFactorial{1,   1,   2,    6,
                                                  24,  120, 720,  5040};

const CubieLayout& layout() { return generator_set().layout; }

}  // namespace

CornerState corner_decompose(const CornerPerm& c) {
  const CubieLayout& lay = layout();
  CornerState st;
  for (int i = 0; i < 8; ++i) {
    std::uint8_t f0 = c.img[lay.triple[i][0]];
    std::uint8_t j = lay.slot_of[f0];
    std::uint8_t tw = lay.twist_of[f0];
    st.sigma.img[i] = j;
    st.ori[j] = tw;
    // rigidity plus cyclic-order preservation
    std::uint8_t f1 = c.img[lay.triple[i][1]];
    std::uint8_t f2 = c.img[lay.triple[i][2]];
    if (lay.slot_of[f1] != j || lay.slot_of[f2] != j ||
        lay.twist_of[f1] != (tw + 1) % 3 || lay.twist_of[f2] != (tw + 2) % 3)
      throw DomainError("permutation is not a rigid corner configuration");
  }
  return st;
}

CornerPerm corner_recompose(const CornerState& st) {
  const CubieLayout& lay = layout();
  CornerPerm c;
  for (int i = 0; i < 8; ++i) {
    int j = st.sigma.img[i];
    int tw = st.ori[j];
    for (int k = 0; k < 3; ++k)
      c.img[lay.triple[i][k]] = lay.triple[j][(tw + k) % 3];
  }
  return c;
}

std::uint16_t lehmer_rank8(const Perm8& sigma) {
  std::uint32_t rank = 0;
  std::uint8_t used = 0;
  for (int k = 0; k < 7; ++k) {
    std::uint8_t v = sigma.img[k];
    std::uint8_t below = static_cast<std::uint8_t>(used & ((1u << v) - 1));
    rank += kFactorial[7 - k] *
            (v - static_cast<std::uint32_t>(std::popcount(below)));
    used |= static_cast<std::uint8_t>(1u << v);
  }
  return static_cast<std::uint16_t>(rank);
}

Perm8 lehmer_unrank8(std::uint16_t r) {
  Perm8 sigma;
  std::array<std::uint8_t, 8> avail{0, 1, 2, 3, 4, 5, 6, 7};
  int navail = 8;
  std::uint32_t rest = r;
  for (int k = 0; k < 8; ++k) {
    std::uint32_t f = kFactorial[7 - k];
    std::uint32_t d = rest / f;
    rest %= f;
    sigma.img[k] = avail[d];
    for (int j = static_cast<int>(d); j < navail - 1; ++j)
      avail[j] = avail[j + 1];
    --navail;
  }
  return sigma;
}

std::uint16_t orient_rank(const std::array<std::uint8_t, 8>& ori) {
  int sum = 0;
  for (int i = 0; i < 8; ++i) sum += ori[i];
  if (sum % 3 != 0)
    throw DomainError("corner twist sum is not 0 mod 3");
  std::uint16_t r = 0;
  for (int i = 0; i < 7; ++i)
    r = static_cast<std::uint16_t>(r * 3 + ori[i]);
  return r;
}

std::array<std::uint8_t, 8> orient_unrank(std::uint16_t r) {
  std::array<std::uint8_t, 8> ori{};
  int sum = 0;
  for (int i = 6; i >= 0; --i) {
    ori[i] = static_cast<std::uint8_t>(r % 3);
    sum += ori[i];
    r /= 3;
  }
  ori[7] = static_cast<std::uint8_t>((3 - sum % 3) % 3);
  return ori;
}

std::uint32_t corner_rank(const CornerPerm& c) {
  CornerState st = corner_decompose(c);
  return kOrientSpan * static_cast<std::uint32_t>(lehmer_rank8(st.sigma)) +
         orient_rank(st.ori) + 1;
}

CornerPerm corner_unrank(std::uint32_t rank) {
  if (rank < 1 || rank > kCornerGroupOrder)
    throw InputError("corner rank out of range [1, 88179840]");
  std::uint32_t z = rank - 1;
  CornerState st;
  st.sigma = lehmer_unrank8(static_cast<std::uint16_t>(z / kOrientSpan));
  st.ori = orient_unrank(static_cast<std::uint16_t>(z % kOrientSpan));
  return corner_recompose(st);
}

bool rank_sigma_even(std::uint32_t rank) {
  // factorial-base digits of the Lehmer code sum to the inversion count
  std::uint32_t lehmer = (rank - 1) / kOrientSpan;
  int sum = 0;
  for (int radix = 2; radix <= 8; ++radix) {
    sum += lehmer % radix;
    lehmer /= radix;
  }
  return (sum & 1) == 0;
}

bool rank_roundtrip_ok(std::uint32_t lo, std::uint32_t hi, int threads) {
  if (lo < 1 || hi > kCornerGroupOrder || lo > hi)
    throw InputError("rank range out of [1, 88179840]");
  std::atomic<bool> ok{true};
  std::int64_t n = static_cast<std::int64_t>(hi) - lo + 1;
  parallel_for(n, threads, [&](std::int64_t b, std::int64_t e) {
    for (std::int64_t i = b; i < e && ok.load(std::memory_order_relaxed);
         ++i) {
      std::uint32_t r = static_cast<std::uint32_t>(lo + i);
      if (corner_rank(corner_unrank(r)) != r)
        ok.store(false, std::memory_order_relaxed);
    }
  });
  return ok.load();
}

}  // namespace qtm
