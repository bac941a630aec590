#include "qtm/slices.hpp"

#include <algorithm>
#include <atomic>

#include "qtm/errors.hpp"
#include "qtm/parallel.hpp"

namespace qtm {
namespace {

struct Member {
  Key120 corner;
  PackedWord word;
};

bool member_less(const Member& a, const Member& b) {
  if (a.corner != b.corner) return a.corner < b.corner;
  return a.word < b.word;
}

}  // namespace

Slice build_slice(int n, const EdgePerm& g, const EdgeBlockIndex& idx,
                  int threads) {
  if (n < 6 || n - 6 > idx.max_depth)
    throw InputError("slice bound " + std::to_string(n) +
                     " outside the indexed split range");
  const int xmax = n - 6;

  std::int64_t nblocks = static_cast<std::int64_t>(idx.block_key.size());
  int nthreads = resolve_threads(threads);
  std::vector<std::vector<Member>> found(
      static_cast<std::size_t>(std::max(1, nthreads)) * 8);
  std::atomic<std::size_t> next_buf{0};

  parallel_for(nblocks, threads, [&](std::int64_t lo, std::int64_t hi) {
    std::vector<Member>& out = found[next_buf++ % found.size()];
    for (std::int64_t b = lo; b < hi; ++b) {
      std::uint64_t xb = idx.block_off[b], xe = idx.block_off[b + 1];
      // skip blocks with no element short enough for the left factor
      bool any = false;
      for (std::uint64_t i = xb; i < xe && !any; ++i)
        any = idx.depth[i] <= xmax;
      if (!any) continue;
      EdgePerm h = unpack24(idx.block_key[b]);
      EdgePerm rest = compose(inverse(h), g);
      EdgeBlockIndex::Block yblk = idx.find(rest);
      if (yblk.size() == 0) continue;
      for (std::uint64_t i = xb; i < xe; ++i) {
        if (idx.depth[i] > xmax) continue;
        CornerPerm xc = unpack24(idx.corner[i]);
        PackedWord xw = wordr_to_packed(idx.word[i], idx.depth[i]);
        for (std::uint64_t j = yblk.begin; j < yblk.end; ++j) {
          CornerPerm zc = compose(xc, unpack24(idx.corner[j]));
          PackedWord zw = PackedWord::concat(
              xw, wordr_to_packed(idx.word[j], idx.depth[j]));
          out.push_back({pack24(zc), zw});
        }
      }
    }
  });

  std::size_t total = 0;
  for (const auto& v : found) total += v.size();
  std::vector<Member> all;
  all.reserve(total);
  for (auto& v : found) {
    all.insert(all.end(), v.begin(), v.end());
    v.clear();
    v.shrink_to_fit();
  }
  std::sort(all.begin(), all.end(), member_less);

  Slice s;
  s.g = g;
  s.bound = n;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (i > 0 && all[i].corner == all[i - 1].corner) continue;
    s.corner.push_back(unpack24(all[i].corner));
    s.word.push_back(all[i].word);
  }
  // shortest-first enumeration order
  std::vector<std::size_t> order(s.corner.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (auto c = s.word[a] <=> s.word[b]; c != 0) return c < 0;
    return s.corner[a] < s.corner[b];
  });
  Slice sorted;
  sorted.g = g;
  sorted.bound = n;
  sorted.corner.reserve(s.size());
  sorted.word.reserve(s.size());
  for (std::size_t i : order) {
    sorted.corner.push_back(s.corner[i]);
    sorted.word.push_back(s.word[i]);
  }
  return sorted;
}

Slice invert_slice(const Slice& s) {
  Slice out;
  out.g = inverse(s.g);
  out.bound = s.bound;
  out.corner.reserve(s.size());
  out.word.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    out.corner.push_back(inverse(s.corner[i]));
    out.word.push_back(PackedWord::pack(invert_word(s.word[i].unpack())));
  }
  return out;
}

Slice conjugate_slice(const Slice& s, const SymmetryGroup& M, int m) {
  Slice out;
  out.g = M.conj_edge(s.g, m);
  out.bound = s.bound;
  out.corner.reserve(s.size());
  out.word.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    out.corner.push_back(M.conj_corner(s.corner[i], m));
    out.word.push_back(M.relabel_word(s.word[i], m));
  }
  return out;
}

}  // namespace qtm
