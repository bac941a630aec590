#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <ostream>
#include <span>
#include <vector>

#include "qtm/bfs.hpp"
#include "qtm/cornerindex.hpp"
#include "qtm/perm.hpp"
#include "qtm/slices.hpp"
#include "qtm/symmetry.hpp"
#include "qtm/words.hpp"

namespace qtm {

// One bit per corner rank, 1 = unchecked (all set on a fresh ledger).
// Clearing is atomic and idempotent; the count is a popcount scan.
class CoverLedger {
 public:
  CoverLedger();
  bool is_unchecked(std::uint32_t rank) const;
  // returns true when this call flipped the bit
  bool clear(std::uint32_t rank);
  std::uint64_t checked_count() const;
  std::uint64_t unchecked_count() const {
    return kCornerGroupOrder - checked_count();
  }

  static constexpr std::size_t kWords = kCornerGroupOrder / 64;
  std::span<const std::uint64_t> words() const { return bits_; }

  void save(const std::filesystem::path& path) const;
  static CoverLedger load(const std::filesystem::path& path);

 private:
  std::vector<std::uint64_t> bits_;  // LSB-first
};

// Marks every rank in the set; returns how many were newly checked.
std::uint64_t mark_ranks(CoverLedger& ledger,
                         std::span<const std::uint32_t> ranks);

// Ranks of the whole ≈-class of a corner element (conjugates by M and
// conjugates of the inverse), sorted and deduplicated.
std::vector<std::uint32_t> class_ranks_of(const CornerPerm& el,
                                          const SymmetryGroup& M);

// Rank of the class-canonical member (minimal under the natural order).
std::uint32_t class_key(const CornerPerm& el, const SymmetryGroup& M);

// Witness words keyed by class-canonical rank; each word evaluates to an
// element with identity edge projection whose corner class contains the
// key's state.
struct PositionsStore {
  std::map<std::uint32_t, PackedWord> entries;

  void save(const std::filesystem::path& path) const;
  static PositionsStore load(const std::filesystem::path& path);
};

// Edge-group seeds: ≈-class representatives in increasing length,
// identity first.
struct SeedPlan {
  std::vector<EdgePerm> seeds;
};

SeedPlan make_seed_plan(const LayeredBfs& edge_bfs, int max_len,
                        const SymmetryGroup& M);
// One edge permutation per line as a 24-entry image list; '#' comments.
SeedPlan load_seed_file(const std::filesystem::path& path);
void save_seed_file(const std::filesystem::path& path, const SeedPlan& plan);

struct CoverStepStats {
  std::uint64_t newly_checked = 0;
  std::uint64_t words_stored = 0;
};

// One main-algorithm step for seed g: the products S(10,g)*S(12,g^-1) and
// S(10,g^-1)*S(12,g); every product's ≈-orbit is checked, one witness per
// new class is stored. Marking the orbit also covers the corresponding
// products of every seed in the ≈-class of g.
CoverStepStats cover_seed_step(const EdgePerm& g, CoverLedger& ledger,
                               PositionsStore& store,
                               const EdgeBlockIndex& idx,
                               const SymmetryGroup& M, int threads = 1);

struct CoverOptions {
  int threads = 1;
  std::filesystem::path checkpoint_dir;  // empty = no checkpoints
  std::ostream* progress = nullptr;
  bool throw_if_incomplete = false;
  // stop after this many seed steps (0 = unlimited); for batched long runs
  std::size_t max_seeds = 0;
  // depth-8 edge search enabling the lazy length-9/10 seed extension once
  // the plan runs out with positions left
  const LayeredBfs* lazy_extension_bfs = nullptr;
};

struct CoverResult {
  std::uint64_t checked = 0;
  std::uint64_t left = 0;
  std::size_t seeds_processed = 0;
  bool complete = false;
};

// Processes seeds until every edge-fixing position is checked or seeds run
// out; emits a progress line and a checkpoint after each seed.
CoverResult run_cover(const SeedPlan& plan, CoverLedger& ledger,
                      PositionsStore& store, const EdgeBlockIndex& idx,
                      const SymmetryGroup& M, const CoverOptions& opt = {});

// Independent re-verification: fresh ledger, every stored word re-evaluated
// from scratch (length bound, identity edge projection), its ≈-orbit
// expanded and marked. Returns the final checked count.
std::uint64_t verify_store(const PositionsStore& store,
                           const SymmetryGroup& M);

// Word of at most 22 moves taking the edge-fixing state back to the
// identity: the stored witness of the state's class, relabelled through
// the symmetry (and inversion) that links them. Throws StoreError when
// the class is absent.
Word solve_state(const CornerPerm& state, const PositionsStore& store,
                 const SymmetryGroup& M);

}  // namespace qtm
