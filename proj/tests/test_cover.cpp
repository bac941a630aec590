#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <random>
#include <sstream>

#include "qtm/cover.hpp"
#include "qtm/distance.hpp"
#include "qtm/errors.hpp"
#include "qtm/generators.hpp"

using namespace qtm;

namespace {

const EdgeBlockIndex& index6() {
  static const EdgeBlockIndex idx =
      build_block_index(build_bfs(GroupKind::Cube, 6, {.threads = 0}));
  return idx;
}

const LayeredBfs& edge_bfs4() {
  static const LayeredBfs bfs = build_bfs(GroupKind::Edge, 4, {.threads = 0});
  return bfs;
}

}  // namespace

TEST_CASE("fresh ledger has every position unchecked") {
  CoverLedger ledger;
  CHECK(ledger.checked_count() == 0);
  CHECK(ledger.unchecked_count() == kCornerGroupOrder);
  CHECK(ledger.is_unchecked(1));
  CHECK(ledger.is_unchecked(kCornerGroupOrder));
}

TEST_CASE("marking is idempotent and counts newly checked entries") {
  CoverLedger ledger;
  std::vector<std::uint32_t> ranks{1};
  CHECK(mark_ranks(ledger, ranks) == 1);
  CHECK(ledger.checked_count() == 1);
  CHECK(mark_ranks(ledger, ranks) == 0);
  CHECK(ledger.checked_count() == 1);

  std::vector<std::uint32_t> more{5, 9, 5, 100000};
  CHECK(mark_ranks(ledger, more) == 3);
  CHECK(ledger.checked_count() == 4);

  std::vector<std::uint32_t> bad{0};
  CHECK_THROWS_AS(mark_ranks(ledger, bad), InputError);
  std::vector<std::uint32_t> bad2{kCornerGroupOrder + 1};
  CHECK_THROWS_AS(mark_ranks(ledger, bad2), InputError);
}

TEST_CASE("class ranks of the identity") {
  const SymmetryGroup& M = symmetry_group();
  auto ranks = class_ranks_of(CornerPerm::identity(), M);
  REQUIRE(ranks.size() == 1);
  CHECK(ranks[0] == 1);
  CHECK(class_key(CornerPerm::identity(), M) == 1);
}

TEST_CASE("class orbits are bounded and never cross sigma parity") {
  const SymmetryGroup& M = symmetry_group();
  std::mt19937 rng(61);
  std::uniform_int_distribution<int> mv(1, 12);
  for (int t = 0; t < 50; ++t) {
    int len = 2 * (t % 8);
    Word w(len);
    for (Move& m : w) m = static_cast<Move>(mv(rng));
    CornerPerm c = corner_part(evaluate_word(w));
    auto ranks = class_ranks_of(c, M);
    CHECK(ranks.size() <= 2 * static_cast<std::size_t>(M.size()));
    bool even = rank_sigma_even(corner_rank(c));
    for (std::uint32_t r : ranks) CHECK(rank_sigma_even(r) == even);
    // the class key is one of the orbit's ranks
    CHECK(std::binary_search(ranks.begin(), ranks.end(), class_key(c, M)));
  }
}

TEST_CASE("12q edge-fixing elements fall into 113 classes") {
  const SymmetryGroup& M = symmetry_group();
  FixEdgesScan scan = scan_fix_edges(12, index6());
  std::vector<std::uint32_t> keys;
  for (std::size_t i = 0; i < scan.rank.size(); ++i)
    if (scan.dist[i] == 12)
      keys.push_back(class_key(corner_unrank(scan.rank[i]), M));
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  CHECK(keys.size() == 113);
}

TEST_CASE("identity seed checks exactly 3079007 positions") {
  const SymmetryGroup& M = symmetry_group();
  CoverLedger ledger;
  PositionsStore store;
  CoverStepStats stats =
      cover_seed_step(EdgePerm::identity(), ledger, store, index6(), M, 0);
  CHECK(stats.newly_checked == 3079007);
  CHECK(ledger.checked_count() == 3079007);
  CHECK(stats.words_stored == store.entries.size());

  // the identity class is stored with the empty word
  REQUIRE(store.entries.count(1) == 1);
  CHECK(store.entries.at(1).len == 0);

  // every element the distance scan found is now checked
  FixEdgesScan scan = scan_fix_edges(12, index6());
  for (std::uint32_t r : scan.rank) CHECK_FALSE(ledger.is_unchecked(r));

  // stored words evaluate into the edge-fixing subgroup, never longer
  // than 22, and land in the class of their key
  std::mt19937 rng(67);
  std::vector<std::uint32_t> keys;
  for (const auto& [k, w] : store.entries) keys.push_back(k);
  std::uniform_int_distribution<std::size_t> pick(0, keys.size() - 1);
  for (int t = 0; t < 300; ++t) {
    std::uint32_t k = keys[pick(rng)];
    const PackedWord& w = store.entries.at(k);
    CHECK(w.len <= 22);
    Perm48 p = evaluate_word(w.unpack());
    CHECK(edge_part(p).is_identity());
    auto orbit = class_ranks_of(corner_part(p), M);
    CHECK(std::binary_search(orbit.begin(), orbit.end(), k));
  }

  // marking is closed under the class relation
  for (int t = 0; t < 100; ++t) {
    std::uint32_t k = keys[pick(rng)];
    for (std::uint32_t r : class_ranks_of(corner_unrank(k), M))
      CHECK_FALSE(ledger.is_unchecked(r));
  }

  // no odd-sigma rank is ever marked
  std::uniform_int_distribution<std::uint32_t> rr(1, kCornerGroupOrder);
  for (int t = 0; t < 100000; ++t) {
    std::uint32_t r = rr(rng);
    if (!ledger.is_unchecked(r)) CHECK(rank_sigma_even(r));
  }
}

TEST_CASE("a second seed strictly extends the checked set") {
  const SymmetryGroup& M = symmetry_group();
  CoverLedger ledger;
  PositionsStore store;
  cover_seed_step(EdgePerm::identity(), ledger, store, index6(), M, 0);
  std::uint64_t base = ledger.checked_count();

  SeedPlan plan = make_seed_plan(edge_bfs4(), 2, M);
  REQUIRE(plan.seeds.size() == 6);  // identity + the 5 classes of length 2
  cover_seed_step(plan.seeds[1], ledger, store, index6(), M, 0);
  CHECK(ledger.checked_count() > base);

  // the step covered the products of every seed in the class: spot-check
  // a conjugated seed's product set
  std::mt19937 rng(71);
  Slice s10 = build_slice(10, plan.seeds[1], index6());
  Slice s12 = build_slice(12, inverse(plan.seeds[1]), index6());
  Slice s10c = conjugate_slice(s10, M, 7);
  Slice s12c = conjugate_slice(s12, M, 7);
  std::uniform_int_distribution<std::size_t> pa(0, s10c.size() - 1);
  std::uniform_int_distribution<std::size_t> pb(0, s12c.size() - 1);
  for (int t = 0; t < 200; ++t) {
    CornerPerm z = compose(s10c.corner[pa(rng)], s12c.corner[pb(rng)]);
    CHECK_FALSE(ledger.is_unchecked(corner_rank(z)));
  }
}

TEST_CASE("a length-4 seed plan pushes the cover well past the identity seed") {
  const SymmetryGroup& M = symmetry_group();
  SeedPlan plan = make_seed_plan(build_bfs(GroupKind::Edge, 4, {.threads = 0}),
                                 4, M);
  CHECK(plan.seeds.size() == 1 + 5 + 128);
  CoverLedger ledger;
  PositionsStore store;
  CoverOptions opt;
  opt.threads = 0;
  CoverResult res = run_cover(plan, ledger, store, index6(), M, opt);
  CHECK(res.seeds_processed == 134);
  CHECK(res.checked > 3079007);
  CHECK_FALSE(res.complete);
  CHECK(res.left == kFixEdgesOrder - res.checked);

  // every element the distance scan reports is checked (and stays checked
  // under any further seeds, since marking only grows)
  FixEdgesScan scan = scan_fix_edges(12, index6());
  CHECK(scan.rank.size() == 9293);
  for (std::uint32_t r : scan.rank) CHECK_FALSE(ledger.is_unchecked(r));
}

TEST_CASE("seed plans are class representatives in increasing length") {
  const SymmetryGroup& M = symmetry_group();
  SeedPlan plan = make_seed_plan(edge_bfs4(), 4, M);
  CHECK(plan.seeds[0] == EdgePerm::identity());
  CHECK(plan.seeds.size() == 1 + 5 + 128);
  // no two seeds share a class
  std::vector<EdgePerm> canon;
  for (const EdgePerm& g : plan.seeds) canon.push_back(M.canon_edge_approx(g));
  std::sort(canon.begin(), canon.end());
  CHECK(std::adjacent_find(canon.begin(), canon.end()) == canon.end());
}

TEST_CASE("seed files round-trip") {
  namespace fs = std::filesystem;
  const SymmetryGroup& M = symmetry_group();
  fs::path dir = fs::temp_directory_path() / "qtm_seed_test";
  fs::create_directories(dir);
  fs::path file = dir / "seeds.txt";

  SeedPlan plan = make_seed_plan(edge_bfs4(), 2, M);
  save_seed_file(file, plan);
  SeedPlan loaded = load_seed_file(file);
  CHECK(loaded.seeds == plan.seeds);

  std::ofstream(file) << "# comment only\n 1 2 3\n";
  CHECK_THROWS_AS(load_seed_file(file), InputError);
  std::ofstream(file) << "1 1 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 "
                         "21 22 23 24\n";
  CHECK_THROWS_AS(load_seed_file(file), InputError);
  fs::remove_all(dir);
}

TEST_CASE("run_cover emits progress lines and checkpoints") {
  namespace fs = std::filesystem;
  const SymmetryGroup& M = symmetry_group();
  fs::path dir = fs::temp_directory_path() / "qtm_ckpt_test";
  fs::remove_all(dir);

  SeedPlan plan;
  plan.seeds.push_back(EdgePerm::identity());
  CoverLedger ledger;
  PositionsStore store;
  std::ostringstream progress;
  CoverOptions opt;
  opt.threads = 0;
  opt.checkpoint_dir = dir;
  opt.progress = &progress;
  CoverResult res = run_cover(plan, ledger, store, index6(), M, opt);

  CHECK(res.checked == 3079007);
  CHECK(res.left == 41010913);
  CHECK_FALSE(res.complete);
  CHECK(progress.str() ==
        "Positions checked:3079007 Positions left:41010913\n");

  // resume from the checkpoint: the seed is skipped, state identical
  CoverLedger ledger2;
  PositionsStore store2;
  CoverResult res2 = run_cover(plan, ledger2, store2, index6(), M, opt);
  CHECK(res2.checked == res.checked);
  CHECK(store2.entries.size() == store.entries.size());
  CHECK(std::equal(ledger2.words().begin(), ledger2.words().end(),
                   ledger.words().begin()));

  CoverOptions strict = opt;
  strict.throw_if_incomplete = true;
  fs::remove_all(dir);
  CoverLedger ledger3;
  PositionsStore store3;
  CHECK_THROWS_AS(run_cover(plan, ledger3, store3, index6(), M, strict),
                  IncompleteCoverError);
  fs::remove_all(dir);
}

TEST_CASE("verification re-derives the checked count from words alone") {
  const SymmetryGroup& M = symmetry_group();
  CoverLedger ledger;
  PositionsStore store;
  cover_seed_step(EdgePerm::identity(), ledger, store, index6(), M, 0);
  CHECK(verify_store(store, M) == 3079007);

  PositionsStore tiny;
  tiny.entries.emplace(1, PackedWord{});
  CHECK(verify_store(tiny, M) == 1);

  // tampering is detected: an over-long word
  PositionsStore bad = tiny;
  PackedWord long_word;
  long_word.len = 23;
  bad.entries[2] = long_word;
  CHECK_THROWS_AS(verify_store(bad, M), VerifyError);

  // ... and a word that does not fix the edges
  PositionsStore bad2 = tiny;
  bad2.entries[2] = PackedWord::pack({1});
  CHECK_THROWS_AS(verify_store(bad2, M), VerifyError);
}

TEST_CASE("stored witnesses solve every state of a covered class") {
  const SymmetryGroup& M = symmetry_group();
  CoverLedger ledger;
  PositionsStore store;
  cover_seed_step(EdgePerm::identity(), ledger, store, index6(), M, 0);

  CHECK(solve_state(CornerPerm::identity(), store, M).empty());

  std::vector<std::uint32_t> keys;
  for (const auto& [k, w] : store.entries) keys.push_back(k);
  std::mt19937 rng(83);
  std::uniform_int_distribution<std::size_t> pick(0, keys.size() - 1);
  std::uniform_int_distribution<int> mdist(0, M.size() - 1);
  for (int t = 0; t < 200; ++t) {
    // any member of a covered class, scrambled through the symmetry
    CornerPerm rep = corner_part(
        evaluate_word(store.entries.at(keys[pick(rng)]).unpack()));
    CornerPerm state = M.conj_corner(rep, mdist(rng));
    if (t % 2) state = inverse(state);
    Word w = solve_state(state, store, M);
    CHECK(w.size() <= 22);
    CHECK(compose(state, corner_part(evaluate_word(w))).is_identity());
    CHECK(edge_part(evaluate_word(w)).is_identity());
  }

  // a class outside the partial cover is reported missing
  for (std::uint32_t r = 2; r < kCornerGroupOrder; ++r) {
    if (!rank_sigma_even(r) || !ledger.is_unchecked(r)) continue;
    CHECK_THROWS_AS(solve_state(corner_unrank(r), store, M), StoreError);
    break;
  }
}

TEST_CASE("ledger and store files round-trip") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "qtm_store_test";
  fs::create_directories(dir);

  CoverLedger ledger;
  std::vector<std::uint32_t> ranks{1, 2, 88179840, 12345678};
  mark_ranks(ledger, ranks);
  ledger.save(dir / "ledger.qtmv");
  CoverLedger back = CoverLedger::load(dir / "ledger.qtmv");
  CHECK(back.checked_count() == 4);
  for (std::uint32_t r : ranks) CHECK_FALSE(back.is_unchecked(r));
  // fixed layout: magic + version + 11022480 bytes of bits
  CHECK(fs::file_size(dir / "ledger.qtmv") == 4 + 4 + 11022480);

  PositionsStore store;
  store.entries.emplace(1, PackedWord{});
  store.entries.emplace(999, PackedWord::pack({1, 2, 3, 11}));
  store.save(dir / "store.qtmp");
  PositionsStore sback = PositionsStore::load(dir / "store.qtmp");
  CHECK(sback.entries.size() == 2);
  CHECK(sback.entries.at(999).unpack() == Word{1, 2, 3, 11});

  CHECK_THROWS_AS(PositionsStore::load(dir / "nothere.qtmp"), StoreError);
  CHECK_THROWS_AS(CoverLedger::load(dir / "store.qtmp"), StoreError);
  fs::remove_all(dir);
}
