// Serial vs parallel timing of the hot kernels: layer expansion, class
// canonicalization sweeps, slice products and the rank round-trip.

#include <chrono>
#include <cstdio>
#include <string>

#include "qtm/bfs.hpp"
#include "qtm/cornerindex.hpp"
#include "qtm/cover.hpp"
#include "qtm/distance.hpp"
#include "qtm/parallel.hpp"
#include "qtm/symmetry.hpp"

using namespace qtm;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

template <class Fn>
void bench(const char* name, Fn&& fn) {
  Clock::time_point t0 = Clock::now();
  fn(1);
  double serial = seconds_since(t0);
  t0 = Clock::now();
  fn(0);
  double parallel = seconds_since(t0);
  std::printf("%-38s serial %8.3fs   parallel %8.3fs   speedup %.2fx\n", name,
              serial, parallel, parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main(int argc, char** argv) {
  int edge_depth = argc > 1 ? std::stoi(argv[1]) : 6;
  std::printf("threads available: %d\n", resolve_threads(0));

  bench("edge search to depth", [&](int threads) {
    build_bfs(GroupKind::Edge, edge_depth, {.threads = threads});
  });

  LayeredBfs edge = build_bfs(GroupKind::Edge, edge_depth, {.threads = 0});
  const SymmetryGroup& M = symmetry_group();
  bench("edge layer class counts", [&](int threads) {
    layer_class_table(edge, M, threads);
  });

  LayeredBfs cube = build_bfs(GroupKind::Cube, 6, {.threads = 0});
  EdgeBlockIndex idx = build_block_index(cube);
  bench("fix-edges distance scan", [&](int threads) {
    scan_fix_edges(12, idx, threads);
  });

  bench("identity-seed cover step", [&](int threads) {
    CoverLedger ledger;
    PositionsStore store;
    cover_seed_step(EdgePerm::identity(), ledger, store, idx, M, threads);
  });

  bench("rank round-trip, 10^7 ranks", [&](int threads) {
    rank_roundtrip_ok(1, 10000000, threads);
  });
  return 0;
}
