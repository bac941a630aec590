// Command-line surface: tables, distance distributions, cover runs with
// checkpointing, store verification, single-state solving, self-tests and
// cache maintenance.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qtm/bfs.hpp"
#include "qtm/cornerindex.hpp"
#include "qtm/cover.hpp"
#include "qtm/distance.hpp"
#include "qtm/errors.hpp"
#include "qtm/generators.hpp"
#include "qtm/parallel.hpp"
#include "qtm/slices.hpp"
#include "qtm/symmetry.hpp"
#include "qtm/tables.hpp"

namespace fs = std::filesystem;
using namespace qtm;

namespace {

struct CommonOpts {
  int threads = 0;
  std::uint64_t mem = 8ull << 30;
  std::string cache_dir;
  std::string format = "text";
};

void add_common(CLI::App* cmd, CommonOpts& c) {
  cmd->add_option("--threads", c.threads, "worker threads (0 = all)");
  cmd->add_option("--mem", c.mem, "memory budget in bytes");
  cmd->add_option("--cache-dir", c.cache_dir,
                  "layer cache directory (default $QTM_CACHE_DIR)");
}

fs::path cache_dir_or_default(const CommonOpts& c) {
  if (!c.cache_dir.empty()) return c.cache_dir;
  if (const char* env = std::getenv("QTM_CACHE_DIR")) return env;
  return {};
}

fs::path cache_file(const fs::path& dir, GroupKind kind, int depth) {
  std::string name = kind == GroupKind::Edge ? "edge_d" : "cube_d";
  return dir / (name + std::to_string(depth) + ".qtmb");
}

LayeredBfs get_bfs(GroupKind kind, int depth, const CommonOpts& c) {
  fs::path dir = cache_dir_or_default(c);
  if (!dir.empty()) {
    auto cached = load_bfs(cache_file(dir, kind, depth));
    if (cached && cached->kind == kind && cached->depth() >= depth) {
      cached->layers.resize(depth + 1);
      return std::move(*cached);
    }
  }
  BfsOptions opt;
  opt.threads = c.threads;
  opt.mem_budget = c.mem;
  return build_bfs(kind, depth, opt);
}

EdgeBlockIndex get_index(const CommonOpts& c) {
  return build_block_index(get_bfs(GroupKind::Cube, 6, c));
}

std::string describe_edge_obstruction(const EdgePerm& e) {
  std::ostringstream os;
  os << "state is outside the edge-fixing subgroup: edge facelets move as "
     << cycle_string(e);
  return os.str();
}

int run_tables(const std::string& group, int depth, const CommonOpts& c) {
  GroupKind kind;
  if (group == "edge")
    kind = GroupKind::Edge;
  else if (group == "cube")
    kind = GroupKind::Cube;
  else
    throw InputError("unknown group: " + group);
  LayeredBfs bfs = get_bfs(kind, depth, c);
  auto rows = layer_class_table(bfs, symmetry_group(), c.threads);
  std::cout << format_rows(rows, parse_format(c.format), false);
  return kOk;
}

int run_distdist(const std::string& subgroup, int max, const CommonOpts& c) {
  Subgroup sub;
  if (subgroup == "fix-edges")
    sub = Subgroup::FixEdges;
  else if (subgroup == "fix-cubies")
    sub = Subgroup::FixCubiePositions;
  else
    throw InputError("unknown subgroup: " + subgroup);
  EdgeBlockIndex idx = get_index(c);
  auto rows = distance_distribution(sub, max, idx, symmetry_group(), c.threads);
  std::cout << format_rows(rows, parse_format(c.format), true);
  return kOk;
}

SeedPlan resolve_seeds(const std::string& spec, const CommonOpts& c) {
  if (spec.empty() || spec == "identity-only") {
    SeedPlan plan;
    plan.seeds.push_back(EdgePerm::identity());
    return plan;
  }
  if (spec.rfind("len<=", 0) == 0) {
    int len = std::stoi(spec.substr(5));
    if (len < 0 || len % 2 != 0)
      throw InputError("seed length bound must be even");
    LayeredBfs edge = get_bfs(GroupKind::Edge, len, c);
    return make_seed_plan(edge, len, symmetry_group());
  }
  return load_seed_file(spec);
}

int run_cover_cmd(const std::string& seeds, const std::string& store_path,
                  const std::string& checkpoint, const CommonOpts& c) {
  SeedPlan plan = resolve_seeds(seeds, c);
  EdgeBlockIndex idx = get_index(c);
  CoverLedger ledger;
  PositionsStore store;
  CoverOptions opt;
  opt.threads = c.threads;
  opt.progress = &std::cout;
  if (!checkpoint.empty()) opt.checkpoint_dir = checkpoint;
  CoverResult res =
      run_cover(plan, ledger, store, idx, symmetry_group(), opt);
  if (!store_path.empty()) store.save(store_path);
  if (!res.complete) {
    std::cerr << "cover incomplete: " << res.left << " positions left after "
              << res.seeds_processed << " seeds\n";
    return kIncompleteCover;
  }
  return kOk;
}

int run_verify(const std::string& store_path, const CommonOpts&) {
  PositionsStore store = PositionsStore::load(store_path);
  std::uint64_t count = verify_store(store, symmetry_group());
  std::cout << count << "\n";
  if (count != kFixEdgesOrder) {
    std::cerr << "verification failed: " << (kFixEdgesOrder - count)
              << " positions unaccounted for\n";
    return kVerifyError;
  }
  return kOk;
}

int run_solve(const std::string& store_path, const std::string& moves,
              const std::string& perm_spec, const std::string& ori_spec,
              const CommonOpts&) {
  const SymmetryGroup& M = symmetry_group();

  CornerPerm state_corner;
  if (!moves.empty()) {
    Perm48 z = evaluate_word(parse_moves(moves));
    EdgePerm e = edge_part(z);
    if (!e.is_identity()) throw DomainError(describe_edge_obstruction(e));
    state_corner = corner_part(z);
  } else if (!perm_spec.empty() || !ori_spec.empty()) {
    CornerState st;
    auto decomma = [](std::string s) {
      for (char& ch : s)
        if (ch == ',') ch = ' ';
      return s;
    };
    std::istringstream ps(decomma(perm_spec)), os(decomma(ori_spec));
    int v;
    for (int i = 0; i < 8; ++i) {
      if (!(ps >> v) || v < 1 || v > 8)
        throw InputError("corner permutation needs 8 images in 1..8");
      st.sigma.img[i] = static_cast<std::uint8_t>(v - 1);
      if (!(os >> v) || v < 0 || v > 2)
        throw InputError("corner orientation needs 8 trits in 0..2");
      st.ori[i] = static_cast<std::uint8_t>(v);
    }
    std::array<bool, 8> seen{};
    int orisum = 0;
    for (int i = 0; i < 8; ++i) {
      if (seen[st.sigma.img[i]])
        throw InputError("corner permutation is not a bijection on 1..8");
      seen[st.sigma.img[i]] = true;
      orisum += st.ori[i];
    }
    if (orisum % 3 != 0)
      throw DomainError("corner twist sum is not 0 mod 3");
    if (!parity_even(st.sigma))
      throw DomainError(
          "state is outside the edge-fixing subgroup: odd cubie permutation");
    state_corner = corner_recompose(st);
  } else {
    throw InputError("solve needs --moves or --corner-perm/--corner-ori");
  }

  if (state_corner == CornerPerm::identity()) {
    std::cout << "already solved: empty word\n";
    return kOk;
  }

  PositionsStore store = PositionsStore::load(store_path);
  Word out = solve_state(state_corner, store, M);

  std::cout << format_moves(out) << "\n";
  std::cout << "moves:";
  for (Move m : out) std::cout << " " << static_cast<int>(m);
  std::cout << "\nlength: " << out.size() << "\n";
  return kOk;
}

int run_selftest(std::uint32_t rank_range, const CommonOpts& c) {
  int failures = 0;
  auto report = [&](const char* name, bool ok) {
    std::cout << (ok ? "pass" : "FAIL") << ": " << name << "\n";
    if (!ok) ++failures;
  };

  bool built = false;
  try {
    generator_set();
    symmetry_group();
    built = true;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
  }
  report("generator construction and printed symmetry action", built);

  bool bij = built && rank_roundtrip_ok(1, rank_range, c.threads);
  report("rank/unrank round-trip", bij);

  bool parity_ok = true;
  std::uint64_t seed = 0x9e3779b97f4a7c15ull;
  for (int t = 0; t < 100000 && parity_ok; ++t) {
    Word w;
    seed = seed * 6364136223846793005ull + 1442695040888963407ull;
    int len = static_cast<int>(seed >> 58) % 18;
    for (int i = 0; i < len; ++i) {
      seed = seed * 6364136223846793005ull + 1442695040888963407ull;
      w.push_back(static_cast<Move>(1 + ((seed >> 33) % 12)));
    }
    parity_ok = word_parity_odd(evaluate_word(w)) == (w.size() % 2 == 1);
  }
  report("word parity law on random words", parity_ok);

  return failures == 0 ? kOk : kInternalError;
}

int run_cache(const std::string& group, int depth, const CommonOpts& c) {
  GroupKind kind;
  if (group == "edge")
    kind = GroupKind::Edge;
  else if (group == "cube")
    kind = GroupKind::Cube;
  else
    throw InputError("unknown group: " + group);
  fs::path dir = cache_dir_or_default(c);
  if (dir.empty()) dir = "cache";
  fs::create_directories(dir);
  BfsOptions opt;
  opt.threads = c.threads;
  opt.mem_budget = c.mem;
  LayeredBfs bfs = build_bfs(kind, depth, opt);
  fs::path file = cache_file(dir, kind, depth);
  save_bfs(file, bfs);
  std::cout << "wrote " << file.string() << " (" << bfs.total_elements()
            << " elements)\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "quarter-turn-metric tables, covering runs and verification for the "
      "cube group's edge-fixing subgroup"};
  app.require_subcommand(1);

  CommonOpts c;

  auto* tables = app.add_subcommand(
      "tables", "layer table of a group: positions and class counts");
  std::string group = "edge";
  int depth = 5;
  tables->add_option("--group", group, "edge or cube");
  tables->add_option("--depth", depth, "table depth");
  tables->add_option("--format", c.format, "text, csv or json");
  add_common(tables, c);

  auto* distdist = app.add_subcommand(
      "distdist", "distance distribution of a subgroup (identity-seed split)");
  std::string subgroup = "fix-edges";
  int maxdist = 12;
  distdist->add_option("--subgroup", subgroup, "fix-edges or fix-cubies");
  distdist->add_option("--max", maxdist, "largest distance (<= 12)");
  distdist->add_option("--format", c.format, "text, csv or json");
  add_common(distdist, c);

  auto* cover = app.add_subcommand(
      "cover", "check off edge-fixing positions and collect witness words");
  std::string seeds = "identity-only";
  std::string store_path = "positions.qtmp";
  std::string checkpoint;
  cover->add_option("--seeds", seeds,
                    "identity-only, len<=K, or a seed file path");
  cover->add_option("--store", store_path, "positions store output");
  cover->add_option("--checkpoint", checkpoint, "checkpoint directory");
  add_common(cover, c);

  auto* verify = app.add_subcommand(
      "verify", "independently re-check a positions store");
  std::string verify_store_path = "positions.qtmp";
  verify->add_option("--store", verify_store_path, "positions store input");
  add_common(verify, c);

  auto* solve =
      app.add_subcommand("solve", "look up a word for an edge-fixing state");
  std::string moves, perm_spec, ori_spec, solve_store = "positions.qtmp";
  solve->add_option("--store", solve_store, "positions store input");
  solve->add_option("--moves", moves, "scramble in face-turn notation");
  solve->add_option("--corner-perm", perm_spec,
                    "corner cubie images, e.g. 5,6,3,4,2,1,8,7");
  solve->add_option("--corner-ori", ori_spec,
                    "corner twists, e.g. 1,0,0,0,0,0,0,2");
  add_common(solve, c);

  auto* selftest = app.add_subcommand("selftest", "construction cross-checks");
  std::uint32_t rank_range = 1000000;
  selftest->add_option("--max", rank_range, "rank round-trip range");
  add_common(selftest, c);

  auto* cache = app.add_subcommand("bfs-cache", "build and persist a layer cache");
  std::string cache_group = "cube";
  int cache_depth = 6;
  cache->add_option("--group", cache_group, "edge or cube");
  cache->add_option("--depth", cache_depth, "search depth");
  add_common(cache, c);

  CLI11_PARSE(app, argc, argv);

  try {
    if (tables->parsed()) return run_tables(group, depth, c);
    if (distdist->parsed()) return run_distdist(subgroup, maxdist, c);
    if (cover->parsed()) return run_cover_cmd(seeds, store_path, checkpoint, c);
    if (verify->parsed()) return run_verify(verify_store_path, c);
    if (solve->parsed())
      return run_solve(solve_store, moves, perm_spec, ori_spec, c);
    if (selftest->parsed()) return run_selftest(rank_range, c);
    if (cache->parsed()) return run_cache(cache_group, cache_depth, c);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const ResourceError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return kResourceError;
  } catch (const IncompleteCoverError& e) {
    std::cerr << e.what() << "\n";
    return kIncompleteCover;
  } catch (const VerifyError& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return kVerifyError;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kDomainError;
  } catch (const StoreError& e) {
    std::cerr << "store error: " << e.what() << "\n";
    return kStoreError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInternalError;
  }
  return kInternalError;
}
