#include "qtm/cover.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cctype>
#include <cstring>
#include <fstream>
#include <mutex>
#include <set>
#include <string>

#include "qtm/errors.hpp"
#include "qtm/generators.hpp"
#include "qtm/parallel.hpp"

namespace qtm {

CoverLedger::CoverLedger() : bits_(kWords, ~0ull) {}

bool CoverLedger::is_unchecked(std::uint32_t rank) const {
  std::uint32_t i = rank - 1;
  return (bits_[i >> 6] >> (i & 63)) & 1;
}

bool CoverLedger::clear(std::uint32_t rank) {
  if (rank < 1 || rank > kCornerGroupOrder)
    throw InputError("rank out of range [1, 88179840]: " +
                     std::to_string(rank));
  std::uint32_t i = rank - 1;
  std::uint64_t mask = 1ull << (i & 63);
  std::atomic_ref<std::uint64_t> word(bits_[i >> 6]);
  std::uint64_t prev = word.fetch_and(~mask, std::memory_order_relaxed);
  return (prev & mask) != 0;
}

std::uint64_t CoverLedger::checked_count() const {
  std::uint64_t set = 0;
  for (std::uint64_t w : bits_) set += static_cast<std::uint64_t>(std::popcount(w));
  return kCornerGroupOrder - set;
}

std::uint64_t mark_ranks(CoverLedger& ledger,
                         std::span<const std::uint32_t> ranks) {
  std::uint64_t fresh = 0;
  for (std::uint32_t r : ranks) fresh += ledger.clear(r);
  return fresh;
}

std::vector<std::uint32_t> class_ranks_of(const CornerPerm& el,
                                          const SymmetryGroup& M) {
  std::vector<std::uint32_t> out;
  out.reserve(2 * M.size());
  const CornerPerm inv = inverse(el);
  for (int m = 0; m < M.size(); ++m) {
    out.push_back(corner_rank(M.conj_corner(el, m)));
    out.push_back(corner_rank(M.conj_corner(inv, m)));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::uint32_t class_key(const CornerPerm& el, const SymmetryGroup& M) {
  return corner_rank(M.canon_corner_approx(el));
}

namespace {

constexpr char kLedgerMagic[4] = {'Q', 'T', 'M', 'V'};
constexpr char kStoreMagic[4] = {'Q', 'T', 'M', 'P'};
constexpr std::uint32_t kFileVersion = 1;

template <class T>
void put(std::ofstream& os, T v) {
  std::uint8_t buf[sizeof(T)];
  for (std::size_t i = 0; i < sizeof(T); ++i)
    buf[i] = static_cast<std::uint8_t>(v >> (8 * i));
  os.write(reinterpret_cast<const char*>(buf), sizeof(T));
}

template <class T>
void get_or_throw(std::ifstream& is, T& v, const char* what) {
  std::uint8_t buf[sizeof(T)];
  if (!is.read(reinterpret_cast<char*>(buf), sizeof(T)))
    throw StoreError(std::string("truncated file while reading ") + what);
  v = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i)
    v |= static_cast<T>(buf[i]) << (8 * i);
}

}  // namespace

void CoverLedger::save(const std::filesystem::path& path) const {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw StoreError("cannot write ledger " + path.string());
  os.write(kLedgerMagic, 4);
  put(os, kFileVersion);
  for (std::uint64_t w : bits_) put(os, w);  // LSB-first bit order
  if (!os) throw StoreError("write failed for ledger " + path.string());
}

CoverLedger CoverLedger::load(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw StoreError("cannot open ledger " + path.string());
  char magic[4];
  if (!is.read(magic, 4) || std::memcmp(magic, kLedgerMagic, 4) != 0)
    throw StoreError("bad ledger magic in " + path.string());
  std::uint32_t version;
  get_or_throw(is, version, "ledger version");
  if (version != kFileVersion)
    throw StoreError("unsupported ledger version in " + path.string());
  CoverLedger ledger;
  for (std::size_t i = 0; i < kWords; ++i)
    get_or_throw(is, ledger.bits_[i], "ledger bits");
  return ledger;
}

void PositionsStore::save(const std::filesystem::path& path) const {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw StoreError("cannot write store " + path.string());
  os.write(kStoreMagic, 4);
  put(os, kFileVersion);
  put(os, static_cast<std::uint64_t>(entries.size()));
  for (const auto& [rank, word] : entries) {
    put(os, rank);
    put(os, word.len);
    os.write(reinterpret_cast<const char*>(word.nib.data()),
             static_cast<std::streamsize>(word.nib.size()));
  }
  if (!os) throw StoreError("write failed for store " + path.string());
}

PositionsStore PositionsStore::load(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw StoreError("cannot open store " + path.string());
  char magic[4];
  if (!is.read(magic, 4) || std::memcmp(magic, kStoreMagic, 4) != 0)
    throw StoreError("bad store magic in " + path.string());
  std::uint32_t version;
  get_or_throw(is, version, "store version");
  if (version != kFileVersion)
    throw StoreError("unsupported store version in " + path.string());
  std::uint64_t count;
  get_or_throw(is, count, "store entry count");
  PositionsStore store;
  for (std::uint64_t i = 0; i < count; ++i) {
    std::uint32_t rank;
    std::uint8_t len;
    get_or_throw(is, rank, "entry rank");
    get_or_throw(is, len, "entry word length");
    PackedWord w;
    w.len = len;
    if (!is.read(reinterpret_cast<char*>(w.nib.data()),
                 static_cast<std::streamsize>(w.nib.size())))
      throw StoreError("truncated store entry in " + path.string());
    store.entries.emplace(rank, w);
  }
  return store;
}

SeedPlan make_seed_plan(const LayeredBfs& edge_bfs, int max_len,
                        const SymmetryGroup& M) {
  if (edge_bfs.kind != GroupKind::Edge)
    throw InputError("seed plan needs the edge-group search");
  if (max_len > edge_bfs.depth())
    throw InputError("seed length exceeds the built search depth");
  SeedPlan plan;
  plan.seeds.push_back(EdgePerm::identity());
  for (int d = 2; d <= max_len; d += 2) {
    // layers are unions of ≈-classes, so the distinct canonical forms are
    // exactly one representative per class
    const auto& layer = edge_bfs.layers[d];
    std::vector<EdgePerm> reps(layer.edge.size());
    for (std::size_t i = 0; i < layer.edge.size(); ++i)
      reps[i] = M.canon_edge_approx(unpack24(layer.edge[i]));
    std::sort(reps.begin(), reps.end());
    reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
    plan.seeds.insert(plan.seeds.end(), reps.begin(), reps.end());
  }
  return plan;
}

SeedPlan load_seed_file(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw InputError("cannot open seed file " + path.string());
  SeedPlan plan;
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::vector<int> vals;
    std::size_t pos = 0;
    while (pos < line.size()) {
      while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
      if (pos >= line.size()) break;
      std::size_t end;
      int v;
      try {
        v = std::stoi(line.substr(pos), &end);
      } catch (const std::exception&) {
        throw InputError("seed file " + path.string() + ":" +
                         std::to_string(lineno) + ": not an image list");
      }
      vals.push_back(v);
      pos += end;
    }
    if (vals.empty()) continue;
    if (vals.size() != 24)
      throw InputError("seed file " + path.string() + ":" +
                       std::to_string(lineno) + ": expected 24 images, got " +
                       std::to_string(vals.size()));
    EdgePerm g;
    std::array<bool, 24> seen{};
    for (int i = 0; i < 24; ++i) {
      if (vals[i] < 1 || vals[i] > 24 || seen[vals[i] - 1])
        throw InputError("seed file " + path.string() + ":" +
                         std::to_string(lineno) + ": not a permutation");
      seen[vals[i] - 1] = true;
      g.img[i] = static_cast<std::uint8_t>(vals[i] - 1);
    }
    plan.seeds.push_back(g);
  }
  return plan;
}

void save_seed_file(const std::filesystem::path& path, const SeedPlan& plan) {
  std::ofstream os(path, std::ios::trunc);
  if (!os) throw InputError("cannot write seed file " + path.string());
  os << "# edge permutations, one 24-entry image list per line\n";
  for (const EdgePerm& g : plan.seeds) {
    for (int i = 0; i < 24; ++i)
      os << (i ? " " : "") << static_cast<int>(g.img[i]) + 1;
    os << "\n";
  }
}

namespace {

// products A * B with every product's ≈-orbit checked off
CoverStepStats process_products(const Slice& A, const Slice& B,
                                CoverLedger& ledger, PositionsStore& store,
                                const SymmetryGroup& M, int threads) {
  CoverStepStats stats;
  std::int64_t n = static_cast<std::int64_t>(A.size());
  std::atomic<std::uint64_t> newly{0}, stored{0};
  std::mutex store_mu;
  parallel_for(n, threads, [&](std::int64_t lo, std::int64_t hi) {
    for (std::int64_t i = lo; i < hi; ++i) {
      for (std::size_t j = 0; j < B.size(); ++j) {
        CornerPerm z = compose(A.corner[i], B.corner[j]);
        std::uint32_t r = corner_rank(z);
        if (!ledger.is_unchecked(r)) continue;
        PackedWord w = PackedWord::concat(A.word[i], B.word[j]);
        std::vector<std::uint32_t> orbit = class_ranks_of(z, M);
        std::uint64_t fresh = mark_ranks(ledger, orbit);
        newly += fresh;
        if (fresh) {
          std::uint32_t key = class_key(z, M);
          std::lock_guard<std::mutex> lock(store_mu);
          auto [it, inserted] = store.entries.emplace(key, w);
          if (inserted) ++stored;
        }
      }
    }
  });
  stats.newly_checked = newly.load();
  stats.words_stored = stored.load();
  return stats;
}

}  // namespace

CoverStepStats cover_seed_step(const EdgePerm& g, CoverLedger& ledger,
                               PositionsStore& store,
                               const EdgeBlockIndex& idx,
                               const SymmetryGroup& M, int threads) {
  Slice s10 = build_slice(10, g, idx, threads);
  Slice s12 = build_slice(12, g, idx, threads);
  if (s10.size() == 0 && s12.size() == 0) return {};  // L_e(g) > 12

  const EdgePerm ginv = inverse(g);
  CoverStepStats stats;
  if (g == ginv) {
    // involution: both product orders coincide
    Slice s12i = invert_slice(s12);
    CoverStepStats a = process_products(s10, s12i, ledger, store, M, threads);
    stats.newly_checked += a.newly_checked;
    stats.words_stored += a.words_stored;
  } else {
    Slice s10i = invert_slice(s10);
    Slice s12i = invert_slice(s12);
    CoverStepStats a = process_products(s10, s12i, ledger, store, M, threads);
    CoverStepStats b = process_products(s10i, s12, ledger, store, M, threads);
    stats.newly_checked += a.newly_checked + b.newly_checked;
    stats.words_stored += a.words_stored + b.words_stored;
  }
  return stats;
}

namespace {

struct CoverRun {
  CoverLedger& ledger;
  PositionsStore& store;
  const EdgeBlockIndex& idx;
  const SymmetryGroup& M;
  const CoverOptions& opt;
  std::size_t processed = 0;
  std::size_t resume_at = 0;

  bool complete() const {
    return ledger.checked_count() >= kFixEdgesOrder;
  }

  bool budget_spent() const {
    return opt.max_seeds > 0 && processed >= opt.max_seeds;
  }

  void step(const EdgePerm& g) {
    ++processed;
    if (processed <= resume_at) return;  // already in the checkpoint
    cover_seed_step(g, ledger, store, idx, M, opt.threads);
    if (opt.progress) {
      std::uint64_t checked = ledger.checked_count();
      *opt.progress << "Positions checked:" << checked
                    << " Positions left:" << kFixEdgesOrder - checked << "\n"
                    << std::flush;
    }
    if (!opt.checkpoint_dir.empty()) {
      ledger.save(opt.checkpoint_dir / "ledger.qtmv");
      store.save(opt.checkpoint_dir / "positions.qtmp");
      std::ofstream os(opt.checkpoint_dir / "cursor.txt", std::ios::trunc);
      os << processed << "\n";
    }
  }
};

// length-9/10 seed candidates: depth-8 frontier representatives extended
// by one or two further moves, skipping anything already reachable in 8
void run_lazy_extension(CoverRun& run) {
  const LayeredBfs& e8 = *run.opt.lazy_extension_bfs;
  const SymmetryGroup& M = run.M;
  const auto& frontier = e8.layers[8].edge;
  std::vector<Key120> reps;
  reps.reserve(700000);
  {
    std::vector<Key120> canon(frontier.size());
    std::int64_t n = static_cast<std::int64_t>(frontier.size());
    parallel_for(n, run.opt.threads, [&](std::int64_t b, std::int64_t e) {
      for (std::int64_t i = b; i < e; ++i)
        canon[i] = pack24(M.canon_edge_approx(unpack24(frontier[i])));
    });
    std::sort(canon.begin(), canon.end());
    canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
    reps = std::move(canon);
  }

  // the dedup set is an optimisation only: reprocessing a seed re-marks an
  // already-checked orbit, so dropping it under memory pressure is safe
  constexpr std::size_t kSeenCap = 30000000;
  std::set<Key120> seen;
  for (const Key120& rk : reps) {
    if (run.complete() || run.budget_spent()) return;
    EdgePerm r = unpack24(rk);
    for (int d = 1; d <= 2; ++d) {
      for (const Key120& ek : e8.layers[d].edge) {
        EdgePerm e = unpack24(ek);
        for (const EdgePerm& cand : {compose(r, e), compose(e, r)}) {
          if (e8.edge_distance(cand) >= 0) continue;  // length <= 8
          Key120 canon = pack24(M.canon_edge_approx(cand));
          if (seen.size() >= kSeenCap) seen.clear();
          if (!seen.insert(canon).second) continue;
          run.step(cand);
          if (run.complete() || run.budget_spent()) return;
        }
      }
    }
  }
}

}  // namespace

CoverResult run_cover(const SeedPlan& plan, CoverLedger& ledger,
                      PositionsStore& store, const EdgeBlockIndex& idx,
                      const SymmetryGroup& M, const CoverOptions& opt) {
  namespace fs = std::filesystem;
  CoverRun run{ledger, store, idx, M, opt};
  if (!opt.checkpoint_dir.empty()) {
    fs::create_directories(opt.checkpoint_dir);
    fs::path cursor = opt.checkpoint_dir / "cursor.txt";
    if (fs::exists(cursor)) {
      std::ifstream is(cursor);
      std::size_t done = 0;
      if (is >> done) {
        ledger = CoverLedger::load(opt.checkpoint_dir / "ledger.qtmv");
        store = PositionsStore::load(opt.checkpoint_dir / "positions.qtmp");
        run.resume_at = done;
      }
    }
  }

  for (const EdgePerm& g : plan.seeds) {
    if (run.complete() || run.budget_spent()) break;
    run.step(g);
  }
  if (!run.complete() && !run.budget_spent() && opt.lazy_extension_bfs &&
      opt.lazy_extension_bfs->depth() >= 8)
    run_lazy_extension(run);

  CoverResult res;
  res.checked = ledger.checked_count();
  res.left = kFixEdgesOrder - res.checked;
  res.seeds_processed = run.processed;
  res.complete = res.left == 0;
  if (!res.complete && opt.throw_if_incomplete)
    throw IncompleteCoverError(res.left);
  return res;
}

std::uint64_t verify_store(const PositionsStore& store,
                           const SymmetryGroup& M) {
  CoverLedger fresh;
  for (const auto& [key, word] : store.entries) {
    if (word.len > 22)
      throw VerifyError("stored word for rank " + std::to_string(key) +
                        " has length " + std::to_string(word.len));
    Perm48 z = evaluate_word(word.unpack());
    if (!edge_part(z).is_identity())
      throw VerifyError("stored word for rank " + std::to_string(key) +
                        " does not fix the edges");
    mark_ranks(fresh, class_ranks_of(corner_part(z), M));
  }
  return fresh.checked_count();
}

Word solve_state(const CornerPerm& state, const PositionsStore& store,
                 const SymmetryGroup& M) {
  if (state == CornerPerm::identity()) return {};
  const CornerPerm target = inverse(state);
  const std::uint32_t key = class_key(target, M);
  auto it = store.entries.find(key);
  if (it == store.entries.end())
    throw StoreError("class representative " + std::to_string(key) +
                     " is missing from the store");
  const Word w0 = it->second.unpack();
  const CornerPerm c0 = corner_part(evaluate_word(w0));

  Word out;
  bool found = false;
  for (int m = 0; m < M.size() && !found; ++m) {
    if (M.conj_corner(c0, m) == target) {
      out = M.relabel_word(w0, m);
      found = true;
    } else if (M.conj_corner(inverse(c0), m) == target) {
      out = M.relabel_word(invert_word(w0), m);
      found = true;
    }
  }
  if (!found)
    throw StoreError("stored witness for class " + std::to_string(key) +
                     " does not reach the requested state");
  if (out.size() > 22 ||
      !compose(state, corner_part(evaluate_word(out))).is_identity())
    throw StoreError("witness relabelling failed for class " +
                     std::to_string(key));
  return out;
}

}  // namespace qtm
