#include "qtm/bfs.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <string>

#include "qtm/errors.hpp"
#include "qtm/generators.hpp"
#include "qtm/parallel.hpp"

namespace qtm {
namespace {

struct EdgeCand {
  Key120 key;
  std::uint32_t word;
  friend bool operator<(const EdgeCand& a, const EdgeCand& b) {
    if (a.key != b.key) return a.key < b.key;
    return a.word < b.word;
  }
};

struct CubeCand {
  Key120 e, c;
  std::uint32_t word;
  friend bool operator<(const CubeCand& a, const CubeCand& b) {
    if (a.e != b.e) return a.e < b.e;
    if (a.c != b.c) return a.c < b.c;
    return a.word < b.word;
  }
};

template <class Cand>
void check_budget(std::uint64_t parents, std::uint64_t held,
                  std::uint64_t budget, int layer) {
  std::uint64_t need = held + parents * 12 * sizeof(Cand);
  if (need > budget)
    throw ResourceError("expanding layer " + std::to_string(layer) +
                        " needs about " + std::to_string(need >> 20) +
                        " MiB, over the " + std::to_string(budget >> 20) +
                        " MiB budget");
}

// candidates of layer d+1 = parents * generators, minus duplicates and
// minus layer d-1 (parity puts candidates at distance d-1 or d+1 only)
void expand_edge(const LayeredBfs::Layer& parents,
                 const LayeredBfs::Layer* back, LayeredBfs::Layer& out,
                 int parent_depth, int threads) {
  const GeneratorSet& gs = generator_set();
  std::int64_t n = static_cast<std::int64_t>(parents.edge.size());
  std::vector<EdgeCand> cands(static_cast<std::size_t>(n) * 12);
  parallel_for(n, threads, [&](std::int64_t b, std::int64_t e) {
    for (std::int64_t i = b; i < e; ++i) {
      EdgePerm p = unpack24(parents.edge[i]);
      std::uint32_t w = parents.word[i];
      for (int m = 0; m < 12; ++m) {
        EdgeCand& cd = cands[static_cast<std::size_t>(i) * 12 + m];
        cd.key = pack24(compose(p, gs.s_edge[m]));
        cd.word = wordr_append(w, parent_depth, static_cast<Move>(m + 1));
      }
    }
  });
  std::sort(cands.begin(), cands.end());

  out.edge.clear();
  out.word.clear();
  const std::vector<Key120>* backkeys = back ? &back->edge : nullptr;
  std::size_t bi = 0;
  Key120 last{~0ull, ~0ull};
  for (const EdgeCand& cd : cands) {
    if (cd.key == last) continue;
    last = cd.key;
    if (backkeys) {
      while (bi < backkeys->size() && (*backkeys)[bi] < cd.key) ++bi;
      if (bi < backkeys->size() && (*backkeys)[bi] == cd.key) continue;
    }
    out.edge.push_back(cd.key);
    out.word.push_back(cd.word);
  }
}

void expand_cube(const LayeredBfs::Layer& parents,
                 const LayeredBfs::Layer* back, LayeredBfs::Layer& out,
                 int parent_depth, int threads) {
  const GeneratorSet& gs = generator_set();
  std::int64_t n = static_cast<std::int64_t>(parents.edge.size());
  std::vector<CubeCand> cands(static_cast<std::size_t>(n) * 12);
  parallel_for(n, threads, [&](std::int64_t b, std::int64_t e) {
    for (std::int64_t i = b; i < e; ++i) {
      EdgePerm pe = unpack24(parents.edge[i]);
      CornerPerm pc = unpack24(parents.corner[i]);
      std::uint32_t w = parents.word[i];
      for (int m = 0; m < 12; ++m) {
        CubeCand& cd = cands[static_cast<std::size_t>(i) * 12 + m];
        cd.e = pack24(compose(pe, gs.s_edge[m]));
        cd.c = pack24(compose(pc, gs.s_corner[m]));
        cd.word = wordr_append(w, parent_depth, static_cast<Move>(m + 1));
      }
    }
  });
  std::sort(cands.begin(), cands.end());

  out.edge.clear();
  out.corner.clear();
  out.word.clear();
  std::size_t bi = 0;
  bool have_last = false;
  Key120 laste{}, lastc{};
  for (const CubeCand& cd : cands) {
    if (have_last && cd.e == laste && cd.c == lastc) continue;
    have_last = true;
    laste = cd.e;
    lastc = cd.c;
    if (back) {
      while (bi < back->edge.size() &&
             (back->edge[bi] < cd.e ||
              (back->edge[bi] == cd.e && back->corner[bi] < cd.c)))
        ++bi;
      if (bi < back->edge.size() && back->edge[bi] == cd.e &&
          back->corner[bi] == cd.c)
        continue;
    }
    out.edge.push_back(cd.e);
    out.corner.push_back(cd.c);
    out.word.push_back(cd.word);
  }
}

}  // namespace

Word wordr_unpack(std::uint32_t w, int len) {
  Word out(len);
  for (int i = 0; i < len; ++i) out[i] = wordr_move(w, i);
  return out;
}

PackedWord wordr_to_packed(std::uint32_t w, int len) {
  PackedWord p;
  p.len = static_cast<std::uint8_t>(len);
  for (int i = 0; i < len; ++i) p.set_move(i, wordr_move(w, i));
  return p;
}

std::uint64_t LayeredBfs::total_elements() const {
  std::uint64_t n = 0;
  for (const Layer& l : layers) n += l.edge.size();
  return n;
}

int LayeredBfs::edge_distance(const EdgePerm& g) const {
  Key120 k = pack24(g);
  for (int d = 0; d <= depth(); ++d)
    if (std::binary_search(layers[d].edge.begin(), layers[d].edge.end(), k))
      return d;
  return -1;
}

LayeredBfs build_bfs(GroupKind kind, int depth, const BfsOptions& opt) {
  if (depth < 0 ||
      depth > (kind == GroupKind::Edge ? kMaxEdgeDepth : kMaxCubeDepth))
    throw InputError("unsupported search depth " + std::to_string(depth));
  LayeredBfs bfs;
  bfs.kind = kind;
  bfs.layers.resize(depth + 1);
  bfs.layers[0].edge.push_back(pack24(EdgePerm::identity()));
  if (kind == GroupKind::Cube)
    bfs.layers[0].corner.push_back(pack24(CornerPerm::identity()));
  bfs.layers[0].word.push_back(0);

  std::uint64_t held = 0;
  for (int d = 0; d < depth; ++d) {
    const LayeredBfs::Layer* back = d >= 1 ? &bfs.layers[d - 1] : nullptr;
    if (kind == GroupKind::Edge) {
      check_budget<EdgeCand>(bfs.layers[d].edge.size(), held, opt.mem_budget,
                             d + 1);
      expand_edge(bfs.layers[d], back, bfs.layers[d + 1], d, opt.threads);
      held += bfs.layers[d + 1].edge.size() * (sizeof(Key120) + 4);
    } else {
      check_budget<CubeCand>(bfs.layers[d].edge.size(), held, opt.mem_budget,
                             d + 1);
      expand_cube(bfs.layers[d], back, bfs.layers[d + 1], d, opt.threads);
      held += bfs.layers[d + 1].edge.size() * (2 * sizeof(Key120) + 4);
    }
  }
  return bfs;
}

EdgeBlockIndex build_block_index(const LayeredBfs& cube_bfs) {
  if (cube_bfs.kind != GroupKind::Cube)
    throw InputError("block index requires a cube-group search");
  EdgeBlockIndex idx;
  idx.max_depth = cube_bfs.depth();
  std::uint64_t total = cube_bfs.total_elements();

  struct Item {
    Key120 e, c;
    std::uint32_t word;
    std::uint8_t depth;
  };
  std::vector<Item> items;
  items.reserve(total);
  for (int d = 0; d <= cube_bfs.depth(); ++d) {
    const auto& l = cube_bfs.layers[d];
    for (std::size_t i = 0; i < l.edge.size(); ++i)
      items.push_back({l.edge[i], l.corner[i], l.word[i],
                       static_cast<std::uint8_t>(d)});
  }
  std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
    if (a.e != b.e) return a.e < b.e;
    return a.c < b.c;
  });

  idx.edge.reserve(total);
  idx.corner.reserve(total);
  idx.word.reserve(total);
  idx.depth.reserve(total);
  for (std::size_t i = 0; i < items.size(); ++i) {
    const Item& it = items[i];
    if (i == 0 || it.e != items[i - 1].e) {
      idx.block_key.push_back(it.e);
      idx.block_off.push_back(i);
    }
    idx.edge.push_back(it.e);
    idx.corner.push_back(it.c);
    idx.word.push_back(it.word);
    idx.depth.push_back(it.depth);
  }
  idx.block_off.push_back(items.size());
  return idx;
}

EdgeBlockIndex::Block EdgeBlockIndex::find(const Key120& e) const {
  auto it = std::lower_bound(block_key.begin(), block_key.end(), e);
  if (it == block_key.end() || *it != e) return {};
  std::size_t b = static_cast<std::size_t>(it - block_key.begin());
  return {block_off[b], block_off[b + 1]};
}

std::uint64_t generator_checksum() {
  const GeneratorSet& gs = generator_set();
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  for (const Perm48& p : gs.s)
    for (std::uint8_t v : p.img) {
      h ^= v;
      h *= 1099511628211ull;
    }
  return h;
}

namespace {

constexpr char kBfsMagic[4] = {'Q', 'T', 'M', 'B'};
constexpr std::uint32_t kBfsVersion = 1;

template <class T>
void put(std::ofstream& os, T v) {
  std::uint8_t buf[sizeof(T)];
  for (std::size_t i = 0; i < sizeof(T); ++i)
    buf[i] = static_cast<std::uint8_t>(v >> (8 * i));
  os.write(reinterpret_cast<const char*>(buf), sizeof(T));
}

template <class T>
bool get(std::ifstream& is, T& v) {
  std::uint8_t buf[sizeof(T)];
  if (!is.read(reinterpret_cast<char*>(buf), sizeof(T))) return false;
  v = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i)
    v |= static_cast<T>(buf[i]) << (8 * i);
  return true;
}

}  // namespace

void save_bfs(const std::filesystem::path& path, const LayeredBfs& bfs) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw InputError("cannot write cache file " + path.string());
  os.write(kBfsMagic, 4);
  put(os, kBfsVersion);
  put(os, generator_checksum());
  put(os, static_cast<std::uint8_t>(bfs.kind));
  put(os, static_cast<std::uint8_t>(bfs.depth()));
  for (int d = 0; d <= bfs.depth(); ++d) {
    const auto& l = bfs.layers[d];
    put(os, static_cast<std::uint64_t>(l.edge.size()));
    for (std::size_t i = 0; i < l.edge.size(); ++i) {
      // one facelet image per byte, 1-based, full 48 points
      std::uint8_t img[48];
      EdgePerm e = unpack24(l.edge[i]);
      for (int x = 0; x < 24; ++x) img[x] = static_cast<std::uint8_t>(e.img[x] + 1);
      if (bfs.kind == GroupKind::Cube) {
        CornerPerm c = unpack24(l.corner[i]);
        for (int x = 0; x < 24; ++x)
          img[24 + x] = static_cast<std::uint8_t>(c.img[x] + 25);
      } else {
        for (int x = 24; x < 48; ++x) img[x] = static_cast<std::uint8_t>(x + 1);
      }
      os.write(reinterpret_cast<const char*>(img), 48);
    }
    int wbytes = (d + 1) / 2;
    for (std::size_t i = 0; i < l.word.size(); ++i) {
      PackedWord p = wordr_to_packed(l.word[i], d);
      os.write(reinterpret_cast<const char*>(p.nib.data()), wbytes);
    }
  }
  if (!os) throw InputError("write failed for cache file " + path.string());
}

std::optional<LayeredBfs> load_bfs(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) return std::nullopt;
  char magic[4];
  if (!is.read(magic, 4) || std::memcmp(magic, kBfsMagic, 4) != 0)
    return std::nullopt;
  std::uint32_t version;
  std::uint64_t checksum;
  std::uint8_t kind, depth;
  if (!get(is, version) || version != kBfsVersion) return std::nullopt;
  if (!get(is, checksum) || checksum != generator_checksum())
    return std::nullopt;
  if (!get(is, kind) || !get(is, depth)) return std::nullopt;

  LayeredBfs bfs;
  bfs.kind = static_cast<GroupKind>(kind);
  bfs.layers.resize(depth + 1);
  for (int d = 0; d <= depth; ++d) {
    auto& l = bfs.layers[d];
    std::uint64_t count;
    if (!get(is, count)) return std::nullopt;
    l.edge.resize(count);
    if (bfs.kind == GroupKind::Cube) l.corner.resize(count);
    l.word.resize(count);
    for (std::uint64_t i = 0; i < count; ++i) {
      std::uint8_t img[48];
      if (!is.read(reinterpret_cast<char*>(img), 48)) return std::nullopt;
      EdgePerm e;
      for (int x = 0; x < 24; ++x) e.img[x] = static_cast<std::uint8_t>(img[x] - 1);
      l.edge[i] = pack24(e);
      if (bfs.kind == GroupKind::Cube) {
        CornerPerm c;
        for (int x = 0; x < 24; ++x)
          c.img[x] = static_cast<std::uint8_t>(img[24 + x] - 25);
        l.corner[i] = pack24(c);
      }
    }
    int wbytes = (d + 1) / 2;
    for (std::uint64_t i = 0; i < count; ++i) {
      PackedWord p{};
      p.len = static_cast<std::uint8_t>(d);
      if (wbytes &&
          !is.read(reinterpret_cast<char*>(p.nib.data()), wbytes))
        return std::nullopt;
      std::uint32_t w = 0;
      for (int x = 0; x < d; ++x)
        w = wordr_append(w, x, p.move_at(x));
      l.word[i] = w;
    }
  }
  return bfs;
}

}  // namespace qtm
