#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include "qtm/perm.hpp"
#include "qtm/words.hpp"

namespace qtm {

enum class GroupKind : std::uint8_t { Edge = 0, Cube = 1 };

struct BfsOptions {
  int threads = 1;
  std::uint64_t mem_budget = 8ull << 30;
};

// Layer words are nibble-packed uint32 with move i at nibble (7 - i), so
// unsigned order equals lexicographic order of equal-length words.
inline std::uint32_t wordr_append(std::uint32_t w, int depth, Move m) {
  return w | (static_cast<std::uint32_t>(m) << (4 * (7 - depth)));
}
inline Move wordr_move(std::uint32_t w, int i) {
  return static_cast<Move>((w >> (4 * (7 - i))) & 0x0f);
}
Word wordr_unpack(std::uint32_t w, int len);
PackedWord wordr_to_packed(std::uint32_t w, int len);

// Depth-indexed layers of group elements, each with one geodesic word
// (first hit in (element, word) order, so the lexicographically least).
// Layer d holds exactly the elements of length d; deduplication uses the
// two-layers-back rule that parity permits.
struct LayeredBfs {
  GroupKind kind = GroupKind::Edge;
  struct Layer {
    std::vector<Key120> edge;            // sorted key (primary)
    std::vector<Key120> corner;          // Cube kind only
    std::vector<std::uint32_t> word;
  };
  std::vector<Layer> layers;

  int depth() const { return static_cast<int>(layers.size()) - 1; }
  std::uint64_t total_elements() const;
  // exact length of an edge element, or -1 if beyond the built depth
  int edge_distance(const EdgePerm& g) const;
};

constexpr int kMaxEdgeDepth = 8;
constexpr int kMaxCubeDepth = 7;

LayeredBfs build_bfs(GroupKind kind, int depth, const BfsOptions& opt = {});

// All cube elements of length <= depth flattened and sorted by
// (edge part, corner part): contiguous blocks per edge projection.
struct EdgeBlockIndex {
  int max_depth = 0;
  std::vector<Key120> edge;
  std::vector<Key120> corner;
  std::vector<std::uint32_t> word;
  std::vector<std::uint8_t> depth;
  std::vector<Key120> block_key;        // unique edge keys, sorted
  std::vector<std::uint64_t> block_off; // block_key.size() + 1 offsets

  std::uint64_t size() const { return edge.size(); }
  struct Block {
    std::uint64_t begin = 0, end = 0;
    std::uint64_t size() const { return end - begin; }
  };
  // empty block when the edge part needs more than max_depth moves
  Block find(const Key120& e) const;
  Block find(const EdgePerm& e) const { return find(pack24(e)); }
};

EdgeBlockIndex build_block_index(const LayeredBfs& cube_bfs);

// Cache files: "QTMB", version, generator checksum, group kind, depth,
// then per layer an element count (u64 LE), 48-byte facelet images and
// nibble-packed geodesic words.
std::uint64_t generator_checksum();
void save_bfs(const std::filesystem::path& path, const LayeredBfs& bfs);
std::optional<LayeredBfs> load_bfs(const std::filesystem::path& path);

}  // namespace qtm
