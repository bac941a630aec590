#include "qtm/reference.hpp"

#include "qtm/generators.hpp"

namespace qtm::ref {

std::vector<std::set<EdgePerm>> edge_layers(int depth) {
  const GeneratorSet& gs = generator_set();
  std::vector<std::set<EdgePerm>> layers(depth + 1);
  layers[0].insert(EdgePerm::identity());
  std::set<EdgePerm> seen = layers[0];
  for (int d = 0; d < depth; ++d) {
    for (const EdgePerm& p : layers[d])
      for (int m = 0; m < 12; ++m) {
        EdgePerm c = compose(p, gs.s_edge[m]);
        if (seen.insert(c).second) layers[d + 1].insert(c);
      }
  }
  return layers;
}

std::vector<std::set<Perm48>> cube_layers(int depth) {
  const GeneratorSet& gs = generator_set();
  std::vector<std::set<Perm48>> layers(depth + 1);
  layers[0].insert(Perm48::identity());
  std::set<Perm48> seen = layers[0];
  for (int d = 0; d < depth; ++d) {
    for (const Perm48& p : layers[d])
      for (int m = 0; m < 12; ++m) {
        Perm48 c = compose(p, gs.s[m]);
        if (seen.insert(c).second) layers[d + 1].insert(c);
      }
  }
  return layers;
}

EdgePerm canon_edge_approx(const EdgePerm& g, const SymmetryGroup& M) {
  EdgePerm best = g;
  for (int m = 0; m < M.size(); ++m) {
    for (const EdgePerm& base : {g, inverse(g)}) {
      EdgePerm c = M.conj_edge(base, m);
      if (c < best) best = c;
    }
  }
  return best;
}

namespace {

void walk(const Perm48& p, int remaining, int last, int run,
          std::map<CornerPerm, int>& found, int used) {
  if (edge_part(p).is_identity()) {
    CornerPerm c = corner_part(p);
    auto [it, fresh] = found.try_emplace(c, used);
    if (!fresh && it->second > used) it->second = used;
  }
  if (remaining == 0) return;
  const GeneratorSet& gs = generator_set();
  for (int m = 1; m <= 12; ++m) {
    // skip reducible words: an immediate inverse, or three equal turns
    if (last != 0 && m == (last <= 6 ? last + 6 : last - 6)) continue;
    int nrun = (m == last) ? run + 1 : 1;
    if (nrun == 3) continue;
    walk(compose(p, gs.gen(static_cast<Move>(m))), remaining - 1, m, nrun,
         found, used + 1);
  }
}

}  // namespace

std::map<CornerPerm, int> walk_fix_edges(int depth) {
  std::map<CornerPerm, int> found;
  walk(Perm48::identity(), depth, 0, 0, found, 0);
  return found;
}

}  // namespace qtm::ref
