#include "qtm/symmetry.hpp"

#include <algorithm>
#include <stdexcept>

#include "qtm/generators.hpp"

namespace qtm {
namespace {

constexpr int kClosureBound = 10000;

// min over candidates cand(x) = fwd[g[inv[x]]], early-abort lexicographic
template <class Tables>
void fold_min24(Perm<24>& best, const Perm<24>& g, const Tables& fwd,
                const Tables& inv, int count) {
  for (int m = 0; m < count; ++m) {
    const auto& f = fwd[m];
    const auto& b = inv[m];
    for (int x = 0; x < 24; ++x) {
      std::uint8_t v = f[g.img[b[x]]];
      if (v > best.img[x]) break;
      if (v < best.img[x]) {
        for (int y = 0; y < x; ++y) best.img[y] = f[g.img[b[y]]];
        best.img[x] = v;
        for (int y = x + 1; y < 24; ++y) best.img[y] = f[g.img[b[y]]];
        break;
      }
    }
  }
}

SymmetryGroup build() {
  SymmetryGroup M;
  const Perm48 k1 = symmetry_k1();
  const Perm48 k2 = symmetry_k2();

  std::vector<Perm48> elems{Perm48::identity()};
  std::vector<Perm48> frontier = elems;
  while (!frontier.empty()) {
    std::vector<Perm48> next;
    for (const Perm48& m : frontier) {
      for (const Perm48* g : {&k1, &k2}) {
        Perm48 c = compose(m, *g);
        if (!std::binary_search(elems.begin(), elems.end(), c) &&
            std::find(next.begin(), next.end(), c) == next.end())
          next.push_back(c);
      }
    }
    elems.insert(elems.end(), next.begin(), next.end());
    std::sort(elems.begin(), elems.end());
    if (static_cast<int>(elems.size()) > kClosureBound)
      throw std::logic_error("symmetry closure exceeds sanity bound");
    frontier = std::move(next);
  }
  M.elems = std::move(elems);

  const GeneratorSet& gs = generator_set();
  M.edge_fwd.resize(M.elems.size());
  M.edge_inv.resize(M.elems.size());
  M.corner_fwd.resize(M.elems.size());
  M.corner_inv.resize(M.elems.size());
  M.t_action.resize(M.elems.size());
  for (std::size_t i = 0; i < M.elems.size(); ++i) {
    const Perm48& m = M.elems[i];
    const Perm48 mi = inverse(m);
    M.edge_fwd[i] = edge_part(m).img;
    M.edge_inv[i] = edge_part(mi).img;
    M.corner_fwd[i] = corner_part(m).img;
    M.corner_inv[i] = corner_part(mi).img;
    for (int t = 0; t < 12; ++t) {
      Perm48 c = compose(compose(mi, gs.s[t]), m);
      int idx = -1;
      for (int u = 0; u < 12; ++u)
        if (c == gs.s[u]) {
          idx = u;
          break;
        }
      if (idx < 0)
        throw std::logic_error(
            "symmetry element does not map T to T under conjugation");
      M.t_action[i][t] = static_cast<std::uint8_t>(idx);
    }
  }
  return M;
}

}  // namespace

const SymmetryGroup& symmetry_group() {
  static const SymmetryGroup M = build();
  return M;
}

EdgePerm SymmetryGroup::conj_edge(const EdgePerm& g, int m) const {
  EdgePerm r;
  for (int x = 0; x < 24; ++x) r.img[x] = edge_fwd[m][g.img[edge_inv[m][x]]];
  return r;
}

CornerPerm SymmetryGroup::conj_corner(const CornerPerm& g, int m) const {
  CornerPerm r;
  for (int x = 0; x < 24; ++x)
    r.img[x] = corner_fwd[m][g.img[corner_inv[m][x]]];
  return r;
}

Perm48 SymmetryGroup::conj(const Perm48& g, int m) const {
  return assemble(conj_edge(edge_part(g), m), conj_corner(corner_part(g), m));
}

Word SymmetryGroup::relabel_word(const Word& w, int m) const {
  Word out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i)
    out[i] = static_cast<Move>(t_action[m][w[i] - 1] + 1);
  return out;
}

PackedWord SymmetryGroup::relabel_word(const PackedWord& w, int m) const {
  PackedWord out;
  out.len = w.len;
  for (int i = 0; i < w.len; ++i)
    out.set_move(i, static_cast<Move>(t_action[m][w.move_at(i) - 1] + 1));
  return out;
}

EdgePerm SymmetryGroup::canon_edge_sim(const EdgePerm& g) const {
  EdgePerm best = g;
  fold_min24(best, g, edge_fwd, edge_inv, size());
  return best;
}

EdgePerm SymmetryGroup::canon_edge_approx(const EdgePerm& g) const {
  EdgePerm best = canon_edge_sim(g);
  const EdgePerm gi = inverse(g);
  if (gi < best) best = gi;
  fold_min24(best, gi, edge_fwd, edge_inv, size());
  return best;
}

CornerPerm SymmetryGroup::canon_corner_sim(const CornerPerm& g) const {
  CornerPerm best = g;
  fold_min24(best, g, corner_fwd, corner_inv, size());
  return best;
}

CornerPerm SymmetryGroup::canon_corner_approx(const CornerPerm& g) const {
  CornerPerm best = canon_corner_sim(g);
  const CornerPerm gi = inverse(g);
  if (gi < best) best = gi;
  fold_min24(best, gi, corner_fwd, corner_inv, size());
  return best;
}

Perm48 SymmetryGroup::canon_full_sim(const Perm48& g) const {
  Perm48 best = g;
  for (int m = 0; m < size(); ++m) {
    Perm48 c = conj(g, m);
    if (c < best) best = c;
  }
  return best;
}

Perm48 SymmetryGroup::canon_full_approx(const Perm48& g) const {
  Perm48 best = canon_full_sim(g);
  Perm48 c = canon_full_sim(inverse(g));
  return c < best ? c : best;
}

std::vector<Perm48> class_sim(const Perm48& g, const SymmetryGroup& M) {
  std::vector<Perm48> out;
  out.reserve(M.size());
  for (int m = 0; m < M.size(); ++m) out.push_back(M.conj(g, m));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Perm48> class_approx(const Perm48& g, const SymmetryGroup& M) {
  std::vector<Perm48> out = class_sim(g, M);
  std::vector<Perm48> inv = class_sim(inverse(g), M);
  out.insert(out.end(), inv.begin(), inv.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Perm48> reduce_reps(std::vector<Perm48> in,
                                const SymmetryGroup& M) {
  std::sort(in.begin(), in.end());
  in.erase(std::unique(in.begin(), in.end()), in.end());
  // group by canonical form, keep the minimal member present in the input
  std::vector<std::pair<Perm48, Perm48>> canon;  // (class key, member)
  canon.reserve(in.size());
  for (const Perm48& g : in) canon.emplace_back(M.canon_full_approx(g), g);
  std::sort(canon.begin(), canon.end());
  std::vector<Perm48> out;
  for (std::size_t i = 0; i < canon.size(); ++i)
    if (i == 0 || canon[i].first != canon[i - 1].first)
      out.push_back(canon[i].second);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<EdgePerm> reduce_reps_edge(std::vector<EdgePerm> in,
                                       const SymmetryGroup& M) {
  std::sort(in.begin(), in.end());
  in.erase(std::unique(in.begin(), in.end()), in.end());
  std::vector<std::pair<EdgePerm, EdgePerm>> canon;
  canon.reserve(in.size());
  for (const EdgePerm& g : in) canon.emplace_back(M.canon_edge_approx(g), g);
  std::sort(canon.begin(), canon.end());
  std::vector<EdgePerm> out;
  for (std::size_t i = 0; i < canon.size(); ++i)
    if (i == 0 || canon[i].first != canon[i - 1].first)
      out.push_back(canon[i].second);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace qtm
