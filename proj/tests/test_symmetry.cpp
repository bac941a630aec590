#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "qtm/generators.hpp"
#include "qtm/reference.hpp"
#include "qtm/symmetry.hpp"

using namespace qtm;

TEST_CASE("closure of k1 and k2 has the recorded order") {
  const SymmetryGroup& M = symmetry_group();
  CHECK(M.size() == 48);  // frozen from the first closure run
  CHECK(std::binary_search(M.elems.begin(), M.elems.end(),
                           Perm48::identity()));
  CHECK(std::binary_search(M.elems.begin(), M.elems.end(), symmetry_k1()));
  CHECK(std::binary_search(M.elems.begin(), M.elems.end(), symmetry_k2()));
}

TEST_CASE("M is closed and acts on T by conjugation") {
  const SymmetryGroup& M = symmetry_group();
  const GeneratorSet& gs = generator_set();
  for (const Perm48& a : M.elems) {
    CHECK(std::binary_search(M.elems.begin(), M.elems.end(), inverse(a)));
    for (int t = 0; t < 12; ++t) {
      Perm48 c = compose(compose(inverse(a), gs.s[t]), a);
      bool in_t = false;
      for (int u = 0; u < 12; ++u) in_t = in_t || c == gs.s[u];
      CHECK(in_t);
    }
  }
}

TEST_CASE("class of the identity is trivial") {
  const SymmetryGroup& M = symmetry_group();
  CHECK(class_sim(Perm48::identity(), M).size() == 1);
  CHECK(class_approx(Perm48::identity(), M).size() == 1);
}

TEST_CASE("class sizes divide twice the group order") {
  const SymmetryGroup& M = symmetry_group();
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> mv(1, 12);
  for (int t = 0; t < 30; ++t) {
    Word w(10);
    for (Move& m : w) m = static_cast<Move>(mv(rng));
    auto cls = class_approx(evaluate_word(w), M);
    CHECK(2 * M.size() % cls.size() == 0);
  }
}

TEST_CASE("class members are reachable by relabelled words") {
  // conjugating by m relabels a word through the T-action; the inverse
  // branch reverses and inverts it. Both preserve length.
  const SymmetryGroup& M = symmetry_group();
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> mv(1, 12);
  std::uniform_int_distribution<int> len(1, 14);
  for (int t = 0; t < 40; ++t) {
    Word w(len(rng));
    for (Move& m : w) m = static_cast<Move>(mv(rng));
    Perm48 g = evaluate_word(w);
    for (int m = 0; m < M.size(); m += 7) {
      Word rel = M.relabel_word(w, m);
      CHECK(rel.size() == w.size());
      CHECK(evaluate_word(rel) == M.conj(g, m));
      Word relinv = M.relabel_word(invert_word(w), m);
      CHECK(relinv.size() == w.size());
      CHECK(evaluate_word(relinv) == M.conj(inverse(g), m));
    }
  }
}

TEST_CASE("canonical forms agree with the explicit-class reference") {
  const SymmetryGroup& M = symmetry_group();
  std::mt19937 rng(29);
  std::uniform_int_distribution<int> mv(1, 12);
  for (int t = 0; t < 60; ++t) {
    Word w(8);
    for (Move& m : w) m = static_cast<Move>(mv(rng));
    EdgePerm g = evaluate_word_edges(w);
    CHECK(M.canon_edge_approx(g) == ref::canon_edge_approx(g, M));
    // the sim canon is the least member of the explicit class
    Perm48 full = evaluate_word(w);
    auto cls = class_sim(full, M);
    CHECK(M.canon_full_sim(full) == cls.front());
  }
}

TEST_CASE("representative reduction is idempotent and order-independent") {
  const SymmetryGroup& M = symmetry_group();
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> mv(1, 12);
  std::vector<Perm48> in;
  for (int t = 0; t < 40; ++t) {
    Word w(6);
    for (Move& m : w) m = static_cast<Move>(mv(rng));
    Perm48 g = evaluate_word(w);
    in.push_back(g);
    // throw some class members in as well
    in.push_back(M.conj(g, t % M.size()));
  }
  std::vector<Perm48> reduced = reduce_reps(in, M);
  CHECK(reduce_reps(reduced, M) == reduced);
  std::shuffle(in.begin(), in.end(), rng);
  CHECK(reduce_reps(in, M) == reduced);
  // exactly one representative per class
  for (std::size_t i = 0; i < reduced.size(); ++i)
    for (std::size_t j = i + 1; j < reduced.size(); ++j) {
      auto cls = class_approx(reduced[i], M);
      CHECK_FALSE(std::binary_search(cls.begin(), cls.end(), reduced[j]));
    }
}
