#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "qtm/errors.hpp"
#include "qtm/generators.hpp"
#include "qtm/perm.hpp"
#include "qtm/words.hpp"

using namespace qtm;

namespace {

Word random_word(std::mt19937& rng, int len) {
  std::uniform_int_distribution<int> mv(1, 12);
  Word w(len);
  for (int i = 0; i < len; ++i) w[i] = static_cast<Move>(mv(rng));
  return w;
}

}  // namespace

TEST_CASE("generators satisfy the construction invariants") {
  const GeneratorSet& gs = generator_set();
  for (int n = 0; n < 6; ++n) {
    CHECK(compose(gs.s[n], gs.s[n + 6]).is_identity());
    Perm48 p = gs.s[n];
    for (int k = 0; k < 3; ++k) p = compose(p, gs.s[n]);
    CHECK(p.is_identity());
  }
  for (const Perm48& g : gs.s) CHECK(respects_orbit_split(g));
}

TEST_CASE("orbit of the generator action splits into edges and corners") {
  // closure of point orbits under all generators
  const GeneratorSet& gs = generator_set();
  std::set<int> orbit{0};
  bool grew = true;
  while (grew) {
    grew = false;
    for (int x : std::set<int>(orbit))
      for (const Perm48& g : gs.s)
        if (orbit.insert(g.img[x]).second) grew = true;
  }
  CHECK(orbit.size() == 24);
  CHECK(*orbit.rbegin() == 23);

  orbit = {24};
  grew = true;
  while (grew) {
    grew = false;
    for (int x : std::set<int>(orbit))
      for (const Perm48& g : gs.s)
        if (orbit.insert(g.img[x]).second) grew = true;
  }
  CHECK(orbit.size() == 24);
  CHECK(*orbit.begin() == 24);
}

TEST_CASE("k1 conjugation sends U to B'") {
  const GeneratorSet& gs = generator_set();
  Perm48 k1 = symmetry_k1();
  Perm48 conj = compose(compose(inverse(k1), gs.gen(1)), k1);
  CHECK(conj == gs.gen(10));  // B'
}

TEST_CASE("k2 conjugation sends U to R") {
  const GeneratorSet& gs = generator_set();
  Perm48 k2 = symmetry_k2();
  CHECK(compose(compose(inverse(k2), gs.gen(1)), k2) == gs.gen(5));
}

TEST_CASE("compose basics") {
  const GeneratorSet& gs = generator_set();
  CHECK(compose(gs.gen(1), gs.gen(7)).is_identity());
  CHECK(compose(Perm48::identity(), gs.gen(3)) == gs.gen(3));
}

TEST_CASE("inverse basics") {
  const GeneratorSet& gs = generator_set();
  CHECK(inverse(Perm48::identity()).is_identity());
  CHECK(inverse(gs.gen(1)) == gs.gen(7));
  Perm48 uf = compose(gs.gen(1), gs.gen(3));
  CHECK(inverse(uf) == compose(gs.gen(9), gs.gen(7)));
}

TEST_CASE("word evaluation and inversion") {
  CHECK(evaluate_word({}).is_identity());
  CHECK(evaluate_word({1, 7}).is_identity());

  Word w{1, 2, 1, 4, 11, 2};
  CHECK(invert_word(w) == Word{8, 5, 10, 7, 8, 7});
  CHECK(invert_word(Word{}) == Word{});
  CHECK(invert_word(Word{3}) == Word{9});
  CHECK(evaluate_word(w) == inverse(evaluate_word(invert_word(w))));

  CHECK_THROWS_AS(evaluate_word({0}), InputError);
  CHECK_THROWS_AS(evaluate_word({13}), InputError);
  CHECK_THROWS_AS(invert_word({13}), InputError);
}

TEST_CASE("words cancel against their inverses up to length 22") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> len(0, 22);
  for (int t = 0; t < 200; ++t) {
    Word w = random_word(rng, len(rng));
    Word wi = invert_word(w);
    Word cat = w;
    cat.insert(cat.end(), wi.begin(), wi.end());
    CHECK(evaluate_word(cat).is_identity());
  }
}

TEST_CASE("projections are homomorphisms") {
  std::mt19937 rng(11);
  for (int t = 0; t < 100; ++t) {
    Perm48 p = evaluate_word(random_word(rng, 9));
    Perm48 q = evaluate_word(random_word(rng, 9));
    CHECK(edge_part(compose(p, q)) == compose(edge_part(p), edge_part(q)));
    CHECK(corner_part(compose(p, q)) ==
          compose(corner_part(p), corner_part(q)));
  }
}

TEST_CASE("corner projection of U moves exactly 12 facelets") {
  CornerPerm c = corner_part(generator_set().gen(1));
  int moved = 0;
  for (int i = 0; i < 24; ++i) moved += c.img[i] != i;
  CHECK(moved == 12);
}

TEST_CASE("word parity follows word length") {
  CHECK_FALSE(word_parity_odd(Perm48::identity()));
  CHECK(word_parity_odd(generator_set().gen(1)));
  CHECK_FALSE(word_parity_odd(evaluate_word({1, 2})));

  std::mt19937 rng(3);
  std::uniform_int_distribution<int> len(0, 18);
  for (int t = 0; t < 500; ++t) {
    Word w = random_word(rng, len(rng));
    CHECK(word_parity_odd(evaluate_word(w)) == (w.size() % 2 == 1));
  }
}

TEST_CASE("move notation parsing") {
  CHECK(parse_moves("U") == Word{1});
  CHECK(parse_moves("B2") == Word{4, 4});
  CHECK(parse_moves("R'") == Word{11});
  CHECK(parse_moves("") == Word{});
  CHECK(parse_moves("  U   F' ") == Word{1, 9});
  CHECK_THROWS_AS(parse_moves("X"), InputError);
  CHECK_THROWS_AS(parse_moves("U F Q"), InputError);
  CHECK_THROWS_AS(parse_moves("U2'"), InputError);

  CHECK(format_moves({1, 9, 4}) == "U F' B");
}

TEST_CASE("the printed 24-move orientation words evaluate as stated") {
  // all cubies stay in place; only orientations change
  const char* words[] = {
      "F  R' U  B2 U  R  D  F  U' B  R  B2 D  B  R' U' F' B  R  U2 D'",
      "F  R' F2 R' U  F  U  L  B2 R  B  D2 F  R' B' D  B  L' D' R' U'",
      "F  R  D2 B' R' F  R' D2 B' D' L  F  L2 U  B' U  F L2 U' B'",
  };
  const CubieLayout& lay = generator_set().layout;
  for (const char* text : words) {
    Word w = parse_moves(text);
    CHECK(w.size() == 24);
    Perm48 p = evaluate_word(w);
    CHECK_FALSE(edge_part(p).is_identity());
    for (const auto& pair : lay.edge_pair) {
      int a = pair[0], b = pair[1];
      bool in_place = (p.img[a] == a && p.img[b] == b) ||
                      (p.img[a] == b && p.img[b] == a);
      CHECK(in_place);
    }
    for (const auto& tri : lay.triple) {
      int slot = lay.slot_of[tri[0]];
      for (int k = 0; k < 3; ++k)
        CHECK(lay.slot_of[p.img[24 + tri[k]] - 24] == slot);
    }
  }
}

TEST_CASE("packed words round-trip and compare by length then lex") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> len(0, 22);
  for (int t = 0; t < 200; ++t) {
    Word w = random_word(rng, len(rng));
    CHECK(PackedWord::pack(w).unpack() == w);
  }
  CHECK(PackedWord::pack({1, 2}) < PackedWord::pack({1, 2, 3}));
  CHECK(PackedWord::pack({1, 2}) < PackedWord::pack({1, 3}));
  Word a{5, 6}, b{7};
  CHECK(PackedWord::concat(PackedWord::pack(a), PackedWord::pack(b)) ==
        PackedWord::pack({5, 6, 7}));
}

TEST_CASE("cycle notation output") {
  CHECK(cycle_string(Perm48::identity()) == "()");
  Perm<4> p;
  p.img = {1, 0, 3, 2};
  CHECK(cycle_string(p) == "(1,2)(3,4)");
}
