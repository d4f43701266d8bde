#include <doctest.h>

#include <random>

#include "collapse/core.hpp"
#include "collapse/sweep.hpp"
#include "collapse/words.hpp"
#include "fixtures.hpp"

using namespace collapse;

TEST_SUITE("core") {
  TEST_CASE("apply") {
    CHECK(apply(Transformation::identity(3), StateSet(3, {0, 2})) == StateSet(3, {0, 2}));
    CHECK(apply(Transformation{0, 0, 0}, StateSet::full(3)) == StateSet(3, {0}));
    CHECK(apply(fixtures::cerny3().a, StateSet::full(3)) == StateSet(3, {1, 2}));
    CHECK_THROWS_AS(apply(Transformation::identity(3), StateSet(4)), Error);
  }

  TEST_CASE("state sets") {
    const StateSet s(5, {0, 3});
    CHECK(s.size() == 2);
    CHECK(s.contains(3));
    CHECK_FALSE(s.contains(4));
    CHECK(s.complement() == StateSet(5, {1, 2, 4}));
    CHECK(s.to_string() == "{0,3}");
    CHECK(StateSet(5).to_string() == "{}");
    CHECK((s | StateSet(5, {1})) == StateSet(5, {0, 1, 3}));
    CHECK((s & StateSet(5, {3, 4})) == StateSet(5, {3}));
    CHECK((s - StateSet(5, {0})) == StateSet(5, {3}));
    CHECK(StateSet(5, {3}).subset_of(s));
    CHECK_THROWS_AS(StateSet(3, {3}), Error);
  }

  TEST_CASE("transformations reject bad images") {
    CHECK_THROWS_AS((Transformation{0, 3, 1}), Error);
    CHECK_THROWS_AS((Transformation{0, -1}), Error);
    CHECK((Transformation{1, 2, 0}).then(Transformation{0, 0, 2}) == (Transformation{0, 2, 0}));
  }

  TEST_CASE("words accept only a and b") {
    CHECK(Word("abba").size() == 4);
    CHECK(Word("").empty());
    CHECK_THROWS_AS(Word("abc"), Error);
    CHECK_THROWS_AS(Word("A"), Error);
  }

  TEST_CASE("deficiency") {
    const Automaton F = s32_counterexample();
    CHECK(deficiency(F, words::kS32) == 2);
    CHECK(image(F, words::kS32) == StateSet(5, {0, 1, 3}));
    CHECK(deficiency(F, dual(words::kS32)) == 4);
    CHECK(image(F, dual(words::kS32)) == StateSet(5, {3}));
    const Automaton id(Transformation::identity(4), Transformation::identity(4));
    CHECK(deficiency(id, Word("abbaab")) == 0);
    CHECK(deficiency(F, Word{}) == 0);
  }

  TEST_CASE("missing sets") {
    // Type-1 letter [0,1,2]\0,1.
    const Automaton A(Transformation{2, 2, 2, 3}, Transformation{1, 2, 3, 0});
    CHECK(missing_set(A, Word("a")) == StateSet(4, {0, 1}));
    CHECK(missing_set(A, Word{}).empty());
    CHECK(missing_set(fixtures::cerny3(), Word("abba")).size() == 2);
  }

  TEST_CASE("missing_step") {
    const Automaton C = fixtures::cerny3();
    CHECK(missing_step(C, StateSet(3, {1}), Letter::A) == StateSet(3, {0}));
    CHECK(missing_step(C, StateSet(3), Letter::A) == missing_set(C, Word("a")));
    // A permutation moves the missing set along.
    for (std::uint32_t bits = 0; bits < 8; ++bits) {
      const StateSet q1 = StateSet::from_bits(3, bits);
      CHECK(missing_step(C, q1, Letter::B) == apply(C.b, q1));
    }
    CHECK_THROWS_AS(missing_step(C, StateSet(4), Letter::A), Error);
  }

  TEST_CASE("missing_step fold equals missing_set on all automata with n <= 3, words up to length 6") {
    const auto ws = fixtures::words_up_to(6);
    for (int n = 1; n <= 3; ++n) {
      enumerate_automata(n, {}, [&](const Automaton& A) {
        for (const Word& w : ws) {
          StateSet m(n);
          for (std::size_t i = 0; i < w.size(); ++i) m = missing_step(A, m, w[i]);
          REQUIRE(m == missing_set(A, w));
          REQUIRE(m.size() == deficiency(A, w));
        }
      });
    }
  }

  TEST_CASE("deficiency agrees with per-state evaluation and is monotone under extension") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 2000; ++trial) {
      const int n = 2 + trial % 6;
      const Automaton A = fixtures::random_automaton(rng, n);
      const Word u = fixtures::random_word(rng, trial % 5);
      const Word w = fixtures::random_word(rng, 1 + trial % 9);
      const Word v = fixtures::random_word(rng, trial % 4);
      REQUIRE(deficiency(A, w) == fixtures::brute_deficiency(A, w));
      REQUIRE(deficiency(A, u + w + v) >= deficiency(A, w));
      REQUIRE(deficiency(dual(A), dual(w)) == deficiency(A, w));
    }
  }

  TEST_CASE("orbits") {
    CHECK(orbit(Transformation::identity(4), StateSet(4, {2})) == StateSet(4, {2}));
    CHECK(orbit(Transformation{1, 2, 3, 0}, StateSet(4, {0})) == StateSet::full(4));
    CHECK(orbit(Transformation{2, 1, 0, 3}, StateSet(4, {0, 1})) == StateSet(4, {0, 1, 2}));
    CHECK(orbit_size(Transformation{1, 2, 3, 0}, 2) == 4);
    CHECK(orbit_size(Transformation{1, 1, 3, 3}, 0) == 2);
  }

  TEST_CASE("duality") {
    CHECK(dual(Word("abba")) == Word("baab"));
    CHECK(dual(dual(words::kW3)) == words::kW3);
    const Automaton A = fixtures::cerny3();
    CHECK(dual(dual(A)) == A);
    CHECK(dual(A).a == A.b);
  }
}
