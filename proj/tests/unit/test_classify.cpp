#include <doctest.h>

#include <random>

#include "collapse/classify.hpp"
#include "collapse/sweep.hpp"
#include "fixtures.hpp"

using namespace collapse;

namespace {

// Shape check independent of classify_letter: kernel class sizes and the
// missing states.
bool matches_shape(const Transformation& t, const LetterClass& c) {
  const int n = t.size();
  const StateSet missing = t.image().complement();
  const auto same = [&](int p, int q) { return t(p) == t(q); };
  switch (c.type) {
    case LetterType::Permutation:
      return missing.empty();
    case LetterType::Type1:
      return c.x() < c.y() && same(c.x(), c.y()) && same(c.y(), c.z()) && missing == StateSet(n, {c.x(), c.y()});
    case LetterType::Type2:
      return c.x() < c.z() && same(c.x(), c.y()) && same(c.z(), c.v()) && !same(c.x(), c.z()) &&
             missing == StateSet(n, {c.x(), c.z()});
    case LetterType::Type3:
      return same(c.x(), c.y()) && missing == StateSet(n, {c.x()});
    case LetterType::Type4:
      return same(c.x(), c.y()) && missing == StateSet(n, {c.z()}) && t(c.z()) == c.x();
    case LetterType::Heavy: {
      const Transformation t2 = t.then(t);
      return t.deficiency() >= 3 || t2.deficiency() >= 3 || t2.then(t).deficiency() >= 3;
    }
  }
  return false;
}

}  // namespace

TEST_SUITE("classify") {
  TEST_CASE("letter examples") {
    CHECK(classify_letter(Transformation::identity(4)).type == LetterType::Permutation);
    const LetterClass t1 = classify_letter(Transformation{2, 2, 2, 3});
    CHECK(t1.type == LetterType::Type1);
    CHECK(t1.witness == std::array<int, 4>{0, 1, 2, -1});
    CHECK(classify_letter(Transformation{0, 0, 0, 0}).type == LetterType::Heavy);
    CHECK(classify_letter(Transformation{1, 1, 3, 3, 4}).type == LetterType::Type2);
    const LetterClass t3 = classify_letter(Transformation{1, 1, 2, 3});
    CHECK(t3.type == LetterType::Type3);
    CHECK(t3.x() == 0);
    CHECK(t3.y() == 1);
    const LetterClass t4 = classify_letter(Transformation{1, 1, 0, 3});
    CHECK(t4.type == LetterType::Type4);
    CHECK(t4.witness == std::array<int, 4>{0, 1, 2, -1});
    CHECK(classify_letter(Transformation{1, 1, 3, 3}).type == LetterType::Type2);
    // [0,1]\2 with 2 -> 3 outside the pair's image.
    CHECK(classify_letter(Transformation{0, 0, 3, 1}).type == LetterType::Heavy);
  }

  TEST_CASE("every map of n <= 5 states has exactly one consistent class") {
    for (int n = 1; n <= 5; ++n) {
      std::array<int, 6> counts{};
      for (const Transformation& t : all_maps(n)) {
        const LetterClass c = classify_letter(t);
        REQUIRE(matches_shape(t, c));
        ++counts[static_cast<std::size_t>(c.type)];
        if (c.type != LetterType::Heavy && c.type != LetterType::Permutation) {
          // Low types have deficiency at most 2 in every power up to 3.
          const Transformation t3 = t.then(t).then(t);
          REQUIRE(t3.deficiency() < 3);
        }
      }
      int total = 0;
      for (int c : counts) total += c;
      int expected = 1;
      for (int i = 0; i < n; ++i) expected *= n;
      CHECK(total == expected);
    }
  }

  TEST_CASE("automaton labels and normalization") {
    const Automaton A(Transformation{2, 2, 2, 3}, Transformation{1, 2, 3, 0});
    const AutomatonClass c = classify_automaton(A);
    CHECK(c.label() == "(1,p)");
    CHECK_FALSE(c.swapped);
    const AutomatonClass d = classify_automaton(dual(A));
    CHECK(d.label() == "(1,p)");
    CHECK(d.swapped);
    CHECK(normalized(dual(A), d) == A);
    CHECK(classify_automaton(Automaton(Transformation{1, 2, 3, 0}, Transformation{1, 1, 2, 3})).label() == "(3,p)");
    CHECK(classify_automaton(Automaton(Transformation{0, 0, 0, 0}, Transformation{1, 1, 2, 3})).label() == "(heavy,3)");
    CHECK(classify_automaton(Automaton(Transformation{1, 0, 2}, Transformation{0, 2, 1})).label() == "(p,p)");
  }

  TEST_CASE("classifying the dual swaps the components") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 3000; ++trial) {
      const Automaton A = fixtures::random_automaton(rng, 3 + trial % 4);
      const AutomatonClass c = classify_automaton(A);
      const AutomatonClass d = classify_automaton(dual(A));
      REQUIRE(c.label() == d.label());
      if (c.first.type != c.second.type) {
        REQUIRE(c.swapped != d.swapped);
        REQUIRE(c.first == d.first);
        REQUIRE(c.second == d.second);
      }
    }
  }
}
