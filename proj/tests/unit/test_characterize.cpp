#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "collapse/characterize.hpp"
#include "collapse/oracle.hpp"
#include "collapse/sweep.hpp"
#include "collapse/words.hpp"
#include "fixtures.hpp"

using namespace collapse;

namespace {

struct Example {
  const char* name;
  Transformation a;
  Transformation b;
  Verdict expected;
  const char* branch;
};

// States 0,1,2,... stand for the labels 1,2,3,... of the witness.
const std::vector<Example>& examples() {
  static const std::vector<Example> xs = {
      {"1p proper", {2, 2, 2, 3}, {1, 2, 3, 0}, Verdict::Proper, "1p.proper"},
      {"1p orbit inside", {2, 2, 2, 3}, {1, 2, 0, 3}, Verdict::NotCompressible, "1p.orbit-inside"},
      {"1p escape", {2, 2, 2, 3}, {3, 1, 2, 0}, Verdict::Improper, "1p.escape"},
      {"2p orbit leaves", {1, 1, 3, 3, 4}, {1, 4, 3, 2, 0}, Verdict::Proper, "2p.orbit-leaves"},
      {"2p fixed pair", {1, 1, 3, 3, 4}, {0, 3, 2, 1, 4}, Verdict::NotCompressible, "2p.fixed"},
      {"2p cycle 0321", {1, 1, 3, 3, 4}, {3, 2, 0, 1, 4}, Verdict::NotCompressible, "2p.trapped"},
      {"3p 1b = 1", {1, 1, 2, 3, 4}, {0, 2, 1, 3, 4}, Verdict::NotCompressible, "3p.fixed-1"},
      {"3p b = (12)", {1, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, Verdict::NotCompressible, "3p.swap-12"},
      {"3p five-cycle", {1, 1, 2, 3, 4}, {1, 2, 3, 4, 0}, Verdict::Proper, "3p.proper"},
      {"4p b = (12)(3)", {1, 1, 0, 3}, {1, 0, 2, 3}, Verdict::NotCompressible, "4p.12-swap"},
      {"4p b = (1)(23)", {1, 1, 0, 3}, {0, 2, 1, 3}, Verdict::NotCompressible, "4p.cycle-23"},
      {"4p b = (34)", {1, 1, 0, 3}, {0, 1, 3, 2}, Verdict::Proper, "4p.proper"},
      {"11 trapped", {2, 2, 2, 3}, {2, 2, 2, 3}, Verdict::NotCompressible, "11.trapped"},
      {"11 short", {2, 2, 2, 3}, {0, 3, 3, 3}, Verdict::Improper, "11.short"},
      {"24 b = [4,3]\\1", {1, 1, 3, 3}, {3, 1, 2, 2}, Verdict::NotCompressible, "24.straddle"},
      {"13 x outside", {2, 2, 2, 3}, {0, 1, 2, 2}, Verdict::Improper, "13.x-outside"},
      {"23 x outside", {1, 1, 3, 3, 4}, {0, 1, 2, 3, 0}, Verdict::Improper, "23.x-outside"},
      {"23 x = 1, 3b = 3", {1, 1, 3, 3}, {1, 1, 2, 3}, Verdict::NotCompressible, "23.x-missing.fixed"},
      {"23 x = 1, 3b = 4", {1, 1, 3, 3, 4}, {1, 1, 3, 4, 2}, Verdict::Proper, "23.x-missing.proper"},
      {"33 x = 1", {1, 1, 2, 3}, {2, 1, 2, 3}, Verdict::NotCompressible, "33.trivial"},
      {"33 1b escapes", {1, 1, 2, 3}, {3, 0, 1, 1}, Verdict::Improper, "33.apart.1b-escape"},
      {"34 short word", {1, 1, 2, 3, 4}, {0, 1, 3, 3, 2}, Verdict::Improper, "34.short"},
      {"44 short word", {1, 1, 0, 3, 4}, {0, 1, 2, 2, 3}, Verdict::Improper, "44.short"},
  };
  return xs;
}

bool menu_covers(const Automaton& A, const FamilyVerdict& v) {
  return std::any_of(v.word_menu.begin(), v.word_menu.end(), [&](const Word& w) { return deficiency(A, w) >= 3; });
}

std::vector<Word> dual_all(const std::vector<Word>& ws) {
  std::vector<Word> out;
  for (const Word& w : ws) out.push_back(dual(w));
  return out;
}

}  // namespace

TEST_SUITE("characterize") {
  TEST_CASE("family examples") {
    for (const Example& e : examples()) {
      CAPTURE(e.name);
      const Automaton A(e.a, e.b);
      const FamilyVerdict v = characterize(A);
      CHECK(v.verdict == e.expected);
      CHECK(v.matched_branch == e.branch);
      CHECK(is_proper(A, 3) == e.expected);
      if (e.expected == Verdict::Proper) {
        CHECK(menu_covers(A, v));
      } else {
        CHECK(v.word_menu.empty());
      }
    }
  }

  TEST_CASE("menus") {
    const FamilyVerdict p1 = characterize(Automaton(Transformation{2, 2, 2, 3}, Transformation{1, 2, 3, 0}));
    CHECK(p1.word_menu == std::vector<Word>{Word("abba")});
    const FamilyVerdict p3 = characterize(Automaton(Transformation{1, 1, 2, 3, 4}, Transformation{1, 2, 3, 4, 0}));
    CHECK(p3.word_menu.size() == 9);
    CHECK(deficiency(Automaton(Transformation{1, 1, 2, 3, 4}, Transformation{1, 2, 3, 4, 0}), Word("abbabba")) >= 3);
    const FamilyVerdict p4 = characterize(Automaton(Transformation{1, 1, 0, 3}, Transformation{0, 1, 3, 2}));
    CHECK(p4.word_menu.size() == 5);
  }

  TEST_CASE("dispatcher") {
    const FamilyVerdict pp = characterize(Automaton(Transformation{1, 0, 2, 3}, Transformation{0, 2, 1, 3}));
    CHECK(pp.verdict == Verdict::NotCompressible);
    CHECK(pp.matched_branch == "pp");
    const FamilyVerdict heavy = characterize(Automaton(Transformation{0, 0, 0, 0}, Transformation{1, 2, 3, 0}));
    CHECK(heavy.verdict == Verdict::Improper);
    CHECK(heavy.matched_branch == "heavy");
    const FamilyVerdict d = characterize(Automaton(Transformation{1, 2, 3, 0}, Transformation{2, 2, 2, 3}));
    CHECK(d.verdict == Verdict::Proper);
    CHECK(d.word_menu == std::vector<Word>{Word("baab")});
  }

  TEST_CASE("predicates reject other families") {
    const Automaton p3(Transformation{1, 1, 2, 3}, Transformation{1, 2, 3, 0});
    CHECK_THROWS_AS(prop_1p(p3), Error);
    CHECK_THROWS_AS(prop_44(p3), Error);
    CHECK_THROWS_AS(prop_ij_never(p3), Error);
    CHECK(prop_3p(p3).verdict == characterize(p3).verdict);
    CHECK(prop_3p(dual(p3)).verdict == characterize(p3).verdict);
  }

  TEST_CASE("language branch of (3,4)") {
    // Every word of L up to length 11 compresses every automaton the branch
    // claims, at n = 5.
    std::vector<Word> lang;
    for (const auto& s : oracle::enumerate_language(words::language_l().ast(), 11)) lang.emplace_back(s);
    REQUIRE(!lang.empty());
    int instances = 0;
    enumerate_automata(5, {LetterType::Type3, LetterType::Type4}, [&](const Automaton& A) {
      const FamilyVerdict v = characterize(A);
      if (v.matched_branch != "34.z2.y1.language") return;
      ++instances;
      REQUIRE(v.verdict == Verdict::Proper);
      REQUIRE(v.menu_kind == MenuKind::Language);
      REQUIRE(v.word_menu == std::vector<Word>{words::kB2A3B2});
      REQUIRE(is_proper(A, 3) == Verdict::Proper);
      for (const Word& w : lang) REQUIRE(deficiency(A, w) >= 3);
    });
    CHECK(instances > 0);
  }

  TEST_CASE("oracle equivalence and menu sufficiency on all 4-state automata") {
    std::set<std::string> fired;
    enumerate_automata(4, {}, [&](const Automaton& A) {
      const FamilyVerdict v = characterize(A);
      fired.insert(v.matched_branch);
      REQUIRE(v.verdict == is_proper(A, 3));
      if (v.verdict == Verdict::Proper) REQUIRE(menu_covers(A, v));
    });
    for (const auto& id : fired) CHECK(std::count(all_branches().begin(), all_branches().end(), id) == 1);
  }

  TEST_CASE("duality") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 20000; ++trial) {
      const Automaton A = fixtures::random_automaton(rng, 4 + trial % 2);
      const FamilyVerdict v = characterize(A);
      const FamilyVerdict d = characterize(dual(A));
      REQUIRE(v.verdict == d.verdict);
      REQUIRE(v.family.label() == d.family.label());
      if (v.family.first.type != v.family.second.type) {
        REQUIRE(v.matched_branch == d.matched_branch);
        REQUIRE(dual_all(v.word_menu) == d.word_menu);
      } else if (v.verdict == Verdict::Proper) {
        // Equal types: the predicate reads the letters in the other order.
        REQUIRE(menu_covers(A, v));
        REQUIRE(menu_covers(dual(A), d));
      }
    }
  }

  TEST_CASE("relabeling states changes neither verdict nor branch") {
    // Covers the witness symmetries: swapping x and y of a Type1 letter and
    // swapping the kernel pairs of a Type2 letter are relabelings.
    std::mt19937 rng(23);
    for (int trial = 0; trial < 20000; ++trial) {
      const int n = 4 + trial % 2;
      const Automaton A = fixtures::random_automaton(rng, n);
      std::vector<int> p(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
      std::shuffle(p.begin(), p.end(), rng);
      const FamilyVerdict v = characterize(A);
      const FamilyVerdict r = characterize(fixtures::relabel(A, p));
      REQUIRE(v.verdict == r.verdict);
      REQUIRE(v.matched_branch == r.matched_branch);
    }
  }

  TEST_CASE("explicit witness symmetries") {
    const auto check_swap = [](LetterType type, const std::vector<int>& swap) {
      enumerate_automata(5, {type, std::nullopt}, [&](const Automaton& A) {
        const LetterClass c = classify_letter(A.a);
        std::vector<int> p(5);
        for (int i = 0; i < 5; ++i) p[static_cast<std::size_t>(i)] = i;
        for (std::size_t i = 0; i + 1 < swap.size(); i += 2) {
          std::swap(p[static_cast<std::size_t>(c.witness[static_cast<std::size_t>(swap[i])])],
                    p[static_cast<std::size_t>(c.witness[static_cast<std::size_t>(swap[i + 1])])]);
        }
        const Automaton B = fixtures::relabel(A, p);
        REQUIRE(characterize(A).verdict == characterize(B).verdict);
      });
    };
    check_swap(LetterType::Type1, {0, 1});
    check_swap(LetterType::Type2, {0, 2, 1, 3});
  }
}
