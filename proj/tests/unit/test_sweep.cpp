#include <doctest.h>

#include "collapse/io.hpp"
#include "collapse/sweep.hpp"
#include "collapse/words.hpp"

using namespace collapse;

namespace {

std::uint64_t count_automata(int n, const EnumFilter& f) {
  std::uint64_t c = 0;
  enumerate_automata(n, f, [&](const Automaton&) { ++c; });
  return c;
}

}  // namespace

TEST_SUITE("sweep") {
  TEST_CASE("enumeration counts") {
    CHECK(count_automata(2, {}) == 16);
    CHECK(count_automata(4, {LetterType::Permutation, LetterType::Permutation}) == 576);
    CHECK(count_automata(4, {}) == 65536);
    CHECK(all_maps(3).size() == 27);
    CHECK(all_maps(3).front() == (Transformation{0, 0, 0}));
    CHECK(all_maps(3)[1] == (Transformation{0, 0, 1}));
    CHECK_THROWS_AS(all_maps(9), Error);

    // Shards partition the enumeration.
    std::uint64_t total = 0;
    for (int i = 0; i < 3; ++i) {
      enumerate_automata(3, {}, [&](const Automaton&) { ++total; }, Shard{i, 3});
    }
    CHECK(total == 729);
  }

  TEST_CASE("reports do not depend on the thread count") {
    const SweepReport one = verify_characterization(4, {}, {1, false});
    const SweepReport three = verify_characterization(4, {}, {3, false});
    CHECK(io::to_json(one).at("verdicts") == io::to_json(three).at("verdicts"));
    CHECK(one.branch_counts == three.branch_counts);
    CHECK(one.examined == 65536);
    CHECK(one.passed());

    const SweepReport w1 = verify_word(words::kS32, 5, 3, {1, true});
    const SweepReport w3 = verify_word(words::kS32, 5, 3, {3, true});
    CHECK(w1.failure_count == w3.failure_count);
    REQUIRE(w1.failures.size() == w3.failures.size());
    for (std::size_t i = 0; i < w1.failures.size(); ++i) CHECK(w1.failures[i].automaton == w3.failures[i].automaton);
  }

  TEST_CASE("the witness reduction matches the unreduced family runs at n = 4") {
    const SweepReport full = verify_characterization(4, family_labels(), {1, false});
    const SweepReport reduced = verify_characterization(4, family_labels(), {2, true});
    CHECK(reduced.reduced);
    CHECK_FALSE(full.reduced);
    CHECK(full.examined == reduced.examined);
    CHECK(full.verdicts == reduced.verdicts);
    CHECK(full.branch_counts == reduced.branch_counts);
    CHECK(full.passed());
    CHECK(reduced.passed());
  }

  TEST_CASE("never-proper families at n = 4") {
    const SweepReport r = verify_characterization(4, {"(1,1)", "(1,2)", "(2,2)", "(1,4)", "(2,4)"});
    CHECK(r.passed());
    for (const auto& f : {"(1,1)", "(1,2)", "(2,2)", "(1,4)", "(2,4)"}) CHECK(r.proper_count(f) == 0);
  }

  TEST_CASE("family names") {
    CHECK(verify_characterization(4, {"(p,1)"}).families == std::vector<std::string>{"(1,p)"});
    CHECK(verify_characterization(4, {"(4,3)"}).families == std::vector<std::string>{"(3,4)"});
    CHECK_THROWS_AS(verify_characterization(4, {"(5,p)"}), Error);
    CHECK_THROWS_AS(verify_characterization(4, {"heavy"}), Error);
  }

  TEST_CASE("words") {
    const SweepReport s4 = verify_word(words::kS32, 4, 3);
    CHECK(s4.failure_count == 0);
    CHECK(s4.examined == 65536);

    const SweepReport s5 = verify_word(words::kS32, 5, 3);
    CHECK(s5.failure_count > 0);
    bool found = false;
    enumerate_automata(5, {}, [&](const Automaton& A) {
      if (A == s32_counterexample()) found = is_k_compressible(A, 3) && deficiency(A, words::kS32) < 3;
    });
    CHECK(found);
    CHECK(s5.failures.size() == std::min<std::uint64_t>(s5.failure_count, kMaxListedFailures));

    CHECK_THROWS_AS(verify_word(words::kS32, 4, 4), Error);
  }

  TEST_CASE("the counterexample is compressed by the dual only") {
    const Automaton F = s32_counterexample();
    CHECK(deficiency(F, words::kS32) < 3);
    CHECK(deficiency(F, dual(words::kS32)) >= 3);
  }

  TEST_CASE("a 5-state automaton compressed by neither s32 nor its dual") {
    const Automaton A(Transformation{1, 0, 0, 4, 3}, Transformation{3, 4, 1, 2, 0});
    CHECK(is_k_compressible(A, 3));
    CHECK(shortest_compressing_word(A, 3).shortest_word->str() == "abbaabba");
    CHECK(image(A, words::kS32) == StateSet(5, {0, 1, 4}));
    CHECK(image(A, dual(words::kS32)) == StateSet(5, {2, 3, 4}));
    CHECK(deficiency(A, words::kW3) >= 3);
  }

  TEST_CASE("pair sweep at n = 4 skips permutation pairs") {
    const SweepReport r = pair_sweep(words::kS32, 4);
    CHECK(r.passed());
    CHECK(r.examined == 65536);
    const auto counter = [&](const char* key) { return r.counters.count(key) ? r.counters.at(key) : 0; };
    CHECK(r.compressible == counter("by_both") + counter("by_word_only") + counter("by_dual_only"));
    std::uint64_t permutation_pairs = 0;
    enumerate_automata(4, {LetterType::Permutation, LetterType::Permutation}, [&](const Automaton& A) {
      if (!is_k_compressible(A, 3)) ++permutation_pairs;
    });
    CHECK(permutation_pairs == 576);
    CHECK(r.compressible <= r.examined - 576);
  }
}
