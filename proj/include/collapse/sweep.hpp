#pragma once

// Exhaustive enumeration of small two-letter automata and the checks built
// on it: characterization against the MSA oracle, words against all
// k-compressible automata, and the five-state s32/dual sweep.
//
// Work is split into shards by a-map index; each shard runs independently
// and reports merge by summation, so results do not depend on the thread
// count.

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "collapse/characterize.hpp"

namespace collapse {

/// All n^n maps of {0..n-1} into itself, in lexicographic order of images
/// (last state varying fastest).
std::vector<Transformation> all_maps(int n);

struct EnumFilter {
  std::optional<LetterType> a_type;
  std::optional<LetterType> b_type;
};

struct Shard {
  int index = 0;
  int count = 1;
};

/// Visits every (a,b) pair matching the filter once. Pairs are visited in
/// order of a-map index, then b-map index; a shard visits the a-maps whose
/// index is congruent to shard.index.
void enumerate_automata(int n, const EnumFilter& filter, const std::function<void(const Automaton&)>& visit,
                        Shard shard = {});

struct Finding {
  Automaton automaton;
  std::string expected;
  std::string got;
  std::string branch;
};

struct SweepReport {
  std::string kind;
  int n = 0;
  int k = 3;
  std::string word;  // verify-word only
  /// Families covered, e.g. "(3,p)"; empty means every automaton.
  std::vector<std::string> families;
  /// Automata are counted with multiplicity when the witness reduction ran.
  bool reduced = false;

  std::uint64_t examined = 0;
  std::uint64_t compressible = 0;
  /// Per family label: NotCompressible / Improper / Proper counts.
  std::map<std::string, std::array<std::uint64_t, 3>> verdicts;
  std::map<std::string, std::uint64_t> branch_counts;
  /// Free-form counters (e.g. "by_s_only" in the pair sweep).
  std::map<std::string, std::uint64_t> counters;

  std::uint64_t failure_count = 0;
  /// The first few failures in automaton order.
  std::vector<Finding> failures;
  std::uint64_t menu_failures = 0;

  double elapsed_seconds = 0.0;

  bool passed() const { return failure_count == 0 && menu_failures == 0; }
  /// Branches of all_branches() that never fired.
  std::vector<std::string> unfired_branches() const;
  std::uint64_t proper_count(const std::string& family) const;
};

inline constexpr std::size_t kMaxListedFailures = 20;

struct SweepOptions {
  int threads = 1;
  /// Family runs only: fix the witness of the lower-type letter to canonical
  /// states and weight each automaton by the number of placements.
  bool reduce = true;
};

/// Family labels accepted by verify_characterization, in normalized form.
const std::vector<std::string>& family_labels();

/// Compares characterize against the MSA oracle. An empty family list means
/// all n^n x n^n automata, without reduction.
SweepReport verify_characterization(int n, const std::vector<std::string>& families, const SweepOptions& opt = {});

/// Every k-compressible n-state automaton that w fails to k-compress.
SweepReport verify_word(const Word& w, int n, int k, const SweepOptions& opt = {});

/// Every 3-compressible automaton on `n` states compressed neither by s32
/// nor by its dual.
SweepReport pair_sweep(const Word& s, int n, const SweepOptions& opt = {});
SweepReport five_state_pair_sweep(const SweepOptions& opt = {});

/// A five-state 3-compressible automaton that s32 does not 3-compress
/// (Q·s32 = {0,1,3}) but dual(s32) does (Q·dual(s32) = {3}).
Automaton s32_counterexample();

}  // namespace collapse
