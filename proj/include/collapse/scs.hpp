#pragma once

// Shortest words containing every pattern of a set as a factor.
//
// Search runs breadth-first over (matcher node, covered patterns) pairs, so
// the first layer reaching the full mask gives the optimum length. Optimal
// words are read back from the layered graph.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "collapse/core.hpp"
#include "collapse/regex.hpp"

namespace collapse {

/// Multi-pattern matcher over {a,b}: a trie with failure links whose nodes
/// carry the set of patterns ending there.
class PatternIndex {
 public:
  /// At most 32 patterns, each nonempty.
  explicit PatternIndex(std::vector<Word> patterns);

  const std::vector<Word>& patterns() const { return patterns_; }
  std::size_t node_count() const { return next_.size(); }
  int root() const { return 0; }
  int step(int node, Letter l) const { return next_[static_cast<std::size_t>(node)][static_cast<std::size_t>(l)]; }
  /// Patterns (bit i = patterns()[i]) that end at this node.
  std::uint32_t output(int node) const { return out_[static_cast<std::size_t>(node)]; }

  /// Patterns occurring as factors of w.
  std::uint32_t occurring(const Word& w) const;

 private:
  std::vector<Word> patterns_;
  std::vector<std::array<int, 2>> next_;
  std::vector<std::uint32_t> out_;
};

struct ScsSolution {
  int length = 0;
  /// Sorted; one word unless all optima were requested.
  std::vector<Word> words;
  std::uint32_t covered = 0;
};

inline constexpr std::size_t kDefaultScsCap = 1'000'000;

/// Throws Error on an empty set, an empty pattern, more than 32 patterns, a
/// search space that does not fit in memory, or more than `cap` optima.
ScsSolution scs_solve(const std::vector<Word>& patterns, bool enumerate_all, std::size_t cap = kDefaultScsCap);

/// Keeps the words having, for every constraint, a factor in its language.
/// An empty result means no optimum satisfies the constraints.
ScsSolution scs_filter(const ScsSolution& sol, const std::vector<Regex>& constraints);

/// One word per line; blank lines and lines starting with '#' are skipped.
std::vector<Word> parse_pattern_list(const std::string& text);

}  // namespace collapse
