#pragma once

// m-Missing-State Automata.
//
// The mMSA of an n-state automaton has one node per subset of at most m-1
// states (the states already "missed") plus a sink standing for "m or more
// missing". A word is m-compressing iff it drives the empty set to the sink.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "collapse/core.hpp"

namespace collapse {

enum class Verdict { NotCompressible, Improper, Proper };

std::string to_string(Verdict v);

class Msa {
 public:
  static constexpr int kSink = -1;

  int threshold() const { return m_; }
  int states() const { return n_; }

  /// Number of nodes, counting the sink.
  std::size_t node_count() const { return nodes_.size() + 1; }
  /// Non-sink nodes; index 0 is the empty set.
  const std::vector<StateSet>& nodes() const { return nodes_; }
  int start() const { return 0; }
  int index_of(const StateSet& s) const;

  /// Successor node index, or kSink.
  int successor(int node, Letter l) const { return next_[static_cast<std::size_t>(node)][static_cast<std::size_t>(l)]; }

  bool sink_reachable() const;

 private:
  friend Msa build_msa(const Automaton& A, int m);

  int n_ = 0;
  int m_ = 0;
  std::vector<StateSet> nodes_;
  std::vector<std::array<int, 2>> next_;
};

/// Throws Error unless 1 <= m < n.
Msa build_msa(const Automaton& A, int m);

struct CompressReport {
  bool compressible = false;
  /// Lexicographically least among the shortest k-compressing words.
  std::optional<Word> shortest_word;
  int length = 0;
  /// Meaningful only when compressible: no word of length k compresses.
  bool proper = false;
};

CompressReport shortest_compressing_word(const Automaton& A, int k);

/// Length of a shortest k-compressing word, or -1. Allocation-free fast path
/// for exhaustive sweeps; agrees with shortest_compressing_word.
int shortest_compressing_length(const Automaton& A, int k);

bool is_k_compressible(const Automaton& A, int k);
Verdict is_proper(const Automaton& A, int k);

/// Graphviz rendering: nodes "{}", "0,2", ..., "SINK"; parallel edges merged
/// into a single "a,b" label.
std::string export_dot(const Msa& msa);

}  // namespace collapse
