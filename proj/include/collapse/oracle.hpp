#pragma once

// Brute-force reference procedures. They share no code with the engines
// they check and are only fit for tiny inputs.

#include <optional>
#include <set>
#include <string>

#include "collapse/core.hpp"
#include "collapse/regex.hpp"

namespace collapse::oracle {

/// Lexicographically least among the shortest words of length <= max_length
/// with deficiency >= k, found by enumerating words layer by layer.
std::optional<Word> naive_shortest_compressing_word(const Automaton& A, int k, int max_length);

/// Upper bound on the length of a shortest k-compressing word: the number
/// of subsets with fewer than k elements.
int compressing_length_bound(int n, int k);

/// Words of length <= max_length in the language of the AST, derived from
/// the grammar by set operations.
std::set<std::string> enumerate_language(const RegexNode& node, int max_length);

}  // namespace collapse::oracle
