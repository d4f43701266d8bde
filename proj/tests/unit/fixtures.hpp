#pragma once

// Shared automata and brute-force helpers for the unit tests.

#include <random>
#include <string>
#include <vector>

#include "collapse/core.hpp"

namespace fixtures {

using collapse::Automaton;
using collapse::Transformation;
using collapse::Word;

/// Three-state Cerny automaton: a merges 0 into 1, b is the cycle 0->1->2->0.
inline Automaton cerny3() { return Automaton(Transformation{1, 1, 2}, Transformation{1, 2, 0}); }

/// All words of length <= max_length, shortest first, each length in
/// lexicographic order.
inline std::vector<Word> words_up_to(int max_length) {
  std::vector<Word> out{Word{}};
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (static_cast<int>(out[i].size()) == max_length) break;
    out.push_back(out[i] + Word("a"));
    out.push_back(out[i] + Word("b"));
  }
  return out;
}

inline Transformation random_map(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> d(0, n - 1);
  std::vector<int> images(static_cast<std::size_t>(n));
  for (auto& x : images) x = d(rng);
  return Transformation(std::span<const int>(images));
}

inline Automaton random_automaton(std::mt19937& rng, int n) { return Automaton(random_map(rng, n), random_map(rng, n)); }

inline Word random_word(std::mt19937& rng, int length) {
  std::bernoulli_distribution coin(0.5);
  Word w;
  for (int i = 0; i < length; ++i) w.push_back(coin(rng) ? collapse::Letter::B : collapse::Letter::A);
  return w;
}

/// Q·w by direct per-state evaluation.
inline int brute_deficiency(const Automaton& A, const Word& w) {
  std::vector<bool> hit(static_cast<std::size_t>(A.size()), false);
  for (int q = 0; q < A.size(); ++q) {
    int s = q;
    for (char c : w.str()) s = c == 'a' ? A.a(s) : A.b(s);
    hit[static_cast<std::size_t>(s)] = true;
  }
  int image = 0;
  for (bool h : hit) image += h;
  return A.size() - image;
}

/// Relabels states through the bijection p: state q becomes p[q].
inline Automaton relabel(const Automaton& A, const std::vector<int>& p) {
  const int n = A.size();
  std::vector<int> a(static_cast<std::size_t>(n)), b(static_cast<std::size_t>(n));
  for (int q = 0; q < n; ++q) {
    a[static_cast<std::size_t>(p[static_cast<std::size_t>(q)])] = p[static_cast<std::size_t>(A.a(q))];
    b[static_cast<std::size_t>(p[static_cast<std::size_t>(q)])] = p[static_cast<std::size_t>(A.b(q))];
  }
  return Automaton(Transformation(std::span<const int>(a)), Transformation(std::span<const int>(b)));
}

}  // namespace fixtures
