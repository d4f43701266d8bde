#include "collapse/oracle.hpp"

#include <bit>
#include <vector>

namespace collapse::oracle {

std::optional<Word> naive_shortest_compressing_word(const Automaton& A, int k, int max_length) {
  const int n = A.size();
  // Layer L holds Q·w for the words of length L in lexicographic order; the
  // word at index i spells i in binary with a = 0.
  std::vector<std::uint32_t> layer{(1u << n) - 1u};
  for (int len = 0; len <= max_length; ++len) {
    for (std::size_t i = 0; i < layer.size(); ++i) {
      if (n - std::popcount(layer[i]) < k) continue;
      Word w;
      for (int bit = len - 1; bit >= 0; --bit) w.push_back((i >> bit) & 1u ? Letter::B : Letter::A);
      return w;
    }
    if (len == max_length) break;
    std::vector<std::uint32_t> next(layer.size() * 2);
    for (std::size_t i = 0; i < layer.size(); ++i) {
      next[2 * i] = A.a.apply_bits(layer[i]);
      next[2 * i + 1] = A.b.apply_bits(layer[i]);
    }
    layer = std::move(next);
  }
  return std::nullopt;
}

int compressing_length_bound(int n, int k) {
  int total = 0;
  int binom = 1;
  for (int i = 0; i < k; ++i) {
    total += binom;
    binom = binom * (n - i) / (i + 1);
  }
  return total;
}

namespace {

using Lang = std::set<std::string>;

Lang concat(const Lang& x, const Lang& y, int max_length) {
  Lang out;
  for (const auto& u : x) {
    for (const auto& v : y) {
      if (static_cast<int>(u.size() + v.size()) <= max_length) out.insert(u + v);
    }
  }
  return out;
}

Lang star(const Lang& x, int max_length) {
  Lang out{""};
  Lang frontier{""};
  while (!frontier.empty()) {
    Lang grown;
    for (const auto& w : concat(frontier, x, max_length)) {
      if (out.insert(w).second) grown.insert(w);
    }
    frontier = std::move(grown);
  }
  return out;
}

}  // namespace

std::set<std::string> enumerate_language(const RegexNode& node, int max_length) {
  switch (node.kind) {
    case RegexNode::Kind::Literal:
      return max_length >= 1 ? Lang{std::string(1, to_char(node.letter))} : Lang{};
    case RegexNode::Kind::Concat: {
      Lang out{""};
      for (const auto& c : node.children) out = concat(out, enumerate_language(c, max_length), max_length);
      return out;
    }
    case RegexNode::Kind::Alt: {
      Lang out;
      for (const auto& c : node.children) out.merge(enumerate_language(c, max_length));
      return out;
    }
    case RegexNode::Kind::Star:
      return star(enumerate_language(node.children.at(0), max_length), max_length);
    case RegexNode::Kind::Plus: {
      const Lang x = enumerate_language(node.children.at(0), max_length);
      return concat(x, star(x, max_length), max_length);
    }
  }
  return {};
}

}  // namespace collapse::oracle
