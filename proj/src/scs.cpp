#include "collapse/scs.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace collapse {

PatternIndex::PatternIndex(std::vector<Word> patterns) : patterns_(std::move(patterns)) {
  if (patterns_.size() > 32) throw Error("at most 32 patterns are supported");
  next_.push_back({-1, -1});
  out_.push_back(0);
  for (std::size_t i = 0; i < patterns_.size(); ++i) {
    const Word& p = patterns_[i];
    if (p.empty()) throw Error("pattern " + std::to_string(i) + " is empty");
    int node = 0;
    for (std::size_t j = 0; j < p.size(); ++j) {
      int child = next_[static_cast<std::size_t>(node)][static_cast<std::size_t>(p[j])];
      if (child < 0) {
        child = static_cast<int>(next_.size());
        next_[static_cast<std::size_t>(node)][static_cast<std::size_t>(p[j])] = child;
        next_.push_back({-1, -1});
        out_.push_back(0);
      }
      node = child;
    }
    out_[static_cast<std::size_t>(node)] |= 1u << i;
  }

  // Breadth-first completion of the goto function through failure links.
  std::vector<int> fail(next_.size(), 0);
  std::vector<int> queue;
  for (int l = 0; l < 2; ++l) {
    int& child = next_[0][static_cast<std::size_t>(l)];
    if (child < 0) {
      child = 0;
    } else {
      fail[static_cast<std::size_t>(child)] = 0;
      queue.push_back(child);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int u = queue[head];
    out_[static_cast<std::size_t>(u)] |= out_[static_cast<std::size_t>(fail[static_cast<std::size_t>(u)])];
    for (int l = 0; l < 2; ++l) {
      const int f = next_[static_cast<std::size_t>(fail[static_cast<std::size_t>(u)])][static_cast<std::size_t>(l)];
      int& child = next_[static_cast<std::size_t>(u)][static_cast<std::size_t>(l)];
      if (child < 0) {
        child = f;
      } else {
        fail[static_cast<std::size_t>(child)] = f;
        queue.push_back(child);
      }
    }
  }
}

std::uint32_t PatternIndex::occurring(const Word& w) const {
  int node = root();
  std::uint32_t seen = output(node);
  for (std::size_t i = 0; i < w.size(); ++i) {
    node = step(node, w[i]);
    seen |= output(node);
  }
  return seen;
}

namespace {

constexpr std::size_t kMaxSearchStates = std::size_t{1} << 27;
constexpr std::uint16_t kUnseen = 0xffff;

std::uint32_t full_mask(std::size_t count) {
  return count == 32 ? 0xffffffffu : (1u << count) - 1u;
}

// Patterns that are factors of other patterns add no constraint.
std::vector<Word> essential_patterns(const std::vector<Word>& patterns) {
  std::vector<Word> sorted = patterns;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<Word> out;
  for (const Word& p : sorted) {
    const bool dominated = std::any_of(sorted.begin(), sorted.end(), [&](const Word& q) {
      return q != p && q.str().find(p.str()) != std::string::npos;
    });
    if (!dominated) out.push_back(p);
  }
  return out;
}

}  // namespace

ScsSolution scs_solve(const std::vector<Word>& patterns, bool enumerate_all, std::size_t cap) {
  if (patterns.empty()) throw Error("pattern set is empty");
  if (patterns.size() > 32) throw Error("at most 32 patterns are supported");
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    if (patterns[i].empty()) throw Error("pattern " + std::to_string(i) + " is empty");
  }

  const PatternIndex index(essential_patterns(patterns));
  const std::size_t k = index.patterns().size();
  const std::uint32_t goal = full_mask(k);
  const std::size_t masks = std::size_t{1} << k;
  if (index.node_count() > kMaxSearchStates / masks) {
    throw Error("search space of " + std::to_string(index.node_count()) + " nodes x 2^" + std::to_string(k) +
                " masks is too large");
  }
  const std::size_t states = index.node_count() * masks;
  const auto id = [&](int node, std::uint32_t mask) { return static_cast<std::uint32_t>(static_cast<std::size_t>(node) * masks + mask); };
  const auto node_of = [&](std::uint32_t s) { return static_cast<int>(s / masks); };
  const auto mask_of = [&](std::uint32_t s) { return static_cast<std::uint32_t>(s % masks); };
  const auto succ = [&](std::uint32_t s, Letter l) {
    const int next = index.step(node_of(s), l);
    return id(next, mask_of(s) | index.output(next));
  };

  std::vector<std::uint16_t> dist(states, kUnseen);
  std::vector<std::uint32_t> queue;
  const std::uint32_t start = id(index.root(), index.output(index.root()));
  dist[start] = 0;
  queue.push_back(start);

  // Expand whole layers until one contains a goal state.
  std::size_t layer_begin = 0;
  int length = 0;
  bool reached = mask_of(start) == goal;
  while (!reached) {
    const std::size_t layer_end = queue.size();
    if (layer_begin == layer_end) throw Error("pattern set cannot be covered");
    if (length + 1 >= kUnseen) throw Error("optimal length exceeds search bound");
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      for (Letter l : {Letter::A, Letter::B}) {
        const std::uint32_t t = succ(queue[i], l);
        if (dist[t] != kUnseen) continue;
        dist[t] = static_cast<std::uint16_t>(length + 1);
        queue.push_back(t);
        reached = reached || mask_of(t) == goal;
      }
    }
    layer_begin = layer_end;
    ++length;
  }

  // Mark states lying on some optimal path, last layer first.
  std::vector<char> useful(states, 0);
  for (std::size_t i = layer_begin; i < queue.size(); ++i) {
    if (mask_of(queue[i]) == goal) useful[queue[i]] = 1;
  }
  for (std::size_t i = layer_begin; i-- > 0;) {
    const std::uint32_t s = queue[i];
    for (Letter l : {Letter::A, Letter::B}) {
      const std::uint32_t t = succ(s, l);
      if (dist[t] == dist[s] + 1 && useful[t]) useful[s] = 1;
    }
  }

  ScsSolution sol;
  sol.length = length;
  sol.covered = full_mask(patterns.size());
  Word current;
  // Depth-first in letter order a < b, so words come out sorted.
  const std::function<bool(std::uint32_t)> walk = [&](std::uint32_t s) -> bool {
    if (static_cast<int>(current.size()) == length) {
      if (sol.words.size() == cap) throw Error("more than " + std::to_string(cap) + " optimal words");
      sol.words.push_back(current);
      return enumerate_all;
    }
    for (Letter l : {Letter::A, Letter::B}) {
      const std::uint32_t t = succ(s, l);
      if (dist[t] != dist[s] + 1 || !useful[t]) continue;
      current.push_back(l);
      const bool more = walk(t);
      current.pop_back();
      if (!more) return false;
    }
    return true;
  };
  walk(start);
  return sol;
}

ScsSolution scs_filter(const ScsSolution& sol, const std::vector<Regex>& constraints) {
  ScsSolution out;
  out.length = sol.length;
  out.covered = sol.covered;
  for (const Word& w : sol.words) {
    const bool keep = std::all_of(constraints.begin(), constraints.end(), [&](const Regex& r) { return r.matches_factor(w); });
    if (keep) out.words.push_back(w);
  }
  return out;
}

std::vector<Word> parse_pattern_list(const std::string& text) {
  std::vector<Word> out;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t\r");
    try {
      out.emplace_back(line.substr(first, last - first + 1));
    } catch (const Error& e) {
      throw Error("pattern line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace collapse
