#include "collapse/msa.hpp"

#include <algorithm>
#include <sstream>

namespace collapse {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::NotCompressible: return "NotCompressible";
    case Verdict::Improper: return "Improper";
    case Verdict::Proper: return "Proper";
  }
  return "?";
}

namespace {

void check_threshold(const Automaton& A, int m) {
  if (m < 1 || m >= A.size()) {
    throw Error("threshold " + std::to_string(m) + " must satisfy 1 <= m < n = " + std::to_string(A.size()));
  }
}

std::uint32_t full_bits(int n) { return (1u << n) - 1u; }

// Missing set after reading one letter, on bitmasks.
inline std::uint32_t step_bits(const Transformation& t, std::uint32_t full, std::uint32_t missing) {
  return full & ~t.apply_bits(full & ~missing);
}

}  // namespace

int Msa::index_of(const StateSet& s) const {
  const auto it = std::find(nodes_.begin(), nodes_.end(), s);
  return it == nodes_.end() ? kSink : static_cast<int>(it - nodes_.begin());
}

bool Msa::sink_reachable() const {
  std::vector<char> seen(nodes_.size(), 0);
  std::vector<int> stack{start()};
  seen[0] = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int l = 0; l < 2; ++l) {
      const int v = next_[static_cast<std::size_t>(u)][static_cast<std::size_t>(l)];
      if (v == kSink) return true;
      if (!seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = 1;
        stack.push_back(v);
      }
    }
  }
  return false;
}

Msa build_msa(const Automaton& A, int m) {
  check_threshold(A, m);
  Msa msa;
  msa.n_ = A.size();
  msa.m_ = m;

  // Subsets ordered by size, then by bitmask; the empty set comes first.
  std::vector<std::uint32_t> masks;
  for (std::uint32_t s = 0; s <= full_bits(msa.n_); ++s) {
    if (std::popcount(s) < m) masks.push_back(s);
  }
  std::stable_sort(masks.begin(), masks.end(),
                   [](std::uint32_t x, std::uint32_t y) { return std::popcount(x) < std::popcount(y); });

  std::vector<int> index(std::size_t{1} << msa.n_, Msa::kSink);
  for (std::size_t i = 0; i < masks.size(); ++i) {
    index[masks[i]] = static_cast<int>(i);
    msa.nodes_.push_back(StateSet::from_bits(msa.n_, masks[i]));
  }
  msa.next_.resize(masks.size());
  for (std::size_t i = 0; i < masks.size(); ++i) {
    for (Letter l : {Letter::A, Letter::B}) {
      const StateSet succ = missing_step(A, msa.nodes_[i], l);
      msa.next_[i][static_cast<std::size_t>(l)] = succ.size() < m ? index[succ.bits()] : Msa::kSink;
    }
  }
  return msa;
}

CompressReport shortest_compressing_word(const Automaton& A, int k) {
  check_threshold(A, k);
  const int n = A.size();
  const std::uint32_t full = full_bits(n);

  // Breadth-first over missing sets; letters expanded in order a, b so the
  // first sink hit spells the lexicographically least shortest word.
  struct Node {
    std::uint32_t missing;
    int parent;
    Letter via;
  };
  std::vector<int> seen(std::size_t{1} << n, -1);
  std::vector<Node> order{{0, -1, Letter::A}};
  seen[0] = 0;

  const auto spell = [&](int node, Letter last) {
    std::vector<Letter> rev{last};
    for (int i = node; order[static_cast<std::size_t>(i)].parent >= 0; i = order[static_cast<std::size_t>(i)].parent) {
      rev.push_back(order[static_cast<std::size_t>(i)].via);
    }
    Word w;
    for (auto it = rev.rbegin(); it != rev.rend(); ++it) w.push_back(*it);
    return w;
  };

  for (std::size_t head = 0; head < order.size(); ++head) {
    const std::uint32_t cur = order[head].missing;
    for (Letter l : {Letter::A, Letter::B}) {
      const std::uint32_t succ = step_bits(A.letter(l), full, cur);
      if (std::popcount(succ) >= k) {
        CompressReport r;
        r.compressible = true;
        r.shortest_word = spell(static_cast<int>(head), l);
        r.length = static_cast<int>(r.shortest_word->size());
        r.proper = r.length > k;
        return r;
      }
      if (seen[succ] < 0) {
        seen[succ] = static_cast<int>(order.size());
        order.push_back({succ, static_cast<int>(head), l});
      }
    }
  }
  return {};
}

int shortest_compressing_length(const Automaton& A, int k) {
  const int n = A.size();
  if (k < 1 || k >= n) check_threshold(A, k);
  const std::uint32_t full = full_bits(n);

  // Missing-set BFS; at most C(n,<k) live nodes, so a small flat queue with
  // linear membership tests is enough for the sizes the sweeps touch.
  constexpr int kCap = 1024;
  std::uint32_t queue[kCap];
  std::uint8_t depth[kCap];
  int tail = 0;
  queue[tail] = 0;
  depth[tail++] = 0;
  for (int head = 0; head < tail; ++head) {
    const std::uint32_t cur = queue[head];
    for (int l = 0; l < 2; ++l) {
      const std::uint32_t succ = step_bits(l == 0 ? A.a : A.b, full, cur);
      if (std::popcount(succ) >= k) return depth[head] + 1;
      bool known = false;
      for (int i = 0; i < tail; ++i) {
        if (queue[i] == succ) {
          known = true;
          break;
        }
      }
      if (!known) {
        if (tail == kCap) return shortest_compressing_word(A, k).length;  // large n: fall back
        queue[tail] = succ;
        depth[tail++] = static_cast<std::uint8_t>(depth[head] + 1);
      }
    }
  }
  return -1;
}

bool is_k_compressible(const Automaton& A, int k) { return shortest_compressing_length(A, k) >= 0; }

Verdict is_proper(const Automaton& A, int k) {
  const int len = shortest_compressing_length(A, k);
  if (len < 0) return Verdict::NotCompressible;
  return len > k ? Verdict::Proper : Verdict::Improper;
}

namespace {

std::string node_name(const StateSet& s) {
  std::string out;
  for (int q : s.members()) {
    if (!out.empty()) out += ',';
    out += std::to_string(q);
  }
  return out.empty() ? "{}" : out;
}

}  // namespace

std::string export_dot(const Msa& msa) {
  std::ostringstream os;
  os << "digraph MSA {\n";
  os << "  rankdir=LR;\n";
  os << "  node [shape=circle];\n";
  for (std::size_t i = 0; i < msa.nodes().size(); ++i) {
    os << "  \"" << node_name(msa.nodes()[i]) << '"';
    if (static_cast<int>(i) == msa.start()) os << " [style=bold]";
    os << ";\n";
  }
  os << "  \"SINK\" [shape=doublecircle];\n";
  for (std::size_t i = 0; i < msa.nodes().size(); ++i) {
    const int u = static_cast<int>(i);
    const int ta = msa.successor(u, Letter::A);
    const int tb = msa.successor(u, Letter::B);
    const auto name = [&](int v) { return v == Msa::kSink ? std::string("SINK") : node_name(msa.nodes()[static_cast<std::size_t>(v)]); };
    const std::string from = node_name(msa.nodes()[i]);
    if (ta == tb) {
      os << "  \"" << from << "\" -> \"" << name(ta) << "\" [label=\"a,b\"];\n";
    } else {
      os << "  \"" << from << "\" -> \"" << name(ta) << "\" [label=\"a\"];\n";
      os << "  \"" << from << "\" -> \"" << name(tb) << "\" [label=\"b\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace collapse
