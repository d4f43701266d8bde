#include "collapse/classify.hpp"

#include <algorithm>
#include <vector>

namespace collapse {

std::string to_string(LetterType t) {
  switch (t) {
    case LetterType::Permutation: return "p";
    case LetterType::Type1: return "1";
    case LetterType::Type2: return "2";
    case LetterType::Type3: return "3";
    case LetterType::Type4: return "4";
    case LetterType::Heavy: return "heavy";
  }
  return "?";
}

LetterClass classify_letter(const Transformation& t) {
  const int n = t.size();
  std::vector<std::vector<int>> preimage(static_cast<std::size_t>(n));
  for (int q = 0; q < n; ++q) preimage[static_cast<std::size_t>(t(q))].push_back(q);

  std::vector<int> missing;
  std::vector<std::vector<int>> classes;  // kernel classes of size >= 2
  for (int q = 0; q < n; ++q) {
    const auto& pre = preimage[static_cast<std::size_t>(q)];
    if (pre.empty()) missing.push_back(q);
    if (pre.size() >= 2) classes.push_back(pre);
  }

  LetterClass c;
  const auto in = [](const std::vector<int>& v, int q) { return std::find(v.begin(), v.end(), q) != v.end(); };

  switch (missing.size()) {
    case 0:
      c.type = LetterType::Permutation;
      return c;
    case 1: {
      const auto& pair = classes.front();
      const int z = missing[0];
      if (in(pair, z)) {
        c.type = LetterType::Type3;
        c.witness = {z, pair[0] == z ? pair[1] : pair[0], -1, -1};
      } else if (in(pair, t(z))) {
        const int x = t(z);
        c.type = LetterType::Type4;
        c.witness = {x, pair[0] == x ? pair[1] : pair[0], z, -1};
      } else {
        c.type = LetterType::Heavy;
      }
      return c;
    }
    case 2: {
      const int u = missing[0], w = missing[1];  // u < w
      if (classes.size() == 1) {
        const auto& triple = classes.front();
        if (in(triple, u) && in(triple, w)) {
          int z = -1;
          for (int q : triple) {
            if (q != u && q != w) z = q;
          }
          c.type = LetterType::Type1;
          c.witness = {u, w, z, -1};
        } else {
          c.type = LetterType::Heavy;
        }
        return c;
      }
      const auto& p1 = classes[0];
      const auto& p2 = classes[1];
      const bool split = (in(p1, u) && in(p2, w)) || (in(p1, w) && in(p2, u));
      if (!split) {
        c.type = LetterType::Heavy;
        return c;
      }
      const auto& pu = in(p1, u) ? p1 : p2;
      const auto& pw = in(p1, u) ? p2 : p1;
      c.type = LetterType::Type2;
      c.witness = {u, pu[0] == u ? pu[1] : pu[0], w, pw[0] == w ? pw[1] : pw[0]};
      return c;
    }
    default:
      c.type = LetterType::Heavy;
      return c;
  }
}

namespace {

int rank(LetterType t) {
  switch (t) {
    case LetterType::Heavy: return 0;
    case LetterType::Type1: return 1;
    case LetterType::Type2: return 2;
    case LetterType::Type3: return 3;
    case LetterType::Type4: return 4;
    case LetterType::Permutation: return 5;
  }
  return 6;
}

}  // namespace

std::string AutomatonClass::label() const {
  return "(" + to_string(first.type) + "," + to_string(second.type) + ")";
}

AutomatonClass classify_automaton(const Automaton& A) {
  AutomatonClass c;
  const LetterClass ca = classify_letter(A.a);
  const LetterClass cb = classify_letter(A.b);
  c.swapped = rank(cb.type) < rank(ca.type);
  c.first = c.swapped ? cb : ca;
  c.second = c.swapped ? ca : cb;
  return c;
}

Automaton normalized(const Automaton& A, const AutomatonClass& c) { return c.swapped ? dual(A) : A; }

}  // namespace collapse
