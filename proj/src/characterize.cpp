#include "collapse/characterize.hpp"

#include <algorithm>
#include <initializer_list>

namespace collapse {

std::string to_string(MenuKind k) {
  switch (k) {
    case MenuKind::Words: return "words";
    case MenuKind::Language: return "L";
    case MenuKind::DualLanguage: return "dual(L)";
  }
  return "?";
}

namespace {

using Mask = std::uint32_t;

Mask mask(std::initializer_list<int> qs) {
  Mask m = 0;
  for (int q : qs) m |= 1u << q;
  return m;
}

bool in(int q, Mask s) { return (s >> q) & 1u; }
bool sub(Mask s, Mask t) { return (s & ~t) == 0; }

Mask orb(const Transformation& t, Mask s) {
  for (;;) {
    const Mask next = s | t.apply_bits(s);
    if (next == s) return s;
    s = next;
  }
}

int orb_size(const Transformation& t, int q) { return std::popcount(orb(t, mask({q}))); }

struct Outcome {
  Verdict verdict;
  std::string branch;
  std::vector<Word> menu;
  MenuKind kind = MenuKind::Words;
};

std::vector<Word> words(std::initializer_list<const char*> ws) {
  std::vector<Word> out;
  for (const char* w : ws) out.emplace_back(w);
  return out;
}

Outcome not_compressible(std::string branch) { return {Verdict::NotCompressible, std::move(branch), {}}; }
Outcome improper(std::string branch) { return {Verdict::Improper, std::move(branch), {}}; }
Outcome proper(std::string branch, std::vector<Word> menu) { return {Verdict::Proper, std::move(branch), std::move(menu)}; }

// Normalized automaton plus witnesses; a(q), b(q) are the letter actions.
struct View {
  const Transformation& ta;
  const Transformation& tb;
  const LetterClass& ca;
  const LetterClass& cb;

  int a(int q) const { return ta(q); }
  int b(int q) const { return tb(q); }
  Mask a(Mask s) const { return ta.apply_bits(s); }
  Mask b(Mask s) const { return tb.apply_bits(s); }
};

// ---- (i,p) ------------------------------------------------------------

Outcome eval_1p(const View& v) {
  const int p1 = v.ca.x(), p2 = v.ca.y(), p3 = v.ca.z();
  const Mask s12 = mask({p1, p2}), s123 = mask({p1, p2, p3});
  if (sub(orb(v.tb, s12), s123)) return not_compressible("1p.orbit-inside");
  if (!sub(v.b(s12), s123)) return improper("1p.escape");
  return proper("1p.proper", words({"abba"}));
}

Outcome eval_2p(const View& v) {
  const int p1 = v.ca.x(), p2 = v.ca.y(), p3 = v.ca.z(), p4 = v.ca.v();
  const Mask s = mask({p1, p2, p3, p4});
  const Mask m13 = mask({p1, p3});
  const Mask img = v.b(m13);
  const auto menu = [] { return words({"abba", "abbba"}); };
  if (!sub(img, s)) return improper("2p.escape");
  if (img == mask({p1, p2}) || img == mask({p3, p4})) return improper("2p.same-pair");
  if (img == m13) return not_compressible("2p.fixed");
  if (!sub(orb(v.tb, m13), s)) return proper("2p.orbit-leaves", menu());
  if ((img == mask({p1, p4}) || img == mask({p2, p3})) && (orb_size(v.tb, p1) == 3 || orb_size(v.tb, p3) == 3)) {
    return proper("2p.three-cycle", menu());
  }
  return not_compressible("2p.trapped");
}

Outcome eval_3p(const View& v) {
  const int p1 = v.ca.x(), p2 = v.ca.y();
  const Mask s12 = mask({p1, p2});
  if (orb_size(v.tb, p1) < 2) return not_compressible("3p.fixed-1");
  if (v.b(s12) == s12) return not_compressible("3p.swap-12");

  const int b1 = v.b(p1);
  // b = (1 3)pi with 3 := 1b.
  if (b1 != p2 && v.b(b1) == p1) {
    const int p3 = b1;
    if (v.a(p3) == p3) return not_compressible("3p.13.fixed-3");
    if (v.a(p3) == p2 && v.b(p2) == p2 && v.a(p2) == p3) return not_compressible("3p.13.loop-2");
    const int p4 = v.b(p2);
    if (p4 != p2 && p4 != p3 && v.a(p3) == p4 && v.b(p4) == p2 && v.a(p4) == p3) {
      return not_compressible("3p.13.loop-4");
    }
  }
  // b = (1 2 3)pi with 3 := 2b, or b = (1 3 2)pi with 3 := 1b.
  if (b1 == p2 && v.b(v.b(p2)) == p1) {
    const int p3 = v.b(p2);
    if (v.a(mask({p2, p3})) == mask({p2, p3})) return not_compressible("3p.123");
  }
  if (b1 != p2 && v.b(b1) == p2 && v.b(p2) == p1) {
    const int p3 = b1;
    if (v.a(mask({p2, p3})) == mask({p2, p3})) return not_compressible("3p.132");
  }
  // b = (1 3 2 4)pi with 3 := 1b, 4 := 2b.
  if (b1 != p2 && v.b(b1) == p2 && v.b(p2) != p1 && v.b(v.b(p2)) == p1) {
    const int p3 = b1, p4 = v.b(p2);
    if (v.a(mask({p3, p4})) == mask({p3, p4})) return not_compressible("3p.1324");
  }
  return proper("3p.proper", words({"ababa", "abaaba", "abbabba", "abbaabba", "abbababba", "ababbaba", "abbbaba",
                                    "ababbba", "abbbabbba"}));
}

Outcome eval_4p(const View& v) {
  const int p1 = v.ca.x(), p2 = v.ca.y(), p3 = v.ca.z();
  const Mask s123 = mask({p1, p2, p3});
  const int b1 = v.b(p1), b2 = v.b(p2), b3 = v.b(p3);
  if (v.b(mask({p1, p3})) == mask({p1, p3})) return not_compressible("4p.13-invariant");
  if (b1 == p2 && b2 == p1 && b3 == p3) return not_compressible("4p.12-swap");

  const bool cycle23 = (b1 == p1 && b2 == p3 && b3 == p2) || (b1 == p2 && b2 == p3 && b3 == p1) ||
                       (b1 == p3 && b3 == p2 && b2 == p1);
  if (cycle23 && v.a(p2) == p2) return not_compressible("4p.cycle-23");

  // The five shapes naming a fourth state 4 outside {1,2,3}.
  int p4 = -1;
  if (b1 == p1 && b2 == p2 && !in(b3, s123) && v.b(b3) == p3) p4 = b3;                   // (1)(2)(3 4)
  else if (b1 == p2 && b2 == p1 && !in(b3, s123) && v.b(b3) == p3) p4 = b3;              // (1 2)(3 4)
  else if (!in(b1, s123) && v.b(b1) == p1 && b2 == p3 && b3 == p2) p4 = b1;              // (1 4)(2 3)
  else if (!in(b1, s123) && v.b(b1) == p2 && b2 == p3 && b3 == p1) p4 = b1;              // (1 4 2 3)
  else if (b1 == p3 && b3 == p2 && !in(b2, s123) && v.b(b2) == p1) p4 = b2;              // (1 3 2 4)
  if (p4 >= 0 && v.a(p4) == p2) return not_compressible("4p.cycle-34");

  return proper("4p.proper", words({"aabaa", "aabbaa", "aabbba", "aababaa", "abbbabbba"}));
}

// ---- never proper ------------------------------------------------------

bool pair_meets_classes(Mask pair, const LetterClass& c) {
  const int x = c.x(), y = c.y(), z = c.z(), w = c.v();
  return pair == mask({x, z}) || pair == mask({x, w}) || pair == mask({y, z}) || pair == mask({y, w});
}

Outcome eval_11(const View& v) {
  const int p1 = v.ca.x(), p2 = v.ca.y(), p3 = v.ca.z();
  const int x = v.cb.x(), y = v.cb.y(), z = v.cb.z();
  if (sub(mask({p1, p2}), mask({x, y, z})) && sub(mask({x, y}), mask({p1, p2, p3}))) {
    return not_compressible("11.trapped");
  }
  return improper("11.short");
}

Outcome eval_12(const View& v) {
  const int p1 = v.ca.x(), p2 = v.ca.y(), p3 = v.ca.z();
  if (pair_meets_classes(mask({p1, p2}), v.cb) && sub(mask({v.cb.x(), v.cb.z()}), mask({p1, p2, p3}))) {
    return not_compressible("12.trapped");
  }
  return improper("12.short");
}

Outcome eval_22(const View& v) {
  const int p1 = v.ca.x(), p2 = v.ca.y(), p3 = v.ca.z(), p4 = v.ca.v();
  const Mask xz = mask({v.cb.x(), v.cb.z()});
  const bool straddles = xz == mask({p1, p3}) || xz == mask({p1, p4}) || xz == mask({p2, p3}) || xz == mask({p2, p4});
  if (pair_meets_classes(mask({p1, p3}), v.cb) && straddles) return not_compressible("22.trapped");
  return improper("22.short");
}

Outcome eval_14(const View& v) {
  const int p1 = v.ca.x(), p2 = v.ca.y(), p3 = v.ca.z();
  const int x = v.cb.x(), y = v.cb.y(), z = v.cb.z();
  if (mask({x, z}) == mask({p1, p2})) return not_compressible("14.trapped");
  // b = [3,q]\z with {z,q} = {1,2}: missing sets stay within {1,2}, {z,3}.
  if (x == p3 && in(z, mask({p1, p2})) && in(y, mask({p1, p2}))) return not_compressible("14.kernel-3");
  // b = [1,2]\3 with 1b = 2b inside {1,2,3}.
  if (z == p3 && mask({x, y}) == mask({p1, p2}) && in(v.b(x), mask({p1, p2, p3}))) {
    return not_compressible("14.pair-12");
  }
  return improper("14.short");
}

Outcome eval_24(const View& v) {
  const int p1 = v.ca.x(), p2 = v.ca.y(), p3 = v.ca.z(), p4 = v.ca.v();
  const int x = v.cb.x(), y = v.cb.y(), z = v.cb.z();
  const Mask xz = mask({x, z});
  if (!(xz == mask({p1, p3}) || xz == mask({p1, p4}) || xz == mask({p2, p3}) || xz == mask({p2, p4}))) {
    return improper("24.short");
  }
  if ((mask({x, y}) & mask({p1, p3})) == 0) return improper("24.short");
  if (xz == mask({p1, p3})) return not_compressible("24.missing-pair");

  // {x,z} = {1,4}, or its mirror {3,2} under 1<->3, 2<->4.
  const auto straddle = [&](int r2, int r3, int r4) -> Outcome {
    if (x == r4) return not_compressible("24.straddle");
    if (y != r2 || v.b(r3) != r2) return improper("24.short");
    return not_compressible("24.straddle");
  };
  if (xz == mask({p1, p4})) return straddle(p2, p3, p4);
  if (xz == mask({p3, p2})) return straddle(p4, p1, p2);

  // {x,z} = {2,4}.
  const bool aligned = (x == p2 && y == p1 && z == p4) || (x == p4 && y == p3 && z == p2);
  if (aligned) {
    const int q = y == p1 ? p3 : p1;
    return v.b(q) == y ? not_compressible("24.kernel-pair") : improper("24.short");
  }
  return improper("24.short");
}

// ---- mixed families ----------------------------------------------------

Outcome eval_13(const View& v) {
  const int p1 = v.ca.x(), p2 = v.ca.y(), p3 = v.ca.z();
  const int x = v.cb.x(), y = v.cb.y();
  const Mask s123 = mask({p1, p2, p3});
  if (!in(x, s123)) return improper("13.x-outside");
  if ((mask({x, y}) & mask({p1, p2})) == 0) return improper("13.disjoint");
  int q;
  if (x == p1) q = p2;
  else if (x == p2) q = p1;
  else q = y == p1 ? p2 : p1;
  if (!in(v.b(q), s123)) return improper("13.escape");
  if (sub(orb(v.tb, mask({q})), s123)) return not_compressible("13.trapped");
  return proper("13.proper", words({"abba"}));
}

Outcome eval_23(const View& v) {
  const int p1 = v.ca.x(), p2 = v.ca.y(), p3 = v.ca.z(), p4 = v.ca.v();
  const int x = v.cb.x(), y = v.cb.y();
  const auto menu = [] { return words({"abba", "abbba"}); };
  if (!in(x, mask({p1, p2, p3, p4}))) return improper("23.x-outside");

  // x a missing state of a: x = 1 (or 3, mirrored).
  const auto missing = [&](int r3, int r4) -> Outcome {
    const int b3 = v.b(r3);
    if (b3 == r3) return not_compressible("23.x-missing.fixed");
    if (b3 != r4) return improper("23.x-missing.escape");
    if (sub(orb(v.tb, mask({r3})), mask({r3, r4}))) return not_compressible("23.x-missing.trapped");
    return proper("23.x-missing.proper", menu());
  };
  // x a non-missing state of a: x = 2 (or 4, mirrored).
  const auto kernel = [&](int r1, int r3, int r4) -> Outcome {
    if (y != r1 && y != r3) return improper("23.x-kernel.y-outside");
    if (y == r1) {
      if (v.b(r3) == r3) return not_compressible("23.x-kernel.y-same.fixed");
      if (v.b(r3) != r4) return improper("23.x-kernel.y-same.escape");
      if (v.b(r4) == r3) return not_compressible("23.x-kernel.y-same.swap");
      return proper("23.x-kernel.y-same.proper", menu());
    }
    if (!in(v.b(r1), mask({r3, r4}))) return improper("23.x-kernel.y-other.escape");
    return proper("23.x-kernel.y-other.proper", menu());
  };
  if (x == p1) return missing(p3, p4);
  if (x == p3) return missing(p1, p2);
  if (x == p2) return kernel(p1, p3, p4);
  return kernel(p3, p1, p2);
}

Outcome eval_33(const View& v) {
  const int p1 = v.ca.x(), p2 = v.ca.y();
  const int x = v.cb.x(), y = v.cb.y();
  const auto menu = [] {
    return words({"abab", "abbab", "abbbab", "abaab", "abaaab", "baba", "baaba", "baaaba", "babba", "babbba"});
  };
  if (x == p1 || mask({x, y}) == mask({p1, p2})) return not_compressible("33.trivial");

  if (x == p2) {
    const Mask s = mask({p2, y});
    const int b1 = v.b(p1), bb1 = v.b(b1), bbb1 = v.b(bb1);
    const Mask hits = mask({v.a(b1), v.a(bb1), v.a(bbb1)});
    if (!sub(hits, s) || !sub(orb(v.ta, mask({v.a(b1)})), s)) return proper("33.b-misses-2.proper", menu());
    return not_compressible("33.b-misses-2.trapped");
  }
  if (y == p1) {
    const Mask s = mask({p1, p2});
    const int ax = v.a(x), aax = v.a(ax), aaax = v.a(aax);
    const Mask hits = mask({v.b(ax), v.b(aax), v.b(aaax)});
    if (!sub(hits, s) || !sub(orb(v.tb, mask({v.b(ax)})), s)) return proper("33.b-joins-1.proper", menu());
    return not_compressible("33.b-joins-1.trapped");
  }
  if (!in(v.b(p1), mask({p1, p2}))) return improper("33.apart.1b-escape");
  if (!in(v.a(x), mask({x, y}))) return improper("33.apart.xa-escape");
  if (sub(orb(v.tb, mask({p1})), mask({p1, p2})) && sub(orb(v.ta, mask({x})), mask({x, y}))) {
    return not_compressible("33.apart.trapped");
  }
  return proper("33.apart.proper", menu());
}

Outcome eval_34(const View& v) {
  const int p1 = v.ca.x(), p2 = v.ca.y();
  const int x = v.cb.x(), y = v.cb.y(), z = v.cb.z();
  const Mask s12 = mask({p1, p2}), sxy = mask({x, y});
  const auto menu = [] { return words({"bbabb", "bbaabb", "bbaaabb", "bbababb"}); };

  if ((s12 & mask({x, z})) == 0) return improper("34.short");
  if (!in(z, s12) && (mask({p1, v.a(z)}) & sxy) == 0) return improper("34.short");
  if ((mask({p1, v.b(p1)}) & sxy) == 0) return improper("34.short");
  if (!in(p1, sxy) && (mask({z, v.b(p1)}) & s12) == 0) return improper("34.short");

  if (z == p1) {
    if (!sub(orb(v.ta, mask({x})), sxy)) return proper("34.z1.proper", menu());
    return not_compressible("34.z1.trapped");
  }
  if (z == p2) {
    if (x == p1) {
      if (!sub(orb(v.ta, mask({p2})), mask({p2, y})) || !in(v.b(v.a(p2)), mask({p1, y}))) {
        return proper("34.z2.x1.proper", menu());
      }
      return not_compressible("34.z2.x1.trapped");
    }
    if (y == p1) {
      const bool moved = mask({v.a(p2), v.a(x)}) != mask({p2, x});
      const int ab2 = v.b(v.a(p2)), abx = v.b(v.a(x));
      if (!moved && mask({ab2, abx}) == mask({p1, x})) return not_compressible("34.z2.y1.trapped");
      if (moved && ab2 == p1 && abx == x) {
        Outcome o = proper("34.z2.y1.language", words({"bbaaabb"}));
        o.kind = MenuKind::Language;
        return o;
      }
      return proper("34.z2.y1.proper", menu());
    }
    // Here 1 is outside {x,y}, and the short-word checks force 1b = y.
    if (mask({v.a(x), v.a(y)}) != sxy) return proper("34.z2.1b-y.proper", menu());
    return not_compressible("34.z2.1b-y.trapped");
  }
  if (x == p1 && y != p2) {
    if (v.a(z) != z) return proper("34.zout.x1.proper", menu());
    return not_compressible("34.zout.x1.trapped");
  }
  // Here the short-word checks force {x,y} = {1,2}.
  if (orb_size(v.ta, z) > 2 || !in(v.b(v.a(z)), s12)) return proper("34.zout.xy12.proper", menu());
  return not_compressible("34.zout.xy12.trapped");
}

Outcome eval_44(const View& v) {
  const int p1 = v.ca.x(), p2 = v.ca.y(), p3 = v.ca.z();
  const int x = v.cb.x(), y = v.cb.y(), z = v.cb.z();
  const Mask s12 = mask({p1, p2}), sxy = mask({x, y});
  const auto menu = [] { return words({"bbaa", "bbabb", "aabb", "aabaa"}); };

  if ((s12 & mask({x, z})) == 0) return improper("44.short");
  if (!in(z, s12) && (mask({p3, v.a(z)}) & sxy) == 0) return improper("44.short");
  if ((mask({p3, v.b(p3)}) & sxy) == 0) return improper("44.short");
  if ((mask({p1, p3}) & sxy) == 0) return improper("44.short");
  if (!in(p3, sxy) && (mask({z, v.b(p3)}) & s12) == 0) return improper("44.short");
  if ((mask({z, v.a(z)}) & s12) == 0) return improper("44.short");

  if (z == p1) {
    if (y == p3 && (v.a(x) != p2 || v.b(p2) != p3)) return proper("44.z1.proper", menu());
    return not_compressible("44.z1.trapped");
  }
  if (z == p2) {
    // Without 3 in {x,y}, the short-word checks force 1 and 3b into {x,y}.
    if (!in(p3, sxy)) return proper("44.z2.no3.proper", menu());
    const int q = x == p3 ? y : x;
    if (v.a(q) != p2 || v.b(p1) != y) return proper("44.z2.with3.proper", menu());
    return not_compressible("44.z2.with3.trapped");
  }
  // Here the short-word checks force x and za into {1,2}.
  if (y == p3) return proper("44.zout.proper", menu());
  return not_compressible("44.zout.trapped");
}

// ---- dispatch ------------------------------------------------------------

enum class Family { PP, Heavy, P1, P2, P3, P4, F11, F12, F22, F14, F24, F13, F23, F33, F34, F44 };

Family family_of(const AutomatonClass& c) {
  using T = LetterType;
  const T s = c.first.type, t = c.second.type;
  if (s == T::Heavy || t == T::Heavy) return Family::Heavy;
  if (t == T::Permutation) {
    switch (s) {
      case T::Permutation: return Family::PP;
      case T::Type1: return Family::P1;
      case T::Type2: return Family::P2;
      case T::Type3: return Family::P3;
      default: return Family::P4;
    }
  }
  if (s == T::Type1 && t == T::Type1) return Family::F11;
  if (s == T::Type1 && t == T::Type2) return Family::F12;
  if (s == T::Type2 && t == T::Type2) return Family::F22;
  if (s == T::Type1 && t == T::Type4) return Family::F14;
  if (s == T::Type2 && t == T::Type4) return Family::F24;
  if (s == T::Type1 && t == T::Type3) return Family::F13;
  if (s == T::Type2 && t == T::Type3) return Family::F23;
  if (s == T::Type3 && t == T::Type3) return Family::F33;
  if (s == T::Type3 && t == T::Type4) return Family::F34;
  return Family::F44;
}

Outcome evaluate(Family f, const View& v) {
  switch (f) {
    case Family::PP: return not_compressible("pp");
    case Family::Heavy: return improper("heavy");
    case Family::P1: return eval_1p(v);
    case Family::P2: return eval_2p(v);
    case Family::P3: return eval_3p(v);
    case Family::P4: return eval_4p(v);
    case Family::F11: return eval_11(v);
    case Family::F12: return eval_12(v);
    case Family::F22: return eval_22(v);
    case Family::F14: return eval_14(v);
    case Family::F24: return eval_24(v);
    case Family::F13: return eval_13(v);
    case Family::F23: return eval_23(v);
    case Family::F33: return eval_33(v);
    case Family::F34: return eval_34(v);
    case Family::F44: return eval_44(v);
  }
  return improper("heavy");
}

FamilyVerdict run(const Automaton& A, std::initializer_list<Family> accepted, const char* op) {
  const AutomatonClass c = classify_automaton(A);
  const Family f = family_of(c);
  if (accepted.size() != 0 && std::find(accepted.begin(), accepted.end(), f) == accepted.end()) {
    throw Error(std::string(op) + ": automaton belongs to family " + c.label());
  }
  const Automaton norm = normalized(A, c);
  Outcome o = evaluate(f, View{norm.a, norm.b, c.first, c.second});

  FamilyVerdict out;
  out.family = c;
  out.verdict = o.verdict;
  out.matched_branch = std::move(o.branch);
  out.menu_kind = o.kind;
  for (Word& w : o.menu) out.word_menu.push_back(c.swapped ? dual(w) : std::move(w));
  if (c.swapped && out.menu_kind == MenuKind::Language) out.menu_kind = MenuKind::DualLanguage;
  return out;
}

}  // namespace

FamilyVerdict prop_1p(const Automaton& A) { return run(A, {Family::P1}, "prop_1p"); }
FamilyVerdict prop_2p(const Automaton& A) { return run(A, {Family::P2}, "prop_2p"); }
FamilyVerdict prop_3p(const Automaton& A) { return run(A, {Family::P3}, "prop_3p"); }
FamilyVerdict prop_4p(const Automaton& A) { return run(A, {Family::P4}, "prop_4p"); }
FamilyVerdict prop_ij_never(const Automaton& A) {
  return run(A, {Family::F11, Family::F12, Family::F22, Family::F14, Family::F24}, "prop_ij_never");
}
FamilyVerdict prop_13(const Automaton& A) { return run(A, {Family::F13}, "prop_13"); }
FamilyVerdict prop_23(const Automaton& A) { return run(A, {Family::F23}, "prop_23"); }
FamilyVerdict prop_33(const Automaton& A) { return run(A, {Family::F33}, "prop_33"); }
FamilyVerdict prop_34(const Automaton& A) { return run(A, {Family::F34}, "prop_34"); }
FamilyVerdict prop_44(const Automaton& A) { return run(A, {Family::F44}, "prop_44"); }

FamilyVerdict characterize(const Automaton& A) { return run(A, {}, "characterize"); }

const std::vector<std::string>& all_branches() {
  static const std::vector<std::string> ids = {
      "pp", "heavy",
      "1p.orbit-inside", "1p.escape", "1p.proper",
      "2p.escape", "2p.same-pair", "2p.fixed", "2p.orbit-leaves", "2p.three-cycle", "2p.trapped",
      "3p.fixed-1", "3p.swap-12", "3p.13.fixed-3", "3p.13.loop-2", "3p.13.loop-4", "3p.123", "3p.132", "3p.1324",
      "3p.proper",
      "4p.13-invariant", "4p.12-swap", "4p.cycle-23", "4p.cycle-34", "4p.proper",
      "11.trapped", "11.short", "12.trapped", "12.short", "22.trapped", "22.short", "14.trapped", "14.kernel-3", "14.pair-12", "14.short",
      "24.short", "24.missing-pair", "24.straddle", "24.kernel-pair",
      "13.x-outside", "13.disjoint", "13.escape", "13.trapped", "13.proper",
      "23.x-outside", "23.x-missing.fixed", "23.x-missing.escape", "23.x-missing.trapped", "23.x-missing.proper",
      "23.x-kernel.y-outside", "23.x-kernel.y-same.fixed", "23.x-kernel.y-same.escape", "23.x-kernel.y-same.swap", "23.x-kernel.y-same.proper",
      "23.x-kernel.y-other.escape", "23.x-kernel.y-other.proper",
      "33.trivial", "33.b-misses-2.proper", "33.b-misses-2.trapped", "33.b-joins-1.proper", "33.b-joins-1.trapped",
      "33.apart.1b-escape", "33.apart.xa-escape", "33.apart.trapped", "33.apart.proper",
      "34.short", "34.z1.proper", "34.z1.trapped", "34.z2.x1.proper", "34.z2.x1.trapped", "34.z2.y1.trapped",
      "34.z2.y1.language", "34.z2.y1.proper", "34.z2.1b-y.proper", "34.z2.1b-y.trapped",
      "34.zout.x1.proper", "34.zout.x1.trapped", "34.zout.xy12.proper", "34.zout.xy12.trapped",
      "44.short", "44.z1.proper", "44.z1.trapped", "44.z2.no3.proper", "44.z2.with3.proper",
      "44.z2.with3.trapped", "44.zout.proper", "44.zout.trapped",
  };
  return ids;
}

}  // namespace collapse
