#include "collapse/words.hpp"

#include <algorithm>

namespace collapse::words {

// Exponents expanded piece by piece: s32 = a b^2 a b a^3 b^2 a^2 b a b a b^2 a^2 b^3 a b a^2 b a^2 b^2 a.
const Word kS32{"a" "bb" "a" "b" "aaa" "bb" "aa" "b" "a" "b" "a" "bb" "aa" "bbb" "a" "b" "aa" "b" "aa" "bb" "a"};

// w3 = b^2 a^3 b (a^3 b^3 a b a^2) b a b a^2 b a^2 b^2 a^2 b^2 a b^2 a b a (b^2 a b a^3 b a b^3) a b^3 a.
const Word kW3{"bb" "aaa" "b"
               "aaa" "bbb" "a" "b" "aa"
               "b" "a" "b" "aa" "b" "aa" "bb" "aa" "bb" "a" "bb" "a" "b" "a"
               "bb" "a" "b" "aaa" "b" "a" "bbb"
               "a" "bbb" "a"};

const Word kU{"bb" "a" "b" "aaa" "b" "a" "bb"};
const Word kV{"aa" "bbb" "a" "b" "aa"};

const Word kA2B3A2{"aabbbaa"};
const Word kB2A3B2{"bbaaabb"};

const char* const kLanguageL = "b(a+b)*(ba)+a(ba)*ab(b|abb)";

const Regex& language_l() {
  static const Regex r = Regex::parse(kLanguageL);
  return r;
}

const Regex& language_l_dual() {
  static const Regex r = language_l().dual();
  return r;
}

const std::vector<Word>& set_w() {
  static const std::vector<Word> w = {
      Word("abbabba"),    // a b^2 a b^2 a
      Word("abbaabba"),   // a b^2 a^2 b^2 a
      Word("ababbaba"),   // a b a b^2 a b a
      Word("abbbaba"),    // a b^3 a b a
      Word("ababbba"),    // a b a b^3 a
      Word("abbbabbba"),  // a b^3 a b^3 a
      Word("baababaab"),  // b a^2 b a b a^2 b
      Word("aabbba"),     // a^2 b^3 a
      Word("baabaab"),    // b a^2 b a^2 b
      Word("baabbaab"),   // b a^2 b^2 a^2 b
      Word("babaabab"),   // b a b a^2 b a b
      Word("baaabab"),    // b a^3 b a b
      Word("babaaab"),    // b a b a^3 b
      Word("baaabaaab"),  // b a^3 b a^3 b
      Word("abbababba"),  // a b^2 a b a b^2 a
      Word("bbaaab"),     // b^2 a^3 b
      kA2B3A2,
      kB2A3B2,
  };
  return w;
}

const std::vector<Word>& set_w0() {
  static const std::vector<Word> w0 = [] {
    std::vector<Word> out;
    for (const Word& w : set_w()) {
      if (w != kA2B3A2 && w != kB2A3B2) out.push_back(w);
    }
    return out;
  }();
  return w0;
}

bool contains_factor(const Word& w, const Word& f) { return w.str().find(f.str()) != std::string::npos; }

std::vector<Word> missing_k_factors(const Word& w, int k) {
  if (k < 0 || k > 24) throw Error("factor length " + std::to_string(k) + " out of range");
  std::vector<Word> out;
  for (std::uint32_t code = 0; code < (1u << k); ++code) {
    Word f;
    for (int i = k - 1; i >= 0; --i) f.push_back((code >> i) & 1u ? Letter::B : Letter::A);
    if (!contains_factor(w, f)) out.push_back(f);
  }
  return out;
}

bool is_k_full(const Word& w, int k) { return missing_k_factors(w, k).empty(); }

CertificateReport certificate_3_collapsing(const Word& w) {
  CertificateReport r;
  for (const Word& f : missing_k_factors(w, 3)) r.missing_requirements.push_back("3-full: factor " + f.str());
  for (const Word& f : set_w0()) {
    if (!contains_factor(w, f)) r.missing_requirements.push_back("W0: factor " + f.str());
  }
  if (!contains_factor(w, kA2B3A2) && !language_l_dual().matches_factor(w)) {
    r.missing_requirements.push_back("factor " + kA2B3A2.str() + " or a factor in dual(L)");
  }
  if (!contains_factor(w, kB2A3B2) && !language_l().matches_factor(w)) {
    r.missing_requirements.push_back("factor " + kB2A3B2.str() + " or a factor in L");
  }
  r.is_certified = r.missing_requirements.empty();
  return r;
}

}  // namespace collapse::words
