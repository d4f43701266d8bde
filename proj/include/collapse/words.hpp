#pragma once

// Word-level tools: factors, k-fullness, the compressing-word set W and the
// sufficient certificate for 3-collapsing words.

#include <string>
#include <vector>

#include "collapse/core.hpp"
#include "collapse/regex.hpp"

namespace collapse::words {

/// Shortest 3-synchronizing word on two letters (length 33).
extern const Word kS32;
/// Short 3-collapsing word (length 53).
extern const Word kW3;

/// b^2 a b a^3 b a b^2, a factor of w3 lying in L.
extern const Word kU;
/// a^2 b^3 a b a^2, a factor of w3 lying in dual(L).
extern const Word kV;

/// a^2 b^3 a^2 and b^2 a^3 b^2.
extern const Word kA2B3A2;
extern const Word kB2A3B2;

/// L = b(a+b)*(ba)+a(ba)*ab(b|abb), in the engine's grammar.
extern const char* const kLanguageL;

const Regex& language_l();
const Regex& language_l_dual();

/// The 18 words of W, in a fixed order.
const std::vector<Word>& set_w();
/// W without a^2 b^3 a^2 and b^2 a^3 b^2 (16 words).
const std::vector<Word>& set_w0();

bool contains_factor(const Word& w, const Word& f);

/// All 2^k words of length k occur as factors.
bool is_k_full(const Word& w, int k);
/// Length-k words that do not occur as factors, in lexicographic order.
std::vector<Word> missing_k_factors(const Word& w, int k);

struct CertificateReport {
  bool is_certified = false;
  std::vector<std::string> missing_requirements;
};

/// Sufficient (not necessary) check that w is 3-collapsing: w is 3-full,
/// contains every word of W0, contains a^2b^3a^2 or a dual(L) factor, and
/// contains b^2a^3b^2 or an L factor.
CertificateReport certificate_3_collapsing(const Word& w);

}  // namespace collapse::words
