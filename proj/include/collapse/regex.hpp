#pragma once

// A small regular-expression engine over {a, b}.
//
// Grammar (loosest binding first):
//   alt    := concat ('|' concat)*
//   concat := postfix+
//   postfix:= atom ('*' | '+')*
//   atom   := 'a' | 'b' | '(' alt ')'
// Whitespace is ignored. Postfix '+' is one-or-more; alternation is '|'.
//
// Expressions compile to a position (Glushkov) automaton, which has no
// epsilon moves; matching simulates it on a set of positions.

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "collapse/core.hpp"

namespace collapse {

class RegexParseError : public Error {
 public:
  RegexParseError(const std::string& what, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

struct RegexNode {
  enum class Kind { Literal, Concat, Alt, Star, Plus };
  Kind kind = Kind::Literal;
  Letter letter = Letter::A;
  std::vector<RegexNode> children;
};

class Regex {
 public:
  static Regex parse(std::string_view text);
  static Regex from_ast(RegexNode root);

  const RegexNode& ast() const { return root_; }
  /// Canonical text form, re-parseable.
  std::string to_string() const;

  /// Whole-word match.
  bool matches(const Word& w) const;
  /// True iff some factor of w (possibly empty) matches.
  bool matches_factor(const Word& w) const;

  /// The expression with letters a and b exchanged.
  Regex dual() const;

 private:
  void compile();

  RegexNode root_;
  // Position automaton.
  std::size_t positions_ = 0;
  std::size_t words_ = 0;  // 64-bit blocks per position set
  bool nullable_ = false;
  std::vector<std::uint64_t> first_;
  std::vector<std::uint64_t> last_;
  std::vector<std::uint64_t> follow_;        // positions_ x words_
  std::vector<std::uint64_t> letter_mask_;   // 2 x words_
};

Regex regex_parse(std::string_view text);
bool regex_matches(const Regex& r, const Word& w);
bool regex_factor(const Regex& r, const Word& w);

}  // namespace collapse
