#include "collapse/regex.hpp"

#include <cctype>

namespace collapse {

RegexParseError::RegexParseError(const std::string& what, std::size_t position)
    : Error("regex parse error at position " + std::to_string(position) + ": " + what), position_(position) {}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  RegexNode parse() {
    RegexNode root = alt();
    skip_space();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return root;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw RegexParseError(what, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  RegexNode alt() {
    RegexNode first = concat();
    if (peek() != '|') return first;
    RegexNode node;
    node.kind = RegexNode::Kind::Alt;
    node.children.push_back(std::move(first));
    while (peek() == '|') {
      ++pos_;
      node.children.push_back(concat());
    }
    return node;
  }

  RegexNode concat() {
    RegexNode node;
    node.kind = RegexNode::Kind::Concat;
    for (char c = peek(); c == 'a' || c == 'b' || c == '('; c = peek()) node.children.push_back(postfix());
    if (node.children.empty()) {
      fail(pos_ < text_.size() ? std::string("expected a, b or '(' before '") + text_[pos_] + "'"
                               : std::string("unexpected end of expression"));
    }
    if (node.children.size() == 1) return std::move(node.children.front());
    return node;
  }

  RegexNode postfix() {
    RegexNode node = atom();
    for (char c = peek(); c == '*' || c == '+'; c = peek()) {
      ++pos_;
      RegexNode wrap;
      wrap.kind = c == '*' ? RegexNode::Kind::Star : RegexNode::Kind::Plus;
      wrap.children.push_back(std::move(node));
      node = std::move(wrap);
    }
    return node;
  }

  RegexNode atom() {
    const char c = peek();
    if (c == 'a' || c == 'b') {
      ++pos_;
      RegexNode lit;
      lit.letter = c == 'a' ? Letter::A : Letter::B;
      return lit;
    }
    if (c == '(') {
      ++pos_;
      RegexNode inner = alt();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    fail("expected a, b or '('");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::size_t count_literals(const RegexNode& n) {
  if (n.kind == RegexNode::Kind::Literal) return 1;
  std::size_t total = 0;
  for (const auto& c : n.children) total += count_literals(c);
  return total;
}

using Bits = std::vector<std::uint64_t>;

void set_bit(Bits& b, std::size_t i) { b[i / 64] |= std::uint64_t{1} << (i % 64); }
void or_into(Bits& dst, const Bits& src) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] |= src[i];
}

struct Glushkov {
  std::size_t words;
  std::vector<Bits>& follow;
  std::vector<Letter>& letters;

  struct Info {
    bool nullable;
    Bits first;
    Bits last;
  };

  void link(const Bits& from, const Bits& to) {
    for (std::size_t w = 0; w < words; ++w) {
      for (std::uint64_t s = from[w]; s; s &= s - 1) {
        or_into(follow[w * 64 + static_cast<std::size_t>(std::countr_zero(s))], to);
      }
    }
  }

  Info visit(const RegexNode& n) {
    switch (n.kind) {
      case RegexNode::Kind::Literal: {
        const std::size_t p = letters.size();
        letters.push_back(n.letter);
        Info info{false, Bits(words), Bits(words)};
        set_bit(info.first, p);
        set_bit(info.last, p);
        return info;
      }
      case RegexNode::Kind::Concat: {
        Info acc = visit(n.children.front());
        for (std::size_t i = 1; i < n.children.size(); ++i) {
          Info next = visit(n.children[i]);
          link(acc.last, next.first);
          if (acc.nullable) or_into(acc.first, next.first);
          if (next.nullable) or_into(next.last, acc.last);
          acc.last = std::move(next.last);
          acc.nullable = acc.nullable && next.nullable;
        }
        return acc;
      }
      case RegexNode::Kind::Alt: {
        Info acc{false, Bits(words), Bits(words)};
        for (const auto& c : n.children) {
          Info next = visit(c);
          acc.nullable = acc.nullable || next.nullable;
          or_into(acc.first, next.first);
          or_into(acc.last, next.last);
        }
        return acc;
      }
      case RegexNode::Kind::Star:
      case RegexNode::Kind::Plus: {
        Info inner = visit(n.children.front());
        link(inner.last, inner.first);
        if (n.kind == RegexNode::Kind::Star) inner.nullable = true;
        return inner;
      }
    }
    return {};
  }
};

// ctx: 0 = alternative, 1 = concatenation operand, 2 = postfix operand.
void render(const RegexNode& n, std::string& out, int ctx) {
  switch (n.kind) {
    case RegexNode::Kind::Literal:
      out += to_char(n.letter);
      return;
    case RegexNode::Kind::Alt:
    case RegexNode::Kind::Concat: {
      const bool alt = n.kind == RegexNode::Kind::Alt;
      const bool paren = ctx >= (alt ? 1 : 2);
      if (paren) out += '(';
      for (std::size_t i = 0; i < n.children.size(); ++i) {
        if (alt && i > 0) out += '|';
        render(n.children[i], out, alt ? 0 : 1);
      }
      if (paren) out += ')';
      return;
    }
    case RegexNode::Kind::Star:
    case RegexNode::Kind::Plus:
      render(n.children.front(), out, 2);
      out += n.kind == RegexNode::Kind::Star ? '*' : '+';
      return;
  }
}

RegexNode swap_letters(const RegexNode& n) {
  RegexNode out = n;
  if (out.kind == RegexNode::Kind::Literal) out.letter = other(out.letter);
  for (auto& c : out.children) c = swap_letters(c);
  return out;
}

}  // namespace

Regex Regex::parse(std::string_view text) { return from_ast(Parser(text).parse()); }

Regex Regex::from_ast(RegexNode root) {
  Regex r;
  r.root_ = std::move(root);
  r.compile();
  return r;
}

void Regex::compile() {
  positions_ = count_literals(root_);
  words_ = (positions_ + 63) / 64;
  std::vector<Bits> follow(positions_, Bits(words_));
  std::vector<Letter> letters;
  Glushkov g{words_, follow, letters};
  const Glushkov::Info info = g.visit(root_);

  nullable_ = info.nullable;
  first_ = info.first;
  last_ = info.last;
  follow_.assign(positions_ * words_, 0);
  for (std::size_t p = 0; p < positions_; ++p) {
    for (std::size_t w = 0; w < words_; ++w) follow_[p * words_ + w] = follow[p][w];
  }
  letter_mask_.assign(2 * words_, 0);
  for (std::size_t p = 0; p < positions_; ++p) {
    letter_mask_[static_cast<std::size_t>(letters[p]) * words_ + p / 64] |= std::uint64_t{1} << (p % 64);
  }
}

std::string Regex::to_string() const {
  std::string out;
  render(root_, out, 0);
  return out;
}

Regex Regex::dual() const { return from_ast(swap_letters(root_)); }

namespace {

// Advances a position set by one letter; `at_start` selects the initial state.
bool advance(const std::vector<std::uint64_t>& first, const std::vector<std::uint64_t>& follow,
             const std::vector<std::uint64_t>& letter_mask, std::size_t words, std::size_t positions,
             bool at_start, Letter l, std::vector<std::uint64_t>& cur) {
  std::vector<std::uint64_t> next(words, 0);
  if (at_start) {
    next = first;
  } else {
    for (std::size_t w = 0; w < words; ++w) {
      for (std::uint64_t s = cur[w]; s; s &= s - 1) {
        const std::size_t p = w * 64 + static_cast<std::size_t>(std::countr_zero(s));
        if (p >= positions) break;
        for (std::size_t k = 0; k < words; ++k) next[k] |= follow[p * words + k];
      }
    }
  }
  bool any = false;
  for (std::size_t w = 0; w < words; ++w) {
    next[w] &= letter_mask[static_cast<std::size_t>(l) * words + w];
    any = any || next[w] != 0;
  }
  cur = std::move(next);
  return any;
}

bool hits(const std::vector<std::uint64_t>& cur, const std::vector<std::uint64_t>& last) {
  for (std::size_t w = 0; w < cur.size(); ++w) {
    if (cur[w] & last[w]) return true;
  }
  return false;
}

}  // namespace

bool Regex::matches(const Word& w) const {
  if (w.empty()) return nullable_;
  std::vector<std::uint64_t> cur(words_, 0);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!advance(first_, follow_, letter_mask_, words_, positions_, i == 0, w[i], cur)) return false;
  }
  return hits(cur, last_);
}

bool Regex::matches_factor(const Word& w) const {
  if (nullable_) return true;
  std::vector<std::uint64_t> cur(words_, 0);
  for (std::size_t start = 0; start < w.size(); ++start) {
    for (std::size_t i = start; i < w.size(); ++i) {
      if (!advance(first_, follow_, letter_mask_, words_, positions_, i == start, w[i], cur)) break;
      if (hits(cur, last_)) return true;
    }
  }
  return false;
}

Regex regex_parse(std::string_view text) { return Regex::parse(text); }
bool regex_matches(const Regex& r, const Word& w) { return r.matches(w); }
bool regex_factor(const Regex& r, const Word& w) { return r.matches_factor(w); }

}  // namespace collapse
