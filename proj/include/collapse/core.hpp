#pragma once

// Transformations, automata and state sets over a two-letter alphabet.
//
// States are the integers 0..n-1. A word acts on the right: q(uv) = (qu)v.

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace collapse {

inline constexpr int kMaxStates = 16;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Letter : std::uint8_t { A = 0, B = 1 };

constexpr Letter other(Letter l) { return l == Letter::A ? Letter::B : Letter::A; }
constexpr char to_char(Letter l) { return l == Letter::A ? 'a' : 'b'; }

/// A subset of {0..n-1}, stored as a bitmask.
class StateSet {
 public:
  StateSet() = default;
  explicit StateSet(int n);
  StateSet(int n, std::initializer_list<int> members);

  static StateSet full(int n);
  static StateSet from_bits(int n, std::uint32_t bits);

  int universe() const { return n_; }
  std::uint32_t bits() const { return bits_; }
  int size() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }
  bool contains(int q) const { return q >= 0 && q < n_ && ((bits_ >> q) & 1u); }

  void insert(int q);
  void erase(int q);

  StateSet complement() const;
  bool subset_of(const StateSet& other) const;
  bool intersects(const StateSet& other) const;

  StateSet operator|(const StateSet& o) const;
  StateSet operator&(const StateSet& o) const;
  StateSet operator-(const StateSet& o) const;
  bool operator==(const StateSet&) const = default;

  std::vector<int> members() const;
  /// "{0,2}" style rendering.
  std::string to_string() const;

 private:
  void check_same_universe(const StateSet& o) const;

  int n_ = 0;
  std::uint32_t bits_ = 0;
};

/// A total map on {0..n-1}.
class Transformation {
 public:
  Transformation() = default;
  explicit Transformation(std::span<const int> images);
  Transformation(std::initializer_list<int> images);

  static Transformation identity(int n);

  int size() const { return n_; }
  int operator()(int q) const { return images_[static_cast<std::size_t>(q)]; }
  std::vector<int> images() const;

  /// Bitmask image of a bitmask subset.
  std::uint32_t apply_bits(std::uint32_t s) const {
    std::uint32_t out = 0;
    while (s) {
      const int q = std::countr_zero(s);
      s &= s - 1;
      out |= 1u << images_[static_cast<std::size_t>(q)];
    }
    return out;
  }

  StateSet image() const;
  int deficiency() const { return n_ - image().size(); }
  bool is_permutation() const { return deficiency() == 0; }

  /// First this, then `next`.
  Transformation then(const Transformation& next) const;

  bool operator==(const Transformation& o) const;

 private:
  int n_ = 0;
  std::array<std::uint8_t, kMaxStates> images_{};
};

/// A finite word over {a, b}.
class Word {
 public:
  Word() = default;
  /// Throws Error on any character other than 'a' or 'b'.
  explicit Word(std::string_view text);
  Word(std::initializer_list<Letter> letters);

  std::size_t size() const { return text_.size(); }
  bool empty() const { return text_.empty(); }
  Letter operator[](std::size_t i) const { return text_[i] == 'a' ? Letter::A : Letter::B; }
  const std::string& str() const { return text_; }

  void push_back(Letter l) { text_.push_back(to_char(l)); }
  void pop_back() { text_.pop_back(); }
  Word operator+(const Word& o) const;
  bool operator==(const Word&) const = default;
  auto operator<=>(const Word& o) const { return text_ <=> o.text_; }

 private:
  std::string text_;
};

struct Automaton {
  Transformation a;
  Transformation b;

  Automaton() = default;
  Automaton(Transformation a_, Transformation b_);

  int size() const { return a.size(); }
  const Transformation& letter(Letter l) const { return l == Letter::A ? a : b; }
  bool operator==(const Automaton&) const = default;
};

StateSet apply(const Transformation& t, const StateSet& s);

/// Q·w.
StateSet image(const Automaton& A, const Word& w);
std::uint32_t image_bits(const Automaton& A, const Word& w);

/// |Q| - |Q·w|; zero for the empty word.
int deficiency(const Automaton& A, const Word& w);

/// Q \ Q·w.
StateSet missing_set(const Automaton& A, const Word& w);

/// Missing set after reading `l`, having already missed `q1`.
StateSet missing_step(const Automaton& A, const StateSet& q1, Letter l);

/// Smallest superset of s closed under t.
StateSet orbit(const Transformation& t, const StateSet& s);
int orbit_size(const Transformation& t, int q);

Word dual(const Word& w);
Automaton dual(const Automaton& A);

}  // namespace collapse
