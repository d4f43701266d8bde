#include "collapse/core.hpp"

#include <sstream>

namespace collapse {

namespace {

void check_universe(int n) {
  if (n < 0 || n > kMaxStates) {
    throw Error("state count " + std::to_string(n) + " outside 0.." + std::to_string(kMaxStates));
  }
}

std::uint32_t full_bits(int n) { return n >= 32 ? ~0u : ((1u << n) - 1u); }

}  // namespace

// ---------------------------------------------------------------- StateSet

StateSet::StateSet(int n) : n_(n) { check_universe(n); }

StateSet::StateSet(int n, std::initializer_list<int> members) : StateSet(n) {
  for (int q : members) insert(q);
}

StateSet StateSet::full(int n) { return from_bits(n, full_bits(n)); }

StateSet StateSet::from_bits(int n, std::uint32_t bits) {
  StateSet s(n);
  if (bits & ~full_bits(n)) throw Error("state set bits outside universe");
  s.bits_ = bits;
  return s;
}

void StateSet::insert(int q) {
  if (q < 0 || q >= n_) throw Error("state " + std::to_string(q) + " outside universe");
  bits_ |= 1u << q;
}

void StateSet::erase(int q) {
  if (q >= 0 && q < n_) bits_ &= ~(1u << q);
}

StateSet StateSet::complement() const { return from_bits(n_, full_bits(n_) & ~bits_); }

void StateSet::check_same_universe(const StateSet& o) const {
  if (n_ != o.n_) throw Error("state set universe mismatch");
}

bool StateSet::subset_of(const StateSet& o) const {
  check_same_universe(o);
  return (bits_ & ~o.bits_) == 0;
}

bool StateSet::intersects(const StateSet& o) const {
  check_same_universe(o);
  return (bits_ & o.bits_) != 0;
}

StateSet StateSet::operator|(const StateSet& o) const {
  check_same_universe(o);
  return from_bits(n_, bits_ | o.bits_);
}

StateSet StateSet::operator&(const StateSet& o) const {
  check_same_universe(o);
  return from_bits(n_, bits_ & o.bits_);
}

StateSet StateSet::operator-(const StateSet& o) const {
  check_same_universe(o);
  return from_bits(n_, bits_ & ~o.bits_);
}

std::vector<int> StateSet::members() const {
  std::vector<int> out;
  for (std::uint32_t s = bits_; s; s &= s - 1) out.push_back(std::countr_zero(s));
  return out;
}

std::string StateSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int q : members()) {
    if (!first) os << ',';
    os << q;
    first = false;
  }
  os << '}';
  return os.str();
}

// ---------------------------------------------------------- Transformation

Transformation::Transformation(std::span<const int> images) : n_(static_cast<int>(images.size())) {
  check_universe(n_);
  for (int q = 0; q < n_; ++q) {
    const int img = images[static_cast<std::size_t>(q)];
    if (img < 0 || img >= n_) {
      throw Error("image " + std::to_string(img) + " of state " + std::to_string(q) +
                  " outside 0.." + std::to_string(n_ - 1));
    }
    images_[static_cast<std::size_t>(q)] = static_cast<std::uint8_t>(img);
  }
}

Transformation::Transformation(std::initializer_list<int> images)
    : Transformation(std::span<const int>(images.begin(), images.size())) {}

Transformation Transformation::identity(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int q = 0; q < n; ++q) img[static_cast<std::size_t>(q)] = q;
  return Transformation(img);
}

std::vector<int> Transformation::images() const {
  return std::vector<int>(images_.begin(), images_.begin() + n_);
}

StateSet Transformation::image() const { return StateSet::from_bits(n_, apply_bits(full_bits(n_))); }

Transformation Transformation::then(const Transformation& next) const {
  if (next.n_ != n_) throw Error("composition of transformations on different state counts");
  Transformation out = *this;
  for (int q = 0; q < n_; ++q) out.images_[static_cast<std::size_t>(q)] = next.images_[images_[static_cast<std::size_t>(q)]];
  return out;
}

bool Transformation::operator==(const Transformation& o) const {
  if (n_ != o.n_) return false;
  for (int q = 0; q < n_; ++q) {
    if (images_[static_cast<std::size_t>(q)] != o.images_[static_cast<std::size_t>(q)]) return false;
  }
  return true;
}

// -------------------------------------------------------------------- Word

Word::Word(std::string_view text) : text_(text) {
  for (std::size_t i = 0; i < text_.size(); ++i) {
    if (text_[i] != 'a' && text_[i] != 'b') {
      throw Error("invalid letter '" + std::string(1, text_[i]) + "' at position " + std::to_string(i) +
                  " (only a and b are accepted)");
    }
  }
}

Word::Word(std::initializer_list<Letter> letters) {
  for (Letter l : letters) push_back(l);
}

Word Word::operator+(const Word& o) const {
  Word w = *this;
  w.text_ += o.text_;
  return w;
}

// --------------------------------------------------------------- Automaton

Automaton::Automaton(Transformation a_, Transformation b_) : a(std::move(a_)), b(std::move(b_)) {
  if (a.size() != b.size()) throw Error("letters act on different state counts");
}

StateSet apply(const Transformation& t, const StateSet& s) {
  if (s.universe() != t.size()) throw Error("state set universe does not match transformation");
  return StateSet::from_bits(t.size(), t.apply_bits(s.bits()));
}

std::uint32_t image_bits(const Automaton& A, const Word& w) {
  std::uint32_t s = full_bits(A.size());
  for (char c : w.str()) s = (c == 'a' ? A.a : A.b).apply_bits(s);
  return s;
}

StateSet image(const Automaton& A, const Word& w) { return StateSet::from_bits(A.size(), image_bits(A, w)); }

int deficiency(const Automaton& A, const Word& w) { return A.size() - std::popcount(image_bits(A, w)); }

StateSet missing_set(const Automaton& A, const Word& w) { return image(A, w).complement(); }

StateSet missing_step(const Automaton& A, const StateSet& q1, Letter l) {
  const Transformation& t = A.letter(l);
  if (q1.universe() != t.size()) throw Error("state set universe does not match automaton");
  const StateSet all = StateSet::full(t.size());
  const StateSet missing_of_letter = all - t.image();
  // States whose images are not shared with any state outside q1.
  const StateSet lost = apply(t, q1) - apply(t, all - q1);
  return missing_of_letter | lost;
}

StateSet orbit(const Transformation& t, const StateSet& s) {
  if (s.universe() != t.size()) throw Error("state set universe does not match transformation");
  std::uint32_t reached = s.bits();
  std::uint32_t frontier = reached;
  while (frontier) {
    const std::uint32_t next = t.apply_bits(frontier);
    frontier = next & ~reached;
    reached |= next;
  }
  return StateSet::from_bits(t.size(), reached);
}

int orbit_size(const Transformation& t, int q) { return orbit(t, StateSet(t.size(), {q})).size(); }

Word dual(const Word& w) {
  Word out;
  for (std::size_t i = 0; i < w.size(); ++i) out.push_back(other(w[i]));
  return out;
}

Automaton dual(const Automaton& A) { return Automaton(A.b, A.a); }

}  // namespace collapse
