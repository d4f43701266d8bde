#pragma once

// Letter and automaton classification.
//
// A letter of a proper 3-compressible automaton is either a permutation or
// one of four low-deficiency shapes (kernel classes in brackets, missing
// states after the backslash):
//
//   Type1  [x,y,z]\x,y
//   Type2  [x,y][z,v]\x,z
//   Type3  [x,y]\x
//   Type4  [x,y]\z   with z -> x
//
// Every other non-permutation is Heavy: one of t, t^2, t^3 already has
// deficiency 3, so the automaton is 3-compressible but not proper.

#include <array>
#include <string>

#include "collapse/core.hpp"

namespace collapse {

enum class LetterType { Permutation, Type1, Type2, Type3, Type4, Heavy };

std::string to_string(LetterType t);

struct LetterClass {
  LetterType type = LetterType::Permutation;
  // Type1: (x,y,z) with x<y.  Type2: (x,y,z,v) with x<z.
  // Type3: (x,y).             Type4: (x,y,z) with z·t = x.
  std::array<int, 4> witness{-1, -1, -1, -1};

  int x() const { return witness[0]; }
  int y() const { return witness[1]; }
  int z() const { return witness[2]; }
  int v() const { return witness[3]; }

  bool operator==(const LetterClass&) const = default;
};

LetterClass classify_letter(const Transformation& t);

/// Classes of both letters after normalizing the letter order so that the
/// first letter carries the lower type (Heavy < 1 < 2 < 3 < 4 < p).
struct AutomatonClass {
  LetterClass first;
  LetterClass second;
  bool swapped = false;

  /// "(1,p)", "(3,4)", "(heavy,2)", "(p,p)", ...
  std::string label() const;
  bool operator==(const AutomatonClass&) const = default;
};

AutomatonClass classify_automaton(const Automaton& A);

/// The automaton in normalized letter order (dual of A when swapped).
Automaton normalized(const Automaton& A, const AutomatonClass& c);

}  // namespace collapse
