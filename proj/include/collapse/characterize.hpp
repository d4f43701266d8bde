#pragma once

// Closed-form decision procedures for 3-compressibility and properness, one
// per family of letter types.
//
// Each predicate reads the automaton in normalized letter order (the letter
// of lower type is `a`) and names states by the witness of classify_letter:
// for a = [1,2,3]\1,2 the labels 1,2,3 are the witness x,y,z;
// for a = [1,2][3,4]\1,3 they are x,y,z,v; for a = [1,2]\1 they are x,y;
// for a = [1,2]\3 with 3a = 1 they are x,y,z. Labels beyond the witness are
// derived from the other letter (e.g. "3 := 1b" inside a cycle guard).

#include <string>
#include <vector>

#include "collapse/classify.hpp"
#include "collapse/msa.hpp"

namespace collapse {

/// How the menu of a Proper verdict is to be read.
enum class MenuKind {
  Words,          // one of word_menu 3-compresses A
  Language,       // any word of L does; word_menu holds b^2a^3b^2
  DualLanguage,   // any word of dual(L) does; word_menu holds a^2b^3a^2
};

std::string to_string(MenuKind k);

struct FamilyVerdict {
  AutomatonClass family;
  Verdict verdict = Verdict::NotCompressible;
  /// Empty unless Proper; already expressed in the letters of the input.
  std::vector<Word> word_menu;
  MenuKind menu_kind = MenuKind::Words;
  /// Identifier of the branch that decided the verdict, "<family>.<case>".
  std::string matched_branch;
};

// Family predicates. Each throws Error if A does not belong to the family
// (up to exchanging the letters).
FamilyVerdict prop_1p(const Automaton& A);
FamilyVerdict prop_2p(const Automaton& A);
FamilyVerdict prop_3p(const Automaton& A);
FamilyVerdict prop_4p(const Automaton& A);
/// Families (1,1), (1,2), (2,2), (1,4), (2,4): never Proper.
FamilyVerdict prop_ij_never(const Automaton& A);
FamilyVerdict prop_13(const Automaton& A);
FamilyVerdict prop_23(const Automaton& A);
FamilyVerdict prop_33(const Automaton& A);
FamilyVerdict prop_34(const Automaton& A);
FamilyVerdict prop_44(const Automaton& A);

/// Classifies, normalizes and dispatches. Heavy letters give Improper and
/// two permutations give NotCompressible.
FamilyVerdict characterize(const Automaton& A);

/// Every branch identifier characterize can report, in a fixed order.
const std::vector<std::string>& all_branches();

}  // namespace collapse
