#pragma once

#include <string>
#include <vector>

#include "monoidvar/catalog.hpp"

namespace monoidvar {

struct LatticeCheck {
  std::string v, w;           // claim: v <= w (or its negation)
  Truth expected = Truth::True;
  InclusionResult result;
  bool core = true;           // part of the bottom-of-lattice acceptance set
  bool evidence_ok = false;   // refutations re-checked independently
  std::string evidence;

  std::string claim() const {
    return v + (expected == Truth::True ? " <= " : " not<= ") + w;
  }
  bool passed() const { return result.value == expected && evidence_ok; }
};

/// Inclusions and non-inclusions among T, SL, C, D, E, dual-E, F, Q, P1 and
/// a few further members of the lattice below P. A refutation counts only if
/// its witness is a finite monoid whose counterexample re-evaluates, or an
/// exact criterion.
std::vector<LatticeCheck> verify_lattice(Checker& checker);

/// Re-evaluates a False verdict's counterexample in its witness monoid.
bool recheck_refutation(const Verdict& v, const Identity& id);

}  // namespace monoidvar
