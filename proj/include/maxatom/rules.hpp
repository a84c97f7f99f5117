#pragma once

#include <vector>

#include "maxatom/core.hpp"

namespace maxatom {

/// Net effect of one rule pass (or of a whole saturation run).
struct RewriteOutcome {
  bool changed = false;
  std::vector<MaxAtom> removed;
  std::vector<MaxAtom> added;
  long pairs_examined = 0;  // candidate pattern checks, for step accounting
  int rounds = 0;           // restart rounds inside saturate_rules

  void note_removed(const MaxAtom& a) {
    changed = true;
    removed.push_back(a);
  }
  void note_added(const MaxAtom& a) {
    changed = true;
    added.push_back(a);
  }
};

/// max(y,x)+r >= x: delete when r >= 0, else keep only the other operand.
RewriteOutcome rule_reflexive(AtomSystem& system);

/// Identical left pair and right side: the smaller offset implies the rest.
RewriteOutcome rule_same_args_dominance(AtomSystem& system);

/// y+r >= x deletes max(z,y)+r' >= x whenever r <= r'.
RewriteOutcome rule_atom_dominates(AtomSystem& system);

/// z+r >= y with r <= 0 pins max(z,y) = z: max(z,y)+r' >= x becomes z+r' >= x.
RewriteOutcome rule_order_substitution(AtomSystem& system);

/// y+r >= x with r+r' < 0 rules the x branch out of max(z,x)+r' >= y,
/// leaving z+r' >= y.
RewriteOutcome rule_negative_pair(AtomSystem& system);

/// Applies the three pairwise rules (dominance, order substitution, negative
/// pair) in that fixed order, restarting after any change, until none fires.
/// Throws InternalError if the round count exceeds its well-founded bound.
RewriteOutcome saturate_rules(AtomSystem& system);

}  // namespace maxatom
