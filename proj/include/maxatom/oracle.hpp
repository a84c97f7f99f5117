#pragma once

#include <cstdint>
#include <optional>

#include "maxatom/core.hpp"

namespace maxatom {

/// Answer from a reference solver. NonTrivial assignments are normalized:
/// the largest finite component is 0.
struct OracleVerdict {
  bool nontrivial = false;
  Assignment assignment;
  std::int64_t iterations = 0;
  Rat threshold;  // cutoff magnitude actually used, in instance units
};

/// Greatest-solution descent. Offsets are scaled by the LCM of their
/// denominators to integers with max magnitude R; starting from all zeros,
/// the right side of any violated atom is lowered to max(left1,left2)+r, and
/// anything sinking strictly below -n*R (in scaled units) is sent to -inf.
/// In the greatest normalized solution every finite variable sits at the end
/// of a chain of at most n-1 tight constraints from a 0-valued variable,
/// each step moving by at most R, so nothing real is ever cut off.
/// `threshold` overrides n*R; deepening it must never change a verdict.
OracleVerdict kleene_descent(const AtomSystem& system, std::optional<std::int64_t> threshold = std::nullopt);

/// Brute force over ({-depth..0} ∪ {-inf})^n in scaled units, restricted to
/// candidates whose finite part touches 0; returns the componentwise max of
/// the satisfying ones. Complete for depth >= n*R (the default when depth
/// is 0). Only for n <= 5.
OracleVerdict exhaustive_search(const AtomSystem& system, std::int64_t depth = 0);

/// True iff both oracles return the same verdict and, when non-trivial,
/// identical assignments (support and values).
bool oracles_agree(const AtomSystem& system);

}  // namespace maxatom
