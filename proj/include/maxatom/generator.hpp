#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "maxatom/core.hpp"

namespace maxatom {

enum class GenMode {
  Uniform,  // independent random atoms
  Planted,  // atoms filtered against a pre-sampled non-trivial assignment
  Chains,   // single-variable atoms along random variable orderings
  Cycles,   // single-variable atoms closing random full cycles
};

std::optional<GenMode> gen_mode_from(std::string_view name);
std::string gen_mode_name(GenMode mode);

/// Deterministic in seed: the same arguments always produce the same system.
/// Integer offsets are drawn from [-range, range]. The atom set is capped by
/// deduplication, so the result can hold fewer than natoms atoms.
AtomSystem generate(int nvars, int natoms, std::int64_t range, std::uint64_t seed, GenMode mode);

}  // namespace maxatom
