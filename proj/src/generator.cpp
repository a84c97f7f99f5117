#include "maxatom/generator.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <vector>

namespace maxatom {
namespace {

constexpr std::int64_t kNegInf = std::numeric_limits<std::int64_t>::min();

// mt19937_64 output is pinned by the standard, so instances replay across
// platforms. Plain modulo keeps the draw deterministic; the slight bias is
// irrelevant here.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  int var(int nvars) { return static_cast<int>(uniform(1, nvars)); }

  std::vector<int> permutation(int nvars) {
    std::vector<int> p(static_cast<std::size_t>(nvars));
    for (int i = 0; i < nvars; ++i) p[static_cast<std::size_t>(i)] = i + 1;
    for (int i = nvars - 1; i > 0; --i)
      std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(uniform(0, i))]);
    return p;
  }

 private:
  std::mt19937_64 eng_;
};

void gen_uniform(AtomSystem& sys, int n, int m, std::int64_t range, Rng& rng) {
  for (long attempt = 0; static_cast<long>(sys.atoms().size()) < m && attempt < 64L * m + 256; ++attempt) {
    const int i = rng.var(n), j = rng.var(n), k = rng.var(n);
    sys.add(MaxAtom(VarId(i), VarId(j), VarId(k), Rat(rng.uniform(-range, range))));
  }
}

void gen_planted(AtomSystem& sys, int n, int m, std::int64_t range, Rng& rng) {
  std::vector<std::int64_t> val(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 1; i <= n; ++i)
    val[static_cast<std::size_t>(i)] = rng.uniform(0, 7) == 0 ? kNegInf : -rng.uniform(0, range);
  if (std::all_of(val.begin() + 1, val.end(), [](std::int64_t v) { return v == kNegInf; }))
    val[1] = 0;

  int first_finite = 1;
  while (val[static_cast<std::size_t>(first_finite)] == kNegInf) ++first_finite;

  for (long attempt = 0; static_cast<long>(sys.atoms().size()) < m && attempt < 64L * m + 256; ++attempt) {
    int i = rng.var(n), j = rng.var(n);
    const int k = rng.var(n);
    const std::int64_t vk = val[static_cast<std::size_t>(k)];
    std::int64_t lhs = std::max(val[static_cast<std::size_t>(i)], val[static_cast<std::size_t>(j)]);
    if (vk != kNegInf && lhs == kNegInf) {
      i = first_finite;  // revive one operand so the atom can be satisfied
      lhs = val[static_cast<std::size_t>(i)];
    }
    std::int64_t lo = -range;
    if (vk != kNegInf) {
      lo = std::max(lo, vk - lhs);
      if (lo > range) continue;  // value gap too wide for this trio
    }
    sys.add(MaxAtom(VarId(i), VarId(j), VarId(k), Rat(rng.uniform(lo, range))));
  }
}

void gen_chains(AtomSystem& sys, int n, int m, std::int64_t range, Rng& rng) {
  if (n < 2) return;
  for (long guard = 0; static_cast<long>(sys.atoms().size()) < m && guard < 8L * m + 16; ++guard) {
    const std::vector<int> p = rng.permutation(n);
    for (int t = 0; t + 1 < n && static_cast<long>(sys.atoms().size()) < m; ++t) {
      const VarId upper(p[static_cast<std::size_t>(t) + 1]);
      sys.add(MaxAtom(upper, upper, VarId(p[static_cast<std::size_t>(t)]), Rat(rng.uniform(-range, range))));
    }
  }
}

void gen_cycles(AtomSystem& sys, int n, int m, std::int64_t range, Rng& rng) {
  for (long guard = 0; static_cast<long>(sys.atoms().size()) < m && guard < 8L * m + 16; ++guard) {
    const std::vector<int> p = rng.permutation(n);
    for (int t = 0; t < n && static_cast<long>(sys.atoms().size()) < m; ++t) {
      const VarId upper(p[static_cast<std::size_t>((t + 1) % n)]);
      sys.add(MaxAtom(upper, upper, VarId(p[static_cast<std::size_t>(t)]), Rat(rng.uniform(-range, range))));
    }
  }
}

}  // namespace

std::optional<GenMode> gen_mode_from(std::string_view name) {
  if (name == "uniform") return GenMode::Uniform;
  if (name == "planted") return GenMode::Planted;
  if (name == "chains") return GenMode::Chains;
  if (name == "cycles") return GenMode::Cycles;
  return std::nullopt;
}

std::string gen_mode_name(GenMode mode) {
  switch (mode) {
    case GenMode::Uniform: return "uniform";
    case GenMode::Planted: return "planted";
    case GenMode::Chains: return "chains";
    case GenMode::Cycles: return "cycles";
  }
  return "uniform";
}

AtomSystem generate(int nvars, int natoms, std::int64_t range, std::uint64_t seed, GenMode mode) {
  if (nvars < 1) throw std::invalid_argument("generator needs at least one variable");
  if (natoms < 1) throw std::invalid_argument("generator needs at least one atom");
  if (range < 0) throw std::invalid_argument("offset range must be non-negative");
  AtomSystem sys(nvars);
  Rng rng(seed);
  switch (mode) {
    case GenMode::Uniform: gen_uniform(sys, nvars, natoms, range, rng); break;
    case GenMode::Planted: gen_planted(sys, nvars, natoms, range, rng); break;
    case GenMode::Chains: gen_chains(sys, nvars, natoms, range, rng); break;
    case GenMode::Cycles: gen_cycles(sys, nvars, natoms, range, rng); break;
  }
  return sys;
}

}  // namespace maxatom
