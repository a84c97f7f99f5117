#include "maxatom/oracle.hpp"

#include <algorithm>
#include <limits>
#include <vector>

namespace maxatom {
namespace {

constexpr std::int64_t kNegInf = std::numeric_limits<std::int64_t>::min();

struct ScaledAtom {
  int left1, left2, right;
  std::int64_t offset;
};

struct Scaled {
  std::int64_t scale = 1;    // LCM of offset denominators
  std::int64_t max_abs = 0;  // R
  std::vector<ScaledAtom> atoms;
};

Scaled scale_system(const AtomSystem& system) {
  Scaled s;
  mpz_class lcm_acc(1);
  for (const MaxAtom& a : system.atoms()) {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), lcm_acc.get_mpz_t(), a.offset.den().get_mpz_t());
    lcm_acc = l;
  }
  if (!lcm_acc.fits_slong_p()) throw std::invalid_argument("offset denominators too large for the oracle");
  s.scale = lcm_acc.get_si();
  for (const MaxAtom& a : system.atoms()) {
    const mpz_class scaled = a.offset.num() * (lcm_acc / a.offset.den());
    if (!scaled.fits_slong_p()) throw std::invalid_argument("offsets too large for the oracle");
    const std::int64_t off = scaled.get_si();
    s.atoms.push_back({a.left1.index, a.left2.index, a.right.index, off});
    s.max_abs = std::max(s.max_abs, off < 0 ? -off : off);
  }
  return s;
}

std::int64_t plus(std::int64_t v, std::int64_t off) { return v == kNegInf ? kNegInf : v + off; }

bool violated(const ScaledAtom& a, const std::vector<std::int64_t>& v) {
  const std::int64_t lhs = plus(std::max(v[static_cast<std::size_t>(a.left1)], v[static_cast<std::size_t>(a.left2)]), a.offset);
  return lhs < v[static_cast<std::size_t>(a.right)];
}

Assignment to_assignment(const std::vector<std::int64_t>& v, int n, std::int64_t scale) {
  Assignment a(n);
  for (int i = 1; i <= n; ++i) {
    const std::int64_t x = v[static_cast<std::size_t>(i)];
    if (x != kNegInf) a[VarId(i)] = ExtValue::finite(Rat(x, scale));
  }
  return a;
}

bool any_finite(const std::vector<std::int64_t>& v, int n) {
  for (int i = 1; i <= n; ++i)
    if (v[static_cast<std::size_t>(i)] != kNegInf) return true;
  return false;
}

}  // namespace

OracleVerdict kleene_descent(const AtomSystem& system, std::optional<std::int64_t> threshold) {
  const int n = system.nvars();
  const Scaled s = scale_system(system);
  const std::int64_t cutoff = threshold.value_or(static_cast<std::int64_t>(n) * s.max_abs);
  if (cutoff < 0) throw std::invalid_argument("oracle threshold must be non-negative");

  std::vector<std::int64_t> v(static_cast<std::size_t>(n) + 1, 0);
  OracleVerdict out;
  out.threshold = Rat(cutoff, s.scale);
  // Each descent step strictly lowers one variable through 0..-cutoff then -inf.
  const std::int64_t step_cap = static_cast<std::int64_t>(n) * (cutoff + 2) + 16;
  while (true) {
    const ScaledAtom* hit = nullptr;
    for (const ScaledAtom& a : s.atoms) {
      if (violated(a, v)) {
        hit = &a;
        break;  // atoms are in canonical order; take the first
      }
    }
    if (!hit) break;
    std::int64_t next = plus(std::max(v[static_cast<std::size_t>(hit->left1)], v[static_cast<std::size_t>(hit->left2)]), hit->offset);
    if (next != kNegInf && next < -cutoff) next = kNegInf;
    v[static_cast<std::size_t>(hit->right)] = next;
    if (++out.iterations > step_cap)
      throw InternalError("descent exceeded its step cap " + std::to_string(step_cap));
  }
  out.nontrivial = any_finite(v, n);
  out.assignment = out.nontrivial ? to_assignment(v, n, s.scale) : Assignment(n);
  return out;
}

OracleVerdict exhaustive_search(const AtomSystem& system, std::int64_t depth) {
  const int n = system.nvars();
  if (n > 5) throw std::invalid_argument("exhaustive search is limited to 5 variables");
  const Scaled s = scale_system(system);
  if (depth <= 0) depth = static_cast<std::int64_t>(n) * s.max_abs;

  const std::int64_t levels = depth + 2;  // {-inf} ∪ {-depth..0}
  double combos = 1;
  for (int i = 0; i < n; ++i) combos *= static_cast<double>(levels);
  if (combos > 2e8) throw std::invalid_argument("exhaustive grid too large");

  OracleVerdict out;
  out.threshold = Rat(depth, s.scale);
  std::vector<std::int64_t> v(static_cast<std::size_t>(n) + 1, kNegInf);
  std::vector<std::int64_t> best;
  bool found = false;

  // Odometer over levels; index 0 is -inf, index k>0 is -(depth-(k-1)) so the
  // last index is 0.
  std::vector<std::int64_t> idx(static_cast<std::size_t>(n) + 1, 0);
  while (true) {
    ++out.iterations;
    bool has_zero = false;
    for (int i = 1; i <= n; ++i) {
      const std::int64_t k = idx[static_cast<std::size_t>(i)];
      v[static_cast<std::size_t>(i)] = k == 0 ? kNegInf : -(depth - (k - 1));
      if (v[static_cast<std::size_t>(i)] == 0) has_zero = true;
    }
    if (has_zero) {  // normalized candidates only: max finite component is 0
      bool ok = true;
      for (const ScaledAtom& a : s.atoms) {
        if (violated(a, v)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        if (!found) {
          best.assign(v.begin(), v.end());
          found = true;
        } else {
          for (int i = 1; i <= n; ++i)
            best[static_cast<std::size_t>(i)] = std::max(best[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(i)]);
        }
      }
    }
    int pos = n;
    while (pos >= 1 && idx[static_cast<std::size_t>(pos)] == levels - 1) idx[static_cast<std::size_t>(pos--)] = 0;
    if (pos < 1) break;
    ++idx[static_cast<std::size_t>(pos)];
  }

  out.nontrivial = found;
  out.assignment = found ? to_assignment(best, n, s.scale) : Assignment(n);
  return out;
}

bool oracles_agree(const AtomSystem& system) {
  const OracleVerdict fast = kleene_descent(system);
  const OracleVerdict full = exhaustive_search(system);
  if (fast.nontrivial != full.nontrivial) return false;
  if (!fast.nontrivial) return true;
  return fast.assignment == full.assignment;
}

}  // namespace maxatom
