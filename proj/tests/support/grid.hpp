#pragma once

// Test-only oracles: exhaustive satisfying-set enumeration over small integer
// grids and brute-force cycle search. Deliberately kept away from the library
// code paths they adjudicate; atoms are re-evaluated here with plain int64
// arithmetic.

#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "maxatom/core.hpp"
#include "maxatom/graph.hpp"

namespace testsupport {

constexpr std::int64_t kNeg = std::numeric_limits<std::int64_t>::min();

inline std::int64_t int_offset(const maxatom::Rat& r) {
  if (!r.is_integer()) throw std::invalid_argument("grid oracle needs integer offsets");
  return r.num_i64();
}

/// One bit per point of ({lo..0} ∪ {-inf})^n in odometer order: does the
/// point satisfy every atom of the system?
inline std::vector<bool> satisfying_set(const maxatom::AtomSystem& sys, std::int64_t lo) {
  const int n = sys.nvars();
  struct A {
    int l1, l2, r;
    std::int64_t off;
  };
  std::vector<A> atoms;
  for (const maxatom::MaxAtom& a : sys.atoms())
    atoms.push_back({a.left1.index, a.left2.index, a.right.index, int_offset(a.offset)});

  const std::int64_t levels = -lo + 2;  // -inf plus lo..0
  std::size_t total = 1;
  for (int i = 0; i < n; ++i) total *= static_cast<std::size_t>(levels);

  std::vector<bool> out(total);
  std::vector<std::int64_t> v(static_cast<std::size_t>(n) + 1, kNeg);
  std::vector<std::int64_t> idx(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t point = 0; point < total; ++point) {
    for (int i = 1; i <= n; ++i) {
      const std::int64_t k = idx[static_cast<std::size_t>(i)];
      v[static_cast<std::size_t>(i)] = k == 0 ? kNeg : lo + (k - 1);
    }
    bool ok = true;
    for (const A& a : atoms) {
      const std::int64_t l = std::max(v[static_cast<std::size_t>(a.l1)], v[static_cast<std::size_t>(a.l2)]);
      const std::int64_t lhs = l == kNeg ? kNeg : l + a.off;
      if (lhs < v[static_cast<std::size_t>(a.r)]) {
        ok = false;
        break;
      }
    }
    out[point] = ok;
    int pos = n;
    while (pos >= 1 && idx[static_cast<std::size_t>(pos)] == levels - 1) idx[static_cast<std::size_t>(pos--)] = 0;
    if (pos >= 1) ++idx[static_cast<std::size_t>(pos)];
  }
  return out;
}

/// Brute-force positive-cycle check: enumerates every simple cycle (self
/// loops included) by DFS anchored at its smallest vertex.
inline bool has_positive_cycle_brute(const maxatom::WeightedDigraph& g) {
  using maxatom::VarId;
  const std::vector<VarId> verts(g.vertices().begin(), g.vertices().end());
  const int n = static_cast<int>(verts.size());
  std::map<VarId, int> pos;
  for (int i = 0; i < n; ++i) pos[verts[i]] = i;
  std::vector<std::vector<std::pair<int, maxatom::Rat>>> adj(static_cast<std::size_t>(n));
  for (const auto& [key, w] : g.arcs())
    adj[static_cast<std::size_t>(pos[key.first])].push_back({pos[key.second], w});

  bool found = false;
  std::vector<char> on_path(static_cast<std::size_t>(n), 0);
  // Anchor each cycle at its minimum vertex to visit it exactly once.
  std::function<void(int, int, maxatom::Rat)> dfs = [&](int anchor, int cur, maxatom::Rat weight) {
    if (found) return;
    for (const auto& [next, w] : adj[static_cast<std::size_t>(cur)]) {
      if (next < anchor) continue;
      const maxatom::Rat total = weight + w;
      if (next == anchor) {
        if (total > maxatom::Rat(0)) {
          found = true;
          return;
        }
        continue;
      }
      if (on_path[static_cast<std::size_t>(next)]) continue;
      on_path[static_cast<std::size_t>(next)] = 1;
      dfs(anchor, next, total);
      on_path[static_cast<std::size_t>(next)] = 0;
    }
  };
  for (int s = 0; s < n && !found; ++s) {
    on_path.assign(static_cast<std::size_t>(n), 0);
    on_path[static_cast<std::size_t>(s)] = 1;
    dfs(s, s, maxatom::Rat(0));
  }
  return found;
}

/// Mixed random system: roughly half single-variable atoms, integer offsets
/// in [-range, range]. Dense enough that every rewrite rule fires often.
inline maxatom::AtomSystem random_mixed(std::mt19937_64& rng, int nvars, int natoms, std::int64_t range) {
  using maxatom::VarId;
  maxatom::AtomSystem sys(nvars);
  auto draw = [&](std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  for (int t = 0; t < natoms; ++t) {
    const int i = static_cast<int>(draw(1, nvars));
    const int j = rng() % 2 == 0 ? i : static_cast<int>(draw(1, nvars));
    const int k = static_cast<int>(draw(1, nvars));
    sys.add(maxatom::MaxAtom(VarId(i), VarId(j), VarId(k), maxatom::Rat(draw(-range, range))));
  }
  return sys;
}

/// Random weighted digraph over up to nverts vertices.
inline maxatom::WeightedDigraph random_graph(std::mt19937_64& rng, int nverts, int narcs, std::int64_t range) {
  using maxatom::VarId;
  maxatom::WeightedDigraph g;
  auto draw = [&](std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  for (int i = 1; i <= nverts; ++i) g.add_vertex(VarId(i));
  for (int t = 0; t < narcs; ++t)
    g.arc_sum({VarId(static_cast<int>(draw(1, nverts))), VarId(static_cast<int>(draw(1, nverts))),
               maxatom::Rat(draw(-range, range))});
  return g;
}

}  // namespace testsupport
