#include "maxatom/graph.hpp"

#include <algorithm>

namespace maxatom {

void WeightedDigraph::arc_sum(const WeightedArc& arc) {
  vertices_.insert(arc.from);
  vertices_.insert(arc.to);
  auto [it, inserted] = arcs_.try_emplace({arc.from, arc.to}, arc.weight);
  if (!inserted && arc.weight > it->second) it->second = arc.weight;
}

WeightedDigraph graph_sum(const WeightedDigraph& g1, const WeightedDigraph& g2) {
  WeightedDigraph out = g1;
  for (VarId v : g2.vertices()) out.add_vertex(v);
  for (const auto& [key, w] : g2.arcs()) out.arc_sum({key.first, key.second, w});
  return out;
}

WeightedDigraph graph_from_atoms(const AtomSystem& system) {
  WeightedDigraph g;
  for (const MaxAtom& a : system.atoms())
    if (a.is_single()) g.arc_sum({a.right, a.left1, -a.offset});
  return g;
}

std::optional<std::vector<VarId>> positive_circuit(const WeightedDigraph& g) {
  const std::vector<VarId> verts(g.vertices().begin(), g.vertices().end());
  const int n = static_cast<int>(verts.size());
  if (n == 0) return std::nullopt;
  std::map<VarId, int> pos;
  for (int i = 0; i < n; ++i) pos[verts[i]] = i;

  // Shortest-path relaxation on negated weights from an implicit 0-source.
  std::vector<Rat> dist(static_cast<std::size_t>(n), Rat(0));
  std::vector<int> pred(static_cast<std::size_t>(n), -1);
  int touched = -1;
  for (int round = 0; round <= n; ++round) {
    touched = -1;
    for (const auto& [key, w] : g.arcs()) {
      const int u = pos[key.first];
      const int v = pos[key.second];
      const Rat cand = dist[static_cast<std::size_t>(u)] - w;
      if (cand < dist[static_cast<std::size_t>(v)]) {
        dist[static_cast<std::size_t>(v)] = cand;
        pred[static_cast<std::size_t>(v)] = u;
        if (touched < 0) touched = v;
      }
    }
    if (touched < 0) return std::nullopt;  // converged, no negative cycle
  }

  // A vertex updated in round n+1 sits on or behind a cycle of the
  // predecessor graph; n backward steps land inside it.
  int cur = touched;
  for (int i = 0; i < n; ++i) {
    if (pred[static_cast<std::size_t>(cur)] < 0) throw InternalError("positive-circuit witness walk broke");
    cur = pred[static_cast<std::size_t>(cur)];
  }
  std::vector<int> rev;  // backward walk: pred(rev[i]) == rev[i+1]
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  int x = cur;
  while (!seen[static_cast<std::size_t>(x)]) {
    seen[static_cast<std::size_t>(x)] = 1;
    rev.push_back(x);
    x = pred[static_cast<std::size_t>(x)];
    if (x < 0) throw InternalError("positive-circuit witness walk broke");
  }
  // x is the first revisited vertex; rev[k..end) is the cycle backwards.
  std::size_t k = 0;
  while (rev[k] != x) ++k;
  std::vector<VarId> cycle;
  cycle.push_back(verts[static_cast<std::size_t>(x)]);
  for (std::size_t i = rev.size() - 1; i > k; --i)
    cycle.push_back(verts[static_cast<std::size_t>(rev[i])]);

  Rat total(0);
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const VarId a = cycle[i];
    const VarId b = cycle[(i + 1) % cycle.size()];
    const auto arc = g.arcs().find({a, b});
    if (arc == g.arcs().end()) throw InternalError("positive-circuit witness uses a missing arc");
    total += arc->second;
  }
  if (!(total > Rat(0))) throw InternalError("positive-circuit witness has weight " + total.str());
  // Deterministic presentation: start the cycle at its smallest vertex.
  const auto lo = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), lo, cycle.end());
  return cycle;
}

ClosureResult max_weight_closure(const WeightedDigraph& g) {
  const std::vector<VarId> verts(g.vertices().begin(), g.vertices().end());
  const int n = static_cast<int>(verts.size());
  std::map<VarId, int> pos;
  for (int i = 0; i < n; ++i) pos[verts[i]] = i;

  // Max-plus Floyd-Warshall over nonempty paths; absent entries are -inf.
  std::vector<std::vector<std::optional<Rat>>> d(
      static_cast<std::size_t>(n), std::vector<std::optional<Rat>>(static_cast<std::size_t>(n)));
  for (const auto& [key, w] : g.arcs()) {
    auto& cell = d[static_cast<std::size_t>(pos[key.first])][static_cast<std::size_t>(pos[key.second])];
    if (!cell || w > *cell) cell = w;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      const auto& ik = d[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
      if (!ik) continue;
      for (int j = 0; j < n; ++j) {
        const auto& kj = d[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
        if (!kj) continue;
        const Rat cand = *ik + *kj;
        auto& cell = d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        if (!cell || cand > *cell) cell = cand;
      }
    }

  ClosureResult out;
  for (int i = 0; i < n; ++i) {
    const auto& self = d[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
    if (self && *self > Rat(0))
      throw InternalError("closure requested on a graph with a positive circuit through x" +
                          std::to_string(verts[static_cast<std::size_t>(i)].index));
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const auto& cell = d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (!cell) continue;
      // A cycle through a vertex never beats staying put: report weight 0.
      out.rstar[{verts[static_cast<std::size_t>(i)], verts[static_cast<std::size_t>(j)]}] =
          i == j ? Rat(0) : *cell;
    }
  return out;
}

std::set<MaxAtom> closure_to_atoms(const ClosureResult& closure) {
  std::set<MaxAtom> out;
  for (const auto& [key, w] : closure.rstar) {
    if (key.first == key.second) continue;
    out.insert(MaxAtom(key.second, key.second, key.first, -w));
  }
  return out;
}

std::map<VarId, Rat> extract_solution(const WeightedDigraph& g, const std::vector<VarId>& universe) {
  std::set<VarId> all(universe.begin(), universe.end());
  all.insert(g.vertices().begin(), g.vertices().end());

  // Longest path from the implicit source: start everyone at 0 (the source
  // arcs) and relax upward until fixpoint.
  std::map<VarId, Rat> dist;
  for (VarId v : all) dist.emplace(v, Rat(0));
  const int n = static_cast<int>(all.size());
  for (int round = 0; round <= n; ++round) {
    bool changed = false;
    for (const auto& [key, w] : g.arcs()) {
      const Rat cand = dist.at(key.first) + w;
      Rat& cur = dist.at(key.second);
      if (cand > cur) {
        cur = cand;
        changed = true;
      }
    }
    if (!changed) {
      std::map<VarId, Rat> out;
      for (VarId v : universe) out.emplace(v, dist.at(v));
      return out;
    }
  }
  throw InternalError("longest-path extraction did not converge: positive circuit present");
}

}  // namespace maxatom
