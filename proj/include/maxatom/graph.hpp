#pragma once

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "maxatom/core.hpp"

namespace maxatom {

/// Arc x -(w)-> y. With w = -r it encodes the constraint y + r >= x.
struct WeightedArc {
  VarId from;
  VarId to;
  Rat weight;
};

/// Digraph over variables with at most one arc per ordered pair; inserting a
/// parallel arc keeps the larger weight.
class WeightedDigraph {
 public:
  using ArcMap = std::map<std::pair<VarId, VarId>, Rat>;

  void add_vertex(VarId v) { vertices_.insert(v); }
  void arc_sum(const WeightedArc& arc);

  const std::set<VarId>& vertices() const { return vertices_; }
  const ArcMap& arcs() const { return arcs_; }
  bool empty() const { return arcs_.empty(); }

  friend bool operator==(const WeightedDigraph&, const WeightedDigraph&) = default;

 private:
  std::set<VarId> vertices_;
  ArcMap arcs_;
};

/// Vertex union; arcs combined pairwise by max weight.
WeightedDigraph graph_sum(const WeightedDigraph& g1, const WeightedDigraph& g2);

/// One arc right -(-r)-> y per single-variable atom y + r >= right.
/// Two-variable atoms contribute nothing.
WeightedDigraph graph_from_atoms(const AtomSystem& system);

/// Finds a directed cycle of strictly positive total weight, if any, as its
/// vertex sequence in arc order. Bellman-Ford on negated weights; a positive
/// circuit here is a negative cycle there.
std::optional<std::vector<VarId>> positive_circuit(const WeightedDigraph& g);

/// Max path weight for every ordered reachable pair. Self pairs appear with
/// weight 0 whenever some cycle passes through the vertex.
struct ClosureResult {
  std::map<std::pair<VarId, VarId>, Rat> rstar;
};

/// Requires the graph to be free of positive circuits (throws InternalError
/// otherwise). Zero-weight cycles are fine; they never raise a path weight.
ClosureResult max_weight_closure(const WeightedDigraph& g);

/// One single-variable atom v - r*(u,v) >= u per reachable pair; self pairs
/// are skipped (they would only produce u + 0 >= u).
std::set<MaxAtom> closure_to_atoms(const ClosureResult& closure);

/// Longest-path weights from a fresh source wired to every vertex with
/// 0-weight arcs. Every universe variable gets a finite value; the result
/// satisfies every constraint encoded by the arcs. Requires no positive
/// circuit.
std::map<VarId, Rat> extract_solution(const WeightedDigraph& g, const std::vector<VarId>& universe);

}  // namespace maxatom
