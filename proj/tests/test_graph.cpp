#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "maxatom/graph.hpp"
#include "support/grid.hpp"

using namespace maxatom;

namespace {

WeightedArc arc(int from, int to, long w) { return {VarId(from), VarId(to), Rat(w)}; }

Rat weight(const WeightedDigraph& g, int from, int to) {
  return g.arcs().at({VarId(from), VarId(to)});
}

}  // namespace

TEST_CASE("arc sum keeps the max weight") {
  WeightedDigraph g;
  g.arc_sum(arc(1, 2, 3));
  g.arc_sum(arc(1, 2, 5));
  CHECK(g.arcs().size() == 1);
  CHECK(weight(g, 1, 2) == Rat(5));

  g.arc_sum(arc(2, 1, 5));
  CHECK(g.arcs().size() == 2);

  WeightedDigraph h = g;
  h.arc_sum(arc(1, 2, 5));
  CHECK(h == g);  // idempotent
}

TEST_CASE("graph sum is an idempotent commutative monoid") {
  WeightedDigraph a;
  a.arc_sum(arc(1, 2, 1));
  WeightedDigraph b;
  b.arc_sum(arc(1, 2, 4));
  b.arc_sum(arc(2, 3, 0));

  const WeightedDigraph empty;
  CHECK(graph_sum(a, empty) == a);
  CHECK(graph_sum(a, a) == a);
  const WeightedDigraph ab = graph_sum(a, b);
  CHECK(ab == b);  // a's weaker parallel arc is absorbed
  CHECK(graph_sum(b, a) == ab);

  std::mt19937_64 rng(41);
  for (int t = 0; t < 200; ++t) {
    const auto g1 = testsupport::random_graph(rng, 4, 5, 3);
    const auto g2 = testsupport::random_graph(rng, 4, 5, 3);
    const auto g3 = testsupport::random_graph(rng, 4, 5, 3);
    CHECK(graph_sum(g1, g2) == graph_sum(g2, g1));
    CHECK(graph_sum(graph_sum(g1, g2), g3) == graph_sum(g1, graph_sum(g2, g3)));
    CHECK(graph_sum(g1, g1) == g1);
    CHECK(graph_sum(g1, WeightedDigraph()) == g1);
  }
}

TEST_CASE("graph from atoms") {
  AtomSystem s1(2);
  s1.add(MaxAtom(VarId(2), VarId(2), VarId(1), Rat(1)));
  const WeightedDigraph g1 = graph_from_atoms(s1);
  CHECK(g1.arcs().size() == 1);
  CHECK(weight(g1, 1, 2) == Rat(-1));

  AtomSystem s2(3);
  s2.add(MaxAtom(VarId(1), VarId(2), VarId(3), Rat(1)));
  CHECK(graph_from_atoms(s2).empty());

  AtomSystem s3(2);
  s3.add(MaxAtom(VarId(2), VarId(2), VarId(1), Rat(1)));
  s3.add(MaxAtom(VarId(2), VarId(2), VarId(1), Rat(3)));
  const WeightedDigraph g3 = graph_from_atoms(s3);
  CHECK(g3.arcs().size() == 1);
  CHECK(weight(g3, 1, 2) == Rat(-1));  // max(-1, -3)
}

TEST_CASE("positive circuit detection") {
  WeightedDigraph g1;
  g1.arc_sum(arc(1, 2, 1));
  g1.arc_sum(arc(2, 1, 1));
  const auto c1 = positive_circuit(g1);
  REQUIRE(c1.has_value());
  CHECK(c1->size() == 2);
  CHECK(c1->front() == VarId(1));

  WeightedDigraph g2;
  g2.arc_sum(arc(1, 2, 1));
  g2.arc_sum(arc(2, 1, -1));
  CHECK_FALSE(positive_circuit(g2).has_value());

  CHECK_FALSE(positive_circuit(WeightedDigraph()).has_value());

  WeightedDigraph g3;  // positive self loop
  g3.arc_sum(arc(1, 1, 2));
  const auto c3 = positive_circuit(g3);
  REQUIRE(c3.has_value());
  CHECK(*c3 == std::vector<VarId>{VarId(1)});
}

TEST_CASE("positive circuit agrees with brute-force cycle search") {
  std::mt19937_64 rng(43);
  int positives = 0;
  for (int t = 0; t < 400; ++t) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const auto g = testsupport::random_graph(rng, n, 1 + static_cast<int>(rng() % 10), 3);
    const auto witness = positive_circuit(g);
    CHECK(witness.has_value() == testsupport::has_positive_cycle_brute(g));
    if (witness) {
      ++positives;
      // The witness must be a real cycle of positive weight.
      Rat total(0);
      for (std::size_t i = 0; i < witness->size(); ++i) {
        const auto it = g.arcs().find({(*witness)[i], (*witness)[(i + 1) % witness->size()]});
        REQUIRE(it != g.arcs().end());
        total += it->second;
      }
      CHECK(total > Rat(0));
    }
  }
  CHECK(positives > 50);
}

TEST_CASE("max weight closure") {
  WeightedDigraph g1;
  g1.arc_sum(arc(1, 2, 2));
  g1.arc_sum(arc(2, 3, 3));
  const ClosureResult c1 = max_weight_closure(g1);
  CHECK(c1.rstar.at({VarId(1), VarId(3)}) == Rat(5));

  WeightedDigraph g2;
  g2.arc_sum(arc(1, 2, 2));
  g2.arc_sum(arc(1, 3, 0));
  g2.arc_sum(arc(3, 2, 3));
  const ClosureResult c2 = max_weight_closure(g2);
  CHECK(c2.rstar.at({VarId(1), VarId(2)}) == Rat(3));
  CHECK(c2.rstar.count({VarId(2), VarId(1)}) == 0);

  WeightedDigraph g3;  // zero cycle: self pairs appear with weight 0
  g3.arc_sum(arc(1, 2, 1));
  g3.arc_sum(arc(2, 1, -1));
  const ClosureResult c3 = max_weight_closure(g3);
  CHECK(c3.rstar.at({VarId(1), VarId(1)}) == Rat(0));
  CHECK(c3.rstar.at({VarId(1), VarId(2)}) == Rat(1));

  WeightedDigraph bad;
  bad.arc_sum(arc(1, 1, 1));
  CHECK_THROWS_AS(max_weight_closure(bad), InternalError);
}

TEST_CASE("closure is idempotent") {
  std::mt19937_64 rng(47);
  int kept = 0;
  for (int t = 0; t < 300 && kept < 150; ++t) {
    const auto g = testsupport::random_graph(rng, 1 + static_cast<int>(rng() % 5),
                                             1 + static_cast<int>(rng() % 8), 3);
    if (positive_circuit(g)) continue;
    ++kept;
    const ClosureResult c = max_weight_closure(g);
    WeightedDigraph closed;
    for (VarId v : g.vertices()) closed.add_vertex(v);
    for (const auto& [key, w] : c.rstar)
      if (key.first != key.second) closed.arc_sum({key.first, key.second, w});
    const ClosureResult c2 = max_weight_closure(closed);
    for (const auto& [key, w] : c.rstar)
      if (key.first != key.second) CHECK(c2.rstar.at(key) == w);
    for (const auto& [key, w] : c2.rstar)
      if (key.first != key.second) CHECK(c.rstar.at(key) == w);
  }
  CHECK(kept >= 100);
}

TEST_CASE("closure atoms") {
  ClosureResult c;
  c.rstar[{VarId(1), VarId(3)}] = Rat(5);
  const auto atoms = closure_to_atoms(c);
  REQUIRE(atoms.size() == 1);
  CHECK(*atoms.begin() == MaxAtom(VarId(3), VarId(3), VarId(1), Rat(-5)));

  CHECK(closure_to_atoms(ClosureResult{}).empty());

  // Self pairs are skipped.
  ClosureResult c2;
  c2.rstar[{VarId(1), VarId(1)}] = Rat(0);
  CHECK(closure_to_atoms(c2).empty());

  // Chain x1->x2->x3 with weight -1 each: derived atom x3+2 >= x1.
  WeightedDigraph g;
  g.arc_sum(arc(1, 2, -1));
  g.arc_sum(arc(2, 3, -1));
  const auto derived = closure_to_atoms(max_weight_closure(g));
  CHECK(derived.count(MaxAtom(VarId(3), VarId(3), VarId(1), Rat(2))) == 1);
}

TEST_CASE("solution extraction") {
  const std::vector<VarId> universe{VarId(1), VarId(2)};

  const auto empty_sol = extract_solution(WeightedDigraph(), universe);
  CHECK(empty_sol.at(VarId(1)) == Rat(0));
  CHECK(empty_sol.at(VarId(2)) == Rat(0));

  WeightedDigraph g1;  // atom x2 - 1 >= x1
  g1.arc_sum(arc(1, 2, 1));
  const auto s1 = extract_solution(g1, universe);
  CHECK(s1.at(VarId(1)) == Rat(0));
  CHECK(s1.at(VarId(2)) == Rat(1));

  WeightedDigraph g2;  // zero cycle
  g2.arc_sum(arc(1, 2, 1));
  g2.arc_sum(arc(2, 1, -1));
  const auto s2 = extract_solution(g2, universe);
  CHECK(s2.at(VarId(1)) == Rat(0));
  CHECK(s2.at(VarId(2)) == Rat(1));
}

TEST_CASE("extracted solutions satisfy the encoded atoms") {
  std::mt19937_64 rng(53);
  int kept = 0;
  for (int t = 0; t < 500 && kept < 250; ++t) {
    const int n = 2 + static_cast<int>(rng() % 5);
    AtomSystem sys(n);
    const int m = 1 + static_cast<int>(rng() % 10);
    for (int i = 0; i < m; ++i) {
      const int y = 1 + static_cast<int>(rng() % n);
      const int x = 1 + static_cast<int>(rng() % n);
      sys.add(MaxAtom(VarId(y), VarId(y), VarId(x), Rat(static_cast<long>(rng() % 7) - 3)));
    }
    const WeightedDigraph g = graph_from_atoms(sys);
    if (positive_circuit(g)) continue;
    ++kept;
    std::vector<VarId> universe;
    for (int i = 1; i <= n; ++i) universe.push_back(VarId(i));
    const auto values = extract_solution(g, universe);
    Assignment a(n);
    for (int i = 1; i <= n; ++i) a[VarId(i)] = ExtValue::finite(values.at(VarId(i)));
    CHECK(verify(sys, a).satisfied);
  }
  CHECK(kept >= 150);
}
