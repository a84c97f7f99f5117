#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "maxatom/rules.hpp"
#include "support/grid.hpp"

using namespace maxatom;

namespace {

MaxAtom atom(int i, int j, int k, long r) { return MaxAtom(VarId(i), VarId(j), VarId(k), Rat(r)); }

AtomSystem sys_of(int n, std::initializer_list<MaxAtom> atoms) {
  AtomSystem s(n);
  for (const MaxAtom& a : atoms) s.add(a);
  return s;
}

std::set<MaxAtom> atoms_of(const AtomSystem& s) { return s.atoms(); }

using RuleFn = RewriteOutcome (*)(AtomSystem&);

/// Solution sets over the grid ({-8..0} ∪ {-inf})^4 must match before and
/// after the rule.
void check_grid_equivalence(RuleFn rule, std::uint64_t seed, int trials) {
  std::mt19937_64 rng(seed);
  int fired = 0;
  for (int t = 0; t < trials; ++t) {
    AtomSystem sys = testsupport::random_mixed(rng, 4, 1 + static_cast<int>(rng() % 8), 3);
    const auto before = testsupport::satisfying_set(sys, -8);
    const RewriteOutcome out = rule(sys);
    if (out.changed) ++fired;
    const auto after = testsupport::satisfying_set(sys, -8);
    REQUIRE(before == after);
    CHECK(out.changed == !(out.removed.empty() && out.added.empty()));
  }
  CHECK(fired > trials / 20);  // the corpus actually exercises the rule
}

}  // namespace

TEST_CASE("reflexive rule") {
  AtomSystem s1 = sys_of(3, {atom(1, 2, 1, 0)});
  rule_reflexive(s1);
  CHECK(atoms_of(s1).empty());

  AtomSystem s2 = sys_of(3, {atom(1, 2, 1, -1)});
  rule_reflexive(s2);
  CHECK(atoms_of(s2) == atoms_of(sys_of(3, {atom(2, 2, 1, -1)})));

  AtomSystem s3 = sys_of(3, {atom(2, 3, 1, 5)});
  const RewriteOutcome out = rule_reflexive(s3);
  CHECK_FALSE(out.changed);
  CHECK(atoms_of(s3) == atoms_of(sys_of(3, {atom(2, 3, 1, 5)})));

  // x+r >= x with r < 0 is left alone here; the circuit check kills it.
  AtomSystem s4 = sys_of(2, {atom(1, 1, 1, -2)});
  CHECK_FALSE(rule_reflexive(s4).changed);
  AtomSystem s5 = sys_of(2, {atom(1, 1, 1, 2)});
  CHECK(rule_reflexive(s5).changed);
  CHECK(atoms_of(s5).empty());
}

TEST_CASE("same-arguments dominance rule") {
  AtomSystem s1 = sys_of(3, {atom(1, 2, 3, 1), atom(1, 2, 3, 4)});
  rule_same_args_dominance(s1);
  CHECK(atoms_of(s1) == atoms_of(sys_of(3, {atom(1, 2, 3, 1)})));

  AtomSystem s2 = sys_of(4, {atom(1, 2, 3, 1), atom(1, 2, 4, 1)});
  CHECK_FALSE(rule_same_args_dominance(s2).changed);

  AtomSystem s3 = sys_of(3, {atom(1, 1, 3, 2), atom(1, 1, 3, 7)});
  rule_same_args_dominance(s3);
  CHECK(atoms_of(s3) == atoms_of(sys_of(3, {atom(1, 1, 3, 2)})));
}

TEST_CASE("single atom dominates rule") {
  AtomSystem s1 = sys_of(3, {atom(2, 2, 3, 1), atom(1, 2, 3, 4)});
  rule_atom_dominates(s1);
  CHECK(atoms_of(s1) == atoms_of(sys_of(3, {atom(2, 2, 3, 1)})));

  AtomSystem s2 = sys_of(3, {atom(2, 2, 3, 5), atom(1, 2, 3, 4)});
  CHECK_FALSE(rule_atom_dominates(s2).changed);

  AtomSystem s3 = sys_of(4, {atom(2, 2, 3, 1), atom(1, 4, 3, 4)});
  CHECK_FALSE(rule_atom_dominates(s3).changed);
}

TEST_CASE("order substitution rule") {
  AtomSystem s1 = sys_of(3, {atom(1, 1, 2, 0), atom(1, 2, 3, 3)});
  rule_order_substitution(s1);
  CHECK(atoms_of(s1) == atoms_of(sys_of(3, {atom(1, 1, 2, 0), atom(1, 1, 3, 3)})));

  AtomSystem s2 = sys_of(3, {atom(1, 1, 2, 1), atom(1, 2, 3, 3)});
  CHECK_FALSE(rule_order_substitution(s2).changed);

  AtomSystem s3 = sys_of(2, {atom(1, 1, 2, -2), atom(1, 2, 2, -5)});
  rule_order_substitution(s3);
  CHECK(atoms_of(s3) == atoms_of(sys_of(2, {atom(1, 1, 2, -2), atom(1, 1, 2, -5)})));
}

TEST_CASE("negative pair rule") {
  AtomSystem s1 = sys_of(3, {atom(2, 2, 1, 1), atom(1, 3, 2, -2)});
  rule_negative_pair(s1);
  CHECK(atoms_of(s1) == atoms_of(sys_of(3, {atom(2, 2, 1, 1), atom(3, 3, 2, -2)})));

  AtomSystem s2 = sys_of(3, {atom(2, 2, 1, 1), atom(1, 3, 2, -1)});
  CHECK_FALSE(rule_negative_pair(s2).changed);

  AtomSystem s3 = sys_of(3, {atom(2, 2, 1, -3), atom(1, 3, 2, 2)});
  rule_negative_pair(s3);
  CHECK(atoms_of(s3) == atoms_of(sys_of(3, {atom(2, 2, 1, -3), atom(3, 3, 2, 2)})));
}

TEST_CASE("rules preserve the solution set on small grids") {
  check_grid_equivalence(&rule_reflexive, 101, 120);
  check_grid_equivalence(&rule_same_args_dominance, 102, 120);
  check_grid_equivalence(&rule_atom_dominates, 103, 120);
  check_grid_equivalence(&rule_order_substitution, 104, 120);
  check_grid_equivalence(&rule_negative_pair, 105, 120);
}

TEST_CASE("no rule introduces a two-variable atom") {
  std::mt19937_64 rng(31);
  RuleFn rules[] = {&rule_reflexive, &rule_same_args_dominance, &rule_atom_dominates,
                    &rule_order_substitution, &rule_negative_pair};
  for (int t = 0; t < 300; ++t) {
    AtomSystem sys = testsupport::random_mixed(rng, 4, 1 + static_cast<int>(rng() % 8), 3);
    const int before_total = static_cast<int>(sys.atoms().size());
    const RewriteOutcome out = rules[t % 5](sys);
    for (const MaxAtom& a : out.added) CHECK(a.is_single());
    CHECK(static_cast<int>(sys.atoms().size()) <= before_total);
  }
}

TEST_CASE("saturation") {
  AtomSystem empty(3);
  CHECK_FALSE(saturate_rules(empty).changed);

  // Cascade: the order substitution enables a dominance deletion.
  AtomSystem s = sys_of(4, {atom(1, 1, 2, 0), atom(1, 2, 3, 3), atom(1, 1, 3, 4)});
  const auto before = testsupport::satisfying_set(s, -8);
  const RewriteOutcome out = saturate_rules(s);
  CHECK(out.changed);
  CHECK(atoms_of(s) == atoms_of(sys_of(4, {atom(1, 1, 2, 0), atom(1, 1, 3, 3)})));
  CHECK(before == testsupport::satisfying_set(s, -8));

  // Idempotent: a second run is a no-op.
  CHECK_FALSE(saturate_rules(s).changed);

  std::mt19937_64 rng(37);
  for (int t = 0; t < 150; ++t) {
    AtomSystem sys = testsupport::random_mixed(rng, 4, 1 + static_cast<int>(rng() % 10), 3);
    const auto pre = testsupport::satisfying_set(sys, -8);
    saturate_rules(sys);
    CHECK(pre == testsupport::satisfying_set(sys, -8));
    CHECK_FALSE(saturate_rules(sys).changed);
  }
}
