#include "maxatom/rules.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace maxatom {
namespace {

std::vector<MaxAtom> snapshot(const AtomSystem& system) {
  return {system.atoms().begin(), system.atoms().end()};
}

std::vector<MaxAtom> single_atoms(const AtomSystem& system) {
  std::vector<MaxAtom> out;
  for (const MaxAtom& a : system.atoms())
    if (a.is_single()) out.push_back(a);
  return out;
}

// Atoms grouped by right-hand variable, canonical order inside each bucket.
std::map<int, std::vector<MaxAtom>> index_by_right(const std::vector<MaxAtom>& atoms) {
  std::map<int, std::vector<MaxAtom>> idx;
  for (const MaxAtom& a : atoms) idx[a.right.index].push_back(a);
  return idx;
}

// Two-variable atoms grouped by their unordered left pair.
std::map<std::pair<int, int>, std::vector<MaxAtom>> index_by_left_pair(const std::vector<MaxAtom>& atoms) {
  std::map<std::pair<int, int>, std::vector<MaxAtom>> idx;
  for (const MaxAtom& a : atoms)
    if (!a.is_single()) idx[{a.left1.index, a.left2.index}].push_back(a);
  return idx;
}

}  // namespace

RewriteOutcome rule_reflexive(AtomSystem& system) {
  RewriteOutcome out;
  for (const MaxAtom& a : snapshot(system)) {
    ++out.pairs_examined;
    if (!a.right_on_left()) continue;
    if (a.offset.sign() >= 0) {
      system.erase(a);
      out.note_removed(a);
      continue;
    }
    const VarId other = a.right == a.left1 ? a.left2 : a.left1;
    if (other == a.right) continue;  // x+r >= x: identity rewrite, the graph handles it
    const MaxAtom repl(other, other, a.right, a.offset);
    system.erase(a);
    out.note_removed(a);
    if (system.add(repl)) out.note_added(repl);
  }
  return out;
}

RewriteOutcome rule_same_args_dominance(AtomSystem& system) {
  RewriteOutcome out;
  const std::vector<MaxAtom> atoms = snapshot(system);
  // Canonical order sorts equal (left1,left2,right) groups by ascending
  // offset, so the first of each group is the binding one.
  for (std::size_t i = 0; i + 1 < atoms.size(); ++i) {
    ++out.pairs_examined;
    const MaxAtom& keep = atoms[i];
    std::size_t j = i + 1;
    while (j < atoms.size() && atoms[j].left1 == keep.left1 && atoms[j].left2 == keep.left2 &&
           atoms[j].right == keep.right) {
      ++out.pairs_examined;
      system.erase(atoms[j]);
      out.note_removed(atoms[j]);
      ++j;
    }
    i = j - 1;
  }
  return out;
}

RewriteOutcome rule_atom_dominates(AtomSystem& system) {
  RewriteOutcome out;
  const auto by_right = index_by_right(snapshot(system));
  for (const MaxAtom& a : single_atoms(system)) {
    if (!system.contains(a)) continue;  // deleted by a stronger twin earlier in the pass
    const auto bucket = by_right.find(a.right.index);
    if (bucket == by_right.end()) continue;
    const VarId y = a.left1;
    for (const MaxAtom& f : bucket->second) {
      ++out.pairs_examined;
      if (f == a) continue;
      if (f.left1 != y && f.left2 != y) continue;
      if (!(a.offset <= f.offset)) continue;
      if (!system.contains(f)) continue;
      system.erase(f);
      out.note_removed(f);
    }
  }
  return out;
}

RewriteOutcome rule_order_substitution(AtomSystem& system) {
  RewriteOutcome out;
  const auto by_pair = index_by_left_pair(snapshot(system));
  for (const MaxAtom& a : single_atoms(system)) {
    if (a.offset.sign() > 0) continue;
    const VarId z = a.left1;
    const VarId y = a.right;
    if (z == y) continue;
    if (!system.contains(a)) continue;
    const auto bucket = by_pair.find({std::min(z.index, y.index), std::max(z.index, y.index)});
    if (bucket == by_pair.end()) continue;
    for (const MaxAtom& f : bucket->second) {
      ++out.pairs_examined;
      if (!system.contains(f)) continue;
      const MaxAtom repl(z, z, f.right, f.offset);
      system.erase(f);
      out.note_removed(f);
      if (system.add(repl)) out.note_added(repl);
    }
  }
  return out;
}

RewriteOutcome rule_negative_pair(AtomSystem& system) {
  RewriteOutcome out;
  const auto by_right = index_by_right(snapshot(system));
  for (const MaxAtom& a : single_atoms(system)) {
    if (!system.contains(a)) continue;
    const VarId y = a.left1;
    const VarId x = a.right;
    const auto bucket = by_right.find(y.index);
    if (bucket == by_right.end()) continue;
    for (const MaxAtom& f : bucket->second) {
      ++out.pairs_examined;
      if (f == a) continue;
      if (f.left1 != x && f.left2 != x) continue;
      const VarId z = f.left1 == x ? f.left2 : f.left1;
      if (z == x) continue;  // both operands are x: identity rewrite
      if ((a.offset + f.offset).sign() >= 0) continue;
      if (!system.contains(f) || !system.contains(a)) continue;
      const MaxAtom repl(z, z, y, f.offset);
      system.erase(f);
      out.note_removed(f);
      if (system.add(repl)) out.note_added(repl);
    }
  }
  return out;
}

RewriteOutcome saturate_rules(AtomSystem& system) {
  RewriteOutcome agg;
  const std::set<MaxAtom> before = system.atoms();
  // Every firing either deletes an atom or trades a two-variable atom for a
  // single-variable one, so (two-var count, total count) strictly decreases
  // lexicographically; the round count is bounded by their sum.
  const long bound = 2 * static_cast<long>(system.atoms().size()) + 4;
  long rounds = 0;
  while (true) {
    if (++rounds > bound)
      throw InternalError("rule saturation exceeded its termination bound (" + std::to_string(bound) + " rounds)");
    RewriteOutcome r = rule_atom_dominates(system);
    agg.pairs_examined += r.pairs_examined;
    if (r.changed) {
      ++agg.rounds;
      continue;
    }
    r = rule_order_substitution(system);
    agg.pairs_examined += r.pairs_examined;
    if (r.changed) {
      ++agg.rounds;
      continue;
    }
    r = rule_negative_pair(system);
    agg.pairs_examined += r.pairs_examined;
    if (r.changed) {
      ++agg.rounds;
      continue;
    }
    break;
  }
  for (const MaxAtom& a : before)
    if (!system.contains(a)) agg.note_removed(a);
  for (const MaxAtom& a : system.atoms())
    if (!before.count(a)) agg.note_added(a);
  return agg;
}

}  // namespace maxatom
