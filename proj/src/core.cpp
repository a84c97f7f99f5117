#include "maxatom/core.hpp"

#include <algorithm>

namespace maxatom {

std::string MaxAtom::str() const {
  if (is_single()) return "x" + std::to_string(left1.index) + (offset.sign() >= 0 ? "+" : "") + offset.str() + " >= x" + std::to_string(right.index);
  return "max(x" + std::to_string(left1.index) + ",x" + std::to_string(left2.index) + ")" + (offset.sign() >= 0 ? "+" : "") + offset.str() + " >= x" + std::to_string(right.index);
}

MaxAtom canonicalize(const MaxAtom& atom) {
  if (atom.left1.index <= atom.left2.index) return atom;
  return MaxAtom(atom.left2, atom.left1, atom.right, atom.offset);
}

AtomSystem::AtomSystem(int nvars)
    : nvars_(nvars),
      parent_(static_cast<std::size_t>(nvars) + 1),
      killed_(static_cast<std::size_t>(nvars) + 1, 0) {
  if (nvars < 1) throw std::invalid_argument("a system needs at least one variable");
  for (int i = 0; i <= nvars; ++i) parent_[static_cast<std::size_t>(i)] = i;
}

bool AtomSystem::add(const MaxAtom& atom) {
  check_var(atom.left1);
  check_var(atom.left2);
  check_var(atom.right);
  return atoms_.insert(canonicalize(atom)).second;
}

VarId AtomSystem::resolve(VarId v) const {
  check_var(v);
  int root = v.index;
  while (parent_[static_cast<std::size_t>(root)] != root) root = parent_[static_cast<std::size_t>(root)];
  int cur = v.index;
  while (cur != root) {
    int next = parent_[static_cast<std::size_t>(cur)];
    parent_[static_cast<std::size_t>(cur)] = root;
    cur = next;
  }
  return VarId(root);
}

void AtomSystem::merge_classes(VarId keep, VarId drop) {
  const VarId a = resolve(keep);
  const VarId b = resolve(drop);
  if (a == b) return;
  // Smallest index stays representative regardless of argument order.
  const int rep = std::min(a.index, b.index);
  const int sub = std::max(a.index, b.index);
  parent_[static_cast<std::size_t>(sub)] = rep;
  killed_[static_cast<std::size_t>(rep)] = static_cast<char>(killed_[static_cast<std::size_t>(rep)] | killed_[static_cast<std::size_t>(sub)]);
}

std::vector<VarId> AtomSystem::live_vars() const {
  std::vector<VarId> out;
  for (int i = 1; i <= nvars_; ++i) {
    const VarId v(i);
    if (resolve(v) == v && !killed_[static_cast<std::size_t>(i)]) out.push_back(v);
  }
  return out;
}

int AtomSystem::live_count() const { return static_cast<int>(live_vars().size()); }

int AtomSystem::two_var_atom_count() const {
  int c = 0;
  for (const MaxAtom& a : atoms_)
    if (!a.is_single()) ++c;
  return c;
}

bool evaluate_atom(const MaxAtom& atom, const Assignment& a) {
  const ExtValue lhs = max(a[atom.left1], a[atom.left2]) + atom.offset;
  return lhs >= a[atom.right];
}

VerifyReport verify(const AtomSystem& system, const Assignment& a) {
  if (a.size() != system.nvars())
    throw std::invalid_argument("assignment covers " + std::to_string(a.size()) + " variables, system has " + std::to_string(system.nvars()));
  VerifyReport rep;
  rep.nontrivial = a.nontrivial();
  for (const MaxAtom& atom : system.atoms()) {
    if (!evaluate_atom(atom, a)) {
      rep.satisfied = false;
      rep.violated.push_back(atom);
    }
  }
  return rep;
}

}  // namespace maxatom
