#pragma once

#include <compare>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "maxatom/rational.hpp"

namespace maxatom {

/// Raised when an internal invariant or iteration bound is violated.
/// Reaching it means a bug (or a falsified termination argument), never
/// bad user input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// 1-based variable index into the universe {x_1, ..., x_n}.
struct VarId {
  int index = 0;
  VarId() = default;
  explicit VarId(int i) : index(i) {}
  friend auto operator<=>(const VarId&, const VarId&) = default;
};

/// One constraint max(left1, left2) + offset >= right.
/// Canonical form orders left1.index <= left2.index; left1 == left2 encodes
/// the single-variable constraint y + r >= x.
struct MaxAtom {
  VarId left1;
  VarId left2;
  VarId right;
  Rat offset;

  MaxAtom() = default;
  MaxAtom(VarId l1, VarId l2, VarId r, Rat off)
      : left1(l1), left2(l2), right(r), offset(std::move(off)) {}

  bool is_single() const { return left1 == left2; }
  bool right_on_left() const { return right == left1 || right == left2; }
  bool is_canonical() const { return left1.index <= left2.index; }

  friend bool operator==(const MaxAtom& a, const MaxAtom& b) {
    return a.left1 == b.left1 && a.left2 == b.left2 && a.right == b.right && a.offset == b.offset;
  }
  friend std::strong_ordering operator<=>(const MaxAtom& a, const MaxAtom& b) {
    if (auto c = a.left1 <=> b.left1; c != 0) return c;
    if (auto c = a.left2 <=> b.left2; c != 0) return c;
    if (auto c = a.right <=> b.right; c != 0) return c;
    return a.offset <=> b.offset;
  }

  std::string str() const;
};

/// Swaps the left pair into canonical index order. Idempotent.
MaxAtom canonicalize(const MaxAtom& atom);

/// Total map from the universe to Q ∪ {-inf}. Fresh assignments are all -inf.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(int nvars) : vals_(static_cast<std::size_t>(nvars) + 1) {}
  static Assignment uniform(int nvars, const ExtValue& v) {
    Assignment a(nvars);
    for (int i = 1; i <= nvars; ++i) a.vals_[static_cast<std::size_t>(i)] = v;
    return a;
  }

  int size() const { return static_cast<int>(vals_.size()) - 1; }
  const ExtValue& operator[](VarId v) const { return vals_.at(static_cast<std::size_t>(v.index)); }
  ExtValue& operator[](VarId v) { return vals_.at(static_cast<std::size_t>(v.index)); }

  /// True iff at least one component is finite.
  bool nontrivial() const {
    for (int i = 1; i <= size(); ++i)
      if (vals_[static_cast<std::size_t>(i)].is_finite()) return true;
    return false;
  }

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::vector<ExtValue> vals_;
};

struct VerifyReport {
  bool satisfied = true;
  bool nontrivial = false;
  std::vector<MaxAtom> violated;
};

/// A max-atom instance together with the solver's mutable working state:
/// the atom set (canonical keys, set semantics), the variables already fixed
/// to -inf, and the union-find recording variable identifications. A freshly
/// parsed or generated system has no kills and no merges.
class AtomSystem {
 public:
  explicit AtomSystem(int nvars);

  int nvars() const { return nvars_; }
  const std::set<MaxAtom>& atoms() const { return atoms_; }

  /// Canonicalizes and inserts; returns false if the atom was already present.
  bool add(const MaxAtom& atom);
  bool erase(const MaxAtom& atom) { return atoms_.erase(canonicalize(atom)) > 0; }
  bool contains(const MaxAtom& atom) const { return atoms_.count(canonicalize(atom)) > 0; }

  /// Union-find representative of v; the smallest index of the class.
  VarId resolve(VarId v) const;
  /// Records drop := keep in the union-find. Does not rewrite atoms (see
  /// merge_variables for the full substitution step).
  void merge_classes(VarId keep, VarId drop);

  bool is_killed(VarId v) const { return killed_[static_cast<std::size_t>(resolve(v).index)]; }
  void kill(VarId v) { killed_[static_cast<std::size_t>(resolve(v).index)] = 1; }

  /// Live variables: class representatives not fixed to -inf, ascending.
  std::vector<VarId> live_vars() const;
  int live_count() const;
  int two_var_atom_count() const;

  void check_var(VarId v) const {
    if (v.index < 1 || v.index > nvars_)
      throw std::invalid_argument("variable index out of range: x" + std::to_string(v.index));
  }

 private:
  int nvars_;
  std::set<MaxAtom> atoms_;
  mutable std::vector<int> parent_;  // path-compressed on resolve
  std::vector<char> killed_;
};

/// max(a[left1], a[left2]) + offset >= a[right] under extended-value rules.
bool evaluate_atom(const MaxAtom& atom, const Assignment& a);

/// Checks every atom of the system against a total assignment.
VerifyReport verify(const AtomSystem& system, const Assignment& a);

}  // namespace maxatom
