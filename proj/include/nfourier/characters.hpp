#pragma once

#include <vector>

#include "nfourier/cyclotomic.hpp"
#include "nfourier/group.hpp"

namespace nfourier {

/// A class function with exact cyclotomic values, one per conjugacy class of
/// its group (in the group's class order).
struct ClassFunction {
  GroupPtr group;
  std::vector<Cyclotomic> values;

  const Cyclotomic& at_class(int c) const { return values[c]; }
  const Cyclotomic& at_element(Element g) const { return values[group->class_of(g)]; }
  long degree() const;  // value at the identity class, as a plain integer

  bool operator==(const ClassFunction& o) const;
};

/// Exact irreducible characters of a finite group.
///
/// Computed by the modular method: the class-sum matrices are simultaneously
/// diagonalized over a prime field F_p with p = 1 (mod exp(G)) and
/// p > 2*sqrt(|G|), degrees and character values are recovered mod p, and the
/// values are lifted to Q(zeta_exp(G)) by counting eigenvalue multiplicities
/// through discrete logarithms. Row and column orthogonality of the lifted
/// table are verified exactly before the constructor returns.
/// Irreducibles are sorted by (degree, lexicographic value order).
class CharacterTable {
 public:
  explicit CharacterTable(GroupPtr g);

  const GroupPtr& group() const { return group_; }
  int size() const { return static_cast<int>(irreps_.size()); }
  const ClassFunction& irreducible(int i) const { return irreps_[i]; }
  const std::vector<ClassFunction>& irreducibles() const { return irreps_; }
  /// Index of an exactly matching row, or -1.
  int index_of(const ClassFunction& chi) const;

 private:
  GroupPtr group_;
  std::vector<ClassFunction> irreps_;
};

CharacterTable character_table(const GroupPtr& g);

/// (1/|G|) sum_g f(g) * conj(g_value(g)), exact. Error: GroupMismatch.
Cyclotomic inner_product(const ClassFunction& f, const ClassFunction& g);

/// Transport of values along a subgroup inclusion. Error: NotASubgroup.
ClassFunction restrict_to(const ClassFunction& chi, const Subgroup& h);

/// True iff <f,f> = 1 exactly (caller supplies genuine characters).
bool is_irreducible(const ClassFunction& f);

/// Pointwise product with a degree-1 character. Errors: NotLinear, GroupMismatch.
ClassFunction tensor_linear(const ClassFunction& chi, const ClassFunction& lambda);

/// The c linear characters x -> alpha^{zeta(x)} for alpha running over the
/// c-th roots of unity, for a surjection zeta onto the cyclic group of order
/// c (element i of the target must be the residue i). Error: NotSurjective.
std::vector<ClassFunction> epsilon_family(const GroupPtr& g, const GroupMap& zeta);

/// All irreducible characters of the parent of `h_in_z` whose restriction to
/// the subgroup equals sigma exactly; empty if sigma does not extend.
/// Error: NotEmbedded.
std::vector<ClassFunction> extensions_of(const ClassFunction& sigma, const Subgroup& h_in_z);

}  // namespace nfourier
