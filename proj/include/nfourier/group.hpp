#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace nfourier {

using Element = int;

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A finite group as an explicit multiplication table, with conjugacy data
/// computed at construction. Immutable afterwards; safe to share across
/// threads. Element ordering is part of the value: everything downstream
/// (class representatives, M-set indices, matrices) inherits determinism
/// from it.
class FiniteGroup {
 public:
  int order() const { return order_; }
  Element identity() const { return identity_; }
  Element mul(Element a, Element b) const { return mul_[a * order_ + b]; }
  Element inv(Element a) const { return inv_[a]; }
  Element conj(Element g, Element x) const { return mul(mul(g, x), inv(g)); }
  Element power(Element x, long e) const;
  long element_order(Element x) const;
  long exponent() const { return exponent_; }
  bool is_abelian() const { return abelian_; }
  const std::string& label(Element a) const { return labels_[a]; }

  int class_count() const { return static_cast<int>(classes_.size()); }
  int class_of(Element x) const { return class_of_[x]; }
  Element class_rep(int c) const { return classes_[c].front(); }
  int class_size(int c) const { return static_cast<int>(classes_[c].size()); }
  const std::vector<Element>& class_members(int c) const { return classes_[c]; }
  const std::vector<std::vector<Element>>& classes() const { return classes_; }

  friend GroupPtr group_from_table(const std::vector<std::vector<int>>& table,
                                   std::vector<std::string> labels);

 private:
  FiniteGroup() = default;

  int order_ = 0;
  Element identity_ = 0;
  std::vector<Element> mul_;  // row-major order x order
  std::vector<Element> inv_;
  std::vector<std::string> labels_;
  std::vector<std::vector<Element>> classes_;  // each sorted; ordered by representative
  std::vector<int> class_of_;
  long exponent_ = 1;
  bool abelian_ = true;
};

/// Validates and builds a group from a square multiplication table.
/// Errors: MalformedTable, NoIdentity, MissingInverse, NonAssociative --
/// each message names the first violating entry or triple. Associativity is
/// verified by the full triple loop up to order 512 and by 10^6 fixed-seed
/// random triples above that.
GroupPtr group_from_table(const std::vector<std::vector<int>>& table,
                          std::vector<std::string> labels = {});

/// The subgroup of the symmetric group generated by `generators`, as a
/// multiplication table. Elements are ordered by breadth-first discovery
/// (identity first, generators applied in the given order), which is
/// deterministic. Errors: NotAPermutation, OrderLimitExceeded.
GroupPtr group_from_permutations(int degree, const std::vector<std::vector<int>>& generators,
                                 int order_cap = 5040);

GroupPtr cyclic_group(int n);

/// A subgroup given by its member list, with the induced group materialized
/// and index translation both ways. Throws NotASubgroup if the members are
/// not closed / miss the identity.
class Subgroup {
 public:
  Subgroup(GroupPtr parent, std::vector<Element> members);

  const GroupPtr& parent() const { return parent_; }
  const std::vector<Element>& members() const { return members_; }  // sorted
  const GroupPtr& group() const { return group_; }                  // induced group
  int order() const { return static_cast<int>(members_.size()); }
  bool contains(Element parent_elt) const { return to_sub_[parent_elt] >= 0; }
  int to_sub(Element parent_elt) const;             // throws NotASubgroup if absent
  Element to_parent(int sub_elt) const { return members_[sub_elt]; }

 private:
  GroupPtr parent_;
  std::vector<Element> members_;
  std::vector<int> to_sub_;
  GroupPtr group_;
};

/// A homomorphism between two groups, validated at construction
/// (images(a*b) = images(a)*images(b), identity to identity; error
/// NotHomomorphism).
struct GroupMap {
  GroupPtr source;
  GroupPtr target;
  std::vector<Element> images;

  GroupMap(GroupPtr src, GroupPtr tgt, std::vector<Element> im);
  Element operator()(Element a) const { return images[a]; }
  bool is_bijective() const;
  bool is_surjective() const;
};

Subgroup centralizer(const GroupPtr& g, Element x);

/// Quotient by the cyclic subgroup generated by a central element; cosets are
/// ordered by their smallest member index. Error: NotCentral.
std::pair<GroupPtr, GroupMap> quotient_by_central_cyclic(const GroupPtr& g, Element z);

/// Smallest m >= 1 with theta^m = id. Errors: NotBijective, NotHomomorphism
/// (the latter at GroupMap construction).
int automorphism_order(const GroupMap& theta);

// Assorted helpers used by the transform layers.
std::vector<Element> subgroup_closure(const GroupPtr& g, std::vector<Element> seed);
std::vector<Element> derived_subgroup(const GroupPtr& g);
std::pair<GroupPtr, GroupMap> quotient_by_normal(const GroupPtr& g,
                                                 const std::vector<Element>& normal_members);
std::optional<Element> conjugator(const GroupPtr& g, Element from, Element to);
std::vector<Element> generating_set(const GroupPtr& g);

}  // namespace nfourier
