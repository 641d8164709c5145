#pragma once

#include <compare>
#include <string>
#include <vector>

#include "nfourier/characters.hpp"
#include "nfourier/linalg.hpp"

namespace nfourier {

struct MPair {
  Element class_rep;
  int irrep_index;
  auto operator<=>(const MPair&) const = default;
};

/// Everything attached to one conjugacy class: the centralizer of its
/// representative and the centralizer's exact character table.
struct ClassContext {
  Element rep;
  Subgroup cent;
  CharacterTable table;
};

/// M(G): pairs (x, sigma), x a conjugacy-class representative and sigma an
/// irreducible character of Z_G(x), enumerated class by class in table order.
class MSet {
 public:
  explicit MSet(GroupPtr g);

  const GroupPtr& group() const { return group_; }
  int size() const { return static_cast<int>(pairs_.size()); }
  const MPair& pair(int i) const { return pairs_[i]; }
  const std::vector<MPair>& pairs() const { return pairs_; }
  /// Index of a canonical pair; MSetMismatch if it does not occur.
  int index_of(const MPair& p) const;
  const ClassContext& class_context(int class_idx) const { return ctx_[class_idx]; }
  const ClassContext& context_of(const MPair& p) const;
  const ClassFunction& sigma(const MPair& p) const;
  std::string pair_label(int i) const;

 private:
  GroupPtr group_;
  std::vector<ClassContext> ctx_;
  std::vector<MPair> pairs_;
  std::vector<int> class_offset_;
};

/// The pairing {(x,sigma),(y,tau)}: direct summation over all w in G subject
/// to the commutation filter, with exact centralizer-order normalization.
Cyclotomic pairing(const MSet& m, const MPair& a, const MPair& b);

/// Same computation on raw data (used for representative-independence checks).
Cyclotomic pairing_raw(const GroupPtr& g, Element x, const Subgroup& zx, const ClassFunction& sigma,
                       Element y, const Subgroup& zy, const ClassFunction& tau);

/// The character z -> sigma(v^-1 z v) on the centralizer of v x v^-1, given
/// sigma on the centralizer of x.
ClassFunction transport_character(const GroupPtr& g, const Subgroup& zx, const ClassFunction& sigma,
                                  Element v, const Subgroup& target_cent);

/// Canonical M(G) pair equivalent to (x, sigma_on_Z(x)).
MPair canonicalize_pair(const MSet& m, Element x, const Subgroup& zx, const ClassFunction& sigma);

struct FourierOptions {
  bool parallel = true;
  bool selfcheck = true;
};

struct FourierMatrix {
  CycloMat entries;  // entries[a][b] = {(pair_a, pair_b)}
  bool selfcheck_run = false;
  bool selfcheck_passed = false;

  /// Coordinates of the transform of v: out[b] = sum_a entries[a][b] * v[a].
  CycloVec apply(const CycloVec& v) const;
};

FourierMatrix fourier_matrix(const MSet& m, const FourierOptions& opts = {});
/// Serial reference kernel for the entry assembly (kept for testing and
/// benchmarking against the parallel path).
CycloMat fourier_entries_serial(const MSet& m);
CycloMat fourier_entries_parallel(const MSet& m);

/// A surjection zeta: G -> Z/c together with a witness x in zeta^-1(1) with
/// x^c = 1 (the least such element; its existence is part of validation).
struct Grading {
  GroupMap zeta;
  int c;
  Element witness;
};

/// Validates the grading conditions; error InvalidGrading.
Grading make_grading(const GroupPtr& g, GroupMap zeta);
/// All gradings with 1 <= c <= cmax, deduplicated, in (c, image-tuple) order.
std::vector<Grading> all_gradings(const GroupPtr& g, int cmax);

/// Twist bookkeeping for one grading: the permutations of M(G) induced by
/// tensoring with the epsilon family, pair degrees, and the subsets M^i.
class GradingContext {
 public:
  GradingContext(const MSet& m, Grading grading);

  const MSet& mset() const { return *mset_; }
  const Grading& grading() const { return grading_; }
  int c() const { return grading_.c; }
  int degree_of_pair(int idx) const { return degree_[idx]; }
  int twist(int k, int pair_idx) const { return twist_[k][pair_idx]; }
  const std::vector<int>& mi(int i) const { return mi_[i]; }
  bool in_mi(int i, int pair_idx) const { return in_mi_[i][pair_idx]; }

 private:
  const MSet* mset_;
  Grading grading_;
  std::vector<int> degree_;
  std::vector<std::vector<int>> twist_;  // [k][pair] -> pair
  std::vector<int> mi_[2];
  std::vector<char> in_mi_[2];
};

struct GradedVector {
  CycloVec coeffs;  // over the full M(G) indexing
};

/// Spanning vectors sum_k zeta_c^{k(i-1)} (x, sigma (x) eps_k) over twist-orbit
/// representatives, reduced to a basis by exact elimination.
std::vector<GradedVector> vi_basis(const GradingContext& ctx, int i);

/// Membership in V^i: support inside M^i and the twist covariance condition.
bool in_vi(const GradingContext& ctx, int i, const GradedVector& v);

struct ExchangeReport {
  bool pass = false;
  int dim_v0 = 0;
  int dim_v1 = 0;
  std::string detail;
};

/// Checks A(V^i) inside V^{1-i} and that the two restrictions compose to the
/// identity, exactly; failures are report content, not errors.
ExchangeReport verify_graded_exchange(const GradingContext& ctx, const FourierMatrix& a);

}  // namespace nfourier
