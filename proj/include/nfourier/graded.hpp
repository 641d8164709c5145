#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nfourier/fourier.hpp"

namespace nfourier {

/// A Z-graded group presented as (K, theta): the semidirect product
/// Delta = K x|_theta Z with multiplication (k,e)(k',e') = (k theta^e(k'), e+e')
/// and grading eta(k,e) = e. Every group with a surjection onto Z with finite
/// kernel splits this way, so the pair (K, theta) is a complete finite model.
struct ZGradedGroup {
  GroupPtr kernel;
  GroupMap theta;
  int theta_order;
  std::vector<std::vector<Element>> theta_pow;  // theta^j, j in [0, theta_order)

  ZGradedGroup(GroupPtr k, GroupMap theta_map);
  Element apply_theta(long e, Element x) const;  // theta^e, any integer e
};

struct DeltaElement {
  Element k = 0;
  long e = 0;
  auto operator<=>(const DeltaElement&) const = default;
};

DeltaElement delta_mul(const ZGradedGroup& d, const DeltaElement& a, const DeltaElement& b);
DeltaElement delta_inv(const ZGradedGroup& d, const DeltaElement& a);
/// a b a^-1
DeltaElement delta_conj(const ZGradedGroup& d, const DeltaElement& a, const DeltaElement& b);

/// xi = (identity_K, c) with c = multiple * order(theta); xi is central and
/// equals y^c for y = (identity_K, 1), so it generates a valid finite
/// quotient. Centrality is verified against all of K and a degree-1 element.
struct CentralWitness {
  int multiple;
  int c;
};
CentralWitness canonical_xi(const ZGradedGroup& d, int multiple = 1);

/// The finite quotient Gamma = Delta/<xi> on pairs (k, e mod c) with element
/// index e*|K| + k, its Z/c-grading, and the element correspondence.
class QuotientContext {
 public:
  QuotientContext(const ZGradedGroup& d, CentralWitness xi);

  const ZGradedGroup& delta() const { return *delta_; }
  const CentralWitness& xi() const { return xi_; }
  int c() const { return xi_.c; }
  const GroupPtr& gamma() const { return gamma_; }
  const Grading& zeta() const { return *zeta_; }

  Element to_gamma(const DeltaElement& x) const;
  DeltaElement lift(Element g) const;  // the representative with e in [0, c)

 private:
  const ZGradedGroup* delta_;
  CentralWitness xi_;
  GroupPtr gamma_;
  std::optional<Grading> zeta_;
};

/// Image of Z_Delta(x) in Gamma, computed by lifting each coset and testing
/// commutation in Delta; asserted to coincide with Z_Gamma(x_xi).
/// Error: DegreeOutOfRange unless x has degree 0 or 1.
Subgroup centralizer_mod_xi(const QuotientContext& q, const DeltaElement& x);

/// The centralizer tower of a degree-i element: Z_Gamma(x) inside Gamma, its
/// degree-0 part as a nested subgroup, and the exact table of that part.
struct SmallCent {
  Subgroup big;          // Z_Gamma(x_xi) <= Gamma
  Subgroup small;        // degree-0 part, subgroup of big.group()
  CharacterTable table;  // table of small.group()

  int small_index_of(Element gamma_elt) const { return small.to_sub(big.to_sub(gamma_elt)); }
  bool small_contains(Element gamma_elt) const {
    return big.contains(gamma_elt) && small.contains(big.to_sub(gamma_elt));
  }
};

/// M^i_eta(Delta): pairs (x, sigma) with x of degree i up to Delta-conjugacy
/// and sigma an irreducible character of Z_Delta(x) (deg 0 part) up to the
/// conjugation action of Z_Delta(x); for i = 0 the pairs additionally satisfy
/// the degree-1-centralizer and extension conditions (automatic for i = 1).
class MiEta {
 public:
  struct EtaClass {
    DeltaElement x;                        // least-k representative
    SmallCent cent;
    std::vector<int> orbit_rep;            // irrep -> least irrep in its orbit
    std::vector<char> eligible;            // per irrep; constant on orbits
    std::vector<std::vector<ClassFunction>> extensions;  // per irrep (i = 0)
    std::vector<int> pair_index;           // irrep -> global index or -1
  };
  struct PairRef {
    int class_id;
    int irrep;
  };

  MiEta(const QuotientContext& q, int i);

  int degree() const { return i_; }
  int size() const { return static_cast<int>(pairs_.size()); }
  const PairRef& pair(int t) const { return pairs_[t]; }
  const EtaClass& cls(int class_id) const { return classes_[class_id]; }
  const EtaClass& class_of_pair(int t) const { return classes_[pairs_[t].class_id]; }
  const DeltaElement& x_of(int t) const { return classes_[pairs_[t].class_id].x; }
  const ClassFunction& sigma_of(int t) const {
    return class_of_pair(t).cent.table.irreducible(pairs_[t].irrep);
  }
  std::string pair_label(int t) const;

  /// Pair index of the class of (u, rho), where rho lives on the small table
  /// of `from` (the centralizer tower of u). Conjugacy is resolved through
  /// Gamma and rho is transported along the conjugator.
  int canonicalize(const DeltaElement& u, const SmallCent& from, const ClassFunction& rho) const;

  /// Centralizer tower for an arbitrary degree-i element.
  SmallCent small_centralizer(const DeltaElement& u) const;

  const QuotientContext& quotient() const { return *q_; }

 private:
  const QuotientContext* q_;
  int i_;
  std::vector<EtaClass> classes_;
  std::vector<PairRef> pairs_;
  std::vector<int> class_id_of_gamma_class_;  // Gamma class index -> class_id or -1
};

struct HatVector {
  CycloVec coeffs;  // over the M^1_eta pair list
};

/// One coefficient of the graded transform: the (y,tau)-coordinate of the
/// image of (x,sigma) with the chosen extension.
Cyclotomic hat_coefficient(const QuotientContext& q, const MiEta& m0, const MiEta& m1,
                           int row_pair, int extension_choice, int col_pair);

/// Image of an M^0 pair in the span of M^1, per the graded transform sum.
/// Errors: NotInM0 (row out of range), BadExtensionIndex.
HatVector hat(const QuotientContext& q, const MiEta& m0, const MiEta& m1, int row_pair,
              int extension_choice);

/// The same vector computed through the finite quotient: apply the map into
/// V^0 of Gamma, the Fourier matrix of Gamma, and the projection back from
/// V^1. Must agree with hat() exactly.
HatVector hat_via_composition(const QuotientContext& q, const MiEta& m0, const MiEta& m1,
                              int row_pair, int extension_choice, const MSet& gamma_mset,
                              const FourierMatrix& gamma_fourier);

/// Full |M^0| x |M^1| matrix of hat vectors at the least extension choice.
CycloMat hat_matrix(const QuotientContext& q, const MiEta& m0, const MiEta& m1,
                    bool parallel = true);
CycloMat hat_matrix_serial(const QuotientContext& q, const MiEta& m0, const MiEta& m1);

struct HatBasisReport {
  bool pass = false;
  int m0_size = 0;
  int m1_size = 0;
  bool square = false;
  bool invertible = false;
  CycloMat matrix;
};
HatBasisReport hat_basis_report(const QuotientContext& q, const MiEta& m0, const MiEta& m1,
                                bool parallel = true);

struct XiIndependenceReport {
  bool pass = false;
  std::string detail;
  std::vector<std::pair<long, long>> ratios;  // as roots of unity (N, k)
};

/// Hat vectors at xi-multiples m1 and m2 over every admissible extension must
/// pairwise differ by a single global root of unity.
XiIndependenceReport xi_independence_check(const ZGradedGroup& d, int pair_index, int mult1,
                                           int mult2);

using SignFunction = std::vector<int>;  // one of {+1, -1} per M^1 pair

/// Hat matrix with column (y,tau) scaled by delta(y,tau).
/// Error: IncompleteSignFunction.
CycloMat almost_character_matrix(const QuotientContext& q, const MiEta& m0, const MiEta& m1,
                                 const SignFunction& delta, bool parallel = true);

struct InnerInvarianceReport {
  bool pass = false;
  std::string detail;
};

/// Conjugation by every degree-0 element must fix every M^i class.
InnerInvarianceReport inner_invariance_check(const QuotientContext& q, const MiEta& mi);

}  // namespace nfourier
