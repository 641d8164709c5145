#include "nfourier/graded.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "nfourier/error.hpp"

namespace nfourier {

ZGradedGroup::ZGradedGroup(GroupPtr k, GroupMap theta_map)
    : kernel(std::move(k)), theta(std::move(theta_map)) {
  if (theta.source.get() != kernel.get() || theta.target.get() != kernel.get())
    fail("NotBijective", "theta must be an automorphism of the kernel");
  theta_order = automorphism_order(theta);
  theta_pow.resize(theta_order);
  std::vector<Element> cur(kernel->order());
  for (int i = 0; i < kernel->order(); ++i) cur[i] = i;
  for (int j = 0; j < theta_order; ++j) {
    theta_pow[j] = cur;
    for (int i = 0; i < kernel->order(); ++i) cur[i] = theta(cur[i]);
  }
}

Element ZGradedGroup::apply_theta(long e, Element x) const {
  long j = e % theta_order;
  if (j < 0) j += theta_order;
  return theta_pow[j][x];
}

DeltaElement delta_mul(const ZGradedGroup& d, const DeltaElement& a, const DeltaElement& b) {
  return DeltaElement{d.kernel->mul(a.k, d.apply_theta(a.e, b.k)), a.e + b.e};
}

DeltaElement delta_inv(const ZGradedGroup& d, const DeltaElement& a) {
  return DeltaElement{d.apply_theta(-a.e, d.kernel->inv(a.k)), -a.e};
}

DeltaElement delta_conj(const ZGradedGroup& d, const DeltaElement& a, const DeltaElement& b) {
  return delta_mul(d, delta_mul(d, a, b), delta_inv(d, a));
}

CentralWitness canonical_xi(const ZGradedGroup& d, int multiple) {
  require_internal(multiple >= 1, "xi multiple must be positive");
  CentralWitness xi{multiple, multiple * d.theta_order};
  DeltaElement xi_elt{d.kernel->identity(), xi.c};
  for (int k = 0; k < d.kernel->order(); ++k) {
    DeltaElement a{k, 0};
    require_internal(delta_mul(d, xi_elt, a) == delta_mul(d, a, xi_elt),
                     "xi must commute with the kernel");
  }
  DeltaElement y{d.kernel->identity(), 1};
  require_internal(delta_mul(d, xi_elt, y) == delta_mul(d, y, xi_elt),
                   "xi must commute with degree-1 elements");
  // xi = y^c for y = (identity, 1)
  DeltaElement acc{d.kernel->identity(), 0};
  for (int j = 0; j < xi.c; ++j) acc = delta_mul(d, acc, y);
  require_internal(acc == xi_elt, "xi must be the c-th power of a degree-1 element");
  return xi;
}

QuotientContext::QuotientContext(const ZGradedGroup& d, CentralWitness xi)
    : delta_(&d), xi_(xi) {
  const int n = d.kernel->order();
  const int c = xi.c;
  const int order = n * c;
  std::vector<std::vector<int>> table(order, std::vector<int>(order));
  std::vector<std::string> labels(order);
  for (int e1 = 0; e1 < c; ++e1)
    for (int k1 = 0; k1 < n; ++k1) {
      labels[e1 * n + k1] = d.kernel->label(k1) + "|" + std::to_string(e1);
      for (int e2 = 0; e2 < c; ++e2)
        for (int k2 = 0; k2 < n; ++k2)
          table[e1 * n + k1][e2 * n + k2] =
              ((e1 + e2) % c) * n + d.kernel->mul(k1, d.apply_theta(e1, k2));
    }
  gamma_ = group_from_table(table, std::move(labels));
  std::vector<Element> images(order);
  for (int e = 0; e < c; ++e)
    for (int k = 0; k < n; ++k) images[e * n + k] = e;
  zeta_ = make_grading(gamma_, GroupMap(gamma_, cyclic_group(c), std::move(images)));
}

Element QuotientContext::to_gamma(const DeltaElement& x) const {
  long e = x.e % c();
  if (e < 0) e += c();
  return static_cast<Element>(e) * delta_->kernel->order() + x.k;
}

DeltaElement QuotientContext::lift(Element g) const {
  const int n = delta_->kernel->order();
  return DeltaElement{g % n, g / n};
}

Subgroup centralizer_mod_xi(const QuotientContext& q, const DeltaElement& x) {
  if (x.e != 0 && x.e != 1)
    fail("DegreeOutOfRange", "centralizer_mod_xi expects a degree-0 or degree-1 element");
  const ZGradedGroup& d = q.delta();
  std::vector<Element> members;
  for (int g = 0; g < q.gamma()->order(); ++g) {
    DeltaElement lifted = q.lift(g);
    if (delta_mul(d, lifted, x) == delta_mul(d, x, lifted)) members.push_back(g);
  }
  Subgroup result(q.gamma(), members);
  // with the canonical xi this is exactly the Gamma-centralizer of the image
  Subgroup direct = centralizer(q.gamma(), q.to_gamma(x));
  require_internal(result.members() == direct.members(),
                   "lifted centralizer must agree with the Gamma centralizer");
  return result;
}

namespace {

SmallCent build_small_cent(const QuotientContext& q, const DeltaElement& x) {
  Subgroup big = centralizer_mod_xi(q, x);
  std::vector<int> deg0;
  for (Element g : big.members())
    if (q.zeta().zeta(g) == 0) deg0.push_back(big.to_sub(g));
  Subgroup small(big.group(), deg0);
  CharacterTable table(small.group());
  return SmallCent{std::move(big), std::move(small), std::move(table)};
}

// rho composed with conjugation by v^-1 (a Gamma element), landing on the
// small table of `to`: the value at z is rho(v^-1 z v).
ClassFunction transport_small(const QuotientContext& q, const SmallCent& from,
                              const ClassFunction& rho, Element v, const SmallCent& to) {
  const GroupPtr& gamma = q.gamma();
  const GroupPtr& tg = to.table.group();
  ClassFunction out{tg, std::vector<Cyclotomic>(tg->class_count())};
  Element vinv = gamma->inv(v);
  for (int c = 0; c < tg->class_count(); ++c) {
    Element z = to.big.to_parent(to.small.to_parent(tg->class_rep(c)));
    Element pre = gamma->conj(vinv, z);
    out.values[c] = rho.at_element(from.small_index_of(pre));
  }
  return out;
}

}  // namespace

MiEta::MiEta(const QuotientContext& q, int i) : q_(&q), i_(i) {
  require_internal(i == 0 || i == 1, "M^i_eta is defined for i in {0,1}");
  const ZGradedGroup& d = q.delta();
  const GroupPtr& K = d.kernel;
  const GroupPtr& gamma = q.gamma();
  const int n = K->order();
  const int c = q.c();

  class_id_of_gamma_class_.assign(gamma->class_count(), -1);

  // Delta-conjugacy classes of degree-i elements; the action factors through
  // Gamma since conjugation by the central xi is trivial.
  std::vector<char> seen(n, 0);
  for (int k0 = 0; k0 < n; ++k0) {
    if (seen[k0]) continue;
    std::set<Element> orbit;
    orbit.insert(k0);
    bool grew = true;
    while (grew) {
      grew = false;
      for (Element k : std::vector<Element>(orbit.begin(), orbit.end()))
        for (int m = 0; m < n; ++m)
          for (int f = 0; f < d.theta_order; ++f) {
            DeltaElement img = delta_conj(d, DeltaElement{m, f}, DeltaElement{k, i});
            require_internal(img.e == i, "conjugation preserves the degree");
            if (orbit.insert(img.k).second) grew = true;
          }
    }
    for (Element k : orbit) seen[k] = 1;

    DeltaElement x{k0, i};
    SmallCent cent = build_small_cent(q, x);

    Element gx = q.to_gamma(x);
    int gamma_class = gamma->class_of(gx);
    require_internal(static_cast<int>(orbit.size()) == gamma->class_size(gamma_class),
                     "Delta-orbit must match the Gamma conjugacy class");

    const int nirr = cent.table.size();
    // orbits of the irreducibles under conjugation by Z_Gamma(x)
    std::vector<int> orbit_rep(nirr);
    for (int t = 0; t < nirr; ++t) orbit_rep[t] = t;
    for (int t = 0; t < nirr; ++t) {
      for (Element v : cent.big.members()) {
        ClassFunction moved = transport_small(q, cent, cent.table.irreducible(t), v, cent);
        int idx = cent.table.index_of(moved);
        require_internal(idx >= 0, "conjugation must permute the irreducibles");
        int a = std::min(orbit_rep[t], orbit_rep[idx]);
        int old_t = orbit_rep[t], old_i = orbit_rep[idx];
        for (int s = 0; s < nirr; ++s)
          if (orbit_rep[s] == old_t || orbit_rep[s] == old_i) orbit_rep[s] = a;
      }
    }

    // Eligibility for i = 0: the centralizer must meet degree 1, and sigma
    // must extend to Z_Delta(x). The extension condition is decided in the
    // finite quotient: an extension with xi acting trivially is the same
    // thing as a character of Z_Gamma(x) restricting to sigma, and an
    // extension with arbitrary xi-action exists iff one with trivial
    // xi-action does (twist by a linear character of the cyclic quotient to
    // move the xi-scalar). For i = 1 the conditions hold automatically.
    std::vector<char> eligible(nirr, 1);
    std::vector<std::vector<ClassFunction>> extensions(nirr);
    if (i == 0) {
      bool meets = false;
      for (Element g : cent.big.members()) meets |= q.zeta().zeta(g) == 1 % c;
      if (!meets) {
        eligible.assign(nirr, 0);
      } else {
        CharacterTable big_table(cent.big.group());
        for (int t = 0; t < nirr; ++t) {
          for (const ClassFunction& chi : big_table.irreducibles())
            if (restrict_to(chi, cent.small).values == cent.table.irreducible(t).values)
              extensions[t].push_back(chi);
          eligible[t] = !extensions[t].empty();
        }
      }
      for (int t = 0; t < nirr; ++t)
        require_internal(eligible[t] == eligible[orbit_rep[t]],
                         "eligibility must be constant on conjugation orbits");
    }

    std::vector<int> pair_index(nirr, -1);
    int class_id = static_cast<int>(classes_.size());
    class_id_of_gamma_class_[gamma_class] = class_id;
    for (int t = 0; t < nirr; ++t) {
      if (orbit_rep[t] != t || !eligible[t]) continue;
      pair_index[t] = static_cast<int>(pairs_.size());
      pairs_.push_back(PairRef{class_id, t});
    }
    classes_.push_back(EtaClass{x, std::move(cent), std::move(orbit_rep), std::move(eligible),
                                std::move(extensions), std::move(pair_index)});
  }
}

std::string MiEta::pair_label(int t) const {
  const EtaClass& cls = class_of_pair(t);
  return "(" + q_->delta().kernel->label(cls.x.k) + "|" + std::to_string(cls.x.e) + ", irr" +
         std::to_string(pairs_[t].irrep) + " deg " +
         std::to_string(cls.cent.table.irreducible(pairs_[t].irrep).degree()) + ")";
}

SmallCent MiEta::small_centralizer(const DeltaElement& u) const {
  require_internal(u.e == i_, "element degree must match the graded set");
  return build_small_cent(*q_, u);
}

int MiEta::canonicalize(const DeltaElement& u, const SmallCent& from,
                        const ClassFunction& rho) const {
  const GroupPtr& gamma = q_->gamma();
  Element gu = q_->to_gamma(u);
  int cid = class_id_of_gamma_class_[gamma->class_of(gu)];
  require_internal(cid >= 0, "element does not belong to any enumerated class");
  const EtaClass& cls = classes_[cid];
  auto v = conjugator(gamma, gu, q_->to_gamma(cls.x));
  require_internal(v.has_value(), "conjugator to the class representative must exist");
  ClassFunction moved = transport_small(*q_, from, rho, *v, cls.cent);
  int t = cls.cent.table.index_of(moved);
  require_internal(t >= 0, "transported character must be in the small table");
  int idx = cls.pair_index[cls.orbit_rep[t]];
  require_internal(idx >= 0, "canonical form of the pair must be enumerated");
  return idx;
}

Cyclotomic hat_coefficient(const QuotientContext& q, const MiEta& m0, const MiEta& m1,
                           int row_pair, int extension_choice, int col_pair) {
  const ZGradedGroup& d = q.delta();
  const MiEta::EtaClass& cx = m0.class_of_pair(row_pair);
  const MiEta::EtaClass& cy = m1.class_of_pair(col_pair);
  const ClassFunction& sigma_ext = cx.extensions[m0.pair(row_pair).irrep][extension_choice];
  const ClassFunction& tau = cy.cent.table.irreducible(m1.pair(col_pair).irrep);
  const DeltaElement& x = cx.x;
  const DeltaElement& y = cy.x;
  const DeltaElement x_inv = delta_inv(d, x);

  // tau-tilde on Z_Delta(y) is tau on the degree-0 part with y acting as 1;
  // y is central in its own centralizer, so Z_Delta(y) = small x <y> and the
  // quotient order identity below certifies the splitting.
  require_internal(cy.cent.big.order() == q.c() * cy.cent.small.order(),
                   "Z(y) mod xi must split as small x Z/c");

  Cyclotomic acc;
  for (int w = 0; w < q.gamma()->order(); ++w) {
    DeltaElement w_lift = q.lift(w);
    DeltaElement u = delta_conj(d, w_lift, y);  // w y w^-1, degree 1
    if (delta_mul(d, x, u) != delta_mul(d, u, x)) continue;
    DeltaElement a = delta_conj(d, delta_inv(d, w_lift), x_inv);  // w^-1 x^-1 w
    require_internal(a.e == 0, "tau argument must have degree 0");
    Element ga = a.k;  // degree-0 elements sit at Gamma indices [0, |K|)
    require_internal(cy.cent.small_contains(ga), "tau argument must centralize y");
    Element gu = q.to_gamma(u);
    require_internal(cx.cent.big.contains(gu), "sigma argument must centralize x");
    acc += tau.at_element(cy.cent.small_index_of(ga)) *
           sigma_ext.at_element(cx.cent.big.to_sub(gu));
  }
  acc *= Rational(q.c());
  acc *= Rational(1, static_cast<long>(cx.cent.big.order()) * cy.cent.big.order());
  return acc;
}

HatVector hat(const QuotientContext& q, const MiEta& m0, const MiEta& m1, int row_pair,
              int extension_choice) {
  if (row_pair < 0 || row_pair >= m0.size())
    fail("NotInM0", "pair index " + std::to_string(row_pair) + " is not in M^0");
  const auto& exts = m0.class_of_pair(row_pair).extensions[m0.pair(row_pair).irrep];
  if (extension_choice < 0 || extension_choice >= static_cast<int>(exts.size()))
    fail("BadExtensionIndex", "extension choice " + std::to_string(extension_choice) +
                                  " out of range (have " + std::to_string(exts.size()) + ")");
  HatVector out{CycloVec(m1.size())};
  for (int t = 0; t < m1.size(); ++t)
    out.coeffs[t] = hat_coefficient(q, m0, m1, row_pair, extension_choice, t);
  return out;
}

CycloMat hat_matrix_serial(const QuotientContext& q, const MiEta& m0, const MiEta& m1) {
  CycloMat out(m0.size(), CycloVec(m1.size()));
  for (int r = 0; r < m0.size(); ++r)
    for (int t = 0; t < m1.size(); ++t) out[r][t] = hat_coefficient(q, m0, m1, r, 0, t);
  return out;
}

CycloMat hat_matrix(const QuotientContext& q, const MiEta& m0, const MiEta& m1, bool parallel) {
  if (!parallel) return hat_matrix_serial(q, m0, m1);
  CycloMat out(m0.size(), CycloVec(m1.size()));
  const int rows = m0.size(), cols = m1.size();
#pragma omp parallel for collapse(2) schedule(dynamic)
  for (int r = 0; r < rows; ++r)
    for (int t = 0; t < cols; ++t) out[r][t] = hat_coefficient(q, m0, m1, r, 0, t);
  return out;
}

HatVector hat_via_composition(const QuotientContext& q, const MiEta& m0, const MiEta& m1,
                              int row_pair, int extension_choice, const MSet& gamma_mset,
                              const FourierMatrix& gamma_fourier) {
  if (row_pair < 0 || row_pair >= m0.size())
    fail("NotInM0", "pair index " + std::to_string(row_pair) + " is not in M^0");
  const MiEta::EtaClass& cx = m0.class_of_pair(row_pair);
  const auto& exts = cx.extensions[m0.pair(row_pair).irrep];
  if (extension_choice < 0 || extension_choice >= static_cast<int>(exts.size()))
    fail("BadExtensionIndex", "extension choice out of range");
  const ClassFunction& sigma_ext = exts[extension_choice];
  const int c = q.c();

  // f: (x, sigma) -> sum_alpha alpha^-1 (x_xi, sigma-tilde (x) eps_alpha)
  CycloVec v(gamma_mset.size());
  Element gx = q.to_gamma(cx.x);
  const GroupPtr& bg = cx.cent.big.group();
  for (int k = 0; k < c; ++k) {
    ClassFunction twisted{bg, std::vector<Cyclotomic>(bg->class_count())};
    for (int cl = 0; cl < bg->class_count(); ++cl) {
      long deg = q.zeta().zeta(cx.cent.big.to_parent(bg->class_rep(cl)));
      twisted.values[cl] =
          sigma_ext.values[cl] * Cyclotomic::root_of_unity(c, static_cast<long>(k) * deg);
    }
    MPair p = canonicalize_pair(gamma_mset, gx, cx.cent.big, twisted);
    v[gamma_mset.index_of(p)] += Cyclotomic::root_of_unity(c, -k);
  }

  // the Fourier transform of Gamma, with graded-membership checks
  GradingContext gctx(gamma_mset, q.zeta());
  require_internal(in_vi(gctx, 0, GradedVector{v}), "image of the forward map must lie in V^0");
  CycloVec w = gamma_fourier.apply(v);
  require_internal(in_vi(gctx, 1, GradedVector{w}), "transformed vector must lie in V^1");

  // f': each epsilon-twist orbit of degree-1 pairs (y,tau) carries one
  // coefficient (the V^1 covariance makes them equal across the orbit) and
  // maps to (y-lift, tau restricted to the degree-0 part of Z(y)). The
  // coefficient is read at the lift on which the central y acts as 1; when
  // the scalar coset of the orbit misses 1 (the y-trivial extension does not
  // descend to the quotient) any orbit member carries the same value, so the
  // least index is used.
  HatVector out{CycloVec(m1.size())};
  std::vector<char> done(gamma_mset.size(), 0);
  for (int j = 0; j < gamma_mset.size(); ++j) {
    const MPair& p = gamma_mset.pair(j);
    if (done[j] || q.zeta().zeta(p.class_rep) != 1 % c) continue;
    int pick = j;
    for (int k = 0; k < c; ++k) {
      int member = gctx.twist(k, j);
      done[member] = 1;
      const MPair& mp = gamma_mset.pair(member);
      const ClassContext& mctx = gamma_mset.context_of(mp);
      const ClassFunction& mtau = mctx.table.irreducible(mp.irrep_index);
      if (mtau.at_element(mctx.cent.to_sub(mp.class_rep)) == Cyclotomic(mtau.degree()))
        pick = member;  // the Schur scalar of y is 1 here
      require_internal(w[member] == w[j], "V^1 coefficients must agree on a twist orbit");
    }
    if (w[pick].is_zero()) continue;
    const ClassContext& ctx = gamma_mset.context_of(p);
    const ClassFunction& tau_gamma = ctx.table.irreducible(p.irrep_index);
    DeltaElement y_tilde{q.lift(p.class_rep).k, 1};
    SmallCent cent_y = m1.small_centralizer(y_tilde);
    const GroupPtr& sg = cent_y.table.group();
    ClassFunction restriction{sg, std::vector<Cyclotomic>(sg->class_count())};
    for (int cl = 0; cl < sg->class_count(); ++cl) {
      Element z = cent_y.big.to_parent(cent_y.small.to_parent(sg->class_rep(cl)));
      restriction.values[cl] = tau_gamma.at_element(ctx.cent.to_sub(z));
    }
    int target = m1.canonicalize(y_tilde, cent_y, restriction);
    out.coeffs[target] += w[pick];
  }
  return out;
}

HatBasisReport hat_basis_report(const QuotientContext& q, const MiEta& m0, const MiEta& m1,
                                bool parallel) {
  HatBasisReport rep;
  rep.m0_size = m0.size();
  rep.m1_size = m1.size();
  rep.square = rep.m0_size == rep.m1_size;
  rep.matrix = hat_matrix(q, m0, m1, parallel);
  rep.invertible = rep.square && rank(rep.matrix) == rep.m1_size;
  rep.pass = rep.square && rep.invertible;
  return rep;
}

XiIndependenceReport xi_independence_check(const ZGradedGroup& d, int pair_index, int mult1,
                                           int mult2) {
  XiIndependenceReport rep;
  QuotientContext q1(d, canonical_xi(d, mult1));
  QuotientContext q2(d, canonical_xi(d, mult2));
  MiEta m0_1(q1, 0), m1_1(q1, 1), m0_2(q2, 0), m1_2(q2, 1);

  // the graded sets do not depend on the choice of xi
  auto signature = [](const MiEta& m) {
    std::vector<std::pair<DeltaElement, int>> sig;
    for (int t = 0; t < m.size(); ++t) sig.emplace_back(m.x_of(t), m.pair(t).irrep);
    return sig;
  };
  require_internal(signature(m0_1) == signature(m0_2) && signature(m1_1) == signature(m1_2),
                   "M^i_eta must be independent of the xi multiple");

  if (pair_index < 0 || pair_index >= m0_1.size()) fail("NotInM0", "pair index out of range");

  std::vector<HatVector> vectors;
  for (int which = 0; which < 2; ++which) {
    const QuotientContext& q = which == 0 ? q1 : q2;
    const MiEta& m0 = which == 0 ? m0_1 : m0_2;
    const MiEta& m1 = which == 0 ? m1_1 : m1_2;
    int ext_count = static_cast<int>(
        m0.class_of_pair(pair_index).extensions[m0.pair(pair_index).irrep].size());
    for (int e = 0; e < ext_count; ++e) vectors.push_back(hat(q, m0, m1, pair_index, e));
  }

  rep.pass = true;
  for (size_t a = 0; a < vectors.size() && rep.pass; ++a)
    for (size_t b = a + 1; b < vectors.size() && rep.pass; ++b) {
      const CycloVec& va = vectors[a].coeffs;
      const CycloVec& vb = vectors[b].coeffs;
      size_t first = 0;
      while (first < va.size() && va[first].is_zero() && vb[first].is_zero()) ++first;
      if (first == va.size()) {
        rep.ratios.emplace_back(1, 0);  // both vectors vanish
        continue;
      }
      if (va[first].is_zero() != vb[first].is_zero()) {
        rep.pass = false;
        rep.detail = "support mismatch between hat vectors";
        break;
      }
      Cyclotomic ratio = vb[first] / va[first];
      auto root = ratio.as_root_of_unity();
      if (!root) {
        rep.pass = false;
        rep.detail = "ratio of leading entries is not a root of unity";
        break;
      }
      for (size_t i = 0; i < va.size(); ++i)
        if (vb[i] != ratio * va[i]) {
          rep.pass = false;
          rep.detail = "vectors are not exactly proportional";
          break;
        }
      if (rep.pass) rep.ratios.push_back(*root);
    }
  return rep;
}

CycloMat almost_character_matrix(const QuotientContext& q, const MiEta& m0, const MiEta& m1,
                                 const SignFunction& delta, bool parallel) {
  if (static_cast<int>(delta.size()) != m1.size())
    fail("IncompleteSignFunction", "need exactly " + std::to_string(m1.size()) + " signs, got " +
                                       std::to_string(delta.size()));
  for (int s : delta)
    if (s != 1 && s != -1) fail("IncompleteSignFunction", "signs must be +1 or -1");
  CycloMat m = hat_matrix(q, m0, m1, parallel);
  for (auto& row : m)
    for (int t = 0; t < m1.size(); ++t)
      if (delta[t] < 0) row[t] = -row[t];
  return m;
}

InnerInvarianceReport inner_invariance_check(const QuotientContext& q, const MiEta& mi) {
  InnerInvarianceReport rep;
  const ZGradedGroup& d = q.delta();
  const GroupPtr& gamma = q.gamma();
  for (int t = 0; t < mi.size(); ++t) {
    const MiEta::EtaClass& cls = mi.class_of_pair(t);
    const ClassFunction& sigma = cls.cent.table.irreducible(mi.pair(t).irrep);
    for (int g = 0; g < d.kernel->order(); ++g) {
      DeltaElement u = delta_conj(d, DeltaElement{g, 0}, cls.x);
      SmallCent cent_u = mi.small_centralizer(u);
      // conjugated character on small(u): value at z is sigma(g^-1 z g)
      const GroupPtr& sg = cent_u.table.group();
      ClassFunction moved{sg, std::vector<Cyclotomic>(sg->class_count())};
      Element g_gamma = g;  // Gamma index of the degree-0 element (g, 0)
      for (int cl = 0; cl < sg->class_count(); ++cl) {
        Element z = cent_u.big.to_parent(cent_u.small.to_parent(sg->class_rep(cl)));
        Element pre = gamma->conj(gamma->inv(g_gamma), z);
        moved.values[cl] = sigma.at_element(cls.cent.small_index_of(pre));
      }
      int back = mi.canonicalize(u, cent_u, moved);
      if (back != t) {
        rep.pass = false;
        rep.detail = "conjugation by " + d.kernel->label(g) + " moves pair " + mi.pair_label(t) +
                     " to " + mi.pair_label(back);
        return rep;
      }
    }
  }
  rep.pass = true;
  return rep;
}

}  // namespace nfourier
