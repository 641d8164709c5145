#include "nfourier/fourier.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "nfourier/error.hpp"

namespace nfourier {

MSet::MSet(GroupPtr g) : group_(std::move(g)) {
  for (int c = 0; c < group_->class_count(); ++c) {
    Element rep = group_->class_rep(c);
    Subgroup cent = centralizer(group_, rep);
    CharacterTable table(cent.group());
    class_offset_.push_back(static_cast<int>(pairs_.size()));
    for (int t = 0; t < table.size(); ++t) pairs_.push_back(MPair{rep, t});
    ctx_.push_back(ClassContext{rep, std::move(cent), std::move(table)});
  }
}

int MSet::index_of(const MPair& p) const {
  int cls = group_->class_of(p.class_rep);
  if (group_->class_rep(cls) != p.class_rep)
    fail("MSetMismatch", "pair does not use the canonical class representative");
  if (p.irrep_index < 0 || p.irrep_index >= ctx_[cls].table.size())
    fail("MSetMismatch", "irreducible index out of range");
  return class_offset_[cls] + p.irrep_index;
}

const ClassContext& MSet::context_of(const MPair& p) const {
  int cls = group_->class_of(p.class_rep);
  if (group_->class_rep(cls) != p.class_rep)
    fail("MSetMismatch", "pair does not use the canonical class representative");
  return ctx_[cls];
}

const ClassFunction& MSet::sigma(const MPair& p) const {
  return context_of(p).table.irreducible(p.irrep_index);
}

std::string MSet::pair_label(int i) const {
  const MPair& p = pairs_[i];
  const ClassContext& c = context_of(p);
  return "(" + group_->label(p.class_rep) + ", irr" + std::to_string(p.irrep_index) + " deg " +
         std::to_string(c.table.irreducible(p.irrep_index).degree()) + ")";
}

Cyclotomic pairing_raw(const GroupPtr& g, Element x, const Subgroup& zx, const ClassFunction& sigma,
                       Element y, const Subgroup& zy, const ClassFunction& tau) {
  const Element xinv = g->inv(x);
  Cyclotomic acc;
  for (int w = 0; w < g->order(); ++w) {
    Element u = g->conj(w, y);  // w y w^-1
    if (g->mul(x, u) != g->mul(u, x)) continue;
    Element t_arg = g->conj(g->inv(w), xinv);  // w^-1 x^-1 w
    // the summation condition puts w^-1 x^-1 w in Z(y) and wyw^-1 in Z(x)
    require_internal(zy.contains(t_arg), "trace argument must centralize y");
    require_internal(zx.contains(u), "trace argument must centralize x");
    acc += tau.at_element(zy.to_sub(t_arg)) * sigma.at_element(zx.to_sub(u));
  }
  acc *= Rational(1, static_cast<long>(zx.order()) * zy.order());
  return acc;
}

Cyclotomic pairing(const MSet& m, const MPair& a, const MPair& b) {
  const ClassContext& ca = m.context_of(a);
  const ClassContext& cb = m.context_of(b);
  return pairing_raw(m.group(), a.class_rep, ca.cent, ca.table.irreducible(a.irrep_index),
                     b.class_rep, cb.cent, cb.table.irreducible(b.irrep_index));
}

ClassFunction transport_character(const GroupPtr& g, const Subgroup& zx, const ClassFunction& sigma,
                                  Element v, const Subgroup& target_cent) {
  const GroupPtr& tg = target_cent.group();
  ClassFunction out{tg, std::vector<Cyclotomic>(tg->class_count())};
  Element vinv = g->inv(v);
  for (int c = 0; c < tg->class_count(); ++c) {
    Element z = target_cent.to_parent(tg->class_rep(c));
    Element pre = g->conj(vinv, z);  // v^-1 z v
    out.values[c] = sigma.at_element(zx.to_sub(pre));
  }
  return out;
}

MPair canonicalize_pair(const MSet& m, Element x, const Subgroup& zx, const ClassFunction& sigma) {
  const GroupPtr& g = m.group();
  int cls = g->class_of(x);
  Element rep = g->class_rep(cls);
  auto v = conjugator(g, x, rep);
  require_internal(v.has_value(), "class representative must be conjugate");
  const ClassContext& ctx = m.class_context(cls);
  ClassFunction moved = transport_character(g, zx, sigma, *v, ctx.cent);
  int idx = ctx.table.index_of(moved);
  require_internal(idx >= 0, "transported character must be irreducible for the centralizer");
  return MPair{rep, idx};
}

CycloMat fourier_entries_serial(const MSet& m) {
  const int n = m.size();
  CycloMat entries(n, CycloVec(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) entries[a][b] = pairing(m, m.pair(a), m.pair(b));
  return entries;
}

CycloMat fourier_entries_parallel(const MSet& m) {
  const int n = m.size();
  CycloMat entries(n, CycloVec(n));
#pragma omp parallel for collapse(2) schedule(dynamic)
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) entries[a][b] = pairing(m, m.pair(a), m.pair(b));
  return entries;
}

FourierMatrix fourier_matrix(const MSet& m, const FourierOptions& opts) {
  FourierMatrix out;
  out.entries = opts.parallel ? fourier_entries_parallel(m) : fourier_entries_serial(m);
  if (opts.selfcheck) {
    out.selfcheck_run = true;
    out.selfcheck_passed = is_identity(mat_mul(out.entries, out.entries, opts.parallel));
  }
  return out;
}

CycloVec FourierMatrix::apply(const CycloVec& v) const {
  const size_t n = entries.size();
  require_internal(v.size() == n, "vector length must match the matrix");
  CycloVec out(n);
  for (size_t a = 0; a < n; ++a) {
    if (v[a].is_zero()) continue;
    for (size_t b = 0; b < n; ++b)
      if (!entries[a][b].is_zero()) out[b] += entries[a][b] * v[a];
  }
  return out;
}

Grading make_grading(const GroupPtr& g, GroupMap zeta) {
  if (zeta.source.get() != g.get()) fail("InvalidGrading", "grading map not defined on this group");
  const int c = zeta.target->order();
  for (int i = 0; i < c; ++i)
    for (int j = 0; j < c; ++j)
      if (zeta.target->mul(i, j) != (i + j) % c)
        fail("InvalidGrading", "grading target must be cyclic with residue indexing");
  if (!zeta.is_surjective()) fail("InvalidGrading", "grading map must be surjective onto Z/c");
  Element witness = -1;
  for (int x = 0; x < g->order(); ++x)
    if (zeta(x) == 1 % c && g->power(x, c) == g->identity()) {
      witness = x;
      break;
    }
  if (witness < 0)
    fail("InvalidGrading", "no element of zeta^-1(1) has order dividing " + std::to_string(c));
  return Grading{std::move(zeta), c, witness};
}

namespace {

// All homomorphisms Q -> Z/c of an abelian group Q, as image vectors.
std::vector<std::vector<Element>> abelian_homs(const GroupPtr& q, int c) {
  std::vector<Element> gens = generating_set(q);
  const int n = q->order();
  if (gens.empty()) return {std::vector<Element>(n, 0)};
  std::vector<std::vector<Element>> out;
  std::vector<int> choice(gens.size(), 0);
  while (true) {
    // attempt to extend the generator assignment to all of Q
    std::vector<int> val(n, -1);
    val[q->identity()] = 0;
    for (size_t i = 0; i < gens.size(); ++i) val[gens[i]] = choice[i];
    bool ok = true, changed = true;
    while (changed && ok) {
      changed = false;
      for (int a = 0; a < n && ok; ++a) {
        if (val[a] < 0) continue;
        for (int b = 0; b < n; ++b) {
          if (val[b] < 0) continue;
          int ab = q->mul(a, b);
          int v = (val[a] + val[b]) % c;
          if (val[ab] < 0) {
            val[ab] = v;
            changed = true;
          } else if (val[ab] != v) {
            ok = false;
            break;
          }
        }
      }
    }
    if (ok) {
      for (int a = 0; a < n; ++a) ok &= val[a] >= 0;
      if (ok) out.emplace_back(val.begin(), val.end());
    }
    // next assignment
    size_t pos = 0;
    while (pos < choice.size()) {
      if (++choice[pos] < c) break;
      choice[pos++] = 0;
    }
    if (pos == choice.size()) break;
  }
  return out;
}

}  // namespace

std::vector<Grading> all_gradings(const GroupPtr& g, int cmax) {
  std::vector<Grading> out;
  auto [q, proj] = quotient_by_normal(g, derived_subgroup(g));
  for (int c = 1; c <= cmax; ++c) {
    GroupPtr zc = cyclic_group(c);
    std::set<std::vector<Element>> seen;
    for (const auto& hom_q : abelian_homs(q, c)) {
      std::vector<Element> images(g->order());
      for (int x = 0; x < g->order(); ++x) images[x] = hom_q[proj(x)];
      if (!seen.insert(images).second) continue;
      GroupMap zeta(g, zc, images);
      if (!zeta.is_surjective()) continue;
      bool witness = false;
      for (int x = 0; x < g->order() && !witness; ++x)
        witness = zeta(x) == 1 % c && g->power(x, c) == g->identity();
      if (!witness) continue;
      out.push_back(make_grading(g, std::move(zeta)));
    }
  }
  return out;
}

GradingContext::GradingContext(const MSet& m, Grading grading)
    : mset_(&m), grading_(std::move(grading)) {
  const GroupPtr& g = m.group();
  const int c = grading_.c;
  const int n = m.size();

  degree_.resize(n);
  for (int i = 0; i < n; ++i) degree_[i] = grading_.zeta(m.pair(i).class_rep);

  // twist permutations: (x, sigma) -> (x, sigma (x) eps_k|Z(x))
  twist_.assign(c, std::vector<int>(n));
  for (int cls = 0; cls < g->class_count(); ++cls) {
    const ClassContext& ctx = m.class_context(cls);
    const GroupPtr& zg = ctx.cent.group();
    for (int k = 0; k < c; ++k) {
      // eps_k restricted to the centralizer
      ClassFunction eps{zg, std::vector<Cyclotomic>(zg->class_count())};
      for (int zc = 0; zc < zg->class_count(); ++zc)
        eps.values[zc] = Cyclotomic::root_of_unity(
            c, static_cast<long>(k) * grading_.zeta(ctx.cent.to_parent(zg->class_rep(zc))));
      for (int t = 0; t < ctx.table.size(); ++t) {
        ClassFunction twisted = tensor_linear(ctx.table.irreducible(t), eps);
        int idx = ctx.table.index_of(twisted);
        require_internal(idx >= 0, "linear twist must permute the irreducibles");
        twist_[k][m.index_of(MPair{ctx.rep, t})] = m.index_of(MPair{ctx.rep, idx});
      }
    }
  }

  // the graded subsets M^i
  for (int i = 0; i < 2; ++i) {
    in_mi_[i].assign(n, 0);
    for (int idx = 0; idx < n; ++idx) {
      const MPair& p = m.pair(idx);
      if (degree_[idx] != i % c) continue;
      bool ok = true;
      if (i == 0) {
        // conditions: Z(x) meets zeta^-1(1), and sigma restricted to the
        // degree-0 part of Z(x) stays irreducible (automatic when i = 1)
        const ClassContext& ctx = m.class_context(g->class_of(p.class_rep));
        bool meets = false;
        std::vector<Element> deg0;
        for (Element z : ctx.cent.members()) {
          if (grading_.zeta(z) == 1 % c) meets = true;
          if (grading_.zeta(z) == 0) deg0.push_back(ctx.cent.to_sub(z));
        }
        ok = meets;
        if (ok) {
          Subgroup zero_part(ctx.cent.group(), deg0);
          ClassFunction res = restrict_to(ctx.table.irreducible(p.irrep_index), zero_part);
          ok = is_irreducible(res);
        }
      }
      if (ok) {
        in_mi_[i][idx] = 1;
        mi_[i].push_back(idx);
      }
    }
    // M^i is closed under the epsilon twists
    for (int idx : mi_[i])
      for (int k = 0; k < c; ++k)
        require_internal(in_mi_[i][twist_[k][idx]], "graded subset must be twist-closed");
  }
}

std::vector<GradedVector> vi_basis(const GradingContext& ctx, int i) {
  const int n = ctx.mset().size();
  const int c = ctx.c();
  std::vector<char> claimed(n, 0);
  std::vector<CycloVec> candidates;
  for (int idx : ctx.mi(i)) {
    if (claimed[idx]) continue;
    for (int k = 0; k < c; ++k) claimed[ctx.twist(k, idx)] = 1;  // whole twist orbit
    CycloVec v(n);
    for (int k = 0; k < c; ++k)
      v[ctx.twist(k, idx)] += Cyclotomic::root_of_unity(c, static_cast<long>(k) * (i - 1));
    bool zero = true;
    for (const auto& x : v) zero &= x.is_zero();
    if (!zero) candidates.push_back(std::move(v));
  }
  std::vector<GradedVector> basis;
  for (int pick : independent_subset(candidates)) {
    GradedVector gv{candidates[pick]};
    require_internal(in_vi(ctx, i, gv), "spanning vector must satisfy the V^i conditions");
    basis.push_back(std::move(gv));
  }
  return basis;
}

bool in_vi(const GradingContext& ctx, int i, const GradedVector& v) {
  const int n = ctx.mset().size();
  for (int idx = 0; idx < n; ++idx)
    if (!ctx.in_mi(i, idx) && !v.coeffs[idx].is_zero()) return false;
  for (int idx = 0; idx < n; ++idx)
    for (int k = 0; k < ctx.c(); ++k) {
      Cyclotomic expected =
          Cyclotomic::root_of_unity(ctx.c(), static_cast<long>(k) * (i - 1)) * v.coeffs[idx];
      if (v.coeffs[ctx.twist(k, idx)] != expected) return false;
    }
  return true;
}

ExchangeReport verify_graded_exchange(const GradingContext& ctx, const FourierMatrix& a) {
  ExchangeReport rep;
  std::vector<GradedVector> basis[2] = {vi_basis(ctx, 0), vi_basis(ctx, 1)};
  rep.dim_v0 = static_cast<int>(basis[0].size());
  rep.dim_v1 = static_cast<int>(basis[1].size());
  if (rep.dim_v0 != rep.dim_v1) {
    rep.pass = false;
    rep.detail = "dim V^0 != dim V^1";
    return rep;
  }
  for (int i = 0; i < 2; ++i) {
    for (size_t t = 0; t < basis[i].size(); ++t) {
      GradedVector image{a.apply(basis[i][t].coeffs)};
      if (!in_vi(ctx, 1 - i, image)) {
        rep.pass = false;
        rep.detail = "A(V^" + std::to_string(i) + " basis vector " + std::to_string(t) +
                     ") is not in V^" + std::to_string(1 - i);
        return rep;
      }
      CycloVec round_trip = a.apply(image.coeffs);
      if (round_trip != basis[i][t].coeffs) {
        rep.pass = false;
        rep.detail = "A^2 is not the identity on V^" + std::to_string(i) + " basis vector " +
                     std::to_string(t);
        return rep;
      }
    }
  }
  rep.pass = true;
  return rep;
}

}  // namespace nfourier
