#include "nfourier/verify.hpp"

#include <memory>
#include <random>

#include "nfourier/error.hpp"
#include "nfourier/fourier.hpp"
#include "nfourier/graded.hpp"

namespace nfourier {

bool scope_matches(const std::vector<std::string>& scope, const std::string& name) {
  if (scope.empty()) return true;
  for (const std::string& s : scope)
    if (!s.empty() && name.find(s) != std::string::npos) return true;
  return false;
}

SuiteReport run_fourier_suite(const std::vector<std::string>& scope, bool parallel) {
  SuiteReport report;
  for (const std::string& name : corpus_names()) {
    if (!scope_matches(scope, name)) continue;
    GroupPtr g = named_group(name);

    // class/centralizer counting identities
    {
      bool ok = true;
      std::string detail;
      int total = 0;
      for (int c = 0; c < g->class_count() && ok; ++c) {
        total += g->class_size(c);
        if (g->order() % g->class_size(c) != 0) {
          ok = false;
          detail = "class size does not divide the order";
        }
        if (centralizer(g, g->class_rep(c)).order() * g->class_size(c) != g->order()) {
          ok = false;
          detail = "centralizer times class size is not the order";
        }
      }
      if (total != g->order()) {
        ok = false;
        detail = "class sizes do not sum to the order";
      }
      report.add("counting identities [" + name + "]", ok, detail);
    }

    // exact character tables (construction already verifies orthogonality;
    // re-check externally and pin the degree sum)
    MSet m(g);
    {
      bool ok = true;
      std::string detail;
      long sq = 0;
      CharacterTable t(g);
      for (int i = 0; i < t.size() && ok; ++i) {
        sq += t.irreducible(i).degree() * t.irreducible(i).degree();
        for (int j = 0; j < t.size() && ok; ++j)
          if (inner_product(t.irreducible(i), t.irreducible(j)) != Cyclotomic(i == j ? 1 : 0)) {
            ok = false;
            detail = "row orthogonality failed";
          }
      }
      if (sq != g->order()) {
        ok = false;
        detail = "degree squares do not sum to the order";
      }
      if (name == "S3" && m.size() != 8) {
        ok = false;
        detail = "|M(S3)| != 8";
      }
      report.add("character tables exact [" + name + "]", ok, detail);
    }

    // the involution
    FourierMatrix a = fourier_matrix(m, {.parallel = parallel, .selfcheck = true});
    report.add("A^2 = I [" + name + "]", a.selfcheck_run && a.selfcheck_passed);

    // representative independence of the pairing, spot-checked
    {
      std::mt19937_64 rng(1234577);
      std::uniform_int_distribution<int> pick_pair(0, m.size() - 1);
      std::uniform_int_distribution<int> pick_v(0, g->order() - 1);
      bool ok = true;
      for (int trial = 0; trial < 6 && ok; ++trial) {
        const MPair pa = m.pair(pick_pair(rng));
        const MPair pb = m.pair(pick_pair(rng));
        Element v = pick_v(rng);
        Element xc = g->conj(v, pa.class_rep);
        Subgroup zxc = centralizer(g, xc);
        ClassFunction moved = transport_character(g, m.context_of(pa).cent, m.sigma(pa), v, zxc);
        const ClassContext& cb = m.context_of(pb);
        ok = pairing(m, pa, pb) == pairing_raw(g, xc, zxc, moved, pb.class_rep, cb.cent,
                                               cb.table.irreducible(pb.irrep_index));
      }
      report.add("pairing representative independence [" + name + "]", ok);
    }

    // graded exchange across every generated grading with c <= 6
    {
      bool ok = true;
      std::string detail;
      int count = 0;
      for (const Grading& gr : all_gradings(g, 6)) {
        ++count;
        GradingContext ctx(m, gr);
        ExchangeReport rep = verify_graded_exchange(ctx, a);
        if (!rep.pass || rep.dim_v0 != rep.dim_v1) {
          ok = false;
          detail = "c=" + std::to_string(gr.c) + ": " + rep.detail;
          break;
        }
      }
      report.add("graded exchange, " + std::to_string(count) + " gradings [" + name + "]", ok,
                 detail);
    }
  }
  return report;
}

CheckResult xi_independence_sweep(const std::string& name, const ZGradedGroup& d,
                                  const std::vector<int>& multiples) {
  CheckResult out{"xi independence [" + name + "]", true, ""};
  struct Pack {
    std::unique_ptr<QuotientContext> q;
    std::unique_ptr<MiEta> m0;
    std::unique_ptr<MiEta> m1;
  };
  std::vector<Pack> packs;
  for (int mult : multiples) {
    Pack p;
    p.q = std::make_unique<QuotientContext>(d, canonical_xi(d, mult));
    p.m0 = std::make_unique<MiEta>(*p.q, 0);
    p.m1 = std::make_unique<MiEta>(*p.q, 1);
    packs.push_back(std::move(p));
  }
  const int pair_count = packs.front().m0->size();
  for (const Pack& p : packs)
    if (p.m0->size() != pair_count) {
      out.pass = false;
      out.detail = "M^0 depends on the xi multiple";
      return out;
    }
  for (int r = 0; r < pair_count && out.pass; ++r) {
    std::vector<CycloVec> vectors;
    for (const Pack& p : packs) {
      int exts =
          static_cast<int>(p.m0->class_of_pair(r).extensions[p.m0->pair(r).irrep].size());
      for (int e = 0; e < exts; ++e) vectors.push_back(hat(*p.q, *p.m0, *p.m1, r, e).coeffs);
    }
    for (size_t a = 0; a < vectors.size() && out.pass; ++a)
      for (size_t b = a + 1; b < vectors.size() && out.pass; ++b) {
        size_t first = 0;
        while (first < vectors[a].size() && vectors[a][first].is_zero() &&
               vectors[b][first].is_zero())
          ++first;
        if (first == vectors[a].size()) continue;  // both zero
        if (vectors[a][first].is_zero() != vectors[b][first].is_zero()) {
          out.pass = false;
          out.detail = "support mismatch at pair " + std::to_string(r);
          break;
        }
        Cyclotomic ratio = vectors[b][first] / vectors[a][first];
        if (!ratio.as_root_of_unity()) {
          out.pass = false;
          out.detail = "ratio not a root of unity at pair " + std::to_string(r);
          break;
        }
        for (size_t i = 0; i < vectors[a].size(); ++i)
          if (vectors[b][i] != ratio * vectors[a][i]) {
            out.pass = false;
            out.detail = "not exactly proportional at pair " + std::to_string(r);
            break;
          }
      }
  }
  return out;
}

SuiteReport run_graded_suite(const std::vector<std::string>& scope, bool parallel) {
  SuiteReport report;
  for (const auto& [name, d] : graded_corpus()) {
    if (!scope_matches(scope, name)) continue;
    QuotientContext q(d, canonical_xi(d, 1));
    MiEta m0(q, 0), m1(q, 1);

    // |M^0| = |M^1| and the hat matrix is exactly invertible
    HatBasisReport basis = hat_basis_report(q, m0, m1, parallel);
    report.add("hat basis square and invertible [" + name + "]", basis.pass,
               basis.square ? "" : "|M^0| != |M^1|");

    // hat equals the composition through the finite quotient, for every pair
    // and every extension choice
    {
      MSet gm(q.gamma());
      FourierMatrix a = fourier_matrix(gm, {.parallel = parallel, .selfcheck = false});
      bool ok = true;
      std::string detail;
      for (int r = 0; r < m0.size() && ok; ++r) {
        int exts = static_cast<int>(m0.class_of_pair(r).extensions[m0.pair(r).irrep].size());
        for (int e = 0; e < exts && ok; ++e) {
          if (hat(q, m0, m1, r, e).coeffs != hat_via_composition(q, m0, m1, r, e, gm, a).coeffs) {
            ok = false;
            detail = "pair " + std::to_string(r) + " extension " + std::to_string(e);
          }
        }
      }
      report.add("hat factorization [" + name + "]", ok, detail);
    }

    // xi independence across multiples 1, 2, 3
    {
      CheckResult c = xi_independence_sweep(name, d, {1, 2, 3});
      report.add(c.name, c.pass, c.detail);
    }

    // degeneration: theta = id makes the sign-free matrix the Fourier matrix
    if (d.theta_order == 1) {
      MSet mk(d.kernel);
      FourierMatrix a = fourier_matrix(mk, {.parallel = parallel, .selfcheck = false});
      SignFunction plus(m1.size(), 1);
      CycloMat almost = almost_character_matrix(q, m0, m1, plus, parallel);
      bool ok = almost.size() == a.entries.size();
      for (size_t i = 0; ok && i < almost.size(); ++i) ok = almost[i] == a.entries[i];
      report.add("theta=id degeneration [" + name + "]", ok);
    }

    // inner automorphisms act trivially on M^0 and M^1
    {
      InnerInvarianceReport r0 = inner_invariance_check(q, m0);
      InnerInvarianceReport r1 = inner_invariance_check(q, m1);
      report.add("inner invariance [" + name + "]", r0.pass && r1.pass,
                 r0.pass ? r1.detail : r0.detail);
    }
  }
  return report;
}

}  // namespace nfourier
