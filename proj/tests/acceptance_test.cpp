// Acceptance suite: every criterion is checked exactly (zero tolerance) and
// reported as one pass/fail line; the process exits 0 iff all pass.
// argv[1] is the path to the CLI binary (used by the determinism criterion).

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "nfourier/json_io.hpp"
#include "nfourier/verify.hpp"

using namespace nfourier;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& what, bool pass, const std::string& detail = "") {
  std::cout << "criterion " << criterion << ": " << (pass ? "PASS" : "FAIL") << " - " << what;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << std::endl;
  if (!pass) ++g_failures;
}

double secs(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string g_cli;

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = g_cli + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {127, ""};
  std::string output;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) output.append(buf, n);
  return {WEXITSTATUS(pclose(pipe)), std::move(output)};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_cli = argv[1];

  // 1. A^2 = I exactly on the full corpus.
  {
    bool ok = true;
    std::string detail;
    auto t0 = Clock::now();
    for (const std::string& name : corpus_names()) {
      MSet m(named_group(name));
      FourierMatrix a = fourier_matrix(m, {.parallel = true, .selfcheck = true});
      if (!a.selfcheck_passed) {
        ok = false;
        detail = "A^2 != I for " + name;
        break;
      }
    }
    report(1, "A^2 = identity on the full corpus", ok,
           detail.empty() ? std::to_string(secs(t0)) + "s" : detail);
  }

  // 2. Graded exchange for every generated grading with c <= 6.
  {
    bool ok = true;
    std::string detail;
    int gradings = 0;
    for (const std::string& name : corpus_names()) {
      GroupPtr g = named_group(name);
      MSet m(g);
      FourierMatrix a = fourier_matrix(m, {.parallel = true, .selfcheck = false});
      for (const Grading& gr : all_gradings(g, 6)) {
        ++gradings;
        GradingContext ctx(m, gr);
        ExchangeReport rep = verify_graded_exchange(ctx, a);
        if (!rep.pass || rep.dim_v0 != rep.dim_v1) {
          ok = false;
          detail = name + " c=" + std::to_string(gr.c) + ": " + rep.detail;
          break;
        }
      }
      if (!ok) break;
    }
    report(2, "graded exchange and inverse isomorphisms over " + std::to_string(gradings) +
                  " gradings",
           ok, detail);
  }

  // 3. Hat-map factorization on the graded corpus.
  {
    bool ok = true;
    std::string detail;
    for (const auto& [name, d] : graded_corpus()) {
      QuotientContext q(d, canonical_xi(d, 1));
      MiEta m0(q, 0), m1(q, 1);
      MSet gm(q.gamma());
      FourierMatrix a = fourier_matrix(gm, {.parallel = true, .selfcheck = false});
      for (int r = 0; r < m0.size() && ok; ++r) {
        int exts = static_cast<int>(m0.class_of_pair(r).extensions[m0.pair(r).irrep].size());
        for (int e = 0; e < exts && ok; ++e)
          if (hat(q, m0, m1, r, e).coeffs != hat_via_composition(q, m0, m1, r, e, gm, a).coeffs) {
            ok = false;
            detail = name + " pair " + std::to_string(r) + " ext " + std::to_string(e);
          }
      }
      if (!ok) break;
    }
    report(3, "hat vectors factor through the finite quotient exactly", ok, detail);
  }

  // 4. Basis theorem: |M^0| = |M^1| and the hat matrix is exactly invertible.
  {
    bool ok = true;
    std::string detail;
    for (const auto& [name, d] : graded_corpus()) {
      QuotientContext q(d, canonical_xi(d, 1));
      MiEta m0(q, 0), m1(q, 1);
      HatBasisReport rep = hat_basis_report(q, m0, m1, true);
      if (!rep.pass) {
        ok = false;
        detail = name + (rep.square ? ": not invertible" : ": |M^0| != |M^1|");
        break;
      }
    }
    report(4, "hat matrices are square and exactly invertible", ok, detail);
  }

  // 5. Root-of-unity independence at xi-multiples {1,2,3}, all extensions.
  {
    bool ok = true;
    std::string detail;
    for (const auto& [name, d] : graded_corpus()) {
      CheckResult c = xi_independence_sweep(name, d, {1, 2, 3});
      if (!c.pass) {
        ok = false;
        detail = name + ": " + c.detail;
        break;
      }
    }
    report(5, "hat vectors at xi-multiples {1,2,3} differ by exact roots of unity", ok, detail);
  }

  // 6. Degeneration: theta = id with all-plus signs is the Fourier matrix.
  {
    bool ok = true;
    std::string detail;
    for (const auto& [name, d] : graded_corpus()) {
      if (d.theta_order != 1) continue;
      QuotientContext q(d, canonical_xi(d, 1));
      MiEta m0(q, 0), m1(q, 1);
      SignFunction plus(m1.size(), 1);
      CycloMat almost = almost_character_matrix(q, m0, m1, plus, true);
      MSet mk(d.kernel);
      FourierMatrix a = fourier_matrix(mk, {.parallel = true, .selfcheck = false});
      bool same = almost.size() == a.entries.size();
      for (size_t i = 0; same && i < almost.size(); ++i) same = almost[i] == a.entries[i];
      if (!same) {
        ok = false;
        detail = name;
        break;
      }
    }
    report(6, "theta = id with trivial signs degenerates to the Fourier matrix", ok, detail);
  }

  // 7. Inner automorphisms fix every class in M^0 and M^1.
  {
    bool ok = true;
    std::string detail;
    for (const auto& [name, d] : graded_corpus()) {
      QuotientContext q(d, canonical_xi(d, 1));
      for (int i = 0; i < 2 && ok; ++i) {
        MiEta mi(q, i);
        InnerInvarianceReport rep = inner_invariance_check(q, mi);
        if (!rep.pass) {
          ok = false;
          detail = name + ": " + rep.detail;
        }
      }
      if (!ok) break;
    }
    report(7, "conjugation by degree-0 elements fixes the graded pair classes", ok, detail);
  }

  // 8. Character-machinery oracles.
  {
    bool ok = true;
    std::string detail;
    for (const std::string& name : corpus_names()) {
      GroupPtr g = named_group(name);
      CharacterTable t(g);
      for (int i = 0; i < t.size() && ok; ++i)
        for (int j = 0; j < t.size() && ok; ++j)
          if (inner_product(t.irreducible(i), t.irreducible(j)) != Cyclotomic(i == j ? 1 : 0)) {
            ok = false;
            detail = "orthogonality failed for " + name;
          }
      for (int cc = 0; cc < g->class_count() && ok; ++cc)
        if (centralizer(g, g->class_rep(cc)).order() * g->class_size(cc) != g->order()) {
          ok = false;
          detail = "centralizer/class identity failed for " + name;
        }
      if (!ok) break;
    }
    if (ok && MSet(named_group("S3")).size() != 8) {
      ok = false;
      detail = "|M(S3)| != 8";
    }
    report(8, "orthogonality, |M(S3)| = 8, centralizer times class size", ok, detail);
  }

  // 9. CLI determinism: byte-identical JSON modulo the timestamp field.
  {
    bool ok = !g_cli.empty();
    std::string detail = ok ? "" : "no CLI path given";
    if (ok) {
      auto dir = std::filesystem::temp_directory_path() / "nfourier_acceptance";
      std::filesystem::create_directories(dir);
      auto z2 = dir / "z2.json";
      std::ofstream(z2) << Json{{"type", "named"}, {"name", "Zn:2"}}.dump();
      auto s3 = dir / "s3.json";
      std::ofstream(s3) << Json{{"type", "named"}, {"name", "S3"}}.dump();
      auto dd = dir / "z3inv.json";
      std::ofstream(dd) << Json{{"kernel", Json{{"type", "named"}, {"name", "Zn:3"}}},
                                {"theta", Json::array({0, 2, 1})}}
                               .dump();
      std::vector<std::string> commands = {
          "fourier --input " + z2.string(),
          "table --input " + s3.string(),
          "mset --input " + s3.string(),
          "pairing --input " + z2.string() + " --row 1 --col 2",
          "graded-msets --input " + dd.string(),
          "hat --input " + dd.string() + " --xi-multiple 2",
          "almost --input " + dd.string(),
          "verify --suite fourier --scope trivial",
      };
      for (const std::string& cmd : commands) {
        RunResult r1 = run_cli(cmd);
        RunResult r2 = run_cli(cmd);
        if (r1.exit_code != r2.exit_code || r1.output.empty()) {
          ok = false;
          detail = "unstable exit for: " + cmd;
          break;
        }
        Json j1 = Json::parse(r1.output);
        Json j2 = Json::parse(r2.output);
        j1.erase("timestamp");
        j2.erase("timestamp");
        if (j1.dump() != j2.dump()) {
          ok = false;
          detail = "output differs for: " + cmd;
          break;
        }
      }
    }
    report(9, "CLI reruns are byte-identical modulo the timestamp", ok, detail);
  }

  if (g_failures == 0) {
    std::cout << "acceptance: all criteria passed" << std::endl;
    return 0;
  }
  std::cout << "acceptance: " << g_failures << " criteria FAILED" << std::endl;
  return 1;
}
