#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "nfourier/error.hpp"
#include "nfourier/json_io.hpp"
#include "nfourier/verify.hpp"

using namespace nfourier;

namespace {

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("MalformedTable", "cannot open input file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    fail("MalformedTable", std::string("input is not valid JSON: ") + e.what());
  }
  return j;
}

void emit(const Json& out, const std::string& json_out) {
  std::string text = out.dump(2) + "\n";
  if (!json_out.empty()) {
    std::ofstream f(json_out);
    if (!f) fail("MalformedTable", "cannot write to " + json_out);
    f << text;
  }
  std::cout << text;
}

Json group_inputs(const Json& spec, const GroupPtr& g) {
  return Json{{"group", Json{{"digest", digest_hex(table_digest(g))}, {"spec", spec}}}};
}

Json graded_inputs(const Json& spec, const ZGradedGroup& d, int multiple) {
  return Json{{"delta", Json{{"kernel_digest", digest_hex(table_digest(d.kernel))},
                             {"theta_order", d.theta_order},
                             {"spec", spec}}},
              {"xi_multiple", multiple}};
}

std::vector<std::string> parse_scope(const std::string& s) {
  std::vector<std::string> out;
  size_t pos = 0;
  while (pos <= s.size() && !s.empty()) {
    size_t comma = s.find(',', pos);
    if (comma == std::string::npos) {
      out.push_back(s.substr(pos));
      break;
    }
    out.push_back(s.substr(pos, comma - pos));
    pos = comma + 1;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact nonabelian Fourier analysis on finite groups"};
  app.require_subcommand(1);

  std::string input, signs_path, json_out, suite = "all", scope_str;
  int xi_multiple = 1, row = 0, col = 0, pair = -1, extension = 0;
  bool no_selfcheck = false;

  auto add_common = [&](CLI::App* cmd, bool needs_input) {
    auto* opt = cmd->add_option("--input", input, "path to the JSON input spec");
    if (needs_input) opt->required();
    cmd->add_option("--json-out", json_out, "also write the JSON result to this path");
  };

  CLI::App* cmd_table = app.add_subcommand("table", "exact character table of a group");
  add_common(cmd_table, true);

  CLI::App* cmd_mset = app.add_subcommand("mset", "the set M(G) of pairs (x, sigma)");
  add_common(cmd_mset, true);

  CLI::App* cmd_pairing = app.add_subcommand("pairing", "one pairing value {(x,sigma),(y,tau)}");
  add_common(cmd_pairing, true);
  cmd_pairing->add_option("--row", row, "M-set index of the first pair")->required();
  cmd_pairing->add_option("--col", col, "M-set index of the second pair")->required();

  CLI::App* cmd_fourier = app.add_subcommand("fourier", "the full pairing matrix with selfcheck");
  add_common(cmd_fourier, true);
  cmd_fourier->add_flag("--no-selfcheck", no_selfcheck, "skip the involution check");

  CLI::App* cmd_gm = app.add_subcommand("graded-msets", "M^0 and M^1 of a Z-graded group");
  add_common(cmd_gm, true);
  cmd_gm->add_option("--xi-multiple", xi_multiple, "multiple of the canonical central element");

  CLI::App* cmd_hat = app.add_subcommand("hat", "graded transform vectors and basis report");
  add_common(cmd_hat, true);
  cmd_hat->add_option("--xi-multiple", xi_multiple, "multiple of the canonical central element");
  cmd_hat->add_option("--pair", pair, "single M^0 pair index (default: whole matrix)");
  cmd_hat->add_option("--extension", extension, "extension choice for --pair");

  CLI::App* cmd_almost = app.add_subcommand("almost", "sign-twisted coefficient matrix");
  add_common(cmd_almost, true);
  cmd_almost->add_option("--xi-multiple", xi_multiple, "multiple of the canonical central element");
  cmd_almost->add_option("--signs", signs_path, "JSON file with {\"signs\": [+-1 per M^1 pair]}");

  CLI::App* cmd_verify = app.add_subcommand("verify", "run a verification suite on the corpus");
  add_common(cmd_verify, false);
  cmd_verify->add_option("--suite", suite, "fourier|graded|all (default all)");
  cmd_verify->add_option("--scope", scope_str, "comma-separated corpus name filter");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_table->parsed()) {
      Json spec = read_json_file(input);
      GroupPtr g = group_from_spec(spec);
      CharacterTable t(g);
      emit(job_result("table", group_inputs(spec, g), character_table_to_json(t), "ok"), json_out);
      return 0;
    }

    if (cmd_mset->parsed()) {
      Json spec = read_json_file(input);
      GroupPtr g = group_from_spec(spec);
      MSet m(g);
      emit(job_result("mset", group_inputs(spec, g),
                      Json{{"size", m.size()}, {"mset", mset_legend(m)}}, "ok"),
           json_out);
      return 0;
    }

    if (cmd_pairing->parsed()) {
      Json spec = read_json_file(input);
      GroupPtr g = group_from_spec(spec);
      MSet m(g);
      if (row < 0 || row >= m.size() || col < 0 || col >= m.size())
        fail("MSetMismatch", "pair index out of range (M-set size " + std::to_string(m.size()) + ")");
      Cyclotomic value = pairing(m, m.pair(row), m.pair(col));
      emit(job_result("pairing", group_inputs(spec, g),
                      Json{{"row", row}, {"col", col}, {"value", cyclo_to_json(value)}}, "ok"),
           json_out);
      return 0;
    }

    if (cmd_fourier->parsed()) {
      Json spec = read_json_file(input);
      GroupPtr g = group_from_spec(spec);
      MSet m(g);
      FourierMatrix a = fourier_matrix(m, {.parallel = true, .selfcheck = !no_selfcheck});
      std::string selfcheck =
          !a.selfcheck_run ? "skipped" : (a.selfcheck_passed ? "A^2=I: pass" : "A^2=I: fail");
      bool failed = a.selfcheck_run && !a.selfcheck_passed;
      emit(job_result("fourier", group_inputs(spec, g),
                      Json{{"mset", mset_legend(m)},
                           {"matrix", matrix_to_json(a.entries)},
                           {"selfcheck", selfcheck}},
                      failed ? "verification_failed" : "ok"),
           json_out);
      return failed ? 1 : 0;
    }

    if (cmd_gm->parsed()) {
      Json spec = read_json_file(input);
      ZGradedGroup d = graded_from_spec(spec);
      QuotientContext q(d, canonical_xi(d, xi_multiple));
      MiEta m0(q, 0), m1(q, 1);
      emit(job_result("graded-msets", graded_inputs(spec, d, xi_multiple),
                      Json{{"c", q.c()},
                           {"gamma_order", q.gamma()->order()},
                           {"m0", mi_eta_legend(m0)},
                           {"m1", mi_eta_legend(m1)}},
                      "ok"),
           json_out);
      return 0;
    }

    if (cmd_hat->parsed()) {
      Json spec = read_json_file(input);
      ZGradedGroup d = graded_from_spec(spec);
      QuotientContext q(d, canonical_xi(d, xi_multiple));
      MiEta m0(q, 0), m1(q, 1);
      MSet gm(q.gamma());
      FourierMatrix a = fourier_matrix(gm, {.parallel = true, .selfcheck = false});
      if (pair >= 0) {
        HatVector direct = hat(q, m0, m1, pair, extension);
        HatVector composed = hat_via_composition(q, m0, m1, pair, extension, gm, a);
        bool agree = direct.coeffs == composed.coeffs;
        Json coeffs = Json::array();
        for (const auto& v : direct.coeffs) coeffs.push_back(cyclo_to_json(v));
        emit(job_result("hat", graded_inputs(spec, d, xi_multiple),
                        Json{{"pair", pair},
                             {"extension", extension},
                             {"coefficients", coeffs},
                             {"m1", mi_eta_legend(m1)},
                             {"paths_agree", agree}},
                        agree ? "ok" : "verification_failed"),
             json_out);
        return agree ? 0 : 1;
      }
      HatBasisReport rep = hat_basis_report(q, m0, m1, true);
      bool paths_agree = true;
      for (int r = 0; r < m0.size() && paths_agree; ++r)
        paths_agree = hat_via_composition(q, m0, m1, r, 0, gm, a).coeffs == rep.matrix[r];
      bool pass = rep.pass && paths_agree;
      emit(job_result("hat", graded_inputs(spec, d, xi_multiple),
                      Json{{"m0", mi_eta_legend(m0)},
                           {"m1", mi_eta_legend(m1)},
                           {"matrix", matrix_to_json(rep.matrix)},
                           {"square", rep.square},
                           {"invertible", rep.invertible},
                           {"paths_agree", paths_agree}},
                      pass ? "ok" : "verification_failed"),
           json_out);
      return pass ? 0 : 1;
    }

    if (cmd_almost->parsed()) {
      Json spec = read_json_file(input);
      ZGradedGroup d = graded_from_spec(spec);
      QuotientContext q(d, canonical_xi(d, xi_multiple));
      MiEta m0(q, 0), m1(q, 1);
      SignFunction signs(m1.size(), 1);
      if (!signs_path.empty()) signs = signs_from_json(read_json_file(signs_path));
      CycloMat matrix = almost_character_matrix(q, m0, m1, signs, true);
      emit(job_result("almost", graded_inputs(spec, d, xi_multiple),
                      Json{{"signs", signs},
                           {"m0", mi_eta_legend(m0)},
                           {"m1", mi_eta_legend(m1)},
                           {"matrix", matrix_to_json(matrix)}},
                      "ok"),
           json_out);
      return 0;
    }

    if (cmd_verify->parsed()) {
      std::vector<std::string> scope = parse_scope(scope_str);
      if (suite != "fourier" && suite != "graded" && suite != "all")
        fail("MalformedTable", "unknown suite: " + suite + " (expected fourier|graded|all)");
      SuiteReport report;
      if (suite == "fourier" || suite == "all") {
        SuiteReport f = run_fourier_suite(scope);
        for (auto& c : f.checks) report.add(c.name, c.pass, c.detail);
      }
      if (suite == "graded" || suite == "all") {
        SuiteReport gr = run_graded_suite(scope);
        for (auto& c : gr.checks) report.add(c.name, c.pass, c.detail);
      }
      Json checks = Json::array();
      for (const CheckResult& c : report.checks)
        checks.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
      emit(job_result("verify", Json{{"suite", suite}, {"scope", scope_str}},
                      Json{{"checks", checks}, {"all_pass", report.all_pass}},
                      report.all_pass ? "ok" : "verification_failed"),
           json_out);
      return report.all_pass ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
