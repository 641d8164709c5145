#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include "nfourier/error.hpp"
#include "nfourier/json_io.hpp"

using namespace nfourier;

namespace {

std::string g_cli_path;

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = g_cli_path + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) output.append(buf, n);
  int status = pclose(pipe);
  return RunResult{WEXITSTATUS(status), std::move(output)};
}

std::filesystem::path write_temp(const std::string& name, const Json& content) {
  auto dir = std::filesystem::temp_directory_path() / "nfourier_cli_tests";
  std::filesystem::create_directories(dir);
  auto path = dir / name;
  std::ofstream f(path);
  f << content.dump(2);
  return path;
}

std::string strip_timestamp(const std::string& raw) {
  Json j = Json::parse(raw);
  j.erase("timestamp");
  return j.dump(2);
}

Cyclotomic random_value(std::mt19937_64& rng) {
  static const long conductors[] = {1, 3, 4, 5, 8, 12};
  std::uniform_int_distribution<int> pick(0, 5);
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 4);
  long n = conductors[pick(rng)];
  Cyclotomic acc;
  for (long e = 0; e < euler_phi(n); ++e) {
    Cyclotomic term = Cyclotomic::root_of_unity(n, e);
    term *= Rational(num(rng), den(rng));
    acc += term;
  }
  return acc;
}

}  // namespace

TEST_CASE("cyclotomic JSON round-trip is exact") {
  std::mt19937_64 rng(31337);
  for (int t = 0; t < 100; ++t) {
    Cyclotomic v = random_value(rng);
    Json j = cyclo_to_json(v);
    CHECK(cyclo_from_json(j) == v);
  }
  // matrix round-trip
  CycloMat m(3, CycloVec(3));
  for (auto& row : m)
    for (auto& v : row) v = random_value(rng);
  CHECK(matrix_from_json(matrix_to_json(m)) == m);
}

TEST_CASE("group specs parse and validate") {
  CHECK(group_from_spec(Json{{"type", "named"}, {"name", "S3"}})->order() == 6);
  CHECK(group_from_spec(Json{{"type", "named"}, {"name", "Zn:5"}})->order() == 5);
  CHECK(group_from_spec(Json{{"type", "mul_table"}, {"table", Json::array({{0, 1}, {1, 0}})}})
            ->order() == 2);
  Json perm{{"type", "permutation"}, {"degree", 3},
            {"generators", Json::array({{1, 0, 2}, {0, 2, 1}})}};
  CHECK(group_from_spec(perm)->order() == 6);
  CHECK_THROWS_AS((void)group_from_spec(Json{{"type", "named"}, {"name", "E8"}}), Error);
  CHECK_THROWS_AS((void)group_from_spec(Json{{"type", "mul_table"},
                                             {"table", Json::array({{0, 1}, {1, 1}})}}),
                  Error);
}

TEST_CASE("graded specs parse") {
  Json spec{{"kernel", Json{{"type", "named"}, {"name", "Zn:3"}}},
            {"theta", Json::array({0, 2, 1})}};
  ZGradedGroup d = graded_from_spec(spec);
  CHECK(d.theta_order == 2);
  CHECK_THROWS_AS((void)graded_from_spec(Json{{"kernel", Json{{"type", "named"}, {"name", "Zn:3"}}},
                                              {"theta", Json::array({1, 2, 0})}}),
                  Error);  // not an automorphism (no identity fixed point)
}

TEST_CASE("sign files parse") {
  CHECK(signs_from_json(Json{{"signs", Json::array({1, -1, 1})}}) == SignFunction{1, -1, 1});
  CHECK_THROWS_AS((void)signs_from_json(Json{{"wrong", 1}}), Error);
}

TEST_CASE("cli: fourier output matches the library and passes selfcheck") {
  auto z2 = write_temp("z2.json", Json{{"type", "named"}, {"name", "Zn:2"}});
  RunResult r = run_cli("fourier --input " + z2.string());
  REQUIRE(r.exit_code == 0);
  Json out = Json::parse(r.output);
  CHECK(out.at("command") == "fourier");
  CHECK(out.at("status") == "ok");
  CHECK(out.at("result").at("selfcheck") == "A^2=I: pass");
  CycloMat m = matrix_from_json(out.at("result").at("matrix"));
  MSet mset(named_group("Zn:2"));
  FourierMatrix a = fourier_matrix(mset, {.parallel = false, .selfcheck = false});
  CHECK(m == a.entries);
}

TEST_CASE("cli: byte-identical reruns modulo the timestamp field") {
  auto z2 = write_temp("z2.json", Json{{"type", "named"}, {"name", "Zn:2"}});
  auto dspec = write_temp("z3inv.json", Json{{"kernel", Json{{"type", "named"}, {"name", "Zn:3"}}},
                                             {"theta", Json::array({0, 2, 1})}});
  for (const std::string& args :
       {"fourier --input " + z2.string(), "table --input " + z2.string(),
        "mset --input " + z2.string(), "hat --input " + dspec.string(),
        "graded-msets --input " + dspec.string(), "almost --input " + dspec.string()}) {
    CAPTURE(args);
    RunResult r1 = run_cli(args);
    RunResult r2 = run_cli(args);
    CHECK(r1.exit_code == 0);
    CHECK(r1.exit_code == r2.exit_code);
    CHECK(strip_timestamp(r1.output) == strip_timestamp(r2.output));
  }
}

TEST_CASE("cli: exit codes") {
  // malformed table: exit 2
  auto bad = write_temp("bad.json", Json{{"type", "mul_table"},
                                         {"table", Json::array({{0, 1}, {1, 1}})}});
  CHECK(run_cli("table --input " + bad.string()).exit_code == 2);

  // unknown suite: exit 2
  CHECK(run_cli("verify --suite nonsense").exit_code == 2);

  // missing input file: exit 2
  CHECK(run_cli("table --input /nonexistent/nope.json").exit_code == 2);

  // sign file of the wrong length: exit 2 (IncompleteSignFunction)
  auto dspec = write_temp("z3inv2.json", Json{{"kernel", Json{{"type", "named"}, {"name", "Zn:3"}}},
                                              {"theta", Json::array({0, 2, 1})}});
  auto signs = write_temp("signs_short.json", Json{{"signs", Json::array({1, -1})}});
  CHECK(run_cli("almost --input " + dspec.string() + " --signs " + signs.string()).exit_code == 2);

  // verify on a tiny scope: exit 0
  CHECK(run_cli("verify --suite fourier --scope trivial").exit_code == 0);
}

TEST_CASE("cli: hat paths agree and --json-out copies stdout") {
  auto dspec = write_temp("z3inv3.json", Json{{"kernel", Json{{"type", "named"}, {"name", "Zn:3"}}},
                                              {"theta", Json::array({0, 2, 1})}});
  auto outfile = std::filesystem::temp_directory_path() / "nfourier_cli_tests" / "hat_out.json";
  RunResult r = run_cli("hat --input " + dspec.string() + " --json-out " + outfile.string());
  REQUIRE(r.exit_code == 0);
  Json out = Json::parse(r.output);
  CHECK(out.at("result").at("paths_agree") == true);
  CHECK(out.at("result").at("invertible") == true);
  std::ifstream f(outfile);
  std::string file_copy((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  CHECK(file_copy == r.output);
}

TEST_CASE("cli: single hat vector with an extension choice") {
  auto dspec = write_temp("z3inv4.json", Json{{"kernel", Json{{"type", "named"}, {"name", "Zn:3"}}},
                                              {"theta", Json::array({0, 2, 1})}});
  RunResult r0 = run_cli("hat --input " + dspec.string() + " --pair 0 --extension 0");
  RunResult r1 = run_cli("hat --input " + dspec.string() + " --pair 0 --extension 1");
  REQUIRE(r0.exit_code == 0);
  REQUIRE(r1.exit_code == 0);
  Cyclotomic v0 = cyclo_from_json(Json::parse(r0.output).at("result").at("coefficients").at(0));
  Cyclotomic v1 = cyclo_from_json(Json::parse(r1.output).at("result").at("coefficients").at(0));
  CHECK(v0 == -v1);  // the two extensions differ by a sign
  CHECK_FALSE(v0.is_zero());
  // out-of-range extension choice is an input error
  CHECK(run_cli("hat --input " + dspec.string() + " --pair 0 --extension 9").exit_code == 2);
}

TEST_CASE("cli: pairing value") {
  auto z2 = write_temp("z2.json", Json{{"type", "named"}, {"name", "Zn:2"}});
  RunResult r = run_cli("pairing --input " + z2.string() + " --row 0 --col 0");
  REQUIRE(r.exit_code == 0);
  Json out = Json::parse(r.output);
  CHECK(cyclo_from_json(out.at("result").at("value")) == Cyclotomic(Rational(1, 2)));
  CHECK(run_cli("pairing --input " + z2.string() + " --row 0 --col 9").exit_code == 2);
}

int main(int argc, char** argv) {
  if (argc > 1 && argv[argc - 1][0] != '-') {
    g_cli_path = argv[argc - 1];
    --argc;
  }
  doctest::Context context(argc, argv);
  return context.run();
}
