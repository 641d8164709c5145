#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nfourier/corpus.hpp"
#include "nfourier/error.hpp"
#include "nfourier/graded.hpp"

using namespace nfourier;

namespace {

bool matrices_equal(const CycloMat& a, const CycloMat& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

}  // namespace

TEST_CASE("semidirect arithmetic") {
  ZGradedGroup d = graded_inversion(3);
  CHECK(delta_mul(d, {1, 0}, {2, 0}) == DeltaElement{0, 0});  // kernel embeds
  CHECK(delta_mul(d, {0, 1}, {1, 0}) == DeltaElement{2, 1});  // the twist
  CHECK(delta_conj(d, {0, 1}, {1, 0}) == DeltaElement{2, 0});
  CHECK(delta_inv(d, {1, 2}) == DeltaElement{2, -2});
  CHECK(delta_mul(d, {1, 2}, delta_inv(d, {1, 2})) == DeltaElement{0, 0});
}

TEST_CASE("splitting soundness on random elements") {
  std::mt19937_64 rng(99991);
  for (auto& [name, d] : graded_corpus()) {
    CAPTURE(name);
    long c = d.theta_order;
    std::uniform_int_distribution<long> edist(-3 * c, 3 * c);
    std::uniform_int_distribution<int> kdist(0, d.kernel->order() - 1);
    for (int t = 0; t < 40; ++t) {
      DeltaElement a{kdist(rng), edist(rng)};
      DeltaElement b{kdist(rng), edist(rng)};
      DeltaElement cc{kdist(rng), edist(rng)};
      CHECK(delta_mul(d, delta_mul(d, a, b), cc) == delta_mul(d, a, delta_mul(d, b, cc)));
      CHECK(delta_mul(d, a, delta_inv(d, a)) ==
            DeltaElement{d.kernel->identity(), 0});
      // the grading is the exponent sum
      CHECK(delta_mul(d, a, b).e == a.e + b.e);
    }
  }
}

TEST_CASE("canonical xi") {
  CHECK(canonical_xi(graded_identity(cyclic_group(4)), 1).c == 1);
  CHECK(canonical_xi(graded_identity(cyclic_group(4)), 5).c == 5);
  CHECK(canonical_xi(graded_inversion(3), 1).c == 2);
  // conjugation by a 3-cycle on S3 has order 3
  GroupPtr s3 = named_group("S3");
  CHECK(canonical_xi(graded_inner(s3, s3->class_rep(2)), 1).c == 3);
}

TEST_CASE("finite quotient") {
  // theta = id, multiple 1: Gamma is K with the trivial grading
  ZGradedGroup d_id = graded_identity(named_group("S3"));
  QuotientContext q_id(d_id, canonical_xi(d_id, 1));
  CHECK(q_id.c() == 1);
  CHECK(q_id.gamma()->order() == 6);

  // K = Z/3 with inversion: Gamma is S3 with the sign grading
  ZGradedGroup d = graded_inversion(3);
  QuotientContext q(d, canonical_xi(d, 1));
  CHECK(q.c() == 2);
  CHECK(q.gamma()->order() == 6);
  CHECK_FALSE(q.gamma()->is_abelian());
  int involutions_in_degree_1 = 0;
  for (int g = 0; g < 6; ++g)
    if (q.zeta().zeta(g) == 1) {
      CHECK(q.gamma()->mul(g, g) == q.gamma()->identity());
      ++involutions_in_degree_1;
    }
  CHECK(involutions_in_degree_1 == 3);

  // trivial kernel: Gamma is Z/c
  ZGradedGroup d_triv = graded_identity(group_from_table({{0}}));
  QuotientContext q3(d_triv, canonical_xi(d_triv, 3));
  CHECK(q3.gamma()->order() == 3);
  CHECK(q3.gamma()->is_abelian());

  // element correspondence round-trips
  for (int g = 0; g < q.gamma()->order(); ++g) CHECK(q.to_gamma(q.lift(g)) == g);
  CHECK(q.to_gamma(DeltaElement{1, -1}) == q.to_gamma(DeltaElement{1, 1}));  // mod c = 2
}

TEST_CASE("centralizer mod xi") {
  ZGradedGroup d = graded_inversion(3);
  QuotientContext q(d, canonical_xi(d, 1));

  CHECK(centralizer_mod_xi(q, DeltaElement{0, 0}).order() == 6);  // identity: everything
  Subgroup zx = centralizer_mod_xi(q, DeltaElement{1, 0});
  CHECK(zx.order() == 3);
  for (Element g : zx.members()) CHECK(q.zeta().zeta(g) == 0);
  Subgroup zy = centralizer_mod_xi(q, DeltaElement{0, 1});
  CHECK(zy.order() == 2);

  CHECK_THROWS_WITH_AS((void)centralizer_mod_xi(q, DeltaElement{0, 2}),
                       doctest::Contains("DegreeOutOfRange"), Error);
}

TEST_CASE("graded pair sets") {
  // theta = id, c = 1: M^0 and M^1 are both M(K)
  ZGradedGroup d_id = graded_identity(named_group("S3"));
  QuotientContext q_id(d_id, canonical_xi(d_id, 1));
  MiEta m0_id(q_id, 0), m1_id(q_id, 1);
  CHECK(m0_id.size() == 8);
  CHECK(m1_id.size() == 8);

  // K = Z/3 with inversion: exactly one pair on each side
  ZGradedGroup d = graded_inversion(3);
  QuotientContext q(d, canonical_xi(d, 1));
  MiEta m0(q, 0), m1(q, 1);
  REQUIRE(m0.size() == 1);
  REQUIRE(m1.size() == 1);
  CHECK(m0.x_of(0) == DeltaElement{0, 0});
  CHECK(m0.sigma_of(0).degree() == 1);
  // the surviving sigma is the trivial character of Z/3
  for (const auto& v : m0.sigma_of(0).values) CHECK(v == Cyclotomic(1));
  CHECK(m1.x_of(0) == DeltaElement{0, 1});
  CHECK(m1.class_of_pair(0).cent.small.order() == 1);
}

TEST_CASE("hat: degeneration to the Fourier matrix at c = 1") {
  for (const char* name : {"Zn:2", "Zn:3", "S3"}) {
    CAPTURE(name);
    GroupPtr k = named_group(name);
    ZGradedGroup d = graded_identity(k);
    QuotientContext q(d, canonical_xi(d, 1));
    MiEta m0(q, 0), m1(q, 1);
    MSet mk(k);
    REQUIRE(m0.size() == mk.size());
    REQUIRE(m1.size() == mk.size());
    FourierMatrix a = fourier_matrix(mk, {.parallel = false, .selfcheck = false});
    CycloMat h = hat_matrix(q, m0, m1, false);
    CHECK(matrices_equal(h, a.entries));
  }
}

TEST_CASE("hat: 1x1 nonzero for Z/3 with inversion, both extensions") {
  ZGradedGroup d = graded_inversion(3);
  QuotientContext q(d, canonical_xi(d, 1));
  MiEta m0(q, 0), m1(q, 1);
  HatVector h0 = hat(q, m0, m1, 0, 0);
  HatVector h1 = hat(q, m0, m1, 0, 1);
  CHECK_FALSE(h0.coeffs[0].is_zero());
  CHECK_FALSE(h1.coeffs[0].is_zero());
  // the two extension choices differ by a sign (a root of unity)
  CHECK(h0.coeffs[0] == -h1.coeffs[0]);
  // trivial Delta: hat = [1]
  ZGradedGroup d_triv = graded_identity(group_from_table({{0}}));
  QuotientContext q_triv(d_triv, canonical_xi(d_triv, 1));
  MiEta t0(q_triv, 0), t1(q_triv, 1);
  CHECK(hat(q_triv, t0, t1, 0, 0).coeffs == CycloVec{Cyclotomic(1)});
}

TEST_CASE("hat errors") {
  ZGradedGroup d = graded_inversion(3);
  QuotientContext q(d, canonical_xi(d, 1));
  MiEta m0(q, 0), m1(q, 1);
  CHECK_THROWS_WITH_AS((void)hat(q, m0, m1, 4, 0), doctest::Contains("NotInM0"), Error);
  CHECK_THROWS_WITH_AS((void)hat(q, m0, m1, 0, 7), doctest::Contains("BadExtensionIndex"), Error);
}

TEST_CASE("hat equals the composition through the finite quotient") {
  std::vector<std::pair<std::string, ZGradedGroup>> cases;
  cases.emplace_back("trivial", graded_identity(group_from_table({{0}})));
  cases.emplace_back("(Z3,inv)", graded_inversion(3));
  cases.emplace_back("(Z4,inv)", graded_inversion(4));
  cases.emplace_back("(S3,id)", graded_identity(named_group("S3")));
  for (auto& [name, d] : cases) {
    CAPTURE(name);
    QuotientContext q(d, canonical_xi(d, 1));
    MiEta m0(q, 0), m1(q, 1);
    MSet gm(q.gamma());
    FourierMatrix a = fourier_matrix(gm, {.parallel = false, .selfcheck = false});
    for (int r = 0; r < m0.size(); ++r) {
      int exts = static_cast<int>(
          m0.class_of_pair(r).extensions[m0.pair(r).irrep].size());
      for (int e = 0; e < exts; ++e) {
        HatVector direct = hat(q, m0, m1, r, e);
        HatVector composed = hat_via_composition(q, m0, m1, r, e, gm, a);
        CHECK(direct.coeffs == composed.coeffs);
      }
    }
  }

  // also at a higher xi multiple, where c = 4 for (Z3, inv)
  ZGradedGroup d = graded_inversion(3);
  QuotientContext q(d, canonical_xi(d, 2));
  CHECK(q.c() == 4);
  MiEta m0(q, 0), m1(q, 1);
  MSet gm(q.gamma());
  FourierMatrix a = fourier_matrix(gm, {.parallel = false, .selfcheck = false});
  for (int e = 0; e < 2; ++e) {
    HatVector direct = hat(q, m0, m1, 0, e);
    HatVector composed = hat_via_composition(q, m0, m1, 0, e, gm, a);
    CHECK(direct.coeffs == composed.coeffs);
  }
}

TEST_CASE("hat basis: square and exactly invertible") {
  for (auto& [name, d] : graded_corpus()) {
    CAPTURE(name);
    QuotientContext q(d, canonical_xi(d, 1));
    MiEta m0(q, 0), m1(q, 1);
    HatBasisReport rep = hat_basis_report(q, m0, m1, false);
    CHECK(rep.pass);
    CHECK(rep.square);
    CHECK(rep.invertible);
  }
}

TEST_CASE("hat matrix parallel kernel agrees with the serial reference") {
  ZGradedGroup d = graded_inversion(4);
  QuotientContext q(d, canonical_xi(d, 1));
  MiEta m0(q, 0), m1(q, 1);
  CHECK(matrices_equal(hat_matrix(q, m0, m1, true), hat_matrix_serial(q, m0, m1)));
}

TEST_CASE("xi independence") {
  // same multiple, same extension: ratio 1 shows up among the pairs
  XiIndependenceReport same = xi_independence_check(graded_identity(cyclic_group(2)), 0, 1, 1);
  CHECK(same.pass);

  for (auto& [name, d] :
       std::vector<std::pair<std::string, ZGradedGroup>>{{"(Z2,id)", graded_identity(cyclic_group(2))},
                                                         {"(Z3,inv)", graded_inversion(3)}}) {
    CAPTURE(name);
    QuotientContext q(d, canonical_xi(d, 1));
    MiEta m0(q, 0);
    for (int p = 0; p < m0.size(); ++p) {
      XiIndependenceReport rep = xi_independence_check(d, p, 1, 2);
      CHECK(rep.pass);
      for (auto [n, k] : rep.ratios) CHECK(n >= 1);
    }
  }
}

TEST_CASE("almost-character matrix") {
  ZGradedGroup d = graded_identity(cyclic_group(2));
  QuotientContext q(d, canonical_xi(d, 1));
  MiEta m0(q, 0), m1(q, 1);
  CycloMat h = hat_matrix(q, m0, m1, false);

  SignFunction plus(m1.size(), 1);
  CHECK(matrices_equal(almost_character_matrix(q, m0, m1, plus, false), h));

  SignFunction minus(m1.size(), -1);
  CycloMat negated = h;
  for (auto& row : negated)
    for (auto& v : row) v = -v;
  CHECK(matrices_equal(almost_character_matrix(q, m0, m1, minus, false), negated));

  // theta = id on Z/2 degenerates to the Fourier matrix of Z/2, so mixed
  // signs scale the matching columns
  SignFunction mixed{1, -1, 1, -1};
  CycloMat scaled = h;
  for (auto& row : scaled) {
    row[1] = -row[1];
    row[3] = -row[3];
  }
  CHECK(matrices_equal(almost_character_matrix(q, m0, m1, mixed, false), scaled));
  MSet mk(cyclic_group(2));
  CHECK(matrices_equal(h, fourier_matrix(mk, {.parallel = false, .selfcheck = false}).entries));

  CHECK_THROWS_WITH_AS((void)almost_character_matrix(q, m0, m1, SignFunction{1, -1}, false),
                       doctest::Contains("IncompleteSignFunction"), Error);
  CHECK_THROWS_WITH_AS((void)almost_character_matrix(q, m0, m1, SignFunction{1, -2, 1, 1}, false),
                       doctest::Contains("IncompleteSignFunction"), Error);
}

TEST_CASE("inner automorphisms fix every graded pair class") {
  for (auto& [name, d] : graded_corpus()) {
    CAPTURE(name);
    QuotientContext q(d, canonical_xi(d, 1));
    for (int i = 0; i < 2; ++i) {
      MiEta mi(q, i);
      InnerInvarianceReport rep = inner_invariance_check(q, mi);
      CHECK(rep.pass);
      if (!rep.pass) MESSAGE(rep.detail);
    }
  }
}

TEST_CASE("M^0 and M^1 sizes agree on the graded corpus") {
  for (auto& [name, d] : graded_corpus()) {
    CAPTURE(name);
    QuotientContext q(d, canonical_xi(d, 1));
    MiEta m0(q, 0), m1(q, 1);
    CHECK(m0.size() == m1.size());
  }
}
