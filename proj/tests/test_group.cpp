#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "nfourier/error.hpp"
#include "nfourier/group.hpp"

using namespace nfourier;

namespace {

std::vector<std::vector<int>> q8_table() {
  // indices: 0:+1 1:-1 2:+i 3:-i 4:+j 5:-j 6:+k 7:-k
  auto idx = [](int sign, int axis) { return axis * 2 + (sign < 0 ? 1 : 0); };
  // basis products: (axis a)*(axis b) -> (sign, axis)
  auto base = [](int a, int b) -> std::pair<int, int> {
    if (a == 0) return {1, b};
    if (b == 0) return {1, a};
    if (a == b) return {-1, 0};
    // 1:i 2:j 3:k with cyclic rule ij=k
    if (a == 1 && b == 2) return {1, 3};
    if (a == 2 && b == 3) return {1, 1};
    if (a == 3 && b == 1) return {1, 2};
    if (a == 2 && b == 1) return {-1, 3};
    if (a == 3 && b == 2) return {-1, 1};
    return {-1, 2};  // a==1 && b==3
  };
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int sa = a % 2 ? -1 : 1, sb = b % 2 ? -1 : 1;
      auto [s, ax] = base(a / 2, b / 2);
      t[a][b] = idx(sa * sb * s, ax);
    }
  return t;
}

// Steiner loop of AG(2,3): commutative, two-sided inverses, nonassociative.
std::vector<std::vector<int>> steiner_loop_table() {
  auto pt = [](int a, int b) { return 1 + 3 * a + b; };
  std::vector<std::vector<int>> t(10, std::vector<int>(10));
  for (int i = 0; i < 10; ++i) t[0][i] = t[i][0] = i;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d) {
          int x = pt(a, b), y = pt(c, d);
          t[x][y] = (x == y) ? 0 : pt((6 - a - c) % 3, (6 - b - d) % 3);
        }
  return t;
}

GroupPtr s3() { return group_from_permutations(3, {{1, 0, 2}, {0, 2, 1}}); }

}  // namespace

TEST_CASE("group_from_table basics") {
  auto triv = group_from_table({{0}});
  CHECK(triv->order() == 1);
  CHECK(triv->identity() == 0);

  auto z2 = group_from_table({{0, 1}, {1, 0}});
  CHECK(z2->order() == 2);
  CHECK(z2->inv(1) == 1);
  CHECK(z2->is_abelian());
}

TEST_CASE("group_from_table rejects bad input") {
  CHECK_THROWS_WITH_AS(group_from_table({{0, 1}}), doctest::Contains("MalformedTable"), Error);
  CHECK_THROWS_WITH_AS(group_from_table({{0, 1}, {0, 1}}), doctest::Contains("MalformedTable"),
                       Error);
  CHECK_THROWS_WITH_AS(group_from_table({{2, 0}, {0, 1}}), doctest::Contains("MalformedTable"),
                       Error);
  // Latin square without a two-sided identity
  CHECK_THROWS_WITH_AS(group_from_table({{0, 1, 2}, {2, 0, 1}, {1, 2, 0}}),
                       doctest::Contains("NoIdentity"), Error);
  // loop with identity but an element lacking a two-sided inverse
  CHECK_THROWS_WITH_AS(group_from_table({{0, 1, 2, 3, 4},
                                         {1, 0, 3, 4, 2},
                                         {2, 3, 4, 0, 1},
                                         {3, 4, 1, 2, 0},
                                         {4, 2, 0, 1, 3}}),
                       doctest::Contains("MissingInverse"), Error);
  // Steiner loop: identity and inverses fine, associativity fails
  CHECK_THROWS_WITH_AS(group_from_table(steiner_loop_table()),
                       doctest::Contains("NonAssociative"), Error);
}

TEST_CASE("group_from_permutations closure") {
  auto g = s3();
  CHECK(g->order() == 6);
  CHECK_FALSE(g->is_abelian());
  CHECK(g->identity() == 0);

  auto z4 = group_from_permutations(4, {{1, 2, 3, 0}});
  CHECK(z4->order() == 4);
  CHECK(z4->is_abelian());

  auto triv = group_from_permutations(1, {});
  CHECK(triv->order() == 1);

  CHECK_THROWS_WITH_AS(group_from_permutations(2, {{0, 0}}), doctest::Contains("NotAPermutation"),
                       Error);
  CHECK_THROWS_WITH_AS(group_from_permutations(3, {{1, 0, 2}, {0, 2, 1}}, 3),
                       doctest::Contains("OrderLimitExceeded"), Error);
}

TEST_CASE("conjugacy classes") {
  auto triv = group_from_table({{0}});
  CHECK(triv->class_count() == 1);

  auto g = s3();
  REQUIRE(g->class_count() == 3);
  CHECK(g->class_size(0) == 1);
  CHECK(g->class_size(1) == 3);
  CHECK(g->class_size(2) == 2);
  // representative is the least index in each class
  for (int c = 0; c < g->class_count(); ++c)
    for (Element m : g->class_members(c)) CHECK(g->class_rep(c) <= m);

  auto z4 = cyclic_group(4);
  CHECK(z4->class_count() == 4);
}

TEST_CASE("centralizers") {
  auto g = s3();
  CHECK(centralizer(g, g->identity()).order() == 6);
  Element transposition = g->class_rep(1);
  Element threecycle = g->class_rep(2);
  CHECK(centralizer(g, transposition).order() == 2);
  CHECK(centralizer(g, threecycle).order() == 3);

  // centralizer size * class size = group order, on several groups
  auto s4 = group_from_permutations(4, {{1, 0, 2, 3}, {1, 2, 3, 0}});
  for (auto gr : {g, s4, group_from_table(q8_table())}) {
    for (int c = 0; c < gr->class_count(); ++c)
      CHECK(centralizer(gr, gr->class_rep(c)).order() * gr->class_size(c) == gr->order());
    int total = 0;
    for (int c = 0; c < gr->class_count(); ++c) {
      CHECK(gr->order() % gr->class_size(c) == 0);
      total += gr->class_size(c);
    }
    CHECK(total == gr->order());
  }
}

TEST_CASE("quotient by central cyclic") {
  auto g = s3();
  auto [iso, proj] = quotient_by_central_cyclic(g, g->identity());
  CHECK(iso->order() == 6);
  CHECK(proj.is_bijective());

  auto z4 = cyclic_group(4);
  auto [q2, p2] = quotient_by_central_cyclic(z4, 2);
  CHECK(q2->order() == 2);

  auto q8 = group_from_table(q8_table());
  auto [v4, p4] = quotient_by_central_cyclic(q8, 1);  // -1 is central
  CHECK(v4->order() == 4);
  for (int x = 0; x < 4; ++x) CHECK(v4->mul(x, x) == v4->identity());  // Klein four

  // cosets recover exactly as preimages
  for (int x = 0; x < q8->order(); ++x)
    for (int y = 0; y < q8->order(); ++y)
      if (p4(x) == p4(y)) CHECK((q8->mul(q8->inv(x), y) == 0 || q8->mul(q8->inv(x), y) == 1));

  CHECK_THROWS_WITH_AS(quotient_by_central_cyclic(g, g->class_rep(1)),
                       doctest::Contains("NotCentral"), Error);
}

TEST_CASE("automorphism order") {
  auto z3 = cyclic_group(3);
  std::vector<Element> ident{0, 1, 2};
  CHECK(automorphism_order(GroupMap(z3, z3, ident)) == 1);
  std::vector<Element> inversion{0, 2, 1};
  CHECK(automorphism_order(GroupMap(z3, z3, inversion)) == 2);

  auto g = s3();
  Element t = g->class_rep(1);
  std::vector<Element> conj_by_t(g->order());
  for (int x = 0; x < g->order(); ++x) conj_by_t[x] = g->conj(t, x);
  CHECK(automorphism_order(GroupMap(g, g, conj_by_t)) == 2);

  std::vector<Element> not_hom{1, 2, 0};
  CHECK_THROWS_WITH_AS(GroupMap(z3, z3, not_hom), doctest::Contains("NotHomomorphism"), Error);
}

TEST_CASE("S4 via permutation closure") {
  auto s4 = group_from_permutations(4, {{1, 0, 2, 3}, {1, 2, 3, 0}});
  CHECK(s4->order() == 24);
  CHECK(s4->class_count() == 5);
}

TEST_CASE("derived subgroup and generators") {
  auto g = s3();
  auto derived = derived_subgroup(g);
  CHECK(derived.size() == 3);
  auto gens = generating_set(g);
  CHECK(subgroup_closure(g, gens).size() == 6);
  CHECK(gens.size() <= 2);
}

TEST_CASE("subgroup induced group translates indices") {
  auto g = s3();
  auto z = centralizer(g, g->class_rep(2));
  CHECK(z.group()->order() == 3);
  for (int i = 0; i < z.order(); ++i) CHECK(z.to_sub(z.to_parent(i)) == i);
  CHECK_THROWS_AS((void)Subgroup(g, {g->class_rep(1)}), Error);
}
