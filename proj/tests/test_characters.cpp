#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nfourier/characters.hpp"
#include "nfourier/error.hpp"

using namespace nfourier;

namespace {

GroupPtr s3() { return group_from_permutations(3, {{1, 0, 2}, {0, 2, 1}}); }

GroupMap sign_grading(const GroupPtr& g) {
  // transpositions form the class with representative of class index 1
  std::vector<Element> images(g->order());
  for (int x = 0; x < g->order(); ++x) images[x] = g->class_of(x) == 1 ? 1 : 0;
  return GroupMap(g, cyclic_group(2), images);
}

ClassFunction regular_character(const GroupPtr& g) {
  ClassFunction reg{g, std::vector<Cyclotomic>(g->class_count())};
  reg.values[g->class_of(g->identity())] = Cyclotomic(g->order());
  return reg;
}

}  // namespace

TEST_CASE("trivial group table") {
  CharacterTable t(group_from_table({{0}}));
  REQUIRE(t.size() == 1);
  CHECK(t.irreducible(0).values[0] == Cyclotomic(1));
}

TEST_CASE("Z3 table: abelian duality") {
  CharacterTable t(cyclic_group(3));
  REQUIRE(t.size() == 3);
  std::vector<Cyclotomic> at_one;
  for (int i = 0; i < 3; ++i) {
    CHECK(t.irreducible(i).degree() == 1);
    at_one.push_back(t.irreducible(i).values[1]);
  }
  std::sort(at_one.begin(), at_one.end());
  std::vector<Cyclotomic> expected{Cyclotomic(1), Cyclotomic::root_of_unity(3, 1),
                                   Cyclotomic::root_of_unity(3, 2)};
  std::sort(expected.begin(), expected.end());
  CHECK(at_one == expected);
}

TEST_CASE("S3 table: degrees and the 2-dimensional character") {
  CharacterTable t(s3());
  REQUIRE(t.size() == 3);
  CHECK(t.irreducible(0).degree() == 1);
  CHECK(t.irreducible(1).degree() == 1);
  CHECK(t.irreducible(2).degree() == 2);
  const ClassFunction& two = t.irreducible(2);
  CHECK(two.values[0] == Cyclotomic(2));   // identity
  CHECK(two.values[1] == Cyclotomic(0));   // transpositions
  CHECK(two.values[2] == Cyclotomic(-1));  // 3-cycles
}

TEST_CASE("tables verify exactly on a small corpus") {
  auto s4 = group_from_permutations(4, {{1, 0, 2, 3}, {1, 2, 3, 0}});
  auto z6 = cyclic_group(6);
  auto z8 = cyclic_group(8);
  for (const auto& g : {s4, z6, z8}) {
    CharacterTable t(g);  // construction runs exact orthogonality checks
    long sq = 0;
    for (const auto& chi : t.irreducibles()) {
      CHECK(g->order() % chi.degree() == 0);
      sq += chi.degree() * chi.degree();
      CHECK(is_irreducible(chi));
    }
    CHECK(sq == g->order());
  }
}

TEST_CASE("inner products") {
  CharacterTable t(s3());
  for (int i = 0; i < t.size(); ++i)
    for (int j = 0; j < t.size(); ++j)
      CHECK(inner_product(t.irreducible(i), t.irreducible(j)) == Cyclotomic(i == j ? 1 : 0));

  // <regular, chi> = deg chi
  ClassFunction reg = regular_character(t.group());
  for (const auto& chi : t.irreducibles())
    CHECK(inner_product(reg, chi) == Cyclotomic(chi.degree()));

  CharacterTable z3(cyclic_group(3));
  CHECK_THROWS_WITH_AS((void)inner_product(t.irreducible(0), z3.irreducible(0)),
                       doctest::Contains("GroupMismatch"), Error);
}

TEST_CASE("restriction") {
  auto g = s3();
  CharacterTable t(g);
  const ClassFunction& two = t.irreducible(2);

  // restriction to the whole group is the identity on values
  std::vector<Element> all(g->order());
  for (int i = 0; i < g->order(); ++i) all[i] = i;
  Subgroup whole(g, all);
  ClassFunction rw = restrict_to(two, whole);
  for (int c = 0; c < g->class_count(); ++c)
    CHECK(rw.at_element(c == 0 ? g->identity() : g->class_rep(c)) ==
          two.at_element(c == 0 ? g->identity() : g->class_rep(c)));

  // 2-dim irreducible restricted to A3 has norm 2 and splits into the two
  // nontrivial linear characters
  GroupMap zeta = sign_grading(g);
  std::vector<Element> even;
  for (int x = 0; x < g->order(); ++x)
    if (zeta(x) == 0) even.push_back(x);
  Subgroup a3(g, even);
  ClassFunction r = restrict_to(two, a3);
  CHECK(inner_product(r, r) == Cyclotomic(2));
  CharacterTable ta3(a3.group());
  Cyclotomic total;
  for (const auto& chi : ta3.irreducibles()) {
    Cyclotomic m = inner_product(r, chi);
    if (chi.values == std::vector<Cyclotomic>{Cyclotomic(1), Cyclotomic(1), Cyclotomic(1)})
      CHECK(m == Cyclotomic(0));  // trivial does not occur
    else
      CHECK(m == Cyclotomic(1));  // each nontrivial linear occurs once
  }

  // any character restricted to the trivial subgroup is [deg]
  Subgroup triv(g, {g->identity()});
  ClassFunction rt = restrict_to(two, triv);
  CHECK(rt.values == std::vector<Cyclotomic>{Cyclotomic(2)});
}

TEST_CASE("is_irreducible") {
  CharacterTable t(s3());
  CHECK(is_irreducible(t.irreducible(0)));
  CHECK(is_irreducible(t.irreducible(2)));
  ClassFunction sum = t.irreducible(0);
  for (size_t i = 0; i < sum.values.size(); ++i) sum.values[i] += t.irreducible(1).values[i];
  CHECK_FALSE(is_irreducible(sum));
  CHECK(inner_product(sum, sum) == Cyclotomic(2));
}

TEST_CASE("tensor with linear characters") {
  CharacterTable t(s3());
  // the two linear characters, identified by value (sort order is lexicographic)
  int ti = t.irreducible(0).values[1] == Cyclotomic(1) ? 0 : 1;
  const ClassFunction& triv = t.irreducible(ti);
  const ClassFunction& sgn = t.irreducible(1 - ti);
  const ClassFunction& two = t.irreducible(2);
  REQUIRE(triv.values[1] == Cyclotomic(1));
  REQUIRE(sgn.values[1] == Cyclotomic(-1));

  CHECK(tensor_linear(two, triv) == two);
  CHECK(tensor_linear(two, sgn) == two);  // 2-dim is sign-stable
  CHECK(tensor_linear(sgn, sgn) == triv);
  CHECK(is_irreducible(tensor_linear(two, sgn)));
  CHECK_THROWS_WITH_AS((void)tensor_linear(sgn, two), doctest::Contains("NotLinear"), Error);
}

TEST_CASE("epsilon families") {
  auto g = s3();
  // c = 1: just the trivial character
  GroupMap trivial_map(g, cyclic_group(1), std::vector<Element>(g->order(), 0));
  auto fam1 = epsilon_family(g, trivial_map);
  REQUIRE(fam1.size() == 1);
  CHECK(fam1[0].degree() == 1);

  // sign grading: {trivial, sgn}, distinguished on transpositions
  auto fam2 = epsilon_family(g, sign_grading(g));
  REQUIRE(fam2.size() == 2);
  CHECK(fam2[0].values[1] == Cyclotomic(1));
  CHECK(fam2[1].values[1] == Cyclotomic(-1));

  // Z4 with the identity grading: the four linear characters, closed under product
  auto z4 = cyclic_group(4);
  GroupMap ident(z4, z4, {0, 1, 2, 3});
  auto fam4 = epsilon_family(z4, ident);
  REQUIRE(fam4.size() == 4);
  CharacterTable t4(z4);
  for (const auto& eps : fam4) CHECK(t4.index_of(eps) >= 0);
  for (const auto& a : fam4)
    for (const auto& b : fam4) {
      ClassFunction prod = tensor_linear(a, b);
      CHECK(std::count_if(fam4.begin(), fam4.end(),
                          [&](const ClassFunction& e) { return e == prod; }) == 1);
    }

  // non-surjective map is rejected
  GroupMap to_z2_zero(g, cyclic_group(2), std::vector<Element>(g->order(), 0));
  CHECK_THROWS_WITH_AS((void)epsilon_family(g, to_z2_zero), doctest::Contains("NotSurjective"),
                       Error);
}

TEST_CASE("extensions") {
  auto g = s3();
  GroupMap zeta = sign_grading(g);
  std::vector<Element> even;
  for (int x = 0; x < g->order(); ++x)
    if (zeta(x) == 0) even.push_back(x);
  Subgroup a3(g, even);
  CharacterTable ta3(a3.group());

  // whole group: the only extension is sigma itself
  std::vector<Element> all(g->order());
  for (int i = 0; i < g->order(); ++i) all[i] = i;
  Subgroup whole(g, all);
  CharacterTable tg(g);
  ClassFunction sigma_whole = restrict_to(tg.irreducible(2), whole);
  auto self_ext = extensions_of(sigma_whole, whole);
  REQUIRE(self_ext.size() == 1);
  CHECK(self_ext[0] == tg.irreducible(2));

  int trivial_idx = -1, nontrivial_idx = -1;
  for (int i = 0; i < ta3.size(); ++i) {
    bool is_triv = true;
    for (const auto& v : ta3.irreducible(i).values) is_triv &= v == Cyclotomic(1);
    if (is_triv)
      trivial_idx = i;
    else
      nontrivial_idx = i;
  }
  REQUIRE(trivial_idx >= 0);
  REQUIRE(nontrivial_idx >= 0);

  auto ext_triv = extensions_of(ta3.irreducible(trivial_idx), a3);
  CHECK(ext_triv.size() == 2);  // trivial and sign
  for (const auto& e : ext_triv) CHECK(e.degree() == 1);

  auto ext_non = extensions_of(ta3.irreducible(nontrivial_idx), a3);
  CHECK(ext_non.empty());  // fuses into the 2-dimensional character

  // the extension set is a closed orbit of size c under the epsilon family
  auto fam = epsilon_family(g, zeta);
  REQUIRE(fam.size() == 2);
  for (const auto& ext : ext_triv)
    for (const auto& eps : fam) {
      ClassFunction twisted = tensor_linear(ext, eps);
      CHECK(std::count_if(ext_triv.begin(), ext_triv.end(),
                          [&](const ClassFunction& e) { return e == twisted; }) == 1);
    }
}

TEST_CASE("restriction commutes with quotient-factoring linear twists") {
  auto g = s3();
  CharacterTable t(g);
  GroupMap zeta = sign_grading(g);
  auto fam = epsilon_family(g, zeta);
  // subgroup on which the twist still makes sense: the centralizer of a
  // transposition (zeta restricts to it)
  Subgroup z2(g, {g->identity(), g->class_rep(1)});
  for (const auto& chi : t.irreducibles())
    for (const auto& eps : fam) {
      ClassFunction lhs = restrict_to(tensor_linear(chi, eps), z2);
      ClassFunction rhs = tensor_linear(restrict_to(chi, z2), restrict_to(eps, z2));
      CHECK(lhs == rhs);
    }
}
