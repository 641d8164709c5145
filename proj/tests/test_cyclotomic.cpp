#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nfourier/cyclotomic.hpp"
#include "nfourier/error.hpp"

using nfourier::Cyclotomic;
using nfourier::Rational;

namespace {

Cyclotomic zeta(long n, long k = 1) { return Cyclotomic::root_of_unity(n, k); }

// Moebius function, independent oracle for the primitive-root-sum identity.
int moebius(long n) {
  int mu = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      mu = -mu;
    }
  }
  if (n > 1) mu = -mu;
  return mu;
}

Cyclotomic random_value(std::mt19937_64& rng) {
  static const long conductors[] = {1, 3, 4, 5, 6, 8, 12};
  std::uniform_int_distribution<int> pick(0, 6);
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  long n = conductors[pick(rng)];
  Cyclotomic acc;
  for (long e = 0; e < nfourier::euler_phi(n); ++e) {
    Cyclotomic term = zeta(n, e);
    term *= Rational(num(rng), den(rng));
    acc += term;
  }
  return acc;
}

}  // namespace

TEST_CASE("roots of unity: basic values") {
  CHECK(zeta(1, 0) == Cyclotomic(1));
  CHECK(zeta(4, 2) == Cyclotomic(-1));
  CHECK(zeta(3, 1) + zeta(3, 2) == Cyclotomic(-1));
  CHECK(zeta(5, 1) * zeta(5, 4) == Cyclotomic(1));
  CHECK(zeta(8).conj() == zeta(8, 7));
}

TEST_CASE("rational arithmetic") {
  CHECK(Cyclotomic(2).inverse() == Cyclotomic(Rational(1, 2)));
  CHECK(Cyclotomic(Rational(3, 4)) + Cyclotomic(Rational(1, 4)) == Cyclotomic(1));
  CHECK_THROWS_AS(Cyclotomic(0).inverse(), nfourier::Error);
}

TEST_CASE("conductor minimality on normalization") {
  CHECK(zeta(6, 2).conductor() == 3);
  CHECK(zeta(6, 2) == zeta(3, 1));
  CHECK(zeta(6, 1).conductor() == 3);  // zeta_6 = 1 + zeta_3
  CHECK(zeta(6, 1) == Cyclotomic(1) + zeta(3, 1));
  CHECK(zeta(8, 2) == zeta(4, 1));
  CHECK(zeta(8, 4) == Cyclotomic(-1));
  CHECK(zeta(8, 4).conductor() == 1);
  CHECK(zeta(12, 3).conductor() == 4);
}

TEST_CASE("power identities pin the reduction") {
  for (long n : {2L, 3L, 4L, 5L, 6L, 7L, 8L, 9L, 10L, 12L, 15L, 16L, 20L, 24L, 30L, 60L}) {
    Cyclotomic z = zeta(n);
    Cyclotomic acc(1);
    for (long k = 1; k < n; ++k) {
      acc *= z;
      CHECK(acc != Cyclotomic(1));  // primitivity
    }
    acc *= z;
    CHECK(acc == Cyclotomic(1));  // zeta_n^n = 1

    // sum over a full cycle vanishes
    Cyclotomic cycle;
    for (long k = 0; k < n; ++k) cycle += zeta(n, k);
    CHECK(cycle == Cyclotomic(0));

    // sum of primitive n-th roots equals the Moebius value
    Cyclotomic prim;
    for (long k = 0; k < n; ++k)
      if (std::gcd(k, n) == 1) prim += zeta(n, k);
    CHECK(prim == Cyclotomic(moebius(n)));
  }
}

TEST_CASE("as_root_of_unity") {
  auto r = Cyclotomic(1).as_root_of_unity();
  REQUIRE(r.has_value());
  CHECK(r->first == 1);
  CHECK(r->second == 0);

  r = Cyclotomic(-1).as_root_of_unity();
  REQUIRE(r.has_value());
  CHECK(r->first == 2);
  CHECK(r->second == 1);

  CHECK_FALSE(Cyclotomic(Rational(1, 2)).as_root_of_unity().has_value());
  CHECK_FALSE(Cyclotomic(0).as_root_of_unity().has_value());

  r = zeta(12, 7).as_root_of_unity();
  REQUIRE(r.has_value());
  CHECK(r->first == 12);
  CHECK(r->second == 7);

  // modulus 1 but not a root of unity: 3/5 + 4/5 i
  Cyclotomic a = Cyclotomic(Rational(3, 5)) + zeta(4) * Cyclotomic(Rational(4, 5));
  CHECK(a * a.conj() == Cyclotomic(1));
  CHECK_FALSE(a.as_root_of_unity().has_value());
}

TEST_CASE("to_float advisory embedding") {
  auto f1 = Cyclotomic(1).to_float();
  CHECK(f1.real() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(f1.imag() == doctest::Approx(0.0).epsilon(1e-12));
  auto fi = zeta(4).to_float();
  CHECK(fi.real() == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(fi.imag() == doctest::Approx(1.0).epsilon(1e-12));
  auto fh = Cyclotomic(Rational(-1, 2)).to_float();
  CHECK(fh.real() == doctest::Approx(-0.5).epsilon(1e-12));
}

TEST_CASE("field axioms on randomized triples") {
  std::mt19937_64 rng(20240901);
  static const Cyclotomic one(1);
  for (int t = 0; t < 200; ++t) {
    Cyclotomic a = random_value(rng), b = random_value(rng), c = random_value(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a - a == Cyclotomic(0));
    CHECK((a * b).conj() == a.conj() * b.conj());
    CHECK(a.conj().conj() == a);
    if (!a.is_zero()) CHECK(a * a.inverse() == one);
  }
}

TEST_CASE("inverse of a non-root value") {
  Cyclotomic a = Cyclotomic(1) + zeta(3);
  CHECK(a * a.inverse() == Cyclotomic(1));
  Cyclotomic b = Cyclotomic(Rational(2, 3)) + zeta(8, 3) - zeta(8, 1);
  CHECK(b * b.inverse() == Cyclotomic(1));
}

TEST_CASE("total order is consistent") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    Cyclotomic a = random_value(rng), b = random_value(rng);
    int ab = Cyclotomic::compare(a, b);
    int ba = Cyclotomic::compare(b, a);
    CHECK(ab == -ba);
    CHECK(Cyclotomic::compare(a, a) == 0);
    if (a == b) CHECK(ab == 0);
    if (ab == 0) CHECK(a == b);
  }
}

TEST_CASE("conductor overflow policy is loud") {
  CHECK_THROWS_AS(Cyclotomic::root_of_unity(3000, 1), nfourier::Error);
}
