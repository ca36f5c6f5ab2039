#include <catch2/catch_amalgamated.hpp>

#include "radkit/arith.hpp"

using namespace radkit;

TEST_CASE("factorize basics") {
  auto f1 = factorize(1);
  CHECK(f1.sign == 1);
  CHECK(f1.factors.empty());

  auto fm4 = factorize(-4);
  CHECK(fm4.sign == -1);
  REQUIRE(fm4.factors.size() == 1);
  CHECK(fm4.factors[0].first == 2);
  CHECK(fm4.factors[0].second == 2);

  auto f360 = factorize(360);
  REQUIRE(f360.factors.size() == 3);
  CHECK(f360.factors[0] == std::pair<Int, unsigned>{2, 3});
  CHECK(f360.factors[1] == std::pair<Int, unsigned>{3, 2});
  CHECK(f360.factors[2] == std::pair<Int, unsigned>{5, 1});

  CHECK_THROWS_AS(factorize(0), domain_error);
}

TEST_CASE("factorize reconstructs input") {
  for (long n = 1; n <= 20000; ++n) {
    CHECK(factorize(n).value() == n);
    CHECK(factorize(-n).value() == -n);
  }
  // a few bigger ones incl. semiprimes beyond the trial bound
  Int big = Int("1000003") * Int("1000033");
  CHECK(factorize(big).value() == big);
  CHECK(factorize(big).factors.size() == 2);
  Int pow7 = pow_int(Int("10000019"), 3);
  auto fp = factorize(pow7);
  REQUIRE(fp.factors.size() == 1);
  CHECK(fp.factors[0].second == 3);
}

TEST_CASE("euler phi") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(8) == 4);
  CHECK(euler_phi(21) == 12);
  // brute force comparison
  for (long n = 1; n <= 2000; ++n) {
    long count = 0;
    for (long a = 1; a <= n; ++a)
      if (gcd(Int(a), Int(n)) == 1) ++count;
    CHECK(euler_phi(n) == count);
  }
}

TEST_CASE("multiplicative order") {
  CHECK(multiplicative_order(2, 7) == 3);
  CHECK(multiplicative_order(1, 5) == 1);
  CHECK(multiplicative_order(5, 8) == 2);
  CHECK_THROWS_AS(multiplicative_order(2, 4), domain_error);

  // ord(a) divides phi(n) on a swept grid of valid pairs
  size_t checked = 0;
  for (long n = 2; n <= 150 && checked < 10000; ++n) {
    Int phi = euler_phi(n);
    for (long a = 1; a < n; ++a) {
      if (gcd(Int(a), Int(n)) != 1) continue;
      Int ord = multiplicative_order(a, n);
      CHECK(divides(ord, phi));
      CHECK(pow_mod(a, ord, n) == 1);
      ++checked;
    }
  }
  CHECK(checked >= 5000);
}

TEST_CASE("legendre symbol") {
  CHECK(legendre(1, 5) == 1);
  CHECK(legendre(2, 5) == -1);
  CHECK(legendre(5, 5) == 0);
  CHECK_THROWS_AS(legendre(3, 4), domain_error);
  CHECK_THROWS_AS(legendre(3, 2), domain_error);
  // multiplicativity spot check mod 23
  for (long a = 1; a < 23; ++a)
    for (long b = 1; b < 23; ++b)
      CHECK(legendre(a, 23) * legendre(b, 23) == legendre(a * b, 23));
}

TEST_CASE("zsygmondy witness") {
  auto w23 = zsygmondy_witness(2, 3);
  REQUIRE(w23.has_value());
  CHECK(*w23 == 7);
  auto w24 = zsygmondy_witness(2, 4);
  REQUIRE(w24.has_value());
  CHECK(*w24 == 5);
  auto w35 = zsygmondy_witness(3, 5);
  REQUIRE(w35.has_value());
  CHECK(*w35 == 11);
  CHECK_FALSE(zsygmondy_witness(2, 6).has_value());

  for (long p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}) {
    for (unsigned long m = 3; m <= 20; ++m) {
      if (p == 2 && m == 6) continue;
      auto q = zsygmondy_witness(p, m);
      REQUIRE(q.has_value());
      CHECK(*q != p);
      CHECK(is_prime(*q));
      CHECK(multiplicative_order(fmod(p, *q), *q) == m);
    }
  }
}

TEST_CASE("rational helpers") {
  CHECK(mod1(make_rat(7, 3)) == make_rat(1, 3));
  CHECK(mod1(make_rat(-1, 4)) == make_rat(3, 4));
  CHECK(mod1(Rat(2)) == 0);
  CHECK(pow_rat(make_rat(2, 3), -2) == make_rat(9, 4));
  auto r = rational_nth_root(make_rat(27, 8), 3);
  REQUIRE(r.has_value());
  CHECK(*r == make_rat(3, 2));
  CHECK_FALSE(rational_nth_root(Rat(2), 2).has_value());
  auto rn = rational_nth_root(Rat(-8), 3);
  REQUIRE(rn.has_value());
  CHECK(*rn == -2);
  CHECK_FALSE(rational_nth_root(Rat(-4), 2).has_value());
}
