#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "radkit/radical.hpp"

using namespace radkit;

namespace {

Radical rnd_radical(std::mt19937& rng) {
  std::uniform_int_distribution<int> mdist(1, 12), kdist(0, 11);
  std::uniform_int_distribution<int> ddist(1, 6), ndist(-5, 5);
  int m = mdist(rng);
  Rat u = make_rat(kdist(rng), m);
  std::map<Int, Rat> e;
  for (Int p : {2, 3, 5}) {
    if (rng() % 2) {
      Rat x = make_rat(ndist(rng), ddist(rng));
      if (x != 0) e[p] = x;
    }
  }
  return Radical::make(u, e);
}

}  // namespace

TEST_CASE("make canonicalizes") {
  auto minus_one = Radical::make(make_rat(1, 2), {});
  CHECK(minus_one.as_rational().value() == -1);

  auto e = Radical::make(make_rat(1, 8), {{2, make_rat(1, 2)}});
  CHECK(e == eta());

  auto already = Radical::make(make_rat(3, 8), {{2, make_rat(3, 2)}});
  CHECK(already.torsion() == make_rat(3, 8));
  CHECK(already.exponents().at(2) == make_rat(3, 2));

  CHECK_THROWS_AS(Radical::make(Rat(0), {{4, make_rat(1, 2)}}), domain_error);
  CHECK_THROWS_AS(Radical::make(Rat(0), {{-3, make_rat(1, 2)}}), domain_error);

  // reduction mod 1 and dropped zero exponents
  auto r = Radical::make(make_rat(9, 8), {{2, Rat(0)}});
  CHECK(r.torsion() == make_rat(1, 8));
  CHECK(r.exponents().empty());
}

TEST_CASE("group law examples") {
  auto e = eta();
  auto sq = e.mul(e);
  CHECK(sq == Radical::make(make_rat(1, 4), {{2, Rat(1)}}));  // 2*zeta_4
  CHECK(e.pow(4) == Radical::make(make_rat(1, 2), {{2, Rat(2)}}));  // -4
  CHECK(e.pow(4).as_rational().value() == -4);
  CHECK(e.pow(8).as_rational().value() == 16);
  auto s3 = Radical::make(Rat(0), {{3, make_rat(1, 2)}});
  CHECK(s3.inv() == Radical::make(Rat(0), {{3, make_rat(-1, 2)}}));
}

TEST_CASE("group law properties") {
  std::mt19937 rng(99);
  for (int i = 0; i < 2000; ++i) {
    auto a = rnd_radical(rng), b = rnd_radical(rng), c = rnd_radical(rng);
    CHECK(a.mul(b) == b.mul(a));
    CHECK(a.mul(b.mul(c)) == a.mul(b).mul(c));
    CHECK(a.mul(a.inv()).is_one());
    auto p3 = a.mul(a).mul(a);
    CHECK(a.pow(3) == p3);
    CHECK(a.pow(-2) == a.inv().mul(a.inv()));
  }
}

TEST_CASE("as_rational") {
  CHECK(Radical::make(make_rat(1, 2), {{2, Rat(2)}}).as_rational().value() == -4);
  CHECK_FALSE(eta().as_rational().has_value());
  CHECK(Radical::make(Rat(0), {}).as_rational().value() == 1);
}

TEST_CASE("order over Q") {
  CHECK(eta().order_over_q() == 4);
  CHECK(zeta(3).order_over_q() == 3);
  CHECK(Radical::make(Rat(0), {{5, make_rat(1, 2)}}).order_over_q() == 2);
  // minimality: no smaller power is rational
  for (long n = 1; n < 4; ++n) CHECK_FALSE(eta().pow(n).as_rational().has_value());
  CHECK(eta().pow(4).as_rational().has_value());

  // order of a product divides lcm of orders
  std::mt19937 rng(7);
  for (int i = 0; i < 1000; ++i) {
    auto a = rnd_radical(rng), b = rnd_radical(rng);
    Int l = lcm(a.order_over_q(), b.order_over_q());
    CHECK(divides(a.mul(b).order_over_q(), l));
  }
}

TEST_CASE("ratio of radical to its negative is rational") {
  std::mt19937 rng(13);
  for (int i = 0; i < 500; ++i) {
    auto a = rnd_radical(rng);
    CHECK(a.mul(a.negate().inv()).as_rational().has_value());
  }
}

TEST_CASE("eta constant") {
  CHECK(eta() == Radical::make(make_rat(1, 8), {{2, make_rat(1, 2)}}));
  CHECK(eta().mul(eta()) == Radical::make(make_rat(1, 4), {{2, Rat(1)}}));
  CHECK(eta().pow(8) == Radical::make(Rat(0), {{2, Rat(4)}}));
}

TEST_CASE("parse and format") {
  CHECK(Radical::parse("zeta(8)*rt(2,2)") == eta());
  CHECK(Radical::parse("rt(-4,4)") == eta());  // principal 4th root of -4
  CHECK(Radical::parse("rt(8,6)") ==
        Radical::make(Rat(0), {{2, make_rat(1, 2)}}));
  CHECK(Radical::parse("rt(12,2)") ==
        Radical::make(Rat(0), {{2, Rat(1)}, {3, make_rat(1, 2)}}));
  CHECK(Radical::parse(" zeta( 8 ) ^ 3 * rt( 2 , 2 ) ^ -1 ") ==
        Radical::make(make_rat(3, 8), {{2, make_rat(-1, 2)}}));
  CHECK(Radical::parse("6/2") == Radical::parse("3"));
  CHECK(Radical::parse("rt(3/2,2)") ==
        Radical::make(Rat(0), {{2, make_rat(-1, 2)}, {3, make_rat(1, 2)}}));
  CHECK(Radical::parse("-1") == Radical::make(make_rat(1, 2), {}));

  CHECK_THROWS_AS(Radical::parse("rt(0,2)"), parse_error);
  CHECK_THROWS_AS(Radical::parse("zeta(8"), parse_error);
  CHECK_THROWS_AS(Radical::parse("bogus"), parse_error);
  CHECK_THROWS_AS(Radical::parse("rt(2,2) junk"), parse_error);
  try {
    Radical::parse("zeta(8)*@");
    FAIL("no throw");
  } catch (const parse_error& e) {
    CHECK(e.offset == 8);
  }

  // round trips
  std::mt19937 rng(1234);
  for (int i = 0; i < 500; ++i) {
    auto a = rnd_radical(rng);
    CHECK(Radical::parse(a.format()) == a);
  }
  CHECK(Radical::parse("1").is_one());
  CHECK(Radical::make(Rat(0), {}).format() == "1");
}

TEST_CASE("numeric eval") {
  auto s2 = Radical::make(Rat(0), {{2, make_rat(1, 2)}});
  auto v = s2.numeric_eval(96);
  auto sq = imul(v.re, v.re, 160);
  CHECK(!sq.contains_zero());
  CHECK(v.im.contains_zero());
  CHECK(v.re.is_positive());

  auto m1 = Radical::make(make_rat(1, 2), {}).numeric_eval(64);
  CHECK(m1.im.contains_zero());
  CHECK(m1.re.is_negative());

  // 1 + zeta_4 = eta: re and im both enclose 1
  auto ev = eta().numeric_eval(128);
  auto shift_re = isub(ev.re, DItv(1), 160);
  auto shift_im = isub(ev.im, DItv(1), 160);
  CHECK(shift_re.contains_zero());
  CHECK(shift_im.contains_zero());
}

TEST_CASE("canonicality vs numerics") {
  // distinct canonical forms of bounded radicals separate numerically
  std::mt19937 rng(31337);
  for (int i = 0; i < 60; ++i) {
    auto a = rnd_radical(rng), b = rnd_radical(rng);
    if (a == b) {
      CHECK_FALSE(cdisjoint(a.numeric_eval(128), b.numeric_eval(128)));
      continue;
    }
    bool separated = false;
    for (unsigned bits = 128; bits <= 1024 && !separated; bits *= 2) {
      separated = cdisjoint(a.numeric_eval(bits), b.numeric_eval(bits));
    }
    CHECK(separated);
  }
}
