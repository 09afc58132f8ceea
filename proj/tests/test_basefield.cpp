#include <doctest.h>

#include "weilmod/basefield.hpp"

using namespace weilmod;

TEST_CASE("frac_part") {
  CHECK(frac_part(Rational(3, 5), 5) == std::make_pair(BigInt(3), 1));
  CHECK(frac_part(Rational(7), 5) == std::make_pair(BigInt(0), 0));
  CHECK(frac_part(Rational(1, 50), 5) == std::make_pair(BigInt(13), 2));
}

TEST_CASE("psi values") {
  FqBase F9(3, 2);
  CHECK(F9.psi(F9.zero()) == CycInt(1));
  CHECK(F9.psi(F9.one()) == CycInt::zeta(3, 1, 2));
  QpBase Q5(5);
  CHECK(Q5.psi(Rational(3, 5)) == CycInt::zeta(5, 1, 3));
  CHECK(Q5.psi(Rational(0)) == CycInt(1));
  CHECK(Q5.psi(Rational(17)) == CycInt(1));
}

TEST_CASE("psi is a nontrivial character over F_q, exhaustively") {
  for (auto [p, f] : {std::pair{3, 1}, {3, 2}, {5, 1}, {7, 1}}) {
    FqBase F(p, f);
    bool nontrivial = false;
    for (auto x : F.elements()) {
      if (F.psi_exp(x)) nontrivial = true;
      for (auto y : F.elements()) REQUIRE((F.psi_exp(x + y) - F.psi_exp(x) - F.psi_exp(y)) % p == 0);
    }
    CHECK(nontrivial);
  }
}

TEST_CASE("p-adic character law on random pairs") {
  for (int p : {3, 5, 7}) {
    QpBase Q(p);
    Rng rng(p);
    CHECK(Q.psi(Rational(1, p)) != CycInt(1));
    for (int it = 0; it < 3000; ++it) {
      auto x = Q.random(rng, 3), y = Q.random(rng, 3);
      REQUIRE(Q.psi(x + y) == Q.psi(x) * Q.psi(y));
    }
  }
}

TEST_CASE("twisted psi") {
  QpBase Q(5, Rational(1, 5));
  CHECK(Q.psi(Rational(3)) == CycInt::zeta(5, 1, 3));
  CHECK(Q.psi(Rational(5)) == CycInt(1));
}

TEST_CASE("modulus") {
  QpBase Q5(5);
  CHECK(Q5.modulus(Rational(5)) == Rational(1, 5));
  CHECK(Q5.modulus(Rational(3, 7)) == Rational(1));
  CHECK(Q5.modulus(Rational(1, 25)) == Rational(25));
  CHECK(Q5.modulus(Rational(10) * Rational(3, 25)) == Q5.modulus(Rational(10)) * Q5.modulus(Rational(3, 25)));
  FqBase F(7, 1);
  CHECK(F.modulus(F.from_int(3)) == Rational(1));
  CHECK_THROWS_AS(F.modulus(F.zero()), Error);
}

TEST_CASE("descriptors") {
  auto s = parse_field("fq:3:2");
  CHECK(s.finite);
  CHECK(s.p == 3);
  CHECK(s.f == 2);
  CHECK(!parse_field("qp:5").finite);
  CHECK_THROWS_AS(parse_field("fq:2:1"), Error);
  CHECK_THROWS_AS(parse_field("zz"), Error);
  CHECK(parse_psi("psi:twist:3/5").twist == Rational(3, 5));
  CHECK(FqBase(3, 2).descriptor() == "fq:3:2");
  CHECK_THROWS_AS(FqBase(2, 1), Error);
}
