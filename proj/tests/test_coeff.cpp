#include <doctest.h>

#include "weilmod/coeff.hpp"

using namespace weilmod;

TEST_CASE("zeta_3 minimal polynomial") {
  auto z = CycInt::zeta(3, 1);
  CHECK(z + z * z == CycInt(-1));
  CHECK(z.pow(3) == CycInt(1));
}

TEST_CASE("(1 + 2 zeta_3)^2 = -3") {
  auto z = CycInt::zeta(3, 1);
  auto g = CycInt(1) + CycInt(2) * z;
  CHECK(g * g == CycInt(-3));
}

TEST_CASE("inverse of zeta_5 is zeta_5^4") {
  auto z = CycInt::zeta(5, 1);
  CHECK(z.inv() == CycInt::zeta(5, 1, 4));
  CHECK(z.inv() * z == CycInt(1));
}

TEST_CASE("level lifting and descent") {
  auto z9 = CycInt::zeta(3, 2);
  CHECK(z9.pow(3) == CycInt::zeta(3, 1));
  CHECK(z9.pow(9) == CycInt(1));
  CHECK(z9.pow(3).descend().level() == 1);
  CHECK((z9.pow(9) + CycInt(2)).descend().p() == 0);
  CHECK(CycInt::zeta(3, 1) + CycInt::zeta(3, 2) == CycInt::zeta(3, 2) + CycInt::zeta(3, 2, 3));
}

TEST_CASE("ring mismatch is an error") {
  CHECK_THROWS_AS(CycInt::zeta(3, 1) + CycInt::zeta(5, 1), Error);
}

TEST_CASE("fraction field round trip") {
  Rng rng(7);
  for (int it = 0; it < 200; ++it) {
    std::vector<BigInt> a(6), b(6);
    for (auto& x : a) x = rng.uniform(-9, 9);
    for (auto& x : b) x = rng.uniform(-9, 9);
    auto x = CycInt::from_coeffs(7, 1, a), y = CycInt::from_coeffs(7, 1, b);
    if (y.is_zero()) continue;
    CHECK((x / y) * y == x);
  }
}

TEST_CASE("galois conjugation and norm") {
  auto z = CycInt::zeta(5, 1);
  CHECK(z.conj() == z.pow(4));
  auto g = CycInt(1) + CycInt(2) * CycInt::zeta(3, 1);
  CHECK(g.norm() == Rational(3));
}

TEST_CASE("root_of_unity over finite fields") {
  CHECK(GF::get(7, 1).root_of_unity(3) == 2);
  CHECK_THROWS_AS(GF::get(5, 1).root_of_unity(3), Error);
  const GF& F25 = GF::get(5, 2);
  uint32_t r = F25.root_of_unity(3);
  CHECK(F25.order(r) == 3);
  CHECK(F25.pow(r, 3) == 1);
  CHECK(F25.pow(r, 1) != 1);
  CHECK(minimal_degree(5, 3) == 2);
  CHECK(minimal_degree(2, 7) == 3);
}

TEST_CASE("stored polynomials are irreducible with primitive x") {
  int pd[][2] = {{2, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 2}, {3, 3}, {3, 4}, {5, 2}, {5, 3},
                 {5, 4}, {7, 2}, {7, 3}, {7, 4}, {11, 2}, {13, 2}};
  for (auto& e : pd) {
    const GF& F = GF::get(e[0], e[1]);
    CAPTURE(F.name());
    CHECK(F.conway());
    CHECK(F.generator() == uint32_t(e[0]));
    CHECK(F.order(F.generator()) == F.size() - 1);
  }
}

TEST_CASE("F_9 field axioms by exhaustion") {
  const GF& F = GF::get(3, 2);
  for (uint32_t a = 0; a < 9; ++a)
    for (uint32_t b = 0; b < 9; ++b) {
      CHECK(F.add(a, b) == F.add(b, a));
      CHECK(F.mul(a, b) == F.mul(b, a));
      for (uint32_t c = 0; c < 9; ++c) CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
    }
  for (uint32_t a = 1; a < 9; ++a) CHECK(F.mul(a, F.inv(a)) == 1);
}

TEST_CASE("reduce_mod_ell examples") {
  ReductionMap r(3, 1, 7, 1);
  CHECK(r.image_of_zeta().v == 2);
  auto g = CycInt(1) + CycInt(2) * CycInt::zeta(3, 1);
  CHECK(r(g).v == 5);
  CHECK(r(CycInt(0)).v == 0);
  CHECK(r(g * g).v == 4);
  CHECK(r(g * g) == r(g) * r(g));
  CHECK_THROWS_AS(r(CycInt(Rational(1, 7))), Error);
  CHECK(r(CycInt(Rational(1, 3))).v == 5);
}

TEST_CASE("reduction is a ring homomorphism") {
  Rng rng(11);
  ReductionMap r(5, 1, 2, 4);
  ReductionMap r7(5, 1, 7, 4);
  for (int it = 0; it < 10000; ++it) {
    std::vector<BigInt> a(4), b(4);
    for (auto& x : a) x = rng.uniform(-50, 50);
    for (auto& x : b) x = rng.uniform(-50, 50);
    auto x = CycInt::from_coeffs(5, 1, a), y = CycInt::from_coeffs(5, 1, b);
    const ReductionMap& m = (it & 1) ? r : r7;
    REQUIRE(m(x * y) == m(x) * m(y));
    REQUIRE(m(x + y) == m(x) + m(y));
  }
  CHECK(r(CycInt(1)).v == 1);
}

TEST_CASE("root of unity order in coefficient rings") {
  FiniteRing R(2, 2, 3);
  CHECK(R.zeta(3) == R.one());
  CHECK(R.zeta(1) != R.one());
  auto z = CycInt::zeta(7, 2);
  CHECK(z.pow(49) == CycInt(1));
  CHECK(z.pow(7) != CycInt(1));
}
