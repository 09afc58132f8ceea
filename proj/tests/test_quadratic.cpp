#include <doctest.h>

#include "weilmod/quadratic.hpp"

using namespace weilmod;

namespace {

template <class K>
QuadraticForm<K> random_form(const K& F, Rng& rng, int n) {
  auto g = zeros(F, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      typename K::Elem v = F.zero();
      if constexpr (K::finite)
        v = F.random(rng);
      else if (rng.uniform(0, 3))
        v = F.random(rng, 2, 12);
      g(i, j) = g(j, i) = v;
    }
  return QuadraticForm<K>(F, g);
}

}  // namespace

TEST_CASE("radical") {
  FqBase F3(3, 1), F5(5, 1);
  auto z = QuadraticForm<FqBase>(F3, zeros(F3, 2, 2));
  CHECK(z.radical().c == 2);
  auto d = QuadraticForm<FqBase>::diagonal(F3, {F3.one(), F3.zero()});
  REQUIRE(d.radical().c == 1);
  CHECK(d.radical()(0, 0).is_zero());
  CHECK(!d.radical()(1, 0).is_zero());
  auto h = QuadraticForm<FqBase>(F5, from_rows(F5, {{1, 1}, {1, 1}}));
  REQUIRE(h.radical().c == 1);
  CHECK(h.radical()(0, 0) == -h.radical()(1, 0));
}

TEST_CASE("diagonalize") {
  QpBase Q3(3);
  auto d = QuadraticForm<QpBase>::diagonal(Q3, {Rational(1), Rational(2)});
  CHECK(d.diagonalization().diag == std::vector<Rational>{1, 2});
  FqBase F5(5, 1);
  auto h = QuadraticForm<FqBase>(F5, from_rows(F5, {{0, 1}, {1, 0}}));
  auto& dg = h.diagonalization();
  REQUIRE(dg.diag.size() == 2);
  CHECK(dg.diag[0] == F5.from_int(2));
  CHECK(h.det_class() == square_class(F5, F5.from_int(-1)));
}

TEST_CASE("diagonalization exhaustively over F_3^2") {
  FqBase F(3, 1);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) {
        QuadraticForm<FqBase> q(F, from_rows(F, {{a, b}, {b, c}}));
        auto& dg = q.diagonalization();
        auto P = hcat(dg.basis, q.radical());
        REQUIRE(P.c == 2);
        for (int y0 = 0; y0 < 3; ++y0)
          for (int y1 = 0; y1 < 3; ++y1) {
            auto y = from_rows(F, {{y0}, {y1}});
            auto x = P * y;
            GFElem s = F.zero();
            for (size_t i = 0; i < dg.diag.size(); ++i) s += dg.diag[i] * y(int(i), 0) * y(int(i), 0);
            CHECK(q.value(x) == s);
          }
      }
}

TEST_CASE("hilbert examples") {
  QpBase Q5(5), Q3(3);
  FqBase F7(7, 1);
  CHECK(hilbert(Q5, Rational(5), Rational(2)) == -1);
  CHECK(hilbert_by_search(5, Rational(5), Rational(2)) == -1);
  CHECK(hilbert(Q5, Rational(2), Rational(3)) == 1);
  CHECK(hilbert(F7, F7.from_int(3), F7.from_int(5)) == 1);
  CHECK(hilbert(Q3, Rational(3), Rational(3)) == -1);
  CHECK_THROWS_AS(hilbert(Q5, Rational(0), Rational(2)), Error);
}

TEST_CASE("hasse examples") {
  QpBase Q3(3);
  CHECK(QuadraticForm<QpBase>::diagonal(Q3, {Rational(1), Rational(1)}).hasse() == 1);
  CHECK(QuadraticForm<QpBase>::diagonal(Q3, {Rational(3), Rational(3)}).hasse() == -1);
  FqBase F(5, 1);
  CHECK(QuadraticForm<FqBase>::diagonal(F, {F.from_int(2), F.from_int(3), F.from_int(2)}).hasse() == 1);
}

TEST_CASE("square classes") {
  QpBase Q5(5);
  CHECK(square_class(Q5, Rational(4)).tag == 0);
  auto c = square_class(Q5, Rational(10));
  CHECK(c.tag == 3);
  CHECK(c.rep == Rational(10));
  FqBase F7(7, 1);
  CHECK(square_class(F7, F7.from_int(2)).tag == 0);
  CHECK(square_class(F7, F7.from_int(3)).tag == 1);
  Rng rng(3);
  for (int it = 0; it < 200; ++it) {
    auto a = Q5.random(rng), s = Q5.random(rng);
    CHECK(square_class(Q5, a * s * s) == square_class(Q5, a));
    CHECK((square_class(Q5, a) == square_class(Q5, s)) == Q5.is_square(a / s));
  }
}

TEST_CASE("hilbert symbol laws over Q_p") {
  for (int p : {3, 5, 7, 13}) {
    QpBase Q(p);
    Rng rng(100 + p);
    for (int it = 0; it < 300; ++it) {
      auto a = Q.random(rng), b = Q.random(rng), c = Q.random(rng);
      REQUIRE(hilbert(Q, a, b) == hilbert(Q, b, a));
      REQUIRE(hilbert(Q, a * c, b) == hilbert(Q, a, b) * hilbert(Q, c, b));
      REQUIRE(hilbert(Q, a, -a) == 1);
      if (a != 1) REQUIRE(hilbert(Q, a, 1 - a) == 1);
    }
    for (int it = 0; it < 200; ++it) {
      auto a = Q.random(rng), b = Q.random(rng);
      REQUIRE(hilbert(Q, a, b) == hilbert_by_search(p, a, b));
    }
  }
}

TEST_CASE("hilbert symbol laws over F_q exhaustively") {
  for (auto [p, f] : {std::pair{3, 1}, {5, 1}, {7, 1}, {3, 2}}) {
    FqBase F(p, f);
    for (auto a : F.elements())
      for (auto b : F.elements())
        if (!a.is_zero() && !b.is_zero()) REQUIRE(hilbert(F, a, b) == 1);
  }
}

TEST_CASE("hasse independent of diagonalization") {
  Rng rng(5);
  for (int p : {3, 5, 7}) {
    QpBase Q(p);
    for (int it = 0; it < 100; ++it) {
      int n = int(rng.uniform(1, 4));
      auto q = random_form(Q, rng, n);
      auto d2 = q.diagonalize_with(true);
      REQUIRE(d2.diag.size() == q.diagonalization().diag.size());
      CHECK(q.hasse_of(d2.diag) == q.hasse());
      if (q.rank()) {
        Rational a = 1;
        for (auto& x : d2.diag) a *= x;
        CHECK(square_class(Q, a) == q.det_class());
      }
    }
  }
}
