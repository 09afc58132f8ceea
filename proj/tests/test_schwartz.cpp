#include <doctest.h>

#include "weilmod/metaplectic.hpp"
#include "weilmod/schwartz.hpp"

using namespace weilmod;

namespace {

using PSF = PhaseStepFunction;
using HQ = HeisenbergElement<QpBase>;

Mat<Rational> sl2(Rational a, Rational b, Rational c, Rational d) {
  Mat<Rational> g(2, 2, Rational(0));
  g(0, 0) = a;
  g(0, 1) = b;
  g(1, 0) = c;
  g(1, 1) = d;
  return g;
}

// w, unipotents [[1,b],[0,1]] and tori diag(a, 1/a) with small b, a
std::vector<Mat<Rational>> generators(int p) {
  std::vector<Mat<Rational>> g{sl2(0, -1, 1, 0)};
  for (Rational b : {Rational(1), Rational(-1), Rational(1, p), Rational(p), Rational(1, 2)}) g.push_back(sl2(1, b, 0, 1));
  for (Rational a : {Rational(p), Rational(1, p), Rational(2), Rational(-1)}) g.push_back(sl2(a, 0, 0, 1 / a));
  return g;
}

// random generator word applied to 1_{Z_p}
PSF random_word(const QpBase& F, Rng& rng, int len, Mat<Rational>* last = nullptr, PSF* before = nullptr) {
  auto gens = generators(F.p());
  auto f = PSF::indicator(F, 0, 0);
  for (int k = 0; k < len; ++k) {
    auto& g = gens[rng.uniform(0, int(gens.size()) - 1)];
    if (k + 1 == len) {
      if (last) *last = g;
      if (before) *before = f;
    }
    f = sigma_padic(f, g);
  }
  return f;
}

Rational rand_point(const QpBase& F, Rng& rng) { return F.random(rng, 1, 30); }

}  // namespace

TEST_CASE("evaluation examples") {
  QpBase F5(5), F3(3);
  auto one5 = PSF::indicator(F5, 0, 0);
  CHECK(one5.eval(7) == CycInt(1));
  CHECK(one5.eval(Rational(1, 5)) == CycInt(0));
  CHECK(mul_phase(PSF::indicator(F3, 0, 0), 1).eval(1) == CycInt(1));
  CHECK(mul_phase(PSF::indicator(F3, 0, -1), 1).eval(Rational(1, 3)) == F3.psi(Rational(1, 9)));
  CHECK_THROWS(PSF(QpBase(5, 5)));
}

TEST_CASE("Gauss integrals agree with the Weil factor module") {
  for (int p : {3, 5, 7}) {
    QpBase F(p);
    Rng rng(p);
    for (int t = 0; t < 30; ++t) {
      auto a = F.random(rng, 3, 40);
      if (a == 0) continue;
      CHECK(omega_padic(F, a) == omega_1d(F, a));
    }
    CHECK(omega_padic(F, Rational(1, 2)) == CycInt(1));
  }
}

TEST_CASE("Heisenberg action") {
  QpBase F(5);
  auto f = PSF::indicator(F, 0, 0);
  auto z = act_heisenberg(f, HQ{{0, 0}, Rational(1, 5)});
  CHECK(z.same_as(f.scaled(F.psi(Rational(1, 5)))));
  CHECK(act_heisenberg(f, HQ{{0, 1}, 0}).same_as(f));
  auto e = act_heisenberg(f, HQ{{Rational(1, 25), 0}, 0});
  CHECK(e.size() == 1);
  CHECK(e.eval(1) == F.psi(Rational(-1, 25)));
  Rng rng(1);
  for (int t = 0; t < 200; ++t) {
    HQ h1{{F.random(rng, 2, 20), F.random(rng, 2, 20)}, F.random(rng, 2, 20)};
    HQ h2{{F.random(rng, 2, 20), F.random(rng, 2, 20)}, F.random(rng, 2, 20)};
    auto g = random_word(F, rng, 2);
    CHECK(act_heisenberg(act_heisenberg(g, h2), h1).same_as(act_heisenberg(g, h_mul(F, h1, h2))));
  }
}

TEST_CASE("Fourier: self-dual lattice, inversion, Gaussians") {
  for (int p : {3, 5, 7}) {
    QpBase F(p);
    auto one = PSF::indicator(F, 0, 0);
    CHECK(act_fourier(one).same_as(one));
    Rng rng(p);
    auto w = sl2(0, -1, 1, 0);
    for (int t = 0; t < 20; ++t) {
      auto f = random_word(F, rng, 3);
      auto ff = act_fourier(act_fourier(f));
      // sigma(w)^2 f = eps f(-y) with eps = Omega_{-1,1}
      auto eps = omega_padic(F, -1) / omega_padic(F, 1);
      CHECK(ff.same_as(substitute(f, -1).scaled(eps)));
      CHECK(ff.same_as(sigma_padic(f, w * w).scaled(cocycle_operator_padic(F, w, w))));
      auto y = rand_point(F, rng);
      CHECK(ff.eval(y) == eps * f.eval(-y));
    }
    // Gaussian of deep conductor: closed form against direct summation
    auto c = Rational(1, p * p * p);
    auto gsn = mul_phase(one, c);
    for (int t = 0; t < 20; ++t) {
      auto y = rand_point(F, rng);
      CHECK(sigma_padic(gsn, w).eval(y) == sigma_padic_direct(gsn, w, y));
    }
  }
}

TEST_CASE("closure under random words, checked against direct summation") {
  for (int p : {3, 5, 7}) {
    QpBase F(p);
    Rng rng(10 + p);
    for (int t = 0; t < 1000 / 3; ++t) {
      Mat<Rational> g;
      PSF before(F);
      int len = 1 + int(rng.uniform(0, 5));
      auto f = random_word(F, rng, len, &g, &before);
      CHECK(f.size() == 1);
      auto cf = f.canonical();
      CHECK(cf.canonical().same_as(cf));
      for (int k = 0; k < 10; ++k) {
        auto y = rand_point(F, rng);
        auto v = f.eval(y);
        CHECK(cf.eval(y) == v);
        CHECK(sigma_padic_direct(before, g, y) == v);
      }
    }
  }
}

TEST_CASE("refinement keeps values") {
  QpBase F(3);
  auto f = PSF::indicator(F, 0, 0) + mul_phase(PSF::indicator(F, 1, 2), Rational(1, 27));
  auto c = f.canonical();
  CHECK(c.size() == 6);  // five pieces of 1_{Z_3} down to depth 2 around 1, plus the Gaussian
  Rng rng(4);
  for (int k = 0; k < 50; ++k) {
    auto y = F.random(rng, 3, 30);
    CHECK(c.eval(y) == f.eval(y));
  }
  CHECK((f - f).canonical().empty());
}

TEST_CASE("sigma on the parabolic, intertwining, and the cocycle") {
  for (int p : {3, 5, 7}) {
    QpBase F(p);
    Rng rng(20 + p);
    auto rnd = [&] { return F.random(rng, 1, 6); };
    for (int t = 0; t < 30; ++t) {
      auto a = random_parabolic(F, 1, rnd), b = random_parabolic(F, 1, rnd);
      int want = hilbert(F, a(0, 0), b(0, 0));
      CHECK(cocycle_operator_padic(F, a, b) == CycInt(want));
      if (val_p(a(0, 0), p) == 0 && val_p(b(0, 0), p) == 0) {
        auto f = random_word(F, rng, 2);
        CHECK(sigma_padic(sigma_padic(f, b), a).same_as(sigma_padic(f, a * b)));
      }
    }
    for (int t = 0; t < 30; ++t) {
      auto g = random_symplectic(F, 1, rng);
      HQ h{{F.random(rng, 2, 20), F.random(rng, 2, 20)}, F.random(rng, 2, 20)};
      auto f = random_word(F, rng, 2);
      CHECK(sigma_padic(act_heisenberg(f, h), g).same_as(act_heisenberg(sigma_padic(f, g), h_act<QpBase>(g, h))));
    }
  }
}

TEST_CASE("operator path agrees with the closed formula") {
  for (int p : {3, 5, 7}) {
    QpBase F(p);
    Rng rng(30 + p);
    int bad = 0;
    for (int t = 0; t < 100; ++t) {
      auto g1 = random_symplectic(F, 1, rng), g2 = random_symplectic(F, 1, rng);
      auto c = cocycle_operator_padic(F, g1, g2);
      if (c != CycInt(cocycle_formula(F, g1, g2))) ++bad;
    }
    CHECK(bad == 0);
    auto w = sl2(0, -1, 1, 0);
    CHECK(cocycle_operator_padic(F, w, w) == CycInt(cocycle_formula(F, w, w)));
  }
}
