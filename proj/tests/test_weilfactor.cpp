#include <doctest.h>

#include "weilmod/weilfactor.hpp"

using namespace weilmod;

namespace {

CycInt z3(long long e = 1) { return CycInt::zeta(3, 1, e); }

QuadraticForm<FqBase> diagf(const FqBase& F, std::vector<long long> a) {
  std::vector<GFElem> v;
  for (auto x : a) v.push_back(F.from_int(x));
  return QuadraticForm<FqBase>::diagonal(F, v);
}

QuadraticForm<QpBase> diagq(const QpBase& F, std::vector<Rational> a) { return QuadraticForm<QpBase>::diagonal(F, a); }

template <class K>
QuadraticForm<K> random_nd_form(const K& F, Rng& rng, int n) {
  for (;;) {
    auto g = zeros(F, n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        typename K::Elem v = F.zero();
        if constexpr (K::finite)
          v = F.random(rng);
        else if (i == j || rng.uniform(0, 2))
          v = F.random(rng, 2, 12);
        g(i, j) = g(j, i) = v;
      }
    QuadraticForm<K> q(F, g);
    if (q.nondegenerate()) return q;
  }
}

}  // namespace

TEST_CASE("omega examples over F_3") {
  FqBase F(3, 1);
  CHECK(omega(QuadraticForm<FqBase>(F, zeros(F, 2, 2))) == CycInt(1));
  auto g = omega(diagf(F, {1}));
  CHECK(g == CycInt(1) + CycInt(2) * z3());
  CHECK(g * g == CycInt(-3));
}

TEST_CASE("omega_ratio examples") {
  FqBase F3(3, 1);
  CHECK(omega_ratio(F3, F3.from_int(2), F3.from_int(1)) == CycInt(-1));
  CHECK(omega_ratio(F3, F3.from_int(2), F3.from_int(2)) == CycInt(1));
  for (auto [p, f] : {std::pair{3, 1}, {5, 1}, {7, 1}, {3, 2}}) {
    FqBase F(p, f);
    auto r = omega_ratio(F, F.from_int(-1), F.one());
    CHECK(r * r == CycInt(1));
  }
  for (int p : {3, 5, 7, 13}) {
    QpBase Q(p);
    auto r = omega_ratio(Q, Rational(-1), Rational(1));
    CHECK(r * r == CycInt(hilbert(Q, Rational(-1), Rational(-1))));
    CHECK(omega_ratio(Q, Rational(p), Rational(p)) == CycInt(1));
  }
}

TEST_CASE("hilbert_via_omega examples") {
  QpBase Q5(5);
  CHECK(hilbert_via_omega(Q5, Rational(1), Rational(7)) == 1);
  CHECK(hilbert_via_omega(Q5, Rational(5), Rational(2)) == -1);
  FqBase F5(5, 1);
  for (auto a : F5.elements())
    for (auto b : F5.elements())
      if (!a.is_zero() && !b.is_zero()) CHECK(hilbert_via_omega(F5, a, b) == 1);
}

TEST_CASE("Hilbert identity: exhaustive over F_q, random over Q_p") {
  for (auto [p, f] : {std::pair{3, 1}, {5, 1}, {7, 1}, {3, 2}}) {
    FqBase F(p, f);
    for (auto a : F.elements())
      for (auto b : F.elements())
        if (!a.is_zero() && !b.is_zero()) REQUIRE(hilbert_via_omega(F, a, b) == hilbert(F, a, b));
  }
  for (int p : {3, 5, 7, 13}) {
    QpBase Q(p);
    Rng rng(p * 31);
    for (int it = 0; it < 50; ++it) {
      auto a = Q.random(rng, 3), b = Q.random(rng, 3);
      REQUIRE(hilbert_via_omega(Q, a, b) == hilbert(Q, a, b));
    }
  }
}

TEST_CASE("p-adic lattice sums stabilise") {
  for (int p : {3, 5, 7}) {
    QpBase Q(p);
    Rng rng(p);
    for (int it = 0; it < 20; ++it) {
      Rational a = Q.random(rng, 1, 20);
      int n = omega_depth(Q, a);
      auto v = omega_lattice(Q, a, n);
      CHECK(omega_lattice(Q, a, n + 1) == v);
      CHECK(omega_lattice(Q, a, n + 2) == v);
      CHECK(omega_1d(Q, a) == v);
    }
  }
}

TEST_CASE("p-adic omega for a unit and for p") {
  QpBase Q3(3);
  // unit: Omega(Q_1) = 1 since psi(x^2) = 1 on Z_3 and the shell sums vanish
  CHECK(omega_1d(Q3, Rational(1)) == CycInt(1));
  auto w = omega_1d(Q3, Rational(1, 3));
  CHECK(w * w.conj() == CycInt(Rational(1, 3)));
  // square scaling
  CHECK(omega_1d(Q3, Rational(9)) == CycInt(3) * omega_1d(Q3, Rational(1)));
  CHECK(omega_1d(Q3, Rational(2, 27)) == CycInt(Rational(1, 3)) * omega_1d(Q3, Rational(2, 3)));
}

TEST_CASE("scaling law") {
  Rng rng(1);
  FqBase F(5, 1);
  CycloRing R(5);
  auto q = diagf(F, {1, 2});
  for (int it = 0; it < 20; ++it) {
    CycInt lam = CycInt(rng.uniform(1, 50)) + CycInt(rng.uniform(-5, 5)) * CycInt::zeta(5, 1, rng.uniform(0, 4));
    CHECK(omega(R, q, lam) == lam * omega(R, q, R.one()));
  }
}

TEST_CASE("isometry transport") {
  Rng rng(2);
  for (auto [p, f] : {std::pair{3, 1}, {5, 1}, {3, 2}}) {
    FqBase F(p, f);
    for (int it = 0; it < 20; ++it) {
      int n = int(rng.uniform(1, 3));
      auto q = random_nd_form(F, rng, n);
      Mat<GFElem> phi;
      do {
        phi = zeros(F, n, n);
        for (auto& x : phi.a) x = F.random(rng);
      } while (det(F, phi).is_zero());
      auto pi = inverse(F, phi);
      QuadraticForm<FqBase> qphi(F, transpose(pi) * q.gram() * pi);
      CHECK(omega(qphi) == omega(q));
    }
  }
  for (int p : {3, 5, 7}) {
    QpBase Q(p);
    for (int it = 0; it < 20; ++it) {
      int n = int(rng.uniform(1, 3));
      auto q = random_nd_form(Q, rng, n);
      Mat<Rational> phi;
      do {
        phi = zeros(Q, n, n);
        for (auto& x : phi.a) x = rng.uniform(0, 2) ? Q.random(rng, 1, 6) : Rational(0);
      } while (det(Q, phi) == 0);
      auto pi = inverse(Q, phi);
      QuadraticForm<QpBase> qphi(Q, transpose(pi) * q.gram() * pi);
      // phi.mu = |det phi|^{-1} mu
      CHECK(CycInt(Rational(1) / Q.modulus(det(Q, phi))) * omega(qphi) == omega(q));
    }
  }
}

TEST_CASE("orthogonal sums multiply") {
  Rng rng(3);
  FqBase F(3, 2);
  for (int it = 0; it < 10; ++it) {
    auto q1 = random_nd_form(F, rng, 1), q2 = random_nd_form(F, rng, 2);
    auto g = zeros(F, 3, 3);
    set_block(g, 0, 0, q1.gram());
    set_block(g, 1, 1, q2.gram());
    CHECK(omega(QuadraticForm<FqBase>(F, g)) == omega(q1) * omega(q2));
  }
  QpBase Q(5);
  for (int it = 0; it < 10; ++it) {
    auto q1 = random_nd_form(Q, rng, 2), q2 = random_nd_form(Q, rng, 2);
    auto g = zeros(Q, 4, 4);
    set_block(g, 0, 0, q1.gram());
    set_block(g, 2, 2, q2.gram());
    CHECK(omega_alt(QuadraticForm<QpBase>(Q, g)) == omega(q1) * omega(q2));
  }
}

TEST_CASE("omega_diag_product examples") {
  FqBase F3(3, 1);
  auto id = diagf(F3, {1, 1});
  auto r = omega_diag_product(id);
  CHECK(r.equal());
  CHECK(r.direct == omega(diagf(F3, {1})).pow(2));
  auto d21 = omega_diag_product(diagf(F3, {2, 1}));
  CHECK(d21.equal());
  CHECK(d21.direct == -omega(id));
  QpBase Q3(3);
  CHECK(omega_diag_product(diagq(Q3, {3, 1})).equal());
}

TEST_CASE("Hasse product formula on random forms") {
  Rng rng(4);
  for (auto [p, f] : {std::pair{3, 1}, {5, 1}, {3, 2}}) {
    FqBase F(p, f);
    for (int it = 0; it < 20; ++it) CHECK(omega_diag_product(random_nd_form(F, rng, int(rng.uniform(1, 3)))).equal());
  }
  for (int p : {3, 5, 7}) {
    QpBase Q(p);
    for (int it = 0; it < 30; ++it) CHECK(omega_diag_product(random_nd_form(Q, rng, int(rng.uniform(1, 4)))).equal());
  }
}

TEST_CASE("epsilon") {
  FqBase F5(5, 1), F3(3, 1);
  CHECK(epsilon(F5, identity(F5, 1)) == CycInt(1));
  CHECK(epsilon(F3, identity(F3, 1)) == CycInt(-1));
  for (auto [p, f] : {std::pair{3, 1}, {5, 1}, {7, 1}, {3, 2}}) {
    FqBase F(p, f);
    auto e = epsilon(F, identity(F, 2));
    CHECK(e * e == CycInt(1));
  }
  QpBase Q3(3);
  auto e = epsilon(Q3, identity(Q3, 1));
  CHECK(e * e == CycInt(hilbert(Q3, Rational(-1), Rational(-1))));
}

TEST_CASE("normalized Fourier transform over F_3") {
  FqBase F(3, 1);
  CycloRing R(3);
  auto rho = identity(F, 1);
  auto M = fourier_matrix(R, F, rho);
  // delta_0 -> constant mu_rho(point)
  auto c = omega(diagf(F, {2})).inv();
  for (int x = 0; x < 3; ++x) CHECK(M(x, 0) == c);
  auto M2 = M * M;
  for (int x = 0; x < 3; ++x)
    for (int u = 0; u < 3; ++u) CHECK(M2(x, u) == ((x + u) % 3 == 0 ? CycInt(-1) : CycInt(0)));
  auto M4 = M2 * M2;
  CHECK(M4 == identity(R, 3));
}

TEST_CASE("F^2 = eps * parity and convolution theorem") {
  Rng rng(9);
  for (auto [p, f] : {std::pair{3, 1}, {5, 1}, {3, 2}}) {
    FqBase F(p, f);
    CycloRing R(p);
    for (int m = 1; m <= 2; ++m) {
      auto rho = identity(F, m);
      rho(0, 0) = F.from_int(2);
      auto M = fourier_matrix(R, F, rho);
      auto eps = epsilon(F, rho);
      auto M2 = M * M;
      FqVectors V(F, m);
      for (uint32_t x = 0; x < V.size(); ++x)
        for (uint32_t u = 0; u < V.size(); ++u) REQUIRE(M2(x, u) == (u == V.neg(x) ? eps : CycInt(0)));
      if (p == 5 && m == 2) continue;
      std::vector<CycInt> a(V.size()), b(V.size());
      for (auto& x : a) x = CycInt(rng.uniform(-3, 3));
      for (auto& x : b) x = CycInt(rng.uniform(-3, 3));
      auto ab = convolve(R, F, rho, a, b);
      for (uint32_t x = 0; x < V.size(); ++x) {
        CycInt fa(0), fb(0), fab(0);
        for (uint32_t u = 0; u < V.size(); ++u) {
          fa += M(x, u) * a[u];
          fb += M(x, u) * b[u];
          fab += M(x, u) * ab[u];
        }
        REQUIRE(fab == fa * fb);
      }
    }
  }
}

TEST_CASE("classical normalisation with a chosen square root") {
  FqBase F(5, 1);
  auto g = omega(diagf(F, {1}));  // g^2 = 5
  auto w = normalized_weil_factor(diagf(F, {2}), g);
  CHECK(w.pow(4) == CycInt(1));
  CHECK_THROWS_AS(normalized_weil_factor(diagf(F, {1}), CycInt(2)), Error);
}
