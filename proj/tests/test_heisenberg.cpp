#include <doctest.h>

#include "weilmod/heisenberg.hpp"

using namespace weilmod;

namespace {

using HE = HeisenbergElement<FqBase>;

std::vector<GFElem> vec(const FqBase& F, std::vector<long long> v) {
  std::vector<GFElem> w;
  for (auto x : v) w.push_back(F.from_int(x));
  return w;
}

template <class R>
std::vector<Mat<typename R::Elem>> dense_all(const R& ring, const std::vector<MonomialOp>& ops) {
  std::vector<Mat<typename R::Elem>> out;
  for (auto& o : ops) out.push_back(o.dense(ring));
  return out;
}

}  // namespace

TEST_CASE("group law examples") {
  FqBase F(3, 1);
  HE e1{vec(F, {1, 0}), F.zero()}, f1{vec(F, {0, 1}), F.zero()};
  auto id = h_central(F, 1, F.zero());
  CHECK(h_mul(F, id, e1) == e1);
  auto ef = h_mul(F, e1, f1);
  CHECK(ef.w == vec(F, {1, 1}));
  CHECK(ef.t == F.from_rational(Rational(1, 2)));
  auto c = h_commutator(F, e1, f1);
  CHECK(c.w == vec(F, {0, 0}));
  CHECK(c.t == pairing(F, e1.w, f1.w));
}

TEST_CASE("associativity, inverses and centre exhaustively for q = 3, m = 1") {
  FqBase F(3, 1);
  auto H = h_elements(F, 1);
  REQUIRE(H.size() == 27);
  for (auto& a : H) {
    CHECK(h_mul(F, a, h_inv(F, a)) == h_central(F, 1, F.zero()));
    for (auto& b : H) {
      auto ab = h_mul(F, a, b);
      auto com = h_commutator(F, a, b);
      CHECK(com.t == pairing(F, a.w, b.w));
      for (auto& c : H) CHECK(h_mul(F, ab, c) == h_mul(F, a, h_mul(F, b, c)));
    }
  }
}

TEST_CASE("Schrodinger operators over F_3") {
  FqBase F(3, 1);
  auto S = LagrangianModel::schrodinger(F, 1);
  REQUIRE(S.dim() == 3);
  auto tf = S.rho(h_delta(F, vec(F, {0, 1})));
  CHECK(tf.is_permutation());
  CHECK(tf.col == std::vector<uint32_t>{1, 2, 0});
  auto te = S.rho(h_delta(F, vec(F, {1, 0})));
  CHECK(te.is_diagonal());
  CHECK(te.e == std::vector<int>{0, 2, 1});
  for (long long t = 0; t < 3; ++t) CHECK(S.rho(h_central(F, 1, F.from_int(t))) == MonomialOp::scalar(3, 3, int(t)));
}

TEST_CASE("homomorphism law exhaustively for q = 3, m = 1") {
  FqBase F(3, 1);
  auto S = LagrangianModel::schrodinger(F, 1);
  auto H = h_elements(F, 1);
  std::vector<MonomialOp> ops;
  for (auto& h : H) ops.push_back(S.rho(h));
  for (size_t i = 0; i < H.size(); ++i)
    for (size_t j = 0; j < H.size(); ++j) CHECK(S.rho(h_mul(F, H[i], H[j])) == ops[i] * ops[j]);
}

TEST_CASE("homomorphism law on random pairs, m = 2") {
  Rng rng(11);
  for (auto [p, f] : std::vector<std::pair<int, int>>{{5, 1}, {7, 1}, {3, 2}}) {
    FqBase F(p, f);
    auto S = LagrangianModel::schrodinger(F, 2);
    for (int it = 0; it < 1000; ++it) {
      auto a = h_random(F, 2, rng), b = h_random(F, 2, rng);
      REQUIRE(S.rho(h_mul(F, a, b)) == S.rho(a) * S.rho(b));
    }
  }
}

TEST_CASE("general Lagrangian model is a representation") {
  FqBase F(5, 1);
  // A = span(e1 + f2, e2 + f1), B = span(f1, f2)
  auto A = from_rows(F, {{1, 0}, {0, 1}, {0, 1}, {1, 0}});
  auto B = from_rows(F, {{0, 0}, {0, 0}, {1, 0}, {0, 1}});
  LagrangianModel M(F, A, B);
  Rng rng(3);
  for (int it = 0; it < 300; ++it) {
    auto a = h_random(F, 2, rng), b = h_random(F, 2, rng);
    REQUIRE(M.rho(h_mul(F, a, b)) == M.rho(a) * M.rho(b));
  }
  CHECK(commutant_dim(M.generators()) == 1);
  auto bad = from_rows(F, {{1, 0}, {0, 1}, {0, 0}, {1, 0}});
  CHECK_THROWS_AS(LagrangianModel(F, bad, B), Error);
}

TEST_CASE("commutant dimensions") {
  FqBase F3(3, 1);
  auto S = LagrangianModel::schrodinger(F3, 1);
  auto g = S.generators();
  CHECK(commutant_dim(g) == 1);
  CHECK(commutant_dim_dense(CycloRing(3), dense_all(CycloRing(3), g)) == 1);

  std::vector<MonomialOp> doubled;
  for (auto& x : g) doubled.push_back(direct_sum(x, x));
  CHECK(commutant_dim(doubled) == 4);
  CHECK(commutant_dim_dense(CycloRing(3), dense_all(CycloRing(3), doubled)) == 4);

  FqBase F5(5, 1);
  auto S5 = LagrangianModel::schrodinger(F5, 1);
  FiniteRing R7(7, minimal_degree(7, 5), 5);
  CHECK(commutant_dim_dense(R7, dense_all(R7, S5.generators())) == 1);
  CHECK(commutant_dim(S5.generators()) == 1);
}

TEST_CASE("Stone-von Neumann over F_q, m <= 2") {
  for (auto [p, f] : std::vector<std::pair<int, int>>{{3, 1}, {5, 1}, {7, 1}, {3, 2}})
    for (int m = 1; m <= 2; ++m) {
      FqBase F(p, f);
      auto S = LagrangianModel::schrodinger(F, m);
      CHECK(commutant_dim(S.generators()) == 1);
    }
}

TEST_CASE("intertwiners between the X and Y models") {
  FqBase F(3, 1);
  CycloRing R(3);
  auto X = LagrangianModel::schrodinger(F, 1);
  auto I4 = identity(F, 2);
  LagrangianModel Y(F, block(I4, 0, 1, 2, 1), block(I4, 0, 0, 2, 1));
  auto zero = vec(F, {0, 0});

  auto same = intertwiner(X, X, zero).to_ring(R, R.one());
  CHECK(same == identity(R, 3));
  CHECK_THROWS_AS(intertwiner(X, X, vec(F, {0, 1})), Error);

  auto Ixy = intertwiner(X, Y, zero).to_ring(R, R.one());
  auto Iyx = intertwiner(Y, X, zero).to_ring(R, R.one());
  for (auto& h : h_elements(F, 1)) {
    CHECK(Ixy * X.rho(h).dense(R) == Y.rho(h).dense(R) * Ixy);
    CHECK(Iyx * Y.rho(h).dense(R) == X.rho(h).dense(R) * Iyx);
  }
  CHECK(Iyx * Ixy == scaled(identity(R, 3), CycInt(3)));
  CHECK(Ixy * Iyx == scaled(identity(R, 3), CycInt(3)));
}

TEST_CASE("tensor models") {
  FqBase F(3, 1);
  auto S = LagrangianModel::schrodinger(F, 1);
  TensorModel T(S, S);
  CHECK(T.dim() == 9);
  CHECK(commutant_dim(T.generators()) == 1);
  Rng rng(5);
  for (int it = 0; it < 200; ++it) {
    auto a = h_random(F, 2, rng), b = h_random(F, 2, rng);
    REQUIRE(T.rho(h_mul(F, a, b)) == T.rho(a) * T.rho(b));
  }
  CHECK(T.rho(h_central(F, 2, F.from_int(2))) == MonomialOp::scalar(9, 3, 2));

  auto P = LagrangianModel::schrodinger(F, 0);
  TensorModel T0(P, P);
  CHECK(T0.dim() == 1);
  for (long long t = 0; t < 3; ++t) CHECK(T0.rho(h_central(F, 0, F.from_int(t))).e[0] == F.psi_exp(F.from_int(t)));
}

TEST_CASE("contragredient is the psi^{-1} model") {
  for (auto [p, f] : std::vector<std::pair<int, int>>{{3, 1}, {5, 1}, {3, 2}}) {
    FqBase F(p, f), Fi(p, f, -1);
    auto S = LagrangianModel::schrodinger(F, 1);
    auto Si = LagrangianModel::schrodinger(Fi, 1);
    auto hs = S.generator_elements();
    auto dual = dual_operators(S, hs);
    CHECK(dual.back() == MonomialOp::scalar(S.dim(), p, F.psi_exp(-F.one())));
    auto H = hom_space(dual, Si.generators());
    REQUIRE(H.dim() == 1);
    CHECK(H.basis[0].size() == S.dim());  // monomial, hence invertible
  }
}

TEST_CASE("scalar extension commutes with reduction") {
  FqBase F(5, 1);
  auto S = LagrangianModel::schrodinger(F, 1);
  CycloRing C(5);
  FiniteRing R(11, 1, 5);
  ReductionMap red(5, 1, R.F->p(), R.F->degree());
  REQUIRE(red.image_of_zeta().v == R.root);
  Rng rng(9);
  for (int it = 0; it < 20; ++it) {
    auto op = S.rho(h_random(F, 1, rng));
    auto a = op.dense(C);
    auto b = op.dense(R);
    for (size_t k = 0; k < a.a.size(); ++k) CHECK(red(a.a[k]) == b.a[k]);
  }
}
