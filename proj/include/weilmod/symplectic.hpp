#pragma once
#include <vector>

#include "weilmod/heisenberg.hpp"

namespace weilmod {

// Sp(W) in the basis e_1..e_m, f_1..f_m; column j is the image of the j-th basis vector.
template <class K>
using SympMat = Mat<typename K::Elem>;

template <class K>
bool is_symplectic(const K& F, const SympMat<K>& g) {
  if (g.r != g.c || g.r % 2) return false;
  auto J = symplectic_form(F, g.r / 2);
  return transpose(g) * J * g == J;
}

template <class K>
SympMat<K> sp_inverse(const K& F, const SympMat<K>& g) {
  auto J = symplectic_form(F, g.r / 2);
  return scaled(J * transpose(g) * J, -F.one());
}

template <class K>
struct Blocks {
  Mat<typename K::Elem> a, b, c, d;
};

template <class K>
Blocks<K> blocks(const SympMat<K>& g) {
  int m = g.r / 2;
  return {block(g, 0, 0, m, m), block(g, 0, m, m, m), block(g, m, 0, m, m), block(g, m, m, m, m)};
}

template <class K>
bool in_parabolic(const K& F, const SympMat<K>& g) {
  int m = g.r / 2;
  return is_zero_mat(block(g, m, 0, m, m), F);
}

template <class K>
bool is_symmetric(const Mat<typename K::Elem>& s) {
  for (int i = 0; i < s.r; ++i)
    for (int j = 0; j < i; ++j)
      if (s(i, j) != s(j, i)) return false;
  return s.r == s.c;
}

// [[a, a s], [0, a^{-T}]], s symmetric
template <class K>
SympMat<K> parabolic(const K& F, const Mat<typename K::Elem>& a, const Mat<typename K::Elem>& s) {
  if (!is_symmetric<K>(s)) fail(ErrorKind::InvalidInput, "parabolic: s must be symmetric");
  int m = a.r;
  auto g = zeros(F, 2 * m, 2 * m);
  set_block(g, 0, 0, a);
  set_block(g, 0, m, a * s);
  set_block(g, m, m, transpose(inverse(F, a)));
  return g;
}

template <class K>
SympMat<K> levi(const K& F, const Mat<typename K::Elem>& a) {
  return parabolic(F, a, zeros(F, a.r, a.r));
}

// w_S: e_i -> f_i, f_i -> -e_i for i in S (bit i of mask), identity elsewhere
template <class K>
SympMat<K> w_S(const K& F, int m, unsigned mask) {
  auto g = identity(F, 2 * m);
  for (int i = 0; i < m; ++i)
    if (mask >> i & 1) {
      g(i, i) = g(m + i, m + i) = F.zero();
      g(m + i, i) = F.one();
      g(i, m + i) = -F.one();
    }
  return g;
}

// w_j = w_{{1..j}}
template <class K>
SympMat<K> w_j(const K& F, int m, int j) {
  return w_S(F, m, (1u << j) - 1);
}

// identity on X + Y_{cS}; y in Y_S -> y + rho(y), rho a symmetric matrix supported on S x S
template <class K>
SympMat<K> u_rho(const K& F, int m, unsigned mask, const Mat<typename K::Elem>& rho) {
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (!is_zero(rho(i, j)) && !((mask >> i & 1) && (mask >> j & 1)))
        fail(ErrorKind::InvalidInput, "u_rho: rho not supported on S");
  auto g = identity(F, 2 * m);
  if (!is_symmetric<K>(rho)) fail(ErrorKind::InvalidInput, "u_rho: rho must be self-adjoint");
  set_block(g, 0, m, rho);
  return g;
}

template <class K>
typename K::Elem det_x(const K& F, const SympMat<K>& p) {
  int m = p.r / 2;
  return det(F, block(p, 0, 0, m, m));
}

// g = p1 w_j p2
template <class K>
struct BruhatData {
  int j = 0;
  SympMat<K> p1, p2, w;
};

template <class K>
BruhatData<K> bruhat_decompose(const K& F, const SympMat<K>& g) {
  if (!is_symplectic(F, g)) fail(ErrorKind::InvalidInput, "bruhat: matrix is not symplectic");
  int m = g.r / 2;
  auto I = identity(F, 2 * m);
  auto Xb = block(I, 0, 0, 2 * m, m);
  auto gX = block(g, 0, 0, 2 * m, m);
  auto Kb = intersect(F, Xb, gX);
  int j = m - Kb.c;
  auto Z = complete_basis(F, Kb, gX);
  // e'_1..e'_j in X dual to Z, then the basis of X cap gX
  auto Zx = block(Z, 0, 0, m, j), Zy = block(Z, m, 0, m, j);
  auto Ex = zeros(F, m, m);
  if (j > 0) {
    // rows of (Zy^T) give the functionals; pick e' with Zy^T e'_i = delta
    auto Zt = transpose(Zy);
    auto st = Zt;
    auto piv = rref(F, st);
    // right inverse supported on pivot columns
    auto sub = columns(Zt, piv);
    auto sol = inverse(F, sub);
    for (int i = 0; i < j; ++i)
      for (size_t k = 0; k < piv.size(); ++k) Ex(piv[k], i) = sol(int(k), i);
  }
  set_block(Ex, 0, j, block(Kb, 0, 0, m, m - j));
  auto Exi = inverse(F, Ex);
  auto F0y = transpose(Exi);  // <e'_i, F0_k> = delta
  auto S = zeros(F, m, m);
  for (int k = 0; k < j; ++k) {
    auto sk = Exi * column(Zx, k);
    for (int i = 0; i < m; ++i) S(i, k) = sk(i, 0);
  }
  for (int k = j; k < m; ++k)
    for (int l = 0; l < j; ++l) S(l, k) = S(k, l);
  auto p1 = zeros(F, 2 * m, 2 * m);
  set_block(p1, 0, 0, Ex);
  set_block(p1, 0, m, Ex * S);
  set_block(p1, m, m, F0y);
  BruhatData<K> out;
  out.j = j;
  out.w = w_j(F, m, j);
  out.p1 = p1;
  out.p2 = sp_inverse(F, out.w) * sp_inverse(F, p1) * g;
  if (!is_symplectic(F, p1) || !in_parabolic(F, out.p2) || out.p1 * out.w * out.p2 != g)
    fail(ErrorKind::CheckFailed, "bruhat: decomposition does not multiply back");
  return out;
}

// another decomposition of the same g: p1 q, (w^{-1} q^{-1} w) p2 for q in the
// Levi of w_j times unipotents supported off S
template <class K, class Gen>
BruhatData<K> bruhat_variant(const K& F, const BruhatData<K>& d, Gen&& random_elem) {
  int m = d.p1.r / 2, j = d.j;
  Mat<typename K::Elem> A;
  for (;;) {
    A = zeros(F, m, m);
    for (int r = 0; r < m; ++r)
      for (int c = 0; c < m; ++c)
        if ((r < j) == (c < j)) A(r, c) = random_elem();
    if (!is_zero(det(F, A))) break;
  }
  auto s = zeros(F, m, m);
  for (int r = j; r < m; ++r)
    for (int c = r; c < m; ++c) s(r, c) = s(c, r) = random_elem();
  auto q = parabolic(F, A, s);
  BruhatData<K> o = d;
  o.p1 = d.p1 * q;
  o.p2 = sp_inverse(F, d.w) * sp_inverse(F, q) * d.w * d.p2;
  if (!in_parabolic(F, o.p2) || o.p1 * o.w * o.p2 != d.p1 * d.w * d.p2)
    fail(ErrorKind::CheckFailed, "bruhat variant: not a decomposition");
  return o;
}

template <class K>
typename K::Elem x_det(const K& F, const BruhatData<K>& d) {
  return det_x(F, d.p1) * det_x(F, d.p2);
}

template <class K>
SquareClass<K> x_invariant(const K& F, const SympMat<K>& g) {
  return square_class(F, x_det(F, bruhat_decompose(F, g)));
}

template <class K, class Gen>
Mat<typename K::Elem> random_invertible(const K& F, int m, Gen&& random_elem) {
  for (;;) {
    auto a = zeros(F, m, m);
    for (auto& x : a.a) x = random_elem();
    if (!is_zero(det(F, a))) return a;
  }
}

template <class K, class Gen>
Mat<typename K::Elem> random_symmetric(const K& F, int m, Gen&& random_elem) {
  auto s = zeros(F, m, m);
  for (int r = 0; r < m; ++r)
    for (int c = r; c < m; ++c) s(r, c) = s(c, r) = random_elem();
  return s;
}

template <class K, class Gen>
SympMat<K> random_parabolic(const K& F, int m, Gen&& random_elem) {
  return parabolic(F, random_invertible(F, m, random_elem), random_symmetric(F, m, random_elem));
}

// p1 w_S p2 with random S
template <class K, class Gen>
SympMat<K> random_symplectic(const K& F, int m, Rng& rng, Gen&& random_elem) {
  unsigned mask = unsigned(rng.uniform(0, (1 << m) - 1));
  return random_parabolic(F, m, random_elem) * w_S(F, m, mask) * random_parabolic(F, m, random_elem);
}

// all of Sp_2(F_q) = SL_2(F_q)
std::vector<SympMat<FqBase>> sp2_elements(const FqBase& F);
SympMat<FqBase> random_symplectic(const FqBase& F, int m, Rng& rng);
// entries p^v a/b with small height, v in [-vmax, vmax]
SympMat<QpBase> random_symplectic(const QpBase& F, int m, Rng& rng, int vmax = 1, long long height = 6);

template <class K>
std::string symp_str(const K& F, const SympMat<K>& g) {
  return mat_str(F, g);
}

}  // namespace weilmod
