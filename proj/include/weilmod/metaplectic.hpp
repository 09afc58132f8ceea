#pragma once
#include <optional>
#include <vector>

#include "weilmod/symplectic.hpp"

namespace weilmod {

// Sparse matrix whose nonzero entries are powers of zeta_p; rows sorted by column.
struct RootMat {
  uint32_t n = 0;
  int p = 3;
  std::vector<uint32_t> start;  // size n + 1
  std::vector<uint32_t> col;
  std::vector<int> e;

  size_t nnz() const { return col.size(); }
  friend bool operator==(const RootMat& a, const RootMat& b) {
    return a.n == b.n && a.p == b.p && a.start == b.start && a.col == b.col && a.e == b.e;
  }
  template <class R>
  Mat<typename R::Elem> dense(const R& ring, const typename R::Elem& scale) const {
    Mat<typename R::Elem> M(static_cast<int>(n), static_cast<int>(n), ring.zero());
    for (uint32_t i = 0; i < n; ++i)
      for (uint32_t k = start[i]; k < start[i + 1]; ++k) M(int(i), int(col[k])) = ring.zeta(e[k]) * scale;
    return M;
  }
};

RootMat rm_times(const RootMat& a, const MonomialOp& b);
RootMat rm_times(const MonomialOp& a, const RootMat& b);
// lambda (reduced counts) with A B = lambda C, if it exists
std::optional<std::vector<long long>> body_ratio(const RootMat& A, const RootMat& B, const RootMat& C);

// sigma(g) = sign * G(1/2)^{-j} * body over F_q (Schrodinger model), where
// G(c) = sum_x psi(c x^2) and sign = chi(det_X(p1 p2)).
struct FiniteSigma {
  int sign = 1;
  int j = 0;
  RootMat body;
};

FiniteSigma sigma_finite(const FqBase& F, const SympMat<FqBase>& g);

template <class R>
typename R::Elem gauss_half(const R& ring, const FqBase& F) {
  return ring.from_counts(gauss_counts_1d(F, F.from_rational(Rational(1, 2))));
}

template <class R>
typename R::Elem sigma_scalar(const R& ring, const FqBase& F, int sign, int j) {
  auto g = gauss_half(ring, F);
  auto s = ring.from_int(sign);
  for (int k = 0; k < j; ++k) s = s * inverse(g);
  for (int k = 0; k > j; --k) s = s * g;
  return s;
}

template <class R>
Mat<typename R::Elem> sigma_dense(const R& ring, const FqBase& F, const FiniteSigma& s) {
  return s.body.dense(ring, sigma_scalar(ring, F, s.sign, s.j));
}

// sigma(g1) sigma(g2) sigma(g1 g2)^{-1} as a scalar; CheckFailed if not scalar
template <class R>
typename R::Elem cocycle_from_sigmas(const R& ring, const FqBase& F, const FiniteSigma& s1, const FiniteSigma& s2,
                                     const FiniteSigma& s12) {
  auto lam = body_ratio(s1.body, s2.body, s12.body);
  if (!lam) fail(ErrorKind::CheckFailed, "cocycle: sigma(g1)sigma(g2)sigma(g1g2)^{-1} is not scalar");
  return sigma_scalar(ring, F, s1.sign * s2.sign * s12.sign, s1.j + s2.j - s12.j) * ring.from_counts(*lam);
}

template <class R>
typename R::Elem cocycle_operator(const R& ring, const FqBase& F, const SympMat<FqBase>& g1,
                                  const SympMat<FqBase>& g2) {
  return cocycle_from_sigmas(ring, F, sigma_finite(F, g1), sigma_finite(F, g2), sigma_finite(F, g1 * g2));
}

// sigma(g) rho(h) == rho(g.h) sigma(g) for every generator h
bool sigma_intertwines(const FqBase& F, const SympMat<FqBase>& g, const FiniteSigma& s);

// M[g] = sum_{w in W/Ker(1-g^{-1})} psi(<w, g^{-1} w>/2) rho((1-g^{-1})w, 0), counting measure
GroupRingMat m_bracket(const FqBase& F, const SympMat<FqBase>& g);

// c with A = c B, if any
template <class R>
std::optional<typename R::Elem> scalar_ratio(const Mat<typename R::Elem>& A, const Mat<typename R::Elem>& B) {
  std::optional<typename R::Elem> c;
  for (size_t k = 0; k < B.a.size(); ++k) {
    if (is_zero(B.a[k])) {
      if (!is_zero(A.a[k])) return std::nullopt;
      continue;
    }
    if (!c) c = A.a[k] * inverse(B.a[k]);
    else if (A.a[k] != *c * B.a[k]) return std::nullopt;
  }
  return c;
}

// ---- Leray data and the closed-form cocycle ----

template <class K>
struct LerayData {
  unsigned S = 0, S1 = 0, S2 = 0;
  Mat<typename K::Elem> rho;  // symmetric, supported on S (diagonal by construction)
  SympMat<K> p, p1, p2;
  int l() const { return __builtin_popcount(S1 & S2); }
};

namespace detail {

template <class K>
typename K::Elem pair_cols(const K& F, const Mat<typename K::Elem>& u, int i, const Mat<typename K::Elem>& v, int j) {
  int m = u.r / 2;
  auto s = F.zero();
  for (int k = 0; k < m; ++k) s += u(k, i) * v(m + k, j) - u(m + k, i) * v(k, j);
  return s;
}

// {u in span(U) : <u, c> = 0 for c in cs}
template <class K>
Mat<typename K::Elem> perp_in(const K& F, const Mat<typename K::Elem>& U, const std::vector<Mat<typename K::Elem>>& cs) {
  if (U.c == 0) return U;
  auto M = zeros(F, int(cs.size()), U.c);
  for (size_t r = 0; r < cs.size(); ++r)
    for (int j = 0; j < U.c; ++j) M(int(r), j) = pair_cols(F, cs[r], 0, U, j);
  auto k = kernel(F, M);
  if (k.c == 0) return zeros(F, U.r, 0);
  return colspace(F, U * k);
}

// c with B c = v, B of full column rank
template <class K>
Mat<typename K::Elem> coords_in(const K& F, const Mat<typename K::Elem>& B, const Mat<typename K::Elem>& v) {
  auto aug = hcat(B, v);
  auto piv = rref(F, aug);
  if (!piv.empty() && piv.back() == B.c) fail(ErrorKind::CheckFailed, "coords_in: vector outside span");
  auto c = zeros(F, B.c, 1);
  for (size_t i = 0; i < piv.size(); ++i) c(piv[i], 0) = aug(int(i), B.c);
  return c;
}

}  // namespace detail

// g1 = p1 w_{S+S1} u_rho p^{-1}, g2 = p w_{S+S2} p2, found by splitting off one
// hyperbolic plane of (X, g1^{-1}X, g2 X) at a time
template <class K>
LerayData<K> leray_decompose(const K& F, const SympMat<K>& g1, const SympMat<K>& g2) {
  using M = Mat<typename K::Elem>;
  using detail::pair_cols;
  int m = g1.r / 2;
  auto I = identity(F, 2 * m);
  M X = block(I, 0, 0, 2 * m, m);
  M L1 = colspace(F, sp_inverse(F, g1) * X);
  M L2 = colspace(F, g2 * X);
  M Wr = I;
  M E = zeros(F, 2 * m, m), Fp = zeros(F, 2 * m, m);
  LerayData<K> d;
  d.rho = zeros(F, m, m);
  auto first_pairing = [&](const M& pool, const M& v) -> M {
    for (int j = 0; j < pool.c; ++j) {
      auto s = pair_cols(F, v, 0, pool, j);
      if (!is_zero(s)) return scaled(column(pool, j), inverse(s));
    }
    fail(ErrorKind::CheckFailed, "leray: no dual vector");
  };
  for (int slot = 0; slot < m; ++slot) {
    M e, f;
    auto X0 = intersect(F, X, intersect(F, L1, L2));
    M A, B, C;
    if (X0.c > 0) {
      e = column(X0, 0);
      f = first_pairing(Wr, e);
    } else if ((A = intersect(F, X, L2)).c > 0) {
      e = column(A, 0);
      f = first_pairing(L1, e);
      d.S1 |= 1u << slot;
    } else if ((B = intersect(F, X, L1)).c > 0) {
      e = column(B, 0);
      f = first_pairing(L2, e);
      d.S2 |= 1u << slot;
    } else if ((C = intersect(F, L1, L2)).c > 0) {
      f = column(C, 0);
      e = scaled(first_pairing(X, f), -F.one());  // <e, f> = 1
      d.S1 |= 1u << slot;
      d.S2 |= 1u << slot;
    } else {
      // L1 is the graph of phi : L2 -> X; pick v with <phi v, v> != 0
      auto XL2 = hcat(X, L2);
      std::vector<M> xs, ys;
      for (int j = 0; j < L1.c; ++j) {
        auto c = detail::coords_in(F, XL2, column(L1, j));
        xs.push_back(X * block(c, 0, 0, X.c, 1));
        ys.push_back(L2 * block(c, X.c, 0, L2.c, 1));
      }
      M x, y;
      bool found = false;
      for (size_t a = 0; a < xs.size() && !found; ++a)
        if (!is_zero(pair_cols(F, xs[a], 0, ys[a], 0))) {
          x = xs[a];
          y = ys[a];
          found = true;
        }
      for (size_t a = 0; a < xs.size() && !found; ++a)
        for (size_t b = a + 1; b < xs.size() && !found; ++b) {
          auto xx = xs[a] + xs[b], yy = ys[a] + ys[b];
          if (!is_zero(pair_cols(F, xx, 0, yy, 0))) {
            x = xx;
            y = yy;
            found = true;
          }
        }
      if (!found) fail(ErrorKind::CheckFailed, "leray: degenerate graph form");
      auto qv = pair_cols(F, x, 0, y, 0);
      f = y;
      e = scaled(x, inverse(qv));
      d.S |= 1u << slot;
      d.rho(slot, slot) = -qv;
    }
    set_block(E, 0, slot, e);
    set_block(Fp, 0, slot, f);
    std::vector<M> cs{e, f};
    X = detail::perp_in(F, X, cs);
    L1 = detail::perp_in(F, L1, cs);
    L2 = detail::perp_in(F, L2, cs);
    Wr = detail::perp_in(F, Wr, cs);
  }
  d.p = hcat(E, Fp);
  if (!is_symplectic(F, d.p) || !in_parabolic(F, d.p)) fail(ErrorKind::CheckFailed, "leray: p is not in P(X)");
  auto u = u_rho(F, m, d.S, d.rho);
  auto w1 = w_S(F, m, d.S | d.S1), w2 = w_S(F, m, d.S | d.S2);
  d.p1 = g1 * d.p * sp_inverse(F, u) * sp_inverse(F, w1);
  d.p2 = sp_inverse(F, w2) * sp_inverse(F, d.p) * g2;
  if (!in_parabolic(F, d.p1) || !in_parabolic(F, d.p2) || d.p1 * w1 * u * sp_inverse(F, d.p) != g1 ||
      d.p * w2 * d.p2 != g2)
    fail(ErrorKind::CheckFailed, "leray: factorization does not multiply back");
  return d;
}

template <class K>
int hilbert_elem(const K& F, const typename K::Elem& a, const typename K::Elem& b) {
  return hilbert(F, a, b);
}

// (-2, det Q) h(Q) for Q the form x -> x^T rho x on X_S
template <class K>
int cocycle_wu_w(const K& F, unsigned S, const Mat<typename K::Elem>& rho) {
  std::vector<int> idx;
  for (int i = 0; i < rho.r; ++i)
    if (S >> i & 1) idx.push_back(i);
  if (idx.empty()) return 1;
  auto g = zeros(F, int(idx.size()), int(idx.size()));
  for (size_t a = 0; a < idx.size(); ++a)
    for (size_t b = 0; b < idx.size(); ++b) g(int(a), int(b)) = rho(idx[a], idx[b]);
  QuadraticForm<K> Q(F, g);
  if (!Q.nondegenerate()) fail(ErrorKind::InvalidInput, "cocycle: rho is not an isomorphism");
  return hilbert(F, F.from_int(-2), Q.det_nd()) * Q.hasse();
}

template <class K>
struct FormulaResult {
  int value = 1;
  LerayData<K> leray;
  typename K::Elem x1, x2, x12, xwuw;
};

template <class K>
FormulaResult<K> cocycle_formula_full(const K& F, const SympMat<K>& g1, const SympMat<K>& g2, bool rao = false) {
  FormulaResult<K> r;
  r.leray = leray_decompose(F, g1, g2);
  int m = g1.r / 2;
  r.x1 = x_det(F, bruhat_decompose(F, g1));
  r.x2 = x_det(F, bruhat_decompose(F, g2));
  r.x12 = x_det(F, bruhat_decompose(F, g1 * g2));
  unsigned S = r.leray.S;
  auto wS = w_S(F, m, S);
  r.xwuw = x_det(F, bruhat_decompose(F, wS * u_rho(F, m, S, r.leray.rho) * wS));
  int l = r.leray.l();
  auto minus1 = F.from_int(-1);
  int v = hilbert(F, r.x1, r.x2) * hilbert(F, r.x1 * r.x2, -r.x12);
  if ((l * (l + 1) / 2) % 2) v *= hilbert(F, minus1, minus1);
  if (l % 2) v *= hilbert(F, minus1, r.xwuw);
  v *= cocycle_wu_w(F, S, r.leray.rho);
  if (rao) {
    auto two = F.from_int(2);
    v *= hilbert(F, two, r.x1) * hilbert(F, two, r.x2) * hilbert(F, two, r.x12);
  }
  r.value = v;
  return r;
}

template <class K>
int cocycle_formula(const K& F, const SympMat<K>& g1, const SympMat<K>& g2, bool rao = false) {
  return cocycle_formula_full(F, g1, g2, rao).value;
}

// x(g) with Rao's normalisation factor (2, x(g))
template <class K>
int rao_factor(const K& F, const SympMat<K>& g) {
  return hilbert(F, F.from_int(2), x_det(F, bruhat_decompose(F, g)));
}

// W1 + W2 embedded block-diagonally in W with coordinates (x1, x2, y1, y2)
template <class K>
SympMat<K> sp_direct_sum(const K& F, const SympMat<K>& a, const SympMat<K>& b) {
  int m1 = a.r / 2, m2 = b.r / 2, m = m1 + m2;
  auto g = zeros(F, 2 * m, 2 * m);
  auto idx1 = [&](int i) { return i < m1 ? i : m + (i - m1); };
  auto idx2 = [&](int i) { return i < m2 ? m1 + i : m + m1 + (i - m2); };
  for (int i = 0; i < 2 * m1; ++i)
    for (int j = 0; j < 2 * m1; ++j) g(idx1(i), idx1(j)) = a(i, j);
  for (int i = 0; i < 2 * m2; ++i)
    for (int j = 0; j < 2 * m2; ++j) g(idx2(i), idx2(j)) = b(i, j);
  return g;
}

}  // namespace weilmod
