#pragma once
#include <map>
#include <numeric>
#include <vector>

#include "weilmod/metaplectic.hpp"

namespace weilmod {

// Multiplication table of a finite group given by matrices (or built as a product).
struct FiniteGroup {
  std::vector<std::vector<int>> mul;
  std::vector<int> inv;
  std::vector<int> class_of;
  int nclasses = 0;
  int id = 0;

  size_t size() const { return inv.size(); }
  int order_of(int g) const;
  int exponent() const;
  static FiniteGroup from_matrices(const std::vector<Mat<GFElem>>& els);
  static FiniteGroup product(const FiniteGroup& a, const FiniteGroup& b);  // (i, j) -> i |b| + j
};

// (O(V), Sp(W')) inside Sp(V (x) W'), W = V (x) X' + V (x) Y' with f_(j,l) = (B^{-1} v)_j (x) f'_l
struct DualPair {
  FqBase F;
  Mat<GFElem> gram;
  int n = 0, mprime = 0;
  std::vector<Mat<GFElem>> h1, h2;
  std::vector<SympMat<FqBase>> h1_img, h2_img;
  FiniteGroup g1, g2, g;  // g = H1 x H2
  int m() const { return n * mprime; }
};

SympMat<FqBase> embed_tensor(const FqBase& F, const Mat<GFElem>& gram, const Mat<GFElem>& h, const Mat<GFElem>& g);
std::vector<Mat<GFElem>> orthogonal_group(const FqBase& F, const Mat<GFElem>& gram);
DualPair build_dual_pair(const FqBase& F, const Mat<GFElem>& gram, int mprime);

// chi(det h)^{m'} on O(V): turns sigma|O(V) into the linear action f -> f o h^{-1}
int o_twist(const DualPair& P, int i1);

template <class R>
using Rep = std::vector<Mat<typename R::Elem>>;  // one matrix per group element

template <class R>
Rep<R> sigma_images(const R& ring, const FqBase& F, const std::vector<SympMat<FqBase>>& els) {
  Rep<R> out;
  for (auto& g : els) out.push_back(sigma_dense(ring, F, sigma_finite(F, g)));
  return out;
}

// omega(h1, h2) = chi(det h1)^{m'} sigma(h1) sigma(h2), indexed like P.g
template <class R>
Rep<R> pair_weil(const R& ring, const DualPair& P) {
  if (P.g.size() > 10000) fail(ErrorKind::Unsupported, "dual pair: group too large");
  auto s1 = sigma_images(ring, P.F, P.h1_img), s2 = sigma_images(ring, P.F, P.h2_img);
  Rep<R> out;
  for (size_t i = 0; i < s1.size(); ++i)
    for (size_t j = 0; j < s2.size(); ++j) out.push_back(scaled(s1[i] * s2[j], ring.from_int(o_twist(P, int(i)))));
  return out;
}

template <class R>
bool is_representation(const FiniteGroup& G, const Rep<R>& rho) {
  for (size_t a = 0; a < G.size(); ++a)
    for (size_t b = 0; b < G.size(); ++b)
      if (rho[a] * rho[b] != rho[G.mul[a][b]]) return false;
  return true;
}

template <class R>
typename R::Elem trace(const R& ring, const Mat<typename R::Elem>& M) {
  auto t = ring.zero();
  for (int i = 0; i < M.r; ++i) t += M(i, i);
  return t;
}

template <class R>
std::vector<typename R::Elem> character(const R& ring, const Rep<R>& rho) {
  std::vector<typename R::Elem> c;
  for (auto& M : rho) c.push_back(trace(ring, M));
  return c;
}

template <class R>
void require_banal(const R& ring, size_t order) {
  int l = ring.characteristic();
  if (l && order % size_t(l) == 0)
    fail(ErrorKind::InvalidInput, "characteristic " + std::to_string(l) + " divides the group order");
}

// (1/|G|) sum_g a(g) b(g^{-1})
template <class R>
typename R::Elem char_inner(const R& ring, const FiniteGroup& G, const std::vector<typename R::Elem>& a,
                            const std::vector<typename R::Elem>& b) {
  require_banal(ring, G.size());
  auto s = ring.zero();
  for (size_t g = 0; g < G.size(); ++g) s += a[g] * b[G.inv[g]];
  return s * ring.from_rational(Rational(1, long(G.size())));
}

// restriction of H1 x H2 data to one factor
template <class T>
std::vector<T> restrict_first(const DualPair& P, const std::vector<T>& v) {
  std::vector<T> out;
  for (size_t i = 0; i < P.g1.size(); ++i) out.push_back(v[i * P.g2.size()]);
  return out;
}
template <class T>
std::vector<T> restrict_second(const DualPair& P, const std::vector<T>& v) {
  return std::vector<T>(v.begin(), v.begin() + long(P.g2.size()));
}

// Column basis of the image of E in reduced column echelon form, with its pivot rows.
template <class R>
Mat<typename R::Elem> echelon_image(const R& ring, const Mat<typename R::Elem>& E, std::vector<int>& piv) {
  auto T = transpose(E);
  piv = rref(ring, T);
  Mat<typename R::Elem> U(E.r, int(piv.size()), ring.zero());
  for (size_t k = 0; k < piv.size(); ++k)
    for (int i = 0; i < E.r; ++i) U(i, int(k)) = T(int(k), i);
  return U;
}

template <class R>
struct ThetaLift {
  Mat<typename R::Elem> basis;  // columns span a copy of Theta(pi1) inside omega
  std::vector<int> pivots;
  Rep<R> mats;  // H2 action on the basis
  size_t dim() const { return size_t(basis.c); }
};

// Theta(pi1) on the image of e_11 = (dim/|H1|) sum pi1(h^{-1})_{00} omega(h, 1)
template <class R>
ThetaLift<R> theta_lift(const R& ring, const DualPair& P, const Rep<R>& omega, const Rep<R>& pi1) {
  require_banal(ring, P.g1.size());
  int n = omega[0].r, d = pi1[0].r;
  Mat<typename R::Elem> E(n, n, ring.zero());
  for (size_t h = 0; h < P.g1.size(); ++h) {
    auto c = pi1[P.g1.inv[h]](0, 0);
    if (!is_zero(c)) E = E + scaled(omega[h * P.g2.size()], c);
  }
  E = scaled(E, ring.from_rational(Rational(d, long(P.g1.size()))));
  ThetaLift<R> T;
  T.basis = echelon_image(ring, E, T.pivots);
  int k = T.basis.c;
  for (size_t h2 = 0; h2 < P.g2.size(); ++h2) {
    auto AU = omega[h2] * T.basis;
    Mat<typename R::Elem> A(k, k, ring.zero());
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < k; ++c) A(r, c) = AU(T.pivots[r], c);
    if (!(A.r == 0) && T.basis * A != AU) fail(ErrorKind::CheckFailed, "theta lift: image is not H2-stable");
    T.mats.push_back(A);
  }
  return T;
}

// e_Pi = (dim/|G|) sum_g chi(g^{-1}) g as coefficients on group elements
template <class R>
std::vector<typename R::Elem> central_idempotent(const R& ring, const FiniteGroup& G,
                                                 const std::vector<typename R::Elem>& chi, int dim) {
  require_banal(ring, G.size());
  auto s = ring.from_rational(Rational(dim, long(G.size())));
  std::vector<typename R::Elem> e;
  for (size_t g = 0; g < G.size(); ++g) e.push_back(s * chi[G.inv[g]]);
  return e;
}

template <class R>
std::vector<typename R::Elem> group_algebra_mul(const R& ring, const FiniteGroup& G,
                                                const std::vector<typename R::Elem>& a,
                                                const std::vector<typename R::Elem>& b) {
  std::vector<typename R::Elem> c(G.size(), ring.zero());
  for (size_t x = 0; x < G.size(); ++x) {
    if (is_zero(a[x])) continue;
    for (size_t y = 0; y < G.size(); ++y)
      if (!is_zero(b[y])) c[G.mul[x][y]] += a[x] * b[y];
  }
  return c;
}

template <class R>
bool is_central(const FiniteGroup& G, const std::vector<typename R::Elem>& e) {
  for (size_t g = 0; g < G.size(); ++g)
    for (size_t h = 0; h < G.size(); ++h)
      if (e[G.mul[G.mul[h][g]][G.inv[h]]] != e[g]) return false;
  return true;
}

// Brauer character as eigenvalue multiplicities: row g, column k counts xi^k, xi a
// primitive N-th root of unity in F_{l^d}, N = exponent of G (semisimple since l is banal).
using BrauerTable = std::vector<std::vector<int>>;
BrauerTable brauer_table(const FiniteRing& ring, const FiniteGroup& G, const Rep<FiniteRing>& rho);

struct SigmaDecomposition {
  int q = 0;
  std::vector<int> dims;       // constituents cut out by the centre {+-1}
  std::vector<CycInt> norms;   // <chi_i, chi_i>
  CycInt total_norm;           // <chi, chi>
  CycInt cross;                // <chi_+, chi_->
};
// Weil representation of Sp_2(F_q) via the split section, decomposed by character inner products
SigmaDecomposition weil_sp2_decomposition(const FqBase& F);

struct CongruenceReport {
  int ell = 0, d = 0;
  size_t dim0 = 0, dimell = 0;
  CycInt norm0;            // <chi_Theta, chi_Theta> in characteristic 0
  bool irreducible0 = false, irreducible_ell = false;
  bool reduction_is_rep = false;
  bool brauer_match = false;
  bool idempotent_match = false;  // r_l(e_Pi) = e_pi on G = H1 x H2
  bool idempotent_h1_match = false;  // r_l(e_Pi1) = e_pi1 on H1
};
// pi1 given as a linear character of H1 with values +-1 (trivial or det)
CongruenceReport congruence_check(const DualPair& P, const std::vector<int>& pi1, int ell);

std::vector<int> trivial_character(const DualPair& P);
std::vector<int> det_character(const DualPair& P);

}  // namespace weilmod
