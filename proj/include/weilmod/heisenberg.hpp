#pragma once
#include <cstdint>
#include <vector>

#include "weilmod/weilfactor.hpp"

namespace weilmod {

// W = F^{2m} in the basis e_1..e_m, f_1..f_m; <(x,y),(x',y')> = x.y' - y.x'
template <class K>
typename K::Elem pairing(const K& F, const std::vector<typename K::Elem>& w, const std::vector<typename K::Elem>& v) {
  int m = int(w.size()) / 2;
  auto s = F.zero();
  for (int i = 0; i < m; ++i) s += w[i] * v[m + i] - w[m + i] * v[i];
  return s;
}

// Gram matrix of the pairing
template <class K>
Mat<typename K::Elem> symplectic_form(const K& F, int m) {
  auto J = zeros(F, 2 * m, 2 * m);
  for (int i = 0; i < m; ++i) {
    J(i, m + i) = F.one();
    J(m + i, i) = -F.one();
  }
  return J;
}

template <class K>
struct HeisenbergElement {
  std::vector<typename K::Elem> w;
  typename K::Elem t;
  friend bool operator==(const HeisenbergElement& a, const HeisenbergElement& b) { return a.w == b.w && a.t == b.t; }
};

template <class K>
HeisenbergElement<K> h_mul(const K& F, const HeisenbergElement<K>& a, const HeisenbergElement<K>& b) {
  if (a.w.size() != b.w.size()) fail(ErrorKind::InvalidInput, "h_mul: elements of different Heisenberg groups");
  HeisenbergElement<K> c{a.w, a.t + b.t + pairing(F, a.w, b.w) * F.from_rational(Rational(1, 2))};
  for (size_t i = 0; i < c.w.size(); ++i) c.w[i] += b.w[i];
  return c;
}

template <class K>
HeisenbergElement<K> h_inv(const K&, const HeisenbergElement<K>& a) {
  HeisenbergElement<K> c{a.w, -a.t};
  for (auto& x : c.w) x = -x;
  return c;
}

template <class K>
HeisenbergElement<K> h_delta(const K& F, const std::vector<typename K::Elem>& w) {
  return {w, F.zero()};
}

template <class K>
HeisenbergElement<K> h_central(const K& F, int m, const typename K::Elem& t) {
  return {std::vector<typename K::Elem>(2 * m, F.zero()), t};
}

template <class K>
HeisenbergElement<K> h_commutator(const K& F, const HeisenbergElement<K>& a, const HeisenbergElement<K>& b) {
  return h_mul(F, h_mul(F, a, b), h_mul(F, h_inv(F, a), h_inv(F, b)));
}

// g acting on H through W
template <class K>
HeisenbergElement<K> h_act(const Mat<typename K::Elem>& g, const HeisenbergElement<K>& h) {
  HeisenbergElement<K> c{h.w, h.t};
  for (int i = 0; i < g.r; ++i) {
    auto s = h.t - h.t;
    for (int j = 0; j < g.c; ++j) s += g(i, j) * h.w[j];
    c.w[i] = s;
  }
  return c;
}

// all of H(F_q^{2m})
std::vector<HeisenbergElement<FqBase>> h_elements(const FqBase& F, int m);
HeisenbergElement<FqBase> h_random(const FqBase& F, int m, Rng& rng);
// delta(c e_i), delta(c f_i) for c in an F_p-basis of F_q, and (0,1)
std::vector<HeisenbergElement<FqBase>> h_generators(const FqBase& F, int m);

// Square matrix with exactly one entry zeta_p^{e[i]} in row i, at column col[i].
struct MonomialOp {
  std::vector<uint32_t> col;
  std::vector<int> e;
  int p = 3;

  uint32_t dim() const { return uint32_t(col.size()); }
  static MonomialOp identity(uint32_t n, int p);
  static MonomialOp scalar(uint32_t n, int p, int e);
  MonomialOp transpose() const;
  MonomialOp inverse() const;
  bool is_permutation() const;
  bool is_diagonal() const;
  friend MonomialOp operator*(const MonomialOp& a, const MonomialOp& b);
  friend bool operator==(const MonomialOp& a, const MonomialOp& b) {
    return a.p == b.p && a.col == b.col && a.e == b.e;
  }
  friend bool operator!=(const MonomialOp& a, const MonomialOp& b) { return !(a == b); }

  template <class R>
  Mat<typename R::Elem> dense(const R& ring) const {
    Mat<typename R::Elem> M(int(col.size()), int(col.size()), ring.zero());
    for (uint32_t i = 0; i < dim(); ++i) M(int(i), int(col[i])) = ring.zeta(e[i]);
    return M;
  }
};

MonomialOp kron(const MonomialOp& a, const MonomialOp& b);
MonomialOp direct_sum(const MonomialOp& a, const MonomialOp& b);

// Matrix over the group ring Z[C_p]: entry (i,j) is a count vector of length p
// standing for sum_e c[e] zeta^e. Exact and ring-independent.
struct GroupRingMat {
  int r = 0, c = 0, p = 3;
  std::vector<long long> a;

  GroupRingMat() = default;
  GroupRingMat(int rows, int cols, int p_) : r(rows), c(cols), p(p_), a(size_t(rows) * cols * p_, 0) {}
  long long* at(int i, int j) { return &a[(size_t(i) * c + j) * p]; }
  const long long* at(int i, int j) const { return &a[(size_t(i) * c + j) * p]; }
  void add(int i, int j, int e, long long n = 1) { at(i, j)[((e % p) + p) % p] += n; }

  template <class R>
  Mat<typename R::Elem> to_ring(const R& ring, const typename R::Elem& scale) const {
    Mat<typename R::Elem> M(r, c, ring.zero());
    std::vector<long long> v(p);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) {
        const long long* x = at(i, j);
        bool nz = false;
        for (int e = 0; e < p; ++e) nz |= x[e] != x[0];
        if (!nz) continue;
        v.assign(x, x + p);
        M(i, j) = ring.from_counts(v) * scale;
      }
    return M;
  }
};

// counts reduced modulo 1 + z + ... + z^{p-1} (last coordinate made 0)
std::vector<long long> reduce_counts(const long long* c, int p);

// Lagrangian model: functions on B for the induced representation from A x F
// (character trivial on A). Basis index i <-> b = B * coords(i).
class LagrangianModel {
 public:
  LagrangianModel(const FqBase& F, const Mat<GFElem>& A, const Mat<GFElem>& B);
  static LagrangianModel schrodinger(const FqBase& F, int m);

  const FqBase& field() const { return F_; }
  int m() const { return m_; }
  uint32_t dim() const { return V_.size(); }
  const Mat<GFElem>& lagrangian() const { return A_; }
  const Mat<GFElem>& complement() const { return B_; }

  std::vector<GFElem> point(uint32_t i) const;  // vector of W
  uint32_t index(const std::vector<GFElem>& b) const;  // b must lie in B
  // w = w_A + w_B
  void split(const std::vector<GFElem>& w, std::vector<GFElem>& wa, std::vector<GFElem>& wb) const;

  MonomialOp rho(const HeisenbergElement<FqBase>& h) const;
  std::vector<HeisenbergElement<FqBase>> generator_elements() const;
  std::vector<MonomialOp> generators() const;

 private:
  FqBase F_;
  int m_;
  Mat<GFElem> A_, B_, split_;  // split_ = [A|B]^{-1}
  FqVectors V_;
};

// rho_1 (x) rho_2 on W_1 + W_2 = (X_1 + X_2) + (Y_1 + Y_2)
class TensorModel {
 public:
  TensorModel(LagrangianModel a, LagrangianModel b);
  const FqBase& field() const { return a_.field(); }
  int m() const { return a_.m() + b_.m(); }
  uint32_t dim() const { return a_.dim() * b_.dim(); }
  MonomialOp rho(const HeisenbergElement<FqBase>& h) const;
  std::vector<HeisenbergElement<FqBase>> generator_elements() const;
  std::vector<MonomialOp> generators() const;

 private:
  LagrangianModel a_, b_;
};

// dual representation h -> rho(h^{-1})^T on the given elements
std::vector<MonomialOp> dual_operators(const LagrangianModel& M, const std::vector<HeisenbergElement<FqBase>>& hs);

// Hom(A, B) = {T : T A_k = B_k T for all k} for monomial families of equal size.
// Each basis element is a matrix with root-of-unity entries on one orbit of index pairs.
struct MonomialHom {
  struct Entry {
    uint32_t i, j;
    int e;
  };
  std::vector<std::vector<Entry>> basis;
  uint32_t rows = 0, cols = 0;
  int p = 3;

  size_t dim() const { return basis.size(); }
  template <class R>
  Mat<typename R::Elem> dense(const R& ring, size_t k) const {
    Mat<typename R::Elem> M(int(rows), int(cols), ring.zero());
    for (auto& x : basis[k]) M(int(x.i), int(x.j)) = ring.zeta(x.e);
    return M;
  }
};
MonomialHom hom_space(const std::vector<MonomialOp>& A, const std::vector<MonomialOp>& B);
inline size_t commutant_dim(const std::vector<MonomialOp>& gens) { return hom_space(gens, gens).dim(); }

// same quantity from the dense linear system over R
template <class R>
int commutant_dim_dense(const R& ring, const std::vector<Mat<typename R::Elem>>& gens) {
  if (gens.empty()) fail(ErrorKind::InvalidInput, "commutant: no generators");
  int n = gens[0].r, N = n * n;
  Mat<typename R::Elem> S(int(gens.size()) * N, N, ring.zero());
  for (size_t k = 0; k < gens.size(); ++k) {
    auto& A = gens[k];
    // (MA - AM)_{ij} = sum_l M_il A_lj - A_il M_lj
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        int row = int(k) * N + i * n + j;
        for (int l = 0; l < n; ++l) {
          if (!is_zero(A(l, j))) S(row, i * n + l) += A(l, j);
          if (!is_zero(A(i, l))) S(row, l * n + j) -= A(i, l);
        }
      }
  }
  return N - rank(ring, S);
}

// Intertwiner S_{A1} -> S_{A2}: (I f)(h) = sum_{a in A2/(A1 cap A2)} F((omega,0)(a,0)h) mu_pt,
// returned as counts (multiply by mu_pt in the coefficient ring).
GroupRingMat intertwiner(const LagrangianModel& M1, const LagrangianModel& M2, const std::vector<GFElem>& omega);

}  // namespace weilmod
