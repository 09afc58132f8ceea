#include "weilmod/heisenberg.hpp"

#include <numeric>

namespace weilmod {

std::vector<HeisenbergElement<FqBase>> h_elements(const FqBase& F, int m) {
  FqVectors V(F, 2 * m);
  std::vector<HeisenbergElement<FqBase>> out;
  out.reserve(size_t(V.size()) * F.q());
  for (uint32_t i = 0; i < V.size(); ++i) {
    std::vector<GFElem> w(2 * m);
    for (int j = 0; j < 2 * m; ++j) w[j] = V.coord(i, j);
    for (uint32_t t = 0; t < F.q(); ++t) out.push_back({w, F.from_index(t)});
  }
  return out;
}

HeisenbergElement<FqBase> h_random(const FqBase& F, int m, Rng& rng) {
  HeisenbergElement<FqBase> h{std::vector<GFElem>(2 * m), F.random(rng)};
  for (auto& x : h.w) x = F.random(rng);
  return h;
}

MonomialOp MonomialOp::identity(uint32_t n, int p) { return scalar(n, p, 0); }

MonomialOp MonomialOp::scalar(uint32_t n, int p, int e) {
  MonomialOp o;
  o.p = p;
  o.col.resize(n);
  std::iota(o.col.begin(), o.col.end(), 0u);
  o.e.assign(n, int(mod_floor(e, p)));
  return o;
}

MonomialOp MonomialOp::transpose() const {
  MonomialOp t;
  t.p = p;
  t.col.resize(dim());
  t.e.resize(dim());
  for (uint32_t i = 0; i < dim(); ++i) {
    t.col[col[i]] = i;
    t.e[col[i]] = e[i];
  }
  return t;
}

MonomialOp MonomialOp::inverse() const {
  auto t = transpose();
  for (auto& x : t.e) x = x ? p - x : 0;
  return t;
}

bool MonomialOp::is_permutation() const {
  for (int x : e)
    if (x) return false;
  return true;
}

bool MonomialOp::is_diagonal() const {
  for (uint32_t i = 0; i < dim(); ++i)
    if (col[i] != i) return false;
  return true;
}

MonomialOp operator*(const MonomialOp& a, const MonomialOp& b) {
  if (a.dim() != b.dim() || a.p != b.p) fail(ErrorKind::Mismatch, "monomial product: shape mismatch");
  MonomialOp c;
  c.p = a.p;
  c.col.resize(a.dim());
  c.e.resize(a.dim());
  for (uint32_t i = 0; i < a.dim(); ++i) {
    uint32_t k = a.col[i];
    c.col[i] = b.col[k];
    int s = a.e[i] + b.e[k];
    c.e[i] = s >= a.p ? s - a.p : s;
  }
  return c;
}

MonomialOp kron(const MonomialOp& a, const MonomialOp& b) {
  MonomialOp c;
  c.p = a.p;
  uint32_t nb = b.dim();
  c.col.resize(size_t(a.dim()) * nb);
  c.e.resize(c.col.size());
  for (uint32_t i = 0; i < a.dim(); ++i)
    for (uint32_t k = 0; k < nb; ++k) {
      c.col[i * nb + k] = a.col[i] * nb + b.col[k];
      c.e[i * nb + k] = (a.e[i] + b.e[k]) % a.p;
    }
  return c;
}

MonomialOp direct_sum(const MonomialOp& a, const MonomialOp& b) {
  MonomialOp c = a;
  for (uint32_t i = 0; i < b.dim(); ++i) {
    c.col.push_back(a.dim() + b.col[i]);
    c.e.push_back(b.e[i]);
  }
  return c;
}

std::vector<long long> reduce_counts(const long long* c, int p) {
  std::vector<long long> out(p);
  for (int e = 0; e < p; ++e) out[e] = c[e] - c[p - 1];
  return out;
}

namespace {

std::vector<GFElem> as_vector(const Mat<GFElem>& c, int j = 0) {
  std::vector<GFElem> v(c.r);
  for (int i = 0; i < c.r; ++i) v[i] = c(i, j);
  return v;
}

}  // namespace

LagrangianModel::LagrangianModel(const FqBase& F, const Mat<GFElem>& A, const Mat<GFElem>& B)
    : F_(F), m_(A.c), A_(A), B_(B), V_(F, A.c) {
  int n = 2 * m_;
  if (A.r != n || B.r != n || B.c != m_) fail(ErrorKind::InvalidInput, "model: Lagrangians must be 2m x m");
  auto J = symplectic_form(F, m_);
  if (!is_zero_mat(transpose(A) * J * A, F) || !is_zero_mat(transpose(B) * J * B, F))
    fail(ErrorKind::InvalidInput, "model: subspace is not isotropic");
  if (m_ == 0) {
    split_ = zeros(F, 0, 0);
    return;
  }
  split_ = weilmod::inverse(F, hcat(A, B));
}

LagrangianModel LagrangianModel::schrodinger(const FqBase& F, int m) {
  auto I = identity(F, 2 * m);
  return LagrangianModel(F, block(I, 0, 0, 2 * m, m), block(I, 0, m, 2 * m, m));
}

std::vector<GFElem> LagrangianModel::point(uint32_t i) const {
  std::vector<GFElem> b(2 * m_, F_.zero());
  for (int j = 0; j < m_; ++j) {
    auto c = V_.coord(i, j);
    if (c.is_zero()) continue;
    for (int r = 0; r < 2 * m_; ++r) b[r] += B_(r, j) * c;
  }
  return b;
}

uint32_t LagrangianModel::index(const std::vector<GFElem>& b) const {
  std::vector<GFElem> c(m_, F_.zero());
  for (int j = 0; j < 2 * m_; ++j) {
    if (b[j].is_zero()) continue;
    for (int i = 0; i < m_; ++i) {
      if (!split_(i, j).is_zero()) fail(ErrorKind::InvalidInput, "model: vector is not in the complement");
      c[i] += split_(m_ + i, j) * b[j];
    }
  }
  return V_.index(c);
}

void LagrangianModel::split(const std::vector<GFElem>& w, std::vector<GFElem>& wa, std::vector<GFElem>& wb) const {
  int n = 2 * m_;
  wa.assign(n, F_.zero());
  wb.assign(n, F_.zero());
  for (int k = 0; k < m_; ++k) {
    GFElem ca = F_.zero(), cb = F_.zero();
    for (int j = 0; j < n; ++j) {
      ca += split_(k, j) * w[j];
      cb += split_(m_ + k, j) * w[j];
    }
    for (int r = 0; r < n; ++r) {
      wa[r] += A_(r, k) * ca;
      wb[r] += B_(r, k) * cb;
    }
  }
}

MonomialOp LagrangianModel::rho(const HeisenbergElement<FqBase>& h) const {
  if (int(h.w.size()) != 2 * m_) fail(ErrorKind::InvalidInput, "rho: element of the wrong Heisenberg group");
  std::vector<GFElem> wa, wb;
  split(h.w, wa, wb);
  auto half = F_.from_rational(Rational(1, 2));
  GFElem base = h.t + half * pairing(F_, wb, wa);
  std::vector<GFElem> L(m_);
  for (int j = 0; j < m_; ++j) L[j] = pairing(F_, as_vector(column(B_, j)), wa);
  uint32_t shift = index(wb);
  MonomialOp o;
  o.p = F_.p();
  o.col.resize(dim());
  o.e.resize(dim());
  for (uint32_t i = 0; i < dim(); ++i) {
    GFElem s = base;
    for (int j = 0; j < m_; ++j) s += V_.coord(i, j) * L[j];
    o.col[i] = V_.add(i, shift);
    o.e[i] = F_.psi_exp(s);
  }
  return o;
}

std::vector<HeisenbergElement<FqBase>> h_generators(const FqBase& F, int m) {
  std::vector<HeisenbergElement<FqBase>> g;
  for (int i = 0; i < 2 * m; ++i)
    for (uint32_t c = 1; c < F.q(); c *= uint32_t(F.p())) {
      std::vector<GFElem> w(2 * m, F.zero());
      w[i] = F.from_index(c);
      g.push_back(h_delta(F, w));
    }
  g.push_back(h_central(F, m, F.one()));
  return g;
}

std::vector<HeisenbergElement<FqBase>> LagrangianModel::generator_elements() const { return h_generators(F_, m_); }

std::vector<MonomialOp> LagrangianModel::generators() const {
  std::vector<MonomialOp> out;
  for (auto& h : generator_elements()) out.push_back(rho(h));
  return out;
}

TensorModel::TensorModel(LagrangianModel a, LagrangianModel b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_.field().q() != b_.field().q() || a_.field().twist() != b_.field().twist())
    fail(ErrorKind::Mismatch, "tensor model: factors over different fields or characters");
}

MonomialOp TensorModel::rho(const HeisenbergElement<FqBase>& h) const {
  int m1 = a_.m(), m2 = b_.m(), n = m();
  if (int(h.w.size()) != 2 * n) fail(ErrorKind::InvalidInput, "rho: element of the wrong Heisenberg group");
  HeisenbergElement<FqBase> h1{std::vector<GFElem>(2 * m1), h.t};
  HeisenbergElement<FqBase> h2{std::vector<GFElem>(2 * m2), field().zero()};
  for (int i = 0; i < m1; ++i) {
    h1.w[i] = h.w[i];
    h1.w[m1 + i] = h.w[n + i];
  }
  for (int i = 0; i < m2; ++i) {
    h2.w[i] = h.w[m1 + i];
    h2.w[m2 + i] = h.w[n + m1 + i];
  }
  return kron(a_.rho(h1), b_.rho(h2));
}

std::vector<HeisenbergElement<FqBase>> TensorModel::generator_elements() const { return h_generators(field(), m()); }

std::vector<MonomialOp> TensorModel::generators() const {
  std::vector<MonomialOp> out;
  for (auto& h : generator_elements()) out.push_back(rho(h));
  return out;
}

std::vector<MonomialOp> dual_operators(const LagrangianModel& M, const std::vector<HeisenbergElement<FqBase>>& hs) {
  std::vector<MonomialOp> out;
  for (auto& h : hs) out.push_back(M.rho(h_inv(M.field(), h)).transpose());
  return out;
}

namespace {

// union-find with Z/p potentials: value(x) = zeta^{pot(x)} value(root(x))
struct PotentialDSU {
  std::vector<uint32_t> parent;
  std::vector<int> pot;
  std::vector<char> bad;
  int p;

  PotentialDSU(size_t n, int p_) : parent(n), pot(n, 0), bad(n, 0), p(p_) {
    std::iota(parent.begin(), parent.end(), 0u);
  }

  uint32_t find(uint32_t x) {
    uint32_t r = x;
    int acc = 0;
    while (parent[r] != r) r = parent[r];
    // second pass: compress, accumulating potentials from x upward
    std::vector<uint32_t> path;
    for (uint32_t y = x; parent[y] != y; y = parent[y]) path.push_back(y);
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
      acc = (acc + pot[*it]) % p;
      pot[*it] = acc;
      parent[*it] = r;
    }
    return r;
  }

  // value(v) = zeta^w value(u)
  void unite(uint32_t u, uint32_t v, int w) {
    uint32_t ru = find(u), rv = find(v);
    int pu = parent[u] == u ? 0 : pot[u];
    int pv = parent[v] == v ? 0 : pot[v];
    if (ru == rv) {
      if (mod_floor(pv - pu - w, p) != 0) bad[ru] = 1;
      return;
    }
    parent[rv] = ru;
    pot[rv] = int(mod_floor(pu + w - pv, p));
    bad[ru] |= bad[rv];
  }
};

}  // namespace

MonomialHom hom_space(const std::vector<MonomialOp>& A, const std::vector<MonomialOp>& B) {
  if (A.size() != B.size() || A.empty()) fail(ErrorKind::InvalidInput, "hom_space: generator lists differ");
  uint32_t n1 = A[0].dim(), n2 = B[0].dim();
  int p = A[0].p;
  PotentialDSU d(size_t(n1) * n2, p);
  for (size_t k = 0; k < A.size(); ++k) {
    auto& a = A[k];
    auto& b = B[k];
    // T[pi_b i][pi_a l] = zeta^{e_a(l) - e_b(i)} T[i][l]
    for (uint32_t i = 0; i < n2; ++i)
      for (uint32_t l = 0; l < n1; ++l)
        d.unite(i * n1 + l, b.col[i] * n1 + a.col[l], int(mod_floor(a.e[l] - b.e[i], p)));
  }
  MonomialHom H;
  H.rows = n2;
  H.cols = n1;
  H.p = p;
  std::vector<long> slot(size_t(n1) * n2, -1);
  for (uint32_t x = 0; x < n1 * n2; ++x) {
    uint32_t r = d.find(x);
    if (d.bad[r]) continue;
    if (slot[r] < 0) {
      slot[r] = long(H.basis.size());
      H.basis.emplace_back();
    }
    int pe = x == r ? 0 : d.pot[x];
    H.basis[slot[r]].push_back({x / n1, x % n1, pe});
  }
  return H;
}

GroupRingMat intertwiner(const LagrangianModel& M1, const LagrangianModel& M2, const std::vector<GFElem>& omega) {
  const FqBase& F = M1.field();
  int m = M1.m();
  if (M2.m() != m) fail(ErrorKind::InvalidInput, "intertwiner: models of different rank");
  auto K = intersect(F, M1.lagrangian(), M2.lagrangian());
  for (int j = 0; j < K.c; ++j)
    if (!pairing(F, omega, as_vector(K, j)).is_zero())
      fail(ErrorKind::InvalidInput, "intertwiner: omega is incompatible with A1 cap A2");
  auto Z = complete_basis(F, K, M2.lagrangian());
  FqVectors C(F, Z.c);
  std::vector<std::vector<GFElem>> as;
  for (uint32_t c = 0; c < C.size(); ++c) {
    std::vector<GFElem> a(2 * m, F.zero());
    for (int j = 0; j < Z.c; ++j)
      for (int r = 0; r < 2 * m; ++r) a[r] += Z(r, j) * C.coord(c, j);
    as.push_back(a);
  }
  auto half = F.from_rational(Rational(1, 2));
  GroupRingMat I(int(M2.dim()), int(M1.dim()), F.p());
  std::vector<GFElem> v(2 * m), oa(2 * m), al, be;
  for (uint32_t i = 0; i < M2.dim(); ++i) {
    auto b2 = M2.point(i);
    for (auto& a : as) {
      for (int r = 0; r < 2 * m; ++r) {
        oa[r] = omega[r] + a[r];
        v[r] = oa[r] + b2[r];
      }
      GFElem s = half * (pairing(F, omega, a) + pairing(F, oa, b2));
      M1.split(v, al, be);
      s -= half * pairing(F, al, be);
      I.add(int(i), int(M1.index(be)), F.psi_exp(s));
    }
  }
  return I;
}

}  // namespace weilmod
