#include "weilmod/weilfactor.hpp"

#include <map>
#include <mutex>
#include <tuple>

namespace weilmod {

FqVectors::FqVectors(const FqBase& F, int m) : gf_(&F.gf()), q_(F.q()), m_(m) {
  uint32_t n = 1;
  for (int j = 0; j <= m; ++j) {
    pw_.push_back(n);
    if (j < m) {
      if (uint64_t(n) * q_ > 1000000) fail(ErrorKind::Unsupported, "vector space too large to enumerate");
      n *= q_;
    }
  }
  n_ = n;
}

uint32_t FqVectors::index(const std::vector<GFElem>& v) const {
  uint32_t i = 0;
  for (int j = m_ - 1; j >= 0; --j) i = i * q_ + v[j].v;
  return i;
}

uint32_t FqVectors::add(uint32_t a, uint32_t b) const {
  uint32_t r = 0;
  for (int j = 0; j < m_; ++j) r += gf_->add((a / pw_[j]) % q_, (b / pw_[j]) % q_) * pw_[j];
  return r;
}

uint32_t FqVectors::neg(uint32_t a) const {
  uint32_t r = 0;
  for (int j = 0; j < m_; ++j) r += gf_->neg((a / pw_[j]) % q_) * pw_[j];
  return r;
}

uint32_t FqVectors::scale(const GFElem& c, uint32_t a) const {
  uint32_t r = 0;
  for (int j = 0; j < m_; ++j) r += gf_->mul(c.v, (a / pw_[j]) % q_) * pw_[j];
  return r;
}

namespace {

std::vector<long long> convolve_counts(const std::vector<long long>& a, const std::vector<long long>& b) {
  size_t p = a.size();
  std::vector<long long> r(p, 0);
  for (size_t i = 0; i < p; ++i)
    if (a[i])
      for (size_t j = 0; j < p; ++j) r[(i + j) % p] += a[i] * b[j];
  return r;
}

template <class K>
QuadraticForm<K> nondegenerate_part(const QuadraticForm<K>& Q) {
  const K& F = Q.field();
  auto C = complete_basis(F, Q.radical(), identity(F, Q.dim()));
  return QuadraticForm<K>(F, transpose(C) * Q.gram() * C);
}

}  // namespace

std::vector<long long> gauss_counts_1d(const FqBase& F, const GFElem& a) {
  std::vector<long long> c(F.p(), 0);
  for (auto x : F.elements()) c[F.psi_exp(a * x * x)]++;
  return c;
}

std::vector<long long> gauss_counts(const QuadraticForm<FqBase>& Q) {
  const FqBase& F = Q.field();
  auto nd = nondegenerate_part(Q);
  int r = nd.dim();
  std::vector<long long> c(F.p(), 0);
  if (r == 0) {
    c[0] = 1;
    return c;
  }
  double sz = 1;
  for (int i = 0; i < r; ++i) sz *= F.q();
  if (sz > 2e5) {
    // Prop d): product over an orthogonal basis
    c[0] = 1;
    for (auto& a : nd.diagonalization().diag) c = convolve_counts(c, gauss_counts_1d(F, a));
    return c;
  }
  FqVectors V(F, r);
  const auto& G = nd.gram();
  std::vector<GFElem> y(r);
  for (uint32_t i = 0; i < V.size(); ++i) {
    for (int j = 0; j < r; ++j) y[j] = V.coord(i, j);
    GFElem s = F.zero();
    for (int j = 0; j < r; ++j) {
      if (y[j].is_zero()) continue;
      GFElem t = F.zero();
      for (int k = 0; k < r; ++k) t += G(j, k) * y[k];
      s += y[j] * t;
    }
    c[F.psi_exp(s)]++;
  }
  return c;
}

CycInt omega(const QuadraticForm<FqBase>& Q) { return CycInt::from_counts(Q.field().p(), 1, gauss_counts(Q)); }

CycInt omega_1d(const FqBase& F, const GFElem& a) { return CycInt::from_counts(F.p(), 1, gauss_counts_1d(F, a)); }

CycInt omega_lattice(const QpBase& F, const Rational& a, int n) {
  int p = F.p();
  Rational at = F.twist() * a;
  if (at == 0) return CycInt(rpow(p, n));
  int v = val_p(at, p);
  int ceil_half = (-v >= 0) ? (-v + 1) / 2 : -((v) / 2);  // ceil(-v/2)
  int np = std::max({n - v, ceil_half, -n});
  int terms_exp = n + np;
  if (terms_exp > 16 || ipow(p, terms_exp) > 20000000) fail(ErrorKind::Unsupported, "lattice sum too large");
  Rational c = at * rpow(p, -2 * n);
  int L = std::max(0, -val_p(c, p));
  long long pL = ipow(p, L);
  long long A = L ? frac_part(c, p).first.convert_to<long long>() : 0;
  std::vector<long long> counts(pL, 0);
  long long T = ipow(p, terms_exp);
  for (long long t = 0; t < T; ++t) {
    long long tt = t % pL;
    long long e = (__int128)A * tt % pL * tt % pL;
    counts[e]++;
  }
  CycInt s = L ? CycInt::from_counts(p, L, counts) : CycInt(counts[0]);
  return s * CycInt(rpow(p, -np));
}

int omega_depth(const QpBase& F, const Rational& a) {
  int v = val_p(F.twist() * a, F.p());
  int h = v >= 0 ? (v + 1) / 2 : -((-v) / 2);  // ceil(v/2)
  return std::max(0, h + 1);
}

CycInt omega_1d(const QpBase& F, const Rational& a, int extra) {
  if (a == 0) fail(ErrorKind::InvalidInput, "omega of a zero coefficient");
  // psi(a x^2) = psi_0(a' x^2) with a' = twist * a = r s^2, r the class representative;
  // Omega(Q_{r s^2}) = |s|^{-1} Omega(Q_r)
  int p = F.p();
  Rational at = F.twist() * a;
  auto cls = square_class(QpBase(p), at);
  int vs = (val_p(at, p) - val_p(cls.rep, p)) / 2;
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, CycInt> cache;
  auto key = std::make_tuple(p, cls.tag, extra);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second * CycInt(rpow(p, vs));
  }
  QpBase F0(p);
  int n = omega_depth(F0, cls.rep);
  CycInt base = omega_lattice(F0, cls.rep, n);
  for (int e = 1; e <= extra; ++e)
    if (omega_lattice(F0, cls.rep, n + e) != base) fail(ErrorKind::CheckFailed, "omega lattice sum did not stabilise");
  {
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(key, base);
  }
  return base * CycInt(rpow(p, vs));
}

namespace {

CycInt omega_from(const QpBase& F, const QuadraticForm<QpBase>& nd, bool reverse) {
  auto d = reverse ? nd.diagonalize_with(true) : nd.diagonalization();
  CycInt v(Rational(1));
  if (d.diag.empty()) return v;
  v = CycInt(F.modulus(det(F, d.basis)));
  for (auto& a : d.diag) v *= omega_1d(F, a);
  return v;
}

}  // namespace

CycInt omega(const QuadraticForm<QpBase>& Q) { return omega_from(Q.field(), nondegenerate_part(Q), false); }

CycInt omega_alt(const QuadraticForm<QpBase>& Q) { return omega_from(Q.field(), nondegenerate_part(Q), true); }

CycInt omega_ratio(const FqBase& F, const GFElem& a, const GFElem& b) {
  if (a.is_zero() || b.is_zero()) fail(ErrorKind::InvalidInput, "omega_ratio of zero");
  return omega_1d(F, a) / omega_1d(F, b);
}

CycInt omega_ratio(const QpBase& F, const Rational& a, const Rational& b) {
  if (a == 0 || b == 0) fail(ErrorKind::InvalidInput, "omega_ratio of zero");
  return omega_1d(F, a) / omega_1d(F, b);
}

namespace {

template <class K>
int hv(const K& F, const typename K::Elem& a, const typename K::Elem& b) {
  if (is_zero(a) || is_zero(b)) fail(ErrorKind::InvalidInput, "hilbert symbol of zero");
  CycInt r = omega_1d(F, F.one()) * omega_1d(F, a * b) / (omega_1d(F, a) * omega_1d(F, b));
  if (r == CycInt(1)) return 1;
  if (r == CycInt(-1)) return -1;
  fail(ErrorKind::CheckFailed, "omega quotient is not a sign: " + r.str());
}

template <class K>
DiagProduct diag_product(const QuadraticForm<K>& Q) {
  const K& F = Q.field();
  auto nd = nondegenerate_part(Q);
  if (!Q.nondegenerate()) fail(ErrorKind::InvalidInput, "omega_diag_product needs a non-degenerate form");
  DiagProduct r;
  auto& d = nd.diagonalization();
  typename K::Elem dt = F.one();
  for (auto& a : d.diag) dt *= a;
  CycInt ratio = omega_1d(F, dt) / omega_1d(F, F.one());
  CycInt id = omega_1d(F, F.one()).pow(int(d.diag.size()));
  if constexpr (K::finite) {
    r.direct = omega(Q);
  } else {
    r.direct = omega_alt(Q);
    id *= CycInt(F.modulus(det(F, d.basis)));
  }
  r.product = ratio * id * CycInt(nd.hasse());
  return r;
}

}  // namespace

int hilbert_via_omega(const FqBase& F, const GFElem& a, const GFElem& b) { return hv(F, a, b); }
int hilbert_via_omega(const QpBase& F, const Rational& a, const Rational& b) { return hv(F, a, b); }

DiagProduct omega_diag_product(const QuadraticForm<FqBase>& Q) { return diag_product(Q); }
DiagProduct omega_diag_product(const QuadraticForm<QpBase>& Q) { return diag_product(Q); }

CycInt epsilon(const FqBase& F, const Mat<GFElem>& rho) {
  QuadraticForm<FqBase> q(F, scaled(rho, F.from_rational(Rational(1, 2))));
  if (!q.nondegenerate()) fail(ErrorKind::InvalidInput, "epsilon: rho is degenerate");
  return omega_ratio(F, F.from_int(-1), F.one()).pow(rho.r) * CycInt(hilbert(F, F.from_int(-1), q.det_nd()));
}

CycInt epsilon(const QpBase& F, const Mat<Rational>& rho) {
  QuadraticForm<QpBase> q(F, scaled(rho, Rational(1, 2)));
  if (!q.nondegenerate()) fail(ErrorKind::InvalidInput, "epsilon: rho is degenerate");
  return omega_ratio(F, Rational(-1), Rational(1)).pow(rho.r) * CycInt(hilbert(F, Rational(-1), q.det_nd()));
}

template <class R>
Mat<typename R::Elem> fourier_matrix(const R& ring, const FqBase& F, const Mat<GFElem>& rho) {
  int m = rho.r;
  QuadraticForm<FqBase> half(F, scaled(rho, F.from_rational(Rational(1, 2))));
  if (!half.nondegenerate()) fail(ErrorKind::InvalidInput, "fourier: rho is degenerate");
  auto c = inverse(ring.from_counts(gauss_counts(half)));
  FqVectors V(F, m);
  std::vector<typename R::Elem> zpow;
  for (int e = 0; e < F.p(); ++e) zpow.push_back(ring.zeta(e) * c);
  Mat<typename R::Elem> M(V.size(), V.size(), ring.zero());
  std::vector<GFElem> lx(m);
  for (uint32_t x = 0; x < V.size(); ++x) {
    for (int k = 0; k < m; ++k) {
      lx[k] = F.zero();
      for (int j = 0; j < m; ++j) lx[k] += V.coord(x, j) * rho(j, k);
    }
    for (uint32_t u = 0; u < V.size(); ++u) {
      GFElem s = F.zero();
      for (int k = 0; k < m; ++k) s += lx[k] * V.coord(u, k);
      M(x, u) = zpow[F.psi_exp(s)];
    }
  }
  return M;
}

template <class R>
std::vector<typename R::Elem> convolve(const R& ring, const FqBase& F, const Mat<GFElem>& rho,
                                       const std::vector<typename R::Elem>& f,
                                       const std::vector<typename R::Elem>& g) {
  QuadraticForm<FqBase> half(F, scaled(rho, F.from_rational(Rational(1, 2))));
  auto c = inverse(ring.from_counts(gauss_counts(half)));
  FqVectors V(F, rho.r);
  std::vector<typename R::Elem> h(V.size(), ring.zero());
  for (uint32_t x = 0; x < V.size(); ++x)
    for (uint32_t u = 0; u < V.size(); ++u) h[x] += f[u] * g[V.add(x, V.neg(u))];
  for (auto& v : h) v *= c;
  return h;
}

template Mat<CycInt> fourier_matrix(const CycloRing&, const FqBase&, const Mat<GFElem>&);
template Mat<GFElem> fourier_matrix(const FiniteRing&, const FqBase&, const Mat<GFElem>&);
template std::vector<CycInt> convolve(const CycloRing&, const FqBase&, const Mat<GFElem>&, const std::vector<CycInt>&,
                                      const std::vector<CycInt>&);
template std::vector<GFElem> convolve(const FiniteRing&, const FqBase&, const Mat<GFElem>&, const std::vector<GFElem>&,
                                      const std::vector<GFElem>&);

CycInt normalized_weil_factor(const QuadraticForm<FqBase>& Q, const CycInt& sqrt_q) {
  if (sqrt_q * sqrt_q != CycInt((long long)Q.field().q()))
    fail(ErrorKind::InvalidInput, "supplied square root does not square to q");
  return omega(Q) * sqrt_q.pow(-Q.rank());
}

}  // namespace weilmod
