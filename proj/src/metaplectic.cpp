#include "weilmod/metaplectic.hpp"

#include <algorithm>

namespace weilmod {

namespace {

void sort_rows(RootMat& r) {
  std::vector<std::pair<uint32_t, int>> tmp;
  for (uint32_t i = 0; i < r.n; ++i) {
    tmp.clear();
    for (uint32_t k = r.start[i]; k < r.start[i + 1]; ++k) tmp.push_back({r.col[k], r.e[k]});
    std::sort(tmp.begin(), tmp.end());
    for (size_t t = 0; t < tmp.size(); ++t) {
      r.col[r.start[i] + t] = tmp[t].first;
      r.e[r.start[i] + t] = tmp[t].second;
    }
  }
}

void rotate_reduce(std::vector<long long>& out, const std::vector<long long>& lam, int e, int p) {
  out.assign(p, 0);
  for (int k = 0; k < p; ++k) out[(k + e) % p] = lam[k];
  long long top = out[p - 1];
  for (auto& x : out) x -= top;
}

}  // namespace

RootMat rm_times(const RootMat& a, const MonomialOp& b) {
  RootMat r = a;
  for (size_t k = 0; k < a.col.size(); ++k) {
    uint32_t c = a.col[k];
    r.col[k] = b.col[c];
    r.e[k] = (a.e[k] + b.e[c]) % a.p;
  }
  sort_rows(r);
  return r;
}

RootMat rm_times(const MonomialOp& a, const RootMat& b) {
  RootMat r;
  r.n = b.n;
  r.p = b.p;
  r.start.push_back(0);
  for (uint32_t i = 0; i < b.n; ++i) {
    uint32_t src = a.col[i];
    for (uint32_t k = b.start[src]; k < b.start[src + 1]; ++k) {
      r.col.push_back(b.col[k]);
      r.e.push_back((b.e[k] + a.e[i]) % b.p);
    }
    r.start.push_back(uint32_t(r.col.size()));
  }
  return r;
}

std::optional<std::vector<long long>> body_ratio(const RootMat& A, const RootMat& B, const RootMat& C) {
  int p = A.p;
  uint32_t n = A.n;
  std::vector<long long> acc(size_t(n) * p);
  std::optional<std::vector<long long>> lam;
  std::vector<long long> red(p), expect;
  std::vector<char> hit(n);
  for (uint32_t i = 0; i < n; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (uint32_t ka = A.start[i]; ka < A.start[i + 1]; ++ka) {
      uint32_t k = A.col[ka];
      int ea = A.e[ka];
      for (uint32_t kb = B.start[k]; kb < B.start[k + 1]; ++kb) acc[size_t(B.col[kb]) * p + (ea + B.e[kb]) % p] += 1;
    }
    std::fill(hit.begin(), hit.end(), 0);
    for (uint32_t kc = C.start[i]; kc < C.start[i + 1]; ++kc) {
      uint32_t j = C.col[kc];
      hit[j] = 1;
      const long long* x = &acc[size_t(j) * p];
      if (!lam) {
        // lambda = acc * zeta^{-e}
        std::vector<long long> l(p);
        for (int k = 0; k < p; ++k) l[k] = x[(k + C.e[kc]) % p];
        long long top = l[p - 1];
        for (auto& v : l) v -= top;
        lam = l;
      }
      rotate_reduce(expect, *lam, C.e[kc], p);
      for (int k = 0; k < p; ++k)
        if (x[k] - x[p - 1] != expect[k]) return std::nullopt;
    }
    for (uint32_t j = 0; j < n; ++j) {
      if (hit[j]) continue;
      const long long* x = &acc[size_t(j) * p];
      for (int k = 0; k < p; ++k)
        if (x[k] != x[0]) return std::nullopt;
    }
  }
  if (!lam) return std::nullopt;
  return lam;
}

FiniteSigma sigma_finite(const FqBase& F, const SympMat<FqBase>& g) {
  auto bd = bruhat_decompose(F, g);
  int m = g.r / 2;
  FiniteSigma s;
  s.j = bd.j;
  s.sign = F.is_square(x_det(F, bd)) ? 1 : -1;
  auto gi = sp_inverse(F, g);
  auto I = identity(F, 2 * m);
  auto Xb = block(I, 0, 0, 2 * m, m);
  auto Kb = intersect(F, Xb, block(g, 0, 0, 2 * m, m));
  auto Z = complete_basis(F, Kb, Xb);
  FqVectors A(F, Z.c), Y(F, m);
  auto half = F.from_rational(Rational(1, 2));
  // g^{-1}(a) and g^{-1}(y) for a in span Z, y in Y
  std::vector<std::vector<GFElem>> ga(A.size(), std::vector<GFElem>(2 * m, F.zero())), ax(A.size());
  for (uint32_t c = 0; c < A.size(); ++c) {
    std::vector<GFElem> a(2 * m, F.zero());
    for (int k = 0; k < Z.c; ++k)
      for (int r = 0; r < 2 * m; ++r) a[r] += Z(r, k) * A.coord(c, k);
    ax[c] = a;
    for (int r = 0; r < 2 * m; ++r)
      for (int k = 0; k < 2 * m; ++k) ga[c][r] += gi(r, k) * a[k];
  }
  s.body.n = Y.size();
  s.body.p = F.p();
  s.body.start.push_back(0);
  std::vector<GFElem> gy(2 * m), v(2 * m), yv(m);
  for (uint32_t yi = 0; yi < Y.size(); ++yi) {
    for (int r = 0; r < m; ++r) yv[r] = Y.coord(yi, r);
    for (int r = 0; r < 2 * m; ++r) {
      gy[r] = F.zero();
      for (int k = 0; k < m; ++k) gy[r] += gi(r, m + k) * yv[k];
    }
    for (uint32_t c = 0; c < A.size(); ++c) {
      GFElem ay = F.zero(), xy = F.zero();
      for (int r = 0; r < 2 * m; ++r) v[r] = ga[c][r] + gy[r];
      for (int k = 0; k < m; ++k) {
        ay += ax[c][k] * yv[k];
        xy += v[k] * v[m + k];
      }
      std::vector<GFElem> yp(v.begin() + m, v.end());
      s.body.col.push_back(Y.index(yp));
      s.body.e.push_back(F.psi_exp(half * (ay - xy)));
    }
    s.body.start.push_back(uint32_t(s.body.col.size()));
  }
  sort_rows(s.body);
  return s;
}

bool sigma_intertwines(const FqBase& F, const SympMat<FqBase>& g, const FiniteSigma& s) {
  int m = g.r / 2;
  auto S = LagrangianModel::schrodinger(F, m);
  for (auto& h : S.generator_elements()) {
    auto lhs = rm_times(s.body, S.rho(h));
    auto rhs = rm_times(S.rho(h_act<FqBase>(g, h)), s.body);
    sort_rows(rhs);
    if (!(lhs == rhs)) return false;
  }
  return true;
}

GroupRingMat m_bracket(const FqBase& F, const SympMat<FqBase>& g) {
  int m = g.r / 2;
  auto S = LagrangianModel::schrodinger(F, m);
  auto gi = sp_inverse(F, g);
  auto I = identity(F, 2 * m);
  auto one_minus = I - gi;
  auto Ker = kernel(F, one_minus);
  auto Z = complete_basis(F, Ker, I);
  FqVectors C(F, Z.c);
  auto half = F.from_rational(Rational(1, 2));
  GroupRingMat out(int(S.dim()), int(S.dim()), F.p());
  std::vector<GFElem> w(2 * m), giw(2 * m);
  for (uint32_t c = 0; c < C.size(); ++c) {
    HeisenbergElement<FqBase> h{std::vector<GFElem>(2 * m, F.zero()), F.zero()};
    for (int r = 0; r < 2 * m; ++r) {
      w[r] = F.zero();
      for (int k = 0; k < Z.c; ++k) w[r] += Z(r, k) * C.coord(c, k);
    }
    for (int r = 0; r < 2 * m; ++r) {
      giw[r] = F.zero();
      for (int k = 0; k < 2 * m; ++k) giw[r] += gi(r, k) * w[k];
      h.w[r] = w[r] - giw[r];
    }
    int e = F.psi_exp(half * pairing(F, w, giw));
    auto op = S.rho(h);
    for (uint32_t i = 0; i < op.dim(); ++i) out.add(int(i), int(op.col[i]), e + op.e[i]);
  }
  return out;
}

}  // namespace weilmod
