#include "weilmod/theta.hpp"

#include <map>

namespace weilmod {

namespace {

using Key = std::vector<uint32_t>;

Key key_of(const Mat<GFElem>& m) {
  Key k;
  for (auto& x : m.a) k.push_back(x.v);
  return k;
}

Mat<GFElem> kron(const FqBase& F, const Mat<GFElem>& x, const Mat<GFElem>& y) {
  Mat<GFElem> out(x.r * y.r, x.c * y.c, F.zero());
  for (int i = 0; i < x.r; ++i)
    for (int j = 0; j < x.c; ++j)
      for (int k = 0; k < y.r; ++k)
        for (int l = 0; l < y.c; ++l) out(i * y.r + k, j * y.c + l) = x(i, j) * y(k, l);
  return out;
}

}  // namespace

int FiniteGroup::order_of(int g) const {
  int o = 1;
  for (int x = g; x != id; x = mul[x][g]) ++o;
  return o;
}

int FiniteGroup::exponent() const {
  long long e = 1;
  for (size_t g = 0; g < size(); ++g) e = std::lcm(e, (long long)order_of(int(g)));
  return int(e);
}

FiniteGroup FiniteGroup::from_matrices(const std::vector<Mat<GFElem>>& els) {
  std::map<Key, int> idx;
  for (size_t i = 0; i < els.size(); ++i) idx[key_of(els[i])] = int(i);
  if (idx.size() != els.size()) fail(ErrorKind::InvalidInput, "group: repeated elements");
  FiniteGroup G;
  size_t n = els.size();
  G.mul.assign(n, std::vector<int>(n));
  G.inv.assign(n, -1);
  G.id = -1;
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) {
      auto it = idx.find(key_of(els[a] * els[b]));
      if (it == idx.end()) fail(ErrorKind::InvalidInput, "group: not closed under multiplication");
      G.mul[a][b] = it->second;
      if (it->second == int(b) && a == b) G.id = int(a);
    }
  if (G.id < 0) fail(ErrorKind::InvalidInput, "group: no identity");
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b)
      if (G.mul[a][b] == G.id) G.inv[a] = int(b);
  G.class_of.assign(n, -1);
  for (size_t g = 0; g < n; ++g) {
    if (G.class_of[g] >= 0) continue;
    for (size_t h = 0; h < n; ++h) G.class_of[G.mul[G.mul[h][g]][G.inv[h]]] = G.nclasses;
    ++G.nclasses;
  }
  return G;
}

FiniteGroup FiniteGroup::product(const FiniteGroup& A, const FiniteGroup& B) {
  size_t nb = B.size(), n = A.size() * nb;
  FiniteGroup G;
  G.mul.assign(n, std::vector<int>(n));
  G.inv.resize(n);
  G.class_of.resize(n);
  G.nclasses = A.nclasses * B.nclasses;
  G.id = int(size_t(A.id) * nb + size_t(B.id));
  for (size_t x = 0; x < n; ++x) {
    size_t a = x / nb, b = x % nb;
    G.inv[x] = int(size_t(A.inv[a]) * nb + size_t(B.inv[b]));
    G.class_of[x] = A.class_of[a] * B.nclasses + B.class_of[b];
    for (size_t y = 0; y < n; ++y)
      G.mul[x][y] = int(size_t(A.mul[a][y / nb]) * nb + size_t(B.mul[b][y % nb]));
  }
  return G;
}

SympMat<FqBase> embed_tensor(const FqBase& F, const Mat<GFElem>& gram, const Mat<GFElem>& h, const Mat<GFElem>& g) {
  int n = gram.r, mp = g.r / 2, m = n * mp;
  SympMat<FqBase> N(2 * m, 2 * m, F.zero());
  set_block(N, 0, 0, kron(F, h, block(g, 0, 0, mp, mp)));
  set_block(N, 0, m, kron(F, h, block(g, 0, mp, mp, mp)));
  set_block(N, m, 0, kron(F, h, block(g, mp, 0, mp, mp)));
  set_block(N, m, m, kron(F, h, block(g, mp, mp, mp, mp)));
  auto Ip = identity(F, mp);
  auto P = identity(F, 2 * m), Pi = identity(F, 2 * m);
  set_block(P, m, m, kron(F, inverse(F, gram), Ip));
  set_block(Pi, m, m, kron(F, gram, Ip));
  return Pi * N * P;
}

std::vector<Mat<GFElem>> orthogonal_group(const FqBase& F, const Mat<GFElem>& gram) {
  int n = gram.r;
  double total = 1;
  for (int i = 0; i < n * n; ++i) total *= double(F.q());
  if (total > 1e6) fail(ErrorKind::Unsupported, "orthogonal group: enumeration too large");
  auto els = F.elements();
  std::vector<Mat<GFElem>> out;
  std::vector<size_t> digit(size_t(n) * n, 0);
  Mat<GFElem> H(n, n, F.zero());
  while (true) {
    for (size_t i = 0; i < digit.size(); ++i) H.a[i] = els[digit[i]];
    if (transpose(H) * gram * H == gram) out.push_back(H);
    size_t i = 0;
    while (i < digit.size() && ++digit[i] == els.size()) digit[i++] = 0;
    if (i == digit.size()) break;
  }
  return out;
}

DualPair build_dual_pair(const FqBase& F, const Mat<GFElem>& gram, int mprime) {
  if (gram.r != gram.c || gram.r < 1) fail(ErrorKind::InvalidInput, "dual pair: gram matrix must be square");
  if (transpose(gram) != gram) fail(ErrorKind::InvalidInput, "dual pair: gram matrix must be symmetric");
  if (is_zero(det(F, gram))) fail(ErrorKind::InvalidInput, "dual pair: degenerate quadratic space");
  if (mprime != 1) fail(ErrorKind::Unsupported, "dual pair: only Sp_2 on the symplectic side");
  DualPair P{F, gram, gram.r, mprime, {}, {}, {}, {}, {}, {}, {}};
  if (2 * P.m() > 4) fail(ErrorKind::Unsupported, "dual pair: dim W > 4");
  P.h1 = orthogonal_group(F, gram);
  P.h2 = sp2_elements(F);
  auto I1 = identity(F, P.n), I2 = identity(F, 2 * mprime);
  for (auto& h : P.h1) P.h1_img.push_back(embed_tensor(F, gram, h, I2));
  for (auto& g : P.h2) P.h2_img.push_back(embed_tensor(F, gram, I1, g));
  for (auto& g : P.h1_img)
    if (!is_symplectic(F, g)) fail(ErrorKind::CheckFailed, "dual pair: O(V) image not symplectic");
  for (auto& g : P.h2_img)
    if (!is_symplectic(F, g)) fail(ErrorKind::CheckFailed, "dual pair: Sp(W') image not symplectic");
  for (auto& a : P.h1_img)
    for (auto& b : P.h2_img)
      if (a * b != b * a) fail(ErrorKind::CheckFailed, "dual pair: factors do not commute");
  P.g1 = FiniteGroup::from_matrices(P.h1);
  P.g2 = FiniteGroup::from_matrices(P.h2);
  P.g = FiniteGroup::product(P.g1, P.g2);
  return P;
}

int o_twist(const DualPair& P, int i1) {
  bool sq = P.F.is_square(det(P.F, P.h1[size_t(i1)]));
  return (!sq && P.mprime % 2) ? -1 : 1;
}

std::vector<int> trivial_character(const DualPair& P) { return std::vector<int>(P.h1.size(), 1); }

std::vector<int> det_character(const DualPair& P) {
  std::vector<int> out;
  for (auto& h : P.h1) out.push_back(det(P.F, h).is_one() ? 1 : -1);
  return out;
}

BrauerTable brauer_table(const FiniteRing& ring, const FiniteGroup& G, const Rep<FiniteRing>& rho) {
  require_banal(ring, G.size());
  int N = G.exponent();
  if ((ring.F->size() - 1) % uint32_t(N))
    fail(ErrorKind::Unsupported, "brauer table: " + ring.name() + " lacks the N-th roots of unity");
  GFElem xi{ring.F, ring.F->root_of_unity(N)};
  BrauerTable out;
  for (size_t g = 0; g < G.size(); ++g) {
    auto& A = rho[g];
    std::vector<int> row(size_t(N), 0);
    int tot = 0;
    for (int k = 0; k < N; ++k) {
      auto B = A;
      auto z = xi.pow(k);
      for (int i = 0; i < A.r; ++i) B(i, i) -= z;
      row[size_t(k)] = A.r - rank(ring, B);
      tot += row[size_t(k)];
    }
    if (tot != A.r) fail(ErrorKind::CheckFailed, "brauer table: element not semisimple");
    out.push_back(row);
  }
  return out;
}

SigmaDecomposition weil_sp2_decomposition(const FqBase& F) {
  auto els = sp2_elements(F);
  std::map<Key, size_t> idx;
  for (size_t i = 0; i < els.size(); ++i) idx[key_of(els[i])] = i;
  CycloRing R(F.p());
  std::vector<CycInt> chi;
  for (auto& g : els) {
    auto s = sigma_finite(F, g);
    std::vector<long long> counts(size_t(F.p()), 0);
    for (uint32_t i = 0; i < s.body.n; ++i)
      for (uint32_t k = s.body.start[i]; k < s.body.start[i + 1]; ++k)
        if (s.body.col[k] == i) ++counts[size_t(s.body.e[k])];
    chi.push_back(R.from_counts(counts) * sigma_scalar(R, F, s.sign, s.j));
  }
  auto G = FiniteGroup::from_matrices(els);
  std::vector<CycInt> plus, minus;
  for (size_t i = 0; i < els.size(); ++i) {
    auto ng = scaled(els[i], -F.one());
    auto& c = chi[idx.at(key_of(ng))];
    plus.push_back((chi[i] + c) * CycInt(Rational(1, 2)));
    minus.push_back((chi[i] - c) * CycInt(Rational(1, 2)));
  }
  SigmaDecomposition d;
  d.q = int(F.q());
  for (auto* c : {&plus, &minus}) {
    auto dim = (*c)[size_t(G.id)];
    if (!dim.is_rational()) fail(ErrorKind::CheckFailed, "weil decomposition: non-rational degree");
    d.dims.push_back(int(numerator(dim.rational_value())));
    d.norms.push_back(char_inner(R, G, *c, *c));
  }
  d.total_norm = char_inner(R, G, chi, chi);
  d.cross = char_inner(R, G, plus, minus);
  return d;
}

CongruenceReport congruence_check(const DualPair& P, const std::vector<int>& pi1, int ell) {
  int p = P.F.p();
  if (!is_prime(ell)) fail(ErrorKind::InvalidInput, "ell must be prime");
  if (ell == 2) fail(ErrorKind::Unsupported, "ell = 2 is not supported");
  if (ell == p) fail(ErrorKind::InvalidInput, "ell must differ from the residue characteristic");
  if (P.g.size() % size_t(ell) == 0)
    fail(ErrorKind::InvalidInput, "ell = " + std::to_string(ell) + " is not banal for this pair");
  if (pi1.size() != P.g1.size()) fail(ErrorKind::InvalidInput, "character of H1 has wrong length");
  CongruenceReport rep;
  rep.ell = ell;
  rep.d = minimal_degree(ell, std::lcm((long long)p, (long long)P.g.exponent()));
  CycloRing R0(p);
  FiniteRing Rl(ell, rep.d, p);
  ReductionMap red(p, 1, *Rl.F, Rl.root);

  Rep<CycloRing> pi0;
  Rep<FiniteRing> pil;
  for (int v : pi1) {
    pi0.push_back(Mat<CycInt>(1, 1, R0.from_int(v)));
    pil.push_back(Mat<GFElem>(1, 1, Rl.from_int(v)));
  }
  auto T0 = theta_lift(R0, P, pair_weil(R0, P), pi0);
  auto Tl = theta_lift(Rl, P, pair_weil(Rl, P), pil);
  rep.dim0 = T0.dim();
  rep.dimell = Tl.dim();
  auto chi0 = character(R0, T0.mats);
  rep.norm0 = char_inner(R0, P.g2, chi0, chi0);
  rep.irreducible0 = rep.norm0.is_one();
  rep.irreducible_ell = commutant_dim_dense(Rl, Tl.mats) == 1;

  Rep<FiniteRing> reduced;
  for (auto& A : T0.mats) {
    Mat<GFElem> B(A.r, A.c, Rl.zero());
    for (size_t i = 0; i < A.a.size(); ++i) B.a[i] = red(A.a[i]);
    reduced.push_back(B);
  }
  rep.reduction_is_rep = is_representation<FiniteRing>(P.g2, reduced);
  rep.brauer_match = rep.dim0 == rep.dimell && brauer_table(Rl, P.g2, reduced) == brauer_table(Rl, P.g2, Tl.mats);

  auto chil = character(Rl, Tl.mats);
  size_t n2 = P.g2.size();
  std::vector<CycInt> big0;
  std::vector<GFElem> bigl;
  for (size_t x = 0; x < P.g.size(); ++x) {
    big0.push_back(R0.from_int(pi1[x / n2]) * chi0[x % n2]);
    bigl.push_back(Rl.from_int(pi1[x / n2]) * chil[x % n2]);
  }
  auto e0 = central_idempotent(R0, P.g, big0, int(rep.dim0));
  auto el = central_idempotent(Rl, P.g, bigl, int(rep.dimell));
  rep.idempotent_match = true;
  for (size_t x = 0; x < e0.size(); ++x) rep.idempotent_match = rep.idempotent_match && red(e0[x]) == el[x];

  std::vector<CycInt> c0;
  std::vector<GFElem> cl;
  for (int v : pi1) {
    c0.push_back(R0.from_int(v));
    cl.push_back(Rl.from_int(v));
  }
  auto f0 = central_idempotent(R0, P.g1, c0, 1);
  auto fl = central_idempotent(Rl, P.g1, cl, 1);
  rep.idempotent_h1_match = true;
  for (size_t x = 0; x < f0.size(); ++x) rep.idempotent_h1_match = rep.idempotent_h1_match && red(f0[x]) == fl[x];
  return rep;
}

}  // namespace weilmod
