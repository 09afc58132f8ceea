#include "weilmod/selfcheck.hpp"

#include <functional>
#include <map>

#include "weilmod/schwartz.hpp"
#include "weilmod/theta.hpp"
#include "weilmod/weilfactor.hpp"

namespace weilmod {

namespace {

struct Tally {
  SuiteReport& r;
  void operator()(bool ok, const std::string& what) {
    ++r.checks;
    if (!ok) {
      if (!r.failures) r.first_failure = what;
      ++r.failures;
    }
  }
};

using FieldList = std::vector<std::pair<int, int>>;
const FieldList kSmallFields{{3, 1}, {5, 1}, {7, 1}, {3, 2}};

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

std::string fq(int p, int f) { return "F_" + std::to_string(ipow(p, f)); }

template <class R>
std::vector<Mat<typename R::Elem>> dense_all(const R& ring, const std::vector<MonomialOp>& ops) {
  std::vector<Mat<typename R::Elem>> out;
  for (auto& o : ops) out.push_back(o.dense(ring));
  return out;
}

void stone_von_neumann(Tally& t, Rng&, bool) {
  for (auto [p, f] : kSmallFields)
    for (int m = 1; m <= 2; ++m) {
      FqBase F(p, f);
      auto S = LagrangianModel::schrodinger(F, m);
      auto where = fq(p, f) + " m=" + std::to_string(m);
      auto gens = S.generators();
      // orbit computation: valid over any field where zeta_p has order p
      t(commutant_dim(gens) == 1, "commutant " + where);
      for (auto& c : F.elements())
        t(S.rho(h_central(F, m, c)) == MonomialOp::scalar(S.dim(), p, F.psi_exp(c)), "central character " + where);
      if (S.dim() <= 9) t(commutant_dim_dense(CycloRing(p), dense_all(CycloRing(p), gens)) == 1, "dense Q(zeta) " + where);
      for (int l : {2, 7}) {
        if (l == p || S.dim() > 25) continue;
        FiniteRing R(l, minimal_degree(l, p), p);
        t(commutant_dim_dense(R, dense_all(R, gens)) == 1, "dense " + R.name() + " " + where);
      }
    }
}

void weil_factor(Tally& t, Rng& rng, bool quick) {
  for (auto [p, f] : kSmallFields) {
    FqBase F(p, f);
    for (auto a : F.elements())
      for (auto b : F.elements())
        if (!a.is_zero() && !b.is_zero())
          t(hilbert_via_omega(F, a, b) == hilbert(F, a, b), "hilbert identity over " + fq(p, f));
  }
  for (int p : {3, 5, 7, 13}) {
    QpBase Q(p);
    for (int it = 0; it < 50; ++it) {
      auto a = Q.random(rng, 3), b = Q.random(rng, 3);
      t(hilbert_via_omega(Q, a, b) == hilbert(Q, a, b), "hilbert identity over Q_" + std::to_string(p));
    }
  }
  int reps = quick ? 5 : 20;
  for (auto [p, f] : kSmallFields) {
    FqBase F(p, f);
    CycloRing R(p);
    for (int it = 0; it < reps; ++it) {
      int n = int(rng.uniform(1, 3));
      auto q = random_nd_form(F, rng, n);
      CycInt lam = CycInt(rng.uniform(1, 50)) + CycInt(rng.uniform(-5, 5)) * CycInt::zeta(p, 1, rng.uniform(0, p - 1));
      t(omega(R, q, lam) == lam * omega(R, q, R.one()), "scaling over " + fq(p, f));
      Mat<GFElem> phi;
      do {
        phi = zeros(F, n, n);
        for (auto& x : phi.a) x = F.random(rng);
      } while (det(F, phi).is_zero());
      auto pi = inverse(F, phi);
      t(omega(QuadraticForm<FqBase>(F, transpose(pi) * q.gram() * pi)) == omega(q), "isometry over " + fq(p, f));
      auto q2 = random_nd_form(F, rng, int(rng.uniform(1, 2)));
      auto g = zeros(F, n + q2.gram().r, n + q2.gram().r);
      set_block(g, 0, 0, q.gram());
      set_block(g, n, n, q2.gram());
      t(omega(QuadraticForm<FqBase>(F, g)) == omega(q) * omega(q2), "orthogonal sum over " + fq(p, f));
    }
  }
  for (int p : {3, 5, 7}) {
    QpBase Q(p);
    for (int it = 0; it < reps; ++it) {
      int n = int(rng.uniform(1, 2));
      auto q = random_nd_form(Q, rng, n);
      Mat<Rational> phi;
      do {
        phi = zeros(Q, n, n);
        for (auto& x : phi.a) x = rng.uniform(0, 2) ? Q.random(rng, 1, 6) : Rational(0);
      } while (det(Q, phi) == 0);
      auto pi = inverse(Q, phi);
      QuadraticForm<QpBase> qphi(Q, transpose(pi) * q.gram() * pi);
      t(CycInt(Rational(1) / Q.modulus(det(Q, phi))) * omega(qphi) == omega(q), "isometry over Q_" + std::to_string(p));
      auto q2 = random_nd_form(Q, rng, 2);
      auto g = zeros(Q, n + 2, n + 2);
      set_block(g, 0, 0, q.gram());
      set_block(g, n, n, q2.gram());
      t(omega_alt(QuadraticForm<QpBase>(Q, g)) == omega(q) * omega(q2), "orthogonal sum over Q_" + std::to_string(p));
    }
  }
}

void hasse_product(Tally& t, Rng& rng, bool quick) {
  int reps = quick ? 25 : 100;
  for (auto [p, f] : kSmallFields) {
    FqBase F(p, f);
    for (int it = 0; it < reps; ++it)
      t(omega_diag_product(random_nd_form(F, rng, int(rng.uniform(1, 4)))).equal(), "hasse product over " + fq(p, f));
  }
  for (int p : {3, 5, 7}) {
    QpBase Q(p);
    for (int it = 0; it < reps; ++it)
      t(omega_diag_product(random_nd_form(Q, rng, int(rng.uniform(1, 4)))).equal(),
        "hasse product over Q_" + std::to_string(p));
  }
}

void fourier(Tally& t, Rng&, bool) {
  for (auto [p, f] : kSmallFields) {
    FqBase F(p, f);
    CycloRing R(p);
    for (int m = 1; m <= 2; ++m) {
      auto where = fq(p, f) + " m=" + std::to_string(m);
      for (int twist = 0; twist < 2; ++twist) {
        auto rho = identity(F, m);
        if (twist) rho(0, 0) = F.nonresidue();
        auto M = fourier_matrix(R, F, rho);
        auto eps = epsilon(F, rho);
        auto M2 = M * M;
        FqVectors V(F, m);
        bool ok = true;
        for (uint32_t x = 0; x < V.size(); ++x)
          for (uint32_t u = 0; u < V.size(); ++u) ok = ok && M2(int(x), int(u)) == (u == V.neg(x) ? eps : CycInt(0));
        t(ok, "F^2 = eps parity over " + where);
        t(M2 * M2 == scaled(identity(R, int(V.size())), eps * eps), "F^4 = eps^2 over " + where);
      }
    }
  }
  FqBase F3(3, 1);
  t(epsilon(F3, identity(F3, 1)) == CycInt(-1), "eps = -1 on F_3");
}

void finite_cocycle(Tally& t, Rng& rng, bool quick) {
  FqBase F(3, 1);
  CycloRing R(3);
  FiniteRing F4(2, 2, 3);
  auto G = sp2_elements(F);
  std::vector<FiniteSigma> sig;
  for (auto& g : G) sig.push_back(sigma_finite(F, g));
  for (size_t a = 0; a < G.size(); ++a)
    for (size_t b = 0; b < G.size(); ++b) {
      auto ab = sigma_finite(F, G[a] * G[b]);
      t(cocycle_from_sigmas(R, F, sig[a], sig[b], ab) == R.one(), "Sp_2(F_3) pair");
      t(cocycle_from_sigmas(F4, F, sig[a], sig[b], ab) == F4.one(), "Sp_2(F_3) pair over F_4");
    }
  int n = quick ? 1000 : 10000;
  for (int k = 0; k < n; ++k) {
    auto g1 = random_symplectic(F, 2, rng), g2 = random_symplectic(F, 2, rng);
    t(cocycle_operator(R, F, g1, g2) == R.one(), "Sp_4(F_3) pair");
  }
}

template <class K>
int hx(const K& F, const SympMat<K>& a, const SympMat<K>& b) {
  return hilbert(F, x_det(F, bruhat_decompose(F, a)), x_det(F, bruhat_decompose(F, b)));
}

void padic_cocycle(Tally& t, Rng& rng, bool quick) {
  int n2 = quick ? 200 : 1000, n4 = quick ? 40 : 200, nop = quick ? 30 : 100;
  for (int p : {3, 5, 7}) {
    QpBase Q(p);
    auto tag = "Q_" + std::to_string(p);
    for (int m = 1; m <= 2; ++m)
      for (int k = 0; k < (m == 1 ? n2 : n4); ++k) {
        auto a = random_symplectic(Q, m, rng), b = random_symplectic(Q, m, rng), c = random_symplectic(Q, m, rng);
        int ab = cocycle_formula(Q, a, b), abc = cocycle_formula(Q, a * b, c);
        int bc = cocycle_formula(Q, b, c), a_bc = cocycle_formula(Q, a, b * c);
        t((ab == 1 || ab == -1) && ab * abc == bc * a_bc, "cocycle identity m=" + std::to_string(m) + " " + tag);
      }
    auto rnd = [&] { return Q.random(rng, 1, 6); };
    for (int k = 0; k < 50; ++k) {
      auto g = random_symplectic(Q, 2, rng);
      auto pp = random_parabolic(Q, 2, rnd);
      t(cocycle_formula(Q, pp, g) == hx(Q, pp, g), "c(p, g) " + tag);
      t(cocycle_formula(Q, g, pp) == hx(Q, g, pp), "c(g, p) " + tag);
    }
    auto m1 = Q.from_int(-1);
    for (unsigned S = 0; S < 8; ++S)
      for (unsigned T = 0; T < 8; ++T) {
        int l = __builtin_popcount(S & T);
        int want = (l * (l + 1) / 2) % 2 ? hilbert(Q, m1, m1) : 1;
        t(cocycle_formula(Q, w_S(Q, 3, S), w_S(Q, 3, T)) == want, "c(w_S, w_T) " + tag);
      }
    for (int k = 0; k < 30; ++k) {
      Mat<Rational> rho;
      do rho = random_symmetric(Q, 2, rnd);
      while (is_zero(det(Q, rho)));
      auto w = w_S(Q, 2, 3);
      t(cocycle_formula(Q, w * u_rho(Q, 2, 3, rho), w) == cocycle_wu_w(Q, 3, rho), "c(w u_rho, w) " + tag);
    }
    for (int k = 0; k < nop; ++k) {
      auto g1 = random_symplectic(Q, 1, rng), g2 = random_symplectic(Q, 1, rng);
      t(cocycle_operator_padic(Q, g1, g2) == CycInt(cocycle_formula(Q, g1, g2)), "operator vs formula " + tag);
    }
  }
}

void m_bracket_suite(Tally& t, Rng& rng, bool) {
  for (int p : {3, 5}) {
    FqBase F(p, 1);
    CycloRing R(p);
    auto S = LagrangianModel::schrodinger(F, 1);
    auto tag = fq(p, 1);
    for (int k = 0; k < 50; ++k) {
      auto g = random_symplectic(F, 1, rng);
      auto M = m_bracket(F, g).to_ring(R, R.one());
      auto gi = sp_inverse(F, g);
      bool ok = !is_zero_mat(M, R);
      for (auto& h : S.generator_elements())
        ok = ok && M * S.rho(h).dense(R) == S.rho(h_act<FqBase>(gi, h)).dense(R) * M;
      t(ok, "M[g] intertwines over " + tag);
      t(scalar_ratio<CycloRing>(M, sigma_dense(R, F, sigma_finite(F, gi))).has_value(), "M[g] ~ sigma over " + tag);
      auto g2 = g * g;
      if (k % 2) g2 = scaled(g2 * g, -F.one());
      auto M2 = m_bracket(F, g2).to_ring(R, R.one());
      t(M * M2 == M2 * M, "commuting pair over " + tag);
    }
  }
}

void weil_decomposition(Tally& t, Rng&, bool) {
  for (int q : {3, 5, 7}) {
    auto d = weil_sp2_decomposition(FqBase(q, 1));
    auto tag = "q=" + std::to_string(q);
    bool dims = d.dims.size() == 2 && d.dims[0] + d.dims[1] == q &&
                (d.dims[0] == (q + 1) / 2 || d.dims[0] == (q - 1) / 2);
    t(dims, "constituent dims " + tag);
    t(d.total_norm == CycInt(2), "<chi, chi> = 2 " + tag);
    t(d.norms[0].is_one() && d.norms[1].is_one(), "constituents irreducible " + tag);
    t(d.cross.is_zero(), "constituents distinct " + tag);
  }
}

void theta(Tally& t, Rng&, bool) {
  FqBase F(3, 1);
  auto P = build_dual_pair(F, from_rows(F, {{1}}), 1);
  t(P.g.size() == 48, "|O_1 x Sp_2(F_3)| = 48");
  const int want[2] = {2, 1};
  int i = 0;
  for (auto& pi : {trivial_character(P), det_character(P)}) {
    auto r = congruence_check(P, pi, 7);
    auto tag = std::string(i ? "sign" : "trivial");
    t(int(r.dim0) == want[i] && int(r.dimell) == want[i], "dim Theta(" + tag + ")");
    t(r.idempotent_match && r.idempotent_h1_match, "r_7(e_Pi) = e_pi for " + tag);
    t(r.reduction_is_rep && r.brauer_match, "Brauer characters for " + tag);
    t(!r.irreducible0 || r.irreducible_ell, "irreducibility descends for " + tag);
    t(r.irreducible0, "Theta(" + tag + ") irreducible");
    ++i;
  }
  bool refused = false;
  try {
    congruence_check(P, trivial_character(P), 2);
  } catch (const Error&) {
    refused = true;
  }
  t(refused, "l = 2 refused");
}

using SuiteFn = void (*)(Tally&, Rng&, bool);
const std::vector<std::pair<std::string, SuiteFn>>& table() {
  static const std::vector<std::pair<std::string, SuiteFn>> t{
      {"stone_von_neumann", stone_von_neumann}, {"weil_factor", weil_factor},
      {"hasse_product", hasse_product},         {"fourier", fourier},
      {"finite_cocycle", finite_cocycle},       {"padic_cocycle", padic_cocycle},
      {"m_bracket", m_bracket_suite},           {"weil_decomposition", weil_decomposition},
      {"theta", theta},
  };
  return t;
}

}  // namespace

const std::vector<std::string>& selfcheck_suites() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (auto& [k, _] : table()) n.push_back(k);
    return n;
  }();
  return names;
}

SuiteReport run_suite(const std::string& name, const SelfcheckOptions& opt) {
  auto& tab = table();
  for (size_t i = 0; i < tab.size(); ++i) {
    if (tab[i].first != name) continue;
    SuiteReport r;
    r.name = name;
    Tally t{r};
    Rng rng = Rng(opt.seed).split(i);
    try {
      tab[i].second(t, rng, opt.quick);
    } catch (const Error& e) {
      t(false, std::string("exception: ") + e.what());
    }
    return r;
  }
  fail(ErrorKind::InvalidInput, "unknown selfcheck suite: " + name);
}

std::vector<SuiteReport> run_selfcheck(const SelfcheckOptions& opt, const std::vector<std::string>& only) {
  std::vector<SuiteReport> out;
  for (auto& n : only.empty() ? selfcheck_suites() : only) out.push_back(run_suite(n, opt));
  return out;
}

}  // namespace weilmod
