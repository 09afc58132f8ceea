#include "weilmod/schwartz.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "weilmod/symplectic.hpp"

namespace weilmod {

namespace {

constexpr int kInf = 1 << 20;

int vinf(const Rational& x, int p) { return x == 0 ? kInf : val_p(x, p); }

Rational absval(const Rational& x, int p) { return rpow(p, -val_p(x, p)); }

void require_level0(const QpBase& F) {
  if (F.twist() == 0 || val_p(F.twist(), F.p()) != 0)
    fail(ErrorKind::Unsupported, "phase step functions need a level-0 character (unit twist)");
}

// same function, phase written around a new center (which must lie in the support)
PhaseTerm recenter(const QpBase& F, PhaseTerm t, const Rational& r) {
  Rational d = t.center - r;
  if (d != 0) {
    t.theta += t.alpha * d * d - t.lambda * d;
    t.lambda -= 2 * t.alpha * d;
    t.center = r;
  }
  return t;
}

PhaseTerm normalize(const QpBase& F, const PhaseTerm& t0) {
  int p = F.p();
  auto t = recenter(F, t0, rep_mod(t0.center, p, t0.depth));
  t.theta = rep_mod(t.theta, p, 0);
  t.alpha = rep_mod(t.alpha, p, -2 * t.depth);
  t.lambda = rep_mod(t.lambda, p, -t.depth);
  return t;
}

bool contains(const PhaseTerm& big, const PhaseTerm& small, int p) {
  return big.depth <= small.depth && vinf(small.center - big.center, p) >= big.depth;
}

auto key(const PhaseTerm& t) { return std::tie(t.depth, t.center, t.alpha, t.lambda); }

}  // namespace

PhaseStepFunction::PhaseStepFunction(const QpBase& F) : F_(F) { require_level0(F); }

PhaseStepFunction PhaseStepFunction::indicator(const QpBase& F, const Rational& a, int n) {
  PhaseStepFunction f(F);
  f.add({CycInt(1), a, n, Rational(0), Rational(0)});
  return f;
}

void PhaseStepFunction::add(PhaseTerm t) {
  if (!t.c.is_zero()) terms_.push_back(std::move(t));
}

CycInt PhaseStepFunction::eval(const Rational& y) const {
  CycInt s(0);
  for (auto& t : terms_) {
    Rational z = y - t.center;
    if (vinf(z, F_.p()) < t.depth) continue;
    s += t.c * F_.psi(t.theta + t.alpha * z * z + t.lambda * z);
  }
  return s;
}

PhaseStepFunction PhaseStepFunction::canonical() const {
  int p = F_.p();
  std::vector<PhaseTerm> ts;
  for (auto& t : terms_) ts.push_back(normalize(F_, t));
  // refine until supports are pairwise equal or disjoint
  for (bool changed = true; changed;) {
    changed = false;
    for (size_t i = 0; i < ts.size() && !changed; ++i)
      for (size_t j = 0; j < ts.size() && !changed; ++j) {
        if (ts[i].depth >= ts[j].depth || !contains(ts[i], ts[j], p)) continue;
        if (ts.size() + p > 100000) fail(ErrorKind::Unsupported, "canonical form: refinement too large");
        PhaseTerm big = ts[i];
        ts.erase(ts.begin() + long(i));
        Rational step = rpow(p, big.depth);
        for (int k = 0; k < p; ++k) {
          auto child = recenter(F_, big, big.center + step * k);
          child.depth = big.depth + 1;
          ts.push_back(normalize(F_, child));
        }
        changed = true;
      }
  }
  std::sort(ts.begin(), ts.end(), [](const PhaseTerm& a, const PhaseTerm& b) { return key(a) < key(b); });
  PhaseStepFunction out(F_);
  for (auto& t : ts) {
    if (!out.terms_.empty() && key(out.terms_.back()) == key(t)) {
      auto& b = out.terms_.back();
      b.c += t.c * F_.psi(rep_mod(t.theta - b.theta, p, 0));
      if (b.c.is_zero()) out.terms_.pop_back();
    } else {
      out.add(t);
    }
  }
  return out;
}

PhaseStepFunction PhaseStepFunction::scaled(const CycInt& c) const {
  PhaseStepFunction out(F_);
  for (auto t : terms_) {
    t.c *= c;
    out.add(t);
  }
  return out;
}

PhaseStepFunction PhaseStepFunction::operator+(const PhaseStepFunction& o) const {
  if (F_.p() != o.F_.p() || F_.twist() != o.F_.twist()) fail(ErrorKind::Mismatch, "functions over different fields");
  auto out = *this;
  for (auto& t : o.terms_) out.add(t);
  return out;
}

std::string PhaseStepFunction::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < terms_.size(); ++i) {
    auto& t = terms_[i];
    if (i) os << " + ";
    os << "(" << t.c.str() << ") psi(" << to_string(t.theta) << ") psi(" << to_string(t.alpha) << " z^2 + " << to_string(t.lambda) << " z) 1[z in p^"
       << t.depth << "Z_p], z = y - " << to_string(t.center);
  }
  return terms_.empty() ? "0" : os.str();
}

CycInt gauss_integral(const QpBase& F, const Rational& alpha) {
  int p = F.p();
  if (vinf(alpha, p) >= 0) return CycInt(1);
  int k = -val_p(alpha, p);
  if (k % 2 == 0) return CycInt(rpow(p, -k / 2));
  CycInt g(0);
  Rational a1 = alpha * rpow(p, k - 1);
  for (int x = 0; x < p; ++x) g += F.psi(a1 * x * x);
  return g * CycInt(rpow(p, -(k + 1) / 2));
}

CycInt omega_padic(const QpBase& F, const Rational& a) {
  if (a == 0) fail(ErrorKind::InvalidInput, "omega of a zero coefficient");
  int N = std::abs(val_p(a, F.p())) + 1;
  return gauss_integral(F, a * rpow(F.p(), -2 * N)) * CycInt(rpow(F.p(), N));
}

PhaseStepFunction mul_phase(const PhaseStepFunction& f, const Rational& beta) {
  PhaseStepFunction out(f.field());
  for (auto t : f.terms()) {
    t.theta += beta * t.center * t.center;
    t.alpha += beta;
    t.lambda += 2 * beta * t.center;
    out.add(t);
  }
  return out;
}

PhaseStepFunction mul_linear(const PhaseStepFunction& f, const Rational& lambda, const Rational& c) {
  PhaseStepFunction out(f.field());
  for (auto t : f.terms()) {
    t.theta += lambda * t.center + c;
    t.lambda += lambda;
    out.add(t);
  }
  return out;
}

PhaseStepFunction translate(const PhaseStepFunction& f, const Rational& b) {
  PhaseStepFunction out(f.field());
  for (auto t : f.terms()) {
    t.center -= b;
    out.add(t);
  }
  return out;
}

PhaseStepFunction substitute(const PhaseStepFunction& f, const Rational& a) {
  if (a == 0) fail(ErrorKind::InvalidInput, "substitute: zero scale");
  int v = val_p(a, f.field().p());
  PhaseStepFunction out(f.field());
  for (auto t : f.terms()) {
    t.center /= a;
    t.depth -= v;
    t.alpha *= a * a;
    t.lambda *= a;
    out.add(t);
  }
  return out;
}

PhaseStepFunction fourier(const PhaseStepFunction& f, const Rational& kappa) {
  if (kappa == 0) fail(ErrorKind::InvalidInput, "fourier: zero kernel");
  auto& F = f.field();
  int p = F.p(), vk = val_p(kappa, p);
  PhaseStepFunction out(F);
  for (auto& t : f.terms()) {
    Rational at = t.alpha * rpow(p, 2 * t.depth);
    PhaseTerm r;
    r.center = t.lambda / kappa;
    r.lambda = -kappa * t.center;
    r.c = t.c * CycInt(absval(kappa, p) * rpow(p, -t.depth));
    r.theta = t.theta - t.lambda * t.center;
    if (vinf(at, p) >= 0) {
      r.depth = -t.depth - vk;
      r.alpha = 0;
    } else {
      r.depth = val_p(t.alpha, p) + t.depth - vk;
      r.alpha = -kappa * kappa / (4 * t.alpha);
      r.c *= gauss_integral(F, at);
    }
    out.add(r);
  }
  return out;
}

PhaseStepFunction act_heisenberg(const PhaseStepFunction& f, const HeisenbergElement<QpBase>& h) {
  if (h.w.size() != 2) fail(ErrorKind::Unsupported, "phase step functions live on Q_p (m = 1)");
  const Rational &wx = h.w[0], &wy = h.w[1];
  return mul_linear(translate(f, wy), -wx, h.t - wy * wx / 2);
}

namespace {

void require_sl2(const Mat<Rational>& g) {
  if (g.r != 2 || g.c != 2 || g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0) != 1)
    fail(ErrorKind::Unsupported, "p-adic operator path needs g in SL_2 (m = 1)");
}

CycInt omega_1a(const QpBase& F, const Rational& a) { return omega_padic(F, Rational(1)) / omega_padic(F, a); }

}  // namespace

PhaseStepFunction act_parabolic(const PhaseStepFunction& f, const Mat<Rational>& g) {
  require_sl2(g);
  if (g(1, 0) != 0) fail(ErrorKind::InvalidInput, "act_parabolic: element not in P(X)");
  const Rational &a = g(0, 0), &b = g(0, 1);
  return mul_phase(substitute(f, a), a * b / 2).scaled(omega_1a(f.field(), a));
}

PhaseStepFunction act_fourier(const PhaseStepFunction& f) {
  return fourier(f, Rational(1)).scaled(omega_padic(f.field(), Rational(1, 2)).inv());
}

namespace {

// Omega_{1,x} with x = det_X(p1 p2) taken with the representative of its square class
// fixed by the measure transport: x = a for g in P(X), x = c otherwise (g = [[a,b],[c,d]])
CycInt sigma_scalar_padic(const QpBase& F, const Mat<Rational>& g) {
  if (g(1, 0) == 0) return omega_1a(F, g(0, 0));
  if (square_class(F, x_det(F, bruhat_decompose(F, g))) != square_class(F, g(1, 0)))
    fail(ErrorKind::CheckFailed, "sigma: x(g) is not the class of the c-entry");
  return omega_1a(F, g(1, 0)) / omega_padic(F, Rational(1, 2));
}

}  // namespace

PhaseStepFunction sigma_padic(const PhaseStepFunction& f, const Mat<Rational>& g) {
  require_sl2(g);
  const Rational &A = g(0, 0), &B = g(0, 1), &C = g(1, 0), &D = g(1, 1);
  if (C == 0) return act_parabolic(f, g);
  auto mu = sigma_scalar_padic(f.field(), g);
  return mul_phase(fourier(mul_phase(f, D / (2 * C)), 1 / C), A / (2 * C)).scaled(mu);
}

CycInt sigma_padic_direct(const PhaseStepFunction& f, const Mat<Rational>& g, const Rational& y) {
  require_sl2(g);
  auto& F = f.field();
  int p = F.p();
  const Rational &A = g(0, 0), &B = g(0, 1), &C = g(1, 0), &D = g(1, 1);
  auto mu = sigma_scalar_padic(F, g);
  if (C == 0) return mu * F.psi(A * B * y * y / 2) * f.eval(A * y);
  CycInt s(0);
  for (auto& t : f.terms()) {
    const Rational& a = t.center;
    int n = t.depth;
    Rational beta = D / (2 * C) + t.alpha;
    Rational gam = D * a / C - y / C + t.lambda;
    Rational cst = (A * y * y / 2 - y * a + D * a * a / 2) / C;
    int vb = vinf(beta, p), vg = vinf(gam, p);
    int N = n;
    if (vb < kInf) N = std::max({N, -vb - n, (-vb + 1) / 2});
    if (vg < kInf) N = std::max(N, -vg);
    if (N - n > 14 || ipow(p, N - n) > 2000000) fail(ErrorKind::Unsupported, "direct sum too large");
    long long cnt = ipow(p, N - n);
    Rational pn = rpow(p, n);
    CycInt sum(0);
    for (long long r = 0; r < cnt; ++r) {
      Rational u = pn * r;
      sum += F.psi(t.theta + cst + beta * u * u + gam * u);
    }
    s += t.c * sum * CycInt(rpow(p, -N));
  }
  return s * mu * CycInt(1 / absval(C, p));
}

CycInt cocycle_operator_padic(const QpBase& F, const Mat<Rational>& g1, const Mat<Rational>& g2) {
  int p = F.p();
  std::vector<PhaseStepFunction> tests{PhaseStepFunction::indicator(F, 0, 0),
                                       mul_linear(PhaseStepFunction::indicator(F, 1, 1), Rational(1, p), 0)};
  std::optional<CycInt> c;
  auto g12 = g1 * g2;
  for (auto& f : tests) {
    auto lhs = sigma_padic(sigma_padic(f, g2), g1).canonical();
    auto rhs = sigma_padic(f, g12).canonical();
    if (rhs.empty()) fail(ErrorKind::CheckFailed, "cocycle: sigma(g1 g2) killed the test function");
    CycInt r(0);
    for (auto& t : lhs.terms())
      if (key(t) == key(rhs.terms()[0]))
        r = t.c / rhs.terms()[0].c * F.psi(rep_mod(t.theta - rhs.terms()[0].theta, p, 0));
    if (r.is_zero() || !lhs.same_as(rhs.scaled(r)))
      fail(ErrorKind::CheckFailed, "cocycle: sigma(g1)sigma(g2)sigma(g1g2)^{-1} is not scalar");
    if (c && *c != r) fail(ErrorKind::CheckFailed, "cocycle: ratio depends on the test function");
    c = r;
  }
  return *c;
}

}  // namespace weilmod
