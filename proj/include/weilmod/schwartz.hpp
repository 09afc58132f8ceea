#pragma once
#include <vector>

#include "weilmod/heisenberg.hpp"

namespace weilmod {

// c psi(theta) psi(alpha (y-a)^2 + lambda (y-a)) 1_{a + p^n Z_p}(y); theta is kept
// separate so deep intermediate roots of unity cancel before being materialised
struct PhaseTerm {
  CycInt c;
  Rational center;
  int depth = 0;
  Rational alpha, lambda;
  Rational theta = 0;
};

// Finite sums of phase terms on Y = Q_p (m = 1). psi must have level 0 (unit twist).
class PhaseStepFunction {
 public:
  explicit PhaseStepFunction(const QpBase& F);
  static PhaseStepFunction indicator(const QpBase& F, const Rational& a, int n);

  const QpBase& field() const { return F_; }
  const std::vector<PhaseTerm>& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  void add(PhaseTerm t);

  CycInt eval(const Rational& y) const;
  // centers reduced mod p^n, phases reduced, equal terms merged, nested supports refined
  PhaseStepFunction canonical() const;
  PhaseStepFunction scaled(const CycInt& c) const;
  PhaseStepFunction operator+(const PhaseStepFunction& o) const;
  PhaseStepFunction operator-(const PhaseStepFunction& o) const { return *this + o.scaled(CycInt(-1)); }
  bool same_as(const PhaseStepFunction& o) const { return (*this - o).canonical().empty(); }
  std::string str() const;

 private:
  QpBase F_;
  std::vector<PhaseTerm> terms_;
};

// int_{Z_p} psi(alpha v^2) dv
CycInt gauss_integral(const QpBase& F, const Rational& alpha);
// Omega(psi o (a x^2)) with mu(Z_p) = 1, as a limit of lattice integrals
CycInt omega_padic(const QpBase& F, const Rational& a);

PhaseStepFunction mul_phase(const PhaseStepFunction& f, const Rational& beta);  // psi(beta y^2) f
PhaseStepFunction mul_linear(const PhaseStepFunction& f, const Rational& lambda, const Rational& t);  // psi(lambda y + t) f
PhaseStepFunction translate(const PhaseStepFunction& f, const Rational& b);  // y -> f(y + b)
PhaseStepFunction substitute(const PhaseStepFunction& f, const Rational& a);  // y -> f(a y)
// |kappa| int psi(-kappa y y') f(y') dy'
PhaseStepFunction fourier(const PhaseStepFunction& f, const Rational& kappa);

PhaseStepFunction act_heisenberg(const PhaseStepFunction& f, const HeisenbergElement<QpBase>& h);
// sigma(p) f(y) = Omega_{1,a} psi(a b y^2 / 2) f(a y) for p = [[a, b], [0, 1/a]]
PhaseStepFunction act_parabolic(const PhaseStepFunction& f, const Mat<Rational>& p);
// sigma(w) f(y) = Omega(psi(x^2/2))^{-1} int psi(-y y') f(y') dy', w = [[0,-1],[1,0]]
PhaseStepFunction act_fourier(const PhaseStepFunction& f);
// sigma(g) for g in SL_2(Q_p)
PhaseStepFunction sigma_padic(const PhaseStepFunction& f, const Mat<Rational>& g);
// (sigma(g) f)(y) by direct summation of the defining integral
CycInt sigma_padic_direct(const PhaseStepFunction& f, const Mat<Rational>& g, const Rational& y);

// sigma(g1) sigma(g2) = c sigma(g1 g2) on 1_{Z_p} and a second test function
CycInt cocycle_operator_padic(const QpBase& F, const Mat<Rational>& g1, const Mat<Rational>& g2);

}  // namespace weilmod
