#pragma once
#include <vector>

#include "weilmod/quadratic.hpp"

namespace weilmod {

// Enumeration of F_q^m: index i <-> digits (i / q^j) % q as field indices.
class FqVectors {
 public:
  FqVectors(const FqBase& F, int m);
  int m() const { return m_; }
  uint32_t size() const { return n_; }
  GFElem coord(uint32_t i, int j) const { return {gf_, (i / pw_[j]) % q_}; }
  uint32_t index(const std::vector<GFElem>& v) const;
  uint32_t add(uint32_t a, uint32_t b) const;
  uint32_t neg(uint32_t a) const;
  uint32_t scale(const GFElem& c, uint32_t a) const;

 private:
  const GF* gf_;
  uint32_t q_, n_;
  int m_;
  std::vector<uint32_t> pw_;
};

// exponent counts c[e] = #{x in X_Q : psi(Q_nd(x)) = zeta_p^e}, by direct enumeration
std::vector<long long> gauss_counts(const QuadraticForm<FqBase>& Q);
// Sum_x psi(a x^2) as counts
std::vector<long long> gauss_counts_1d(const FqBase& F, const GFElem& a);

// Omega_mu(psi o Q) over F_q with mu(point) = mu_pt
template <class R>
typename R::Elem omega(const R& ring, const QuadraticForm<FqBase>& Q, const typename R::Elem& mu_pt) {
  return mu_pt * ring.from_counts(gauss_counts(Q));
}
CycInt omega(const QuadraticForm<FqBase>& Q);  // counting measure
CycInt omega_1d(const FqBase& F, const GFElem& a);

// p-adic: truncated lattice integral over p^{-n}Z_p of psi(a x^2), standard measure
CycInt omega_lattice(const QpBase& F, const Rational& a, int n);
int omega_depth(const QpBase& F, const Rational& a);  // stabilization depth for a of valuation 0 or 1
// Omega(psi o Q_a), checked for stabilization at depth n and n + extra
CycInt omega_1d(const QpBase& F, const Rational& a, int extra = 1);
// Omega for a non-degenerate or degenerate form; the measure on X/rad(Q) is the
// standard one in the coordinates of the complement chosen by complete_basis
CycInt omega(const QuadraticForm<QpBase>& Q);
// same, diagonalizing with a different pivot order
CycInt omega_alt(const QuadraticForm<QpBase>& Q);

CycInt omega_ratio(const FqBase& F, const GFElem& a, const GFElem& b);
CycInt omega_ratio(const QpBase& F, const Rational& a, const Rational& b);

int hilbert_via_omega(const FqBase& F, const GFElem& a, const GFElem& b);
int hilbert_via_omega(const QpBase& F, const Rational& a, const Rational& b);

struct DiagProduct {
  CycInt direct;   // omega(Q)
  CycInt product;  // Omega_{det,1} * Omega(Q_Id in the orthogonal basis) * h(Q)
  bool equal() const { return direct == product; }
};
DiagProduct omega_diag_product(const QuadraticForm<FqBase>& Q);
DiagProduct omega_diag_product(const QuadraticForm<QpBase>& Q);

// epsilon = Omega_{-1,1}^m (-1, det Q_{rho/2})
CycInt epsilon(const FqBase& F, const Mat<GFElem>& rho);
CycInt epsilon(const QpBase& F, const Mat<Rational>& rho);

// F[x][u] = psi(x^T rho u) / Omega(psi o Q_{rho/2}), counting measure
template <class R>
Mat<typename R::Elem> fourier_matrix(const R& ring, const FqBase& F, const Mat<GFElem>& rho);
// (f * g)(x) = sum_u f(u) g(x - u) mu_rho(u)
template <class R>
std::vector<typename R::Elem> convolve(const R& ring, const FqBase& F, const Mat<GFElem>& rho,
                                       const std::vector<typename R::Elem>& f,
                                       const std::vector<typename R::Elem>& g);

// classical normalisation with a user-chosen sqrt(q): Omega_{mu}(psi o Q) for mu(point) = q^{-rank/2}
CycInt normalized_weil_factor(const QuadraticForm<FqBase>& Q, const CycInt& sqrt_q);

}  // namespace weilmod
