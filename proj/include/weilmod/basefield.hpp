#pragma once
#include <string>
#include <variant>
#include <vector>

#include "weilmod/coeff.hpp"

namespace weilmod {

inline bool is_zero(const Rational& x) { return x == 0; }
inline Rational inverse(const Rational& x) {
  if (x == 0) fail(ErrorKind::NotInvertible, "inverse of zero");
  return Rational(1) / x;
}

// F_q, q = p^f odd, with psi(x) = zeta_p^{Tr(c x)} for a fixed twist c.
class FqBase {
 public:
  using Elem = GFElem;
  static constexpr bool finite = true;

  FqBase(int p, int f, long long twist = 1);
  const GF& gf() const { return *gf_; }
  int p() const { return gf_->p(); }
  int degree() const { return gf_->degree(); }
  uint32_t q() const { return gf_->size(); }

  Elem zero() const { return {gf_, 0}; }
  Elem one() const { return {gf_, 1}; }
  Elem from_int(long long v) const { return {gf_, gf_->from_int(v)}; }
  Elem from_rational(const Rational& r) const { return {gf_, gf_->from_rational(r)}; }
  Elem from_index(uint32_t i) const { return {gf_, i}; }
  Elem twist() const { return twist_; }
  Elem random(Rng& rng) const { return {gf_, uint32_t(rng.uniform(0, q() - 1))}; }
  Elem random_nonzero(Rng& rng) const { return {gf_, uint32_t(rng.uniform(1, q() - 1))}; }
  std::vector<Elem> elements() const;

  // psi(x) = zeta_p^{psi_exp(x)}
  int psi_exp(const Elem& x) const { return gf_->trace(gf_->mul(twist_.v, x.v)); }
  CycInt psi(const Elem& x) const { return CycInt::zeta(p(), 1, psi_exp(x)); }
  Rational modulus(const Elem& x) const;
  bool is_square(const Elem& x) const { return gf_->is_square(x.v); }
  Elem nonresidue() const;  // smallest-index non-square
  std::string str(const Elem& x) const { return gf_->elem_str(x.v); }
  Elem parse(const std::string& s) const;
  std::string descriptor() const;

 private:
  const GF* gf_;
  Elem twist_;
};

// Q_p, p odd, elements exact rationals; psi is the level-0 character
// precomposed with multiplication by the twist.
class QpBase {
 public:
  using Elem = Rational;
  static constexpr bool finite = false;

  explicit QpBase(int p, Rational twist = 1);
  int p() const { return p_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(long long v) const { return v; }
  Elem from_rational(const Rational& r) const { return r; }
  const Rational& twist() const { return twist_; }
  // p^v * a/b with |v| <= vmax and |a|,|b| < height, a,b prime to p
  Elem random(Rng& rng, int vmax = 2, long long height = 60) const;
  Elem random_nonzero(Rng& rng, int vmax = 2, long long height = 60) const { return random(rng, vmax, height); }

  int val(const Elem& x) const { return val_p(x, p_); }
  // psi(x) = zeta_{p^n}^a with (a, n) = frac_part(twist * x)
  CycInt psi(const Elem& x) const;
  Rational modulus(const Elem& x) const;
  bool is_square(const Elem& x) const;
  Elem nonresidue() const { return Rational(smallest_nonresidue(p_)); }
  std::string str(const Elem& x) const { return to_string(x); }
  Elem parse(const std::string& s) const { return parse_rational(s); }
  std::string descriptor() const { return "qp:" + std::to_string(p_); }

 private:
  int p_;
  Rational twist_;
};

struct FieldSpec {
  bool finite = true;
  int p = 3;
  int f = 1;
};
FieldSpec parse_field(const std::string& desc);  // "fq:3:2", "fq:5", "qp:5"

struct PsiSpec {
  Rational twist = 1;
};
PsiSpec parse_psi(const std::string& desc);  // "psi:level0", "psi:twist:<rational>"

// Haar measure recorded by its value on the reference compact
// (a point for finite F, Z_p^m for Q_p).
template <class Elem>
struct Haar {
  Elem scale;
};

}  // namespace weilmod
