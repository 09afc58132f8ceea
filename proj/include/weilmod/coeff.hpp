#pragma once
#include <memory>
#include <string>
#include <vector>

#include "weilmod/arith.hpp"

namespace weilmod {

// Element of Q(zeta_{p^k}) in the power basis 1, z, ..., z^{phi-1}, stored as
// an integer numerator vector over a positive common denominator.
// p == 0 marks a plain rational, which lifts into any cyclotomic level.
class CycInt {
 public:
  CycInt() : num_{BigInt(0)}, den_(1) {}
  CycInt(long long v) : num_{BigInt(v)}, den_(1) {}
  CycInt(const BigInt& v) : num_{v}, den_(1) {}
  CycInt(const Rational& v) : num_{numerator(v)}, den_(denominator(v)) {}

  static CycInt zeta(int p, int k, long long e = 1);
  // sum_e counts[e] * zeta_{p^k}^e, counts indexed modulo p^k
  static CycInt from_counts(int p, int k, const std::vector<long long>& counts);
  static CycInt from_coeffs(int p, int k, std::vector<BigInt> num, BigInt den = 1);

  int p() const { return p_; }
  int level() const { return k_; }
  long long order() const { return p_ ? ipow(p_, k_) : 1; }
  int phi() const { return int(num_.size()); }
  const std::vector<BigInt>& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  bool is_integral() const { return den_ == 1; }
  Rational rational_value() const;  // requires is_rational()

  CycInt lifted(int p, int k) const;
  CycInt descend() const;  // smallest level containing the value

  CycInt operator-() const;
  CycInt& operator+=(const CycInt& o);
  CycInt& operator-=(const CycInt& o);
  CycInt& operator*=(const CycInt& o);
  CycInt& operator/=(const CycInt& o) { return *this *= o.inv(); }
  friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
  friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
  friend CycInt operator*(CycInt a, const CycInt& b) { return a *= b; }
  friend CycInt operator/(CycInt a, const CycInt& b) { return a /= b; }
  friend bool operator==(const CycInt& a, const CycInt& b);
  friend bool operator!=(const CycInt& a, const CycInt& b) { return !(a == b); }

  CycInt inv() const;
  CycInt pow(long long e) const;
  CycInt galois(long long t) const;  // zeta -> zeta^t
  CycInt conj() const { return galois(-1); }
  Rational norm() const;

  std::string ring_name() const;  // "Z[zeta_9]", "Q(zeta_9)", "Z", "Q"
  std::string str() const;

 private:
  int p_ = 0, k_ = 0;
  std::vector<BigInt> num_;
  BigInt den_;

  void normalize();
  static void unify(CycInt& a, CycInt& b);
};

// Finite field F_{p^d}. Elements are polynomial indices: c_0 + c_1 p + ...
// for the residue c_0 + c_1 x + ... modulo the stored irreducible.
class GF {
 public:
  static const GF& get(int p, int d);

  int p() const { return p_; }
  int degree() const { return d_; }
  uint32_t size() const { return q_; }
  const std::vector<int>& modulus() const { return mod_; }  // monic, low to high
  bool conway() const { return conway_; }
  uint32_t generator() const { return gen_; }

  uint32_t add(uint32_t a, uint32_t b) const;
  uint32_t sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }
  uint32_t neg(uint32_t a) const;
  uint32_t mul(uint32_t a, uint32_t b) const {
    if (!a || !b) return 0;
    uint32_t s = log_[a] + log_[b];
    if (s >= q_ - 1) s -= q_ - 1;
    return exp_[s];
  }
  uint32_t inv(uint32_t a) const;
  uint32_t pow(uint32_t a, long long e) const;
  uint32_t from_int(long long v) const { return uint32_t(mod_floor(v, p_)); }
  uint32_t from_rational(const Rational& r) const;
  uint32_t order(uint32_t a) const;  // multiplicative order
  uint32_t log(uint32_t a) const { return log_[a]; }
  uint32_t exp(uint32_t e) const { return exp_[e % (q_ - 1)]; }
  int trace(uint32_t a) const { return trace_[a]; }
  bool is_square(uint32_t a) const { return a == 0 || log_[a] % 2 == 0; }
  // smallest index of exact multiplicative order n
  uint32_t root_of_unity(long long n) const;
  std::string elem_str(uint32_t a) const;
  std::string name() const;

 private:
  GF(int p, int d);
  int p_, d_;
  uint32_t q_;
  bool conway_ = false;
  uint32_t gen_ = 0;
  std::vector<int> mod_;
  std::vector<uint32_t> exp_, log_;
  std::vector<int> trace_;
  std::vector<uint32_t> pw_;  // p^i
};

struct GFElem {
  const GF* F = nullptr;
  uint32_t v = 0;

  GFElem() = default;
  GFElem(const GF* f, uint32_t x) : F(f), v(x) {}

  GFElem operator-() const { return {F, F->neg(v)}; }
  GFElem& operator+=(const GFElem& o) { v = F->add(v, o.v); return *this; }
  GFElem& operator-=(const GFElem& o) { v = F->sub(v, o.v); return *this; }
  GFElem& operator*=(const GFElem& o) { v = F->mul(v, o.v); return *this; }
  GFElem& operator/=(const GFElem& o) { v = F->mul(v, F->inv(o.v)); return *this; }
  friend GFElem operator+(GFElem a, const GFElem& b) { return a += b; }
  friend GFElem operator-(GFElem a, const GFElem& b) { return a -= b; }
  friend GFElem operator*(GFElem a, const GFElem& b) { return a *= b; }
  friend GFElem operator/(GFElem a, const GFElem& b) { return a /= b; }
  friend bool operator==(const GFElem& a, const GFElem& b) { return a.v == b.v; }
  friend bool operator!=(const GFElem& a, const GFElem& b) { return a.v != b.v; }
  bool is_zero() const { return v == 0; }
  bool is_one() const { return v == 1; }
  GFElem inv() const { return {F, F->inv(v)}; }
  GFElem pow(long long e) const { return {F, F->pow(v, e)}; }
};
using FinCoeff = GFElem;

// Coefficient ring Z[zeta_p][1/p] inside Q(zeta_{p^infty}).
struct CycloRing {
  using Elem = CycInt;
  int p;
  explicit CycloRing(int p_) : p(p_) {}
  Elem zero() const { return CycInt(0); }
  Elem one() const { return CycInt(1); }
  Elem from_int(long long v) const { return CycInt(v); }
  Elem from_rational(const Rational& r) const { return CycInt(r); }
  Elem zeta(long long e) const { return CycInt::zeta(p, 1, e); }
  // value of sum_e counts[e] zeta_p^e
  Elem from_counts(const std::vector<long long>& c) const { return CycInt::from_counts(p, 1, c); }
  int characteristic() const { return 0; }
  std::string name() const { return "Q(zeta_" + std::to_string(p) + ")"; }
};

// F_{l^d} with a designated primitive p-th root of unity.
struct FiniteRing {
  using Elem = GFElem;
  const GF* F;
  int p;
  uint32_t root;
  FiniteRing(int l, int d, int p_);
  Elem zero() const { return {F, 0}; }
  Elem one() const { return {F, 1}; }
  Elem from_int(long long v) const { return {F, F->from_int(v)}; }
  Elem from_rational(const Rational& r) const { return {F, F->from_rational(r)}; }
  Elem zeta(long long e) const { return {F, F->pow(root, mod_floor(e, p))}; }
  Elem from_counts(const std::vector<long long>& c) const;
  int characteristic() const { return F->p(); }
  std::string name() const { return F->name(); }
};

// r_l : Z[zeta_{p^k}][1/den] -> F_{l^d}, zeta_{p^k} -> designated root
class ReductionMap {
 public:
  ReductionMap(int p, int k, int l, int d);
  ReductionMap(int p, int k, const GF& F, uint32_t root);
  FinCoeff operator()(const CycInt& x) const;
  FinCoeff image_of_zeta() const { return {F_, root_}; }
  const GF& target() const { return *F_; }
  int p() const { return p_; }
  int level() const { return k_; }

 private:
  int p_, k_;
  const GF* F_;
  uint32_t root_;
};

// smallest d with p^k | l^d - 1
int minimal_degree(int l, long long pk);

inline bool is_zero(const CycInt& x) { return x.is_zero(); }
inline bool is_zero(const GFElem& x) { return x.v == 0; }
inline CycInt inverse(const CycInt& x) { return x.inv(); }
inline GFElem inverse(const GFElem& x) { return x.inv(); }

}  // namespace weilmod
