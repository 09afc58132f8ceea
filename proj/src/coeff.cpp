#include "weilmod/coeff.hpp"

#include <map>
#include <mutex>
#include <numeric>

namespace weilmod {

namespace {

// z^e at level (p,k) as a sparse list of (index, sign)
void add_power(std::vector<BigInt>& v, int p, int k, long long e, const BigInt& c) {
  long long n = ipow(p, k), phi = n / p * (p - 1), s = n / p;
  e = mod_floor(e, n);
  if (e < phi) {
    v[e] += c;
    return;
  }
  for (int j = 0; j <= p - 2; ++j) v[e - phi + j * s] -= c;
}

}  // namespace

CycInt CycInt::zeta(int p, int k, long long e) {
  if (p < 3 || !is_prime(p) || k < 1) fail(ErrorKind::InvalidInput, "zeta needs an odd prime and k >= 1");
  CycInt r;
  r.p_ = p;
  r.k_ = k;
  long long n = ipow(p, k);
  r.num_.assign(n / p * (p - 1), BigInt(0));
  add_power(r.num_, p, k, e, 1);
  return r;
}

CycInt CycInt::from_counts(int p, int k, const std::vector<long long>& counts) {
  CycInt r;
  r.p_ = p;
  r.k_ = k;
  long long n = ipow(p, k);
  r.num_.assign(n / p * (p - 1), BigInt(0));
  for (size_t e = 0; e < counts.size(); ++e)
    if (counts[e]) add_power(r.num_, p, k, (long long)e, counts[e]);
  r.normalize();
  return r;
}

CycInt CycInt::from_coeffs(int p, int k, std::vector<BigInt> num, BigInt den) {
  CycInt r;
  if (p == 0) {
    if (num.size() != 1) fail(ErrorKind::InvalidInput, "rational needs one coefficient");
  } else {
    long long n = ipow(p, k);
    if ((long long)num.size() != n / p * (p - 1)) fail(ErrorKind::InvalidInput, "coefficient vector length must be phi(p^k)");
  }
  if (den == 0) fail(ErrorKind::InvalidInput, "zero denominator");
  r.p_ = p;
  r.k_ = k;
  r.num_ = std::move(num);
  r.den_ = std::move(den);
  r.normalize();
  return r;
}

void CycInt::normalize() {
  if (den_ < 0) {
    den_ = -den_;
    for (auto& c : num_) c = -c;
  }
  BigInt g = den_;
  bool nz = false;
  for (auto& c : num_) {
    if (c != 0) {
      nz = true;
      if (g != 1) g = gcd(g, c);
    }
  }
  if (!nz) {
    den_ = 1;
    return;
  }
  if (g != 1) {
    den_ /= g;
    for (auto& c : num_) c /= g;
  }
}

bool CycInt::is_zero() const {
  for (auto& c : num_)
    if (c != 0) return false;
  return true;
}

bool CycInt::is_one() const {
  if (den_ != 1 || num_[0] != 1) return false;
  for (size_t i = 1; i < num_.size(); ++i)
    if (num_[i] != 0) return false;
  return true;
}

bool CycInt::is_rational() const {
  for (size_t i = 1; i < num_.size(); ++i)
    if (num_[i] != 0) return false;
  return true;
}

Rational CycInt::rational_value() const {
  if (!is_rational()) fail(ErrorKind::InvalidInput, "not a rational value");
  return Rational(num_[0], den_);
}

CycInt CycInt::lifted(int p, int k) const {
  if (p == p_ && k == k_) return *this;
  if (p_ != 0 && p_ != p) fail(ErrorKind::Mismatch, "cyclotomic ring mismatch");
  if (k < k_) fail(ErrorKind::InvalidInput, "cannot lift to a lower level");
  CycInt r;
  r.p_ = p;
  r.k_ = k;
  if (p == 0) return *this;
  long long n = ipow(p, k);
  r.num_.assign(n / p * (p - 1), BigInt(0));
  long long step = p_ == 0 ? 0 : ipow(p, k - k_);
  for (size_t i = 0; i < num_.size(); ++i) r.num_[i * step] = num_[i];
  r.den_ = den_;
  return r;
}

CycInt CycInt::descend() const {
  CycInt r = *this;
  while (r.k_ >= 2) {
    for (size_t i = 0; i < r.num_.size(); ++i)
      if (i % r.p_ && r.num_[i] != 0) return r;
    std::vector<BigInt> v(r.num_.size() / r.p_);
    for (size_t i = 0; i < v.size(); ++i) v[i] = r.num_[i * r.p_];
    r.num_ = std::move(v);
    --r.k_;
  }
  if (r.k_ == 1 && r.is_rational()) {
    r.num_.resize(1);
    r.p_ = 0;
    r.k_ = 0;
  }
  return r;
}

void CycInt::unify(CycInt& a, CycInt& b) {
  if (a.p_ == b.p_ && a.k_ == b.k_) return;
  if (a.p_ && b.p_ && a.p_ != b.p_) fail(ErrorKind::Mismatch, "cyclotomic ring mismatch: p=" + std::to_string(a.p_) + " vs p=" + std::to_string(b.p_));
  int p = a.p_ ? a.p_ : b.p_;
  int k = std::max(a.k_, b.k_);
  a = a.lifted(p, k);
  b = b.lifted(p, k);
}

CycInt CycInt::operator-() const {
  CycInt r = *this;
  for (auto& c : r.num_) c = -c;
  return r;
}

CycInt& CycInt::operator+=(const CycInt& o) {
  CycInt b = o;
  unify(*this, b);
  if (den_ == b.den_) {
    for (size_t i = 0; i < num_.size(); ++i) num_[i] += b.num_[i];
  } else {
    for (size_t i = 0; i < num_.size(); ++i) num_[i] = num_[i] * b.den_ + b.num_[i] * den_;
    den_ *= b.den_;
  }
  normalize();
  return *this;
}

CycInt& CycInt::operator-=(const CycInt& o) { return *this += -o; }

CycInt& CycInt::operator*=(const CycInt& o) {
  if (o.p_ == 0) {
    for (auto& c : num_) c *= o.num_[0];
    den_ *= o.den_;
    normalize();
    return *this;
  }
  CycInt b = o;
  unify(*this, b);
  int phi = int(num_.size());
  std::vector<BigInt> r(2 * phi - 1, BigInt(0));
  for (int i = 0; i < phi; ++i) {
    if (num_[i] == 0) continue;
    for (int j = 0; j < phi; ++j)
      if (b.num_[j] != 0) r[i + j] += num_[i] * b.num_[j];
  }
  long long s = ipow(p_, k_ - 1);
  for (int i = 2 * phi - 2; i >= phi; --i) {
    if (r[i] == 0) continue;
    BigInt c = r[i];
    for (int j = 0; j <= p_ - 2; ++j) r[i - phi + j * s] -= c;
  }
  r.resize(phi);
  num_ = std::move(r);
  den_ *= b.den_;
  normalize();
  return *this;
}

bool operator==(const CycInt& a, const CycInt& b) {
  if (a.p_ == b.p_ && a.k_ == b.k_) return a.den_ == b.den_ && a.num_ == b.num_;
  CycInt x = a, y = b;
  CycInt::unify(x, y);
  return x.den_ == y.den_ && x.num_ == y.num_;
}

CycInt CycInt::galois(long long t) const {
  if (p_ == 0) return *this;
  long long n = ipow(p_, k_);
  t = mod_floor(t, n);
  if (t % p_ == 0) fail(ErrorKind::InvalidInput, "galois exponent must be prime to p");
  CycInt r;
  r.p_ = p_;
  r.k_ = k_;
  r.num_.assign(num_.size(), BigInt(0));
  for (size_t i = 0; i < num_.size(); ++i)
    if (num_[i] != 0) add_power(r.num_, p_, k_, (long long)i * t, num_[i]);
  r.den_ = den_;
  r.normalize();
  return r;
}

Rational CycInt::norm() const {
  CycInt a = descend();
  if (a.p_ == 0) return a.rational_value();
  long long n = ipow(a.p_, a.k_);
  CycInt prod = a;
  for (long long t = 2; t < n; ++t)
    if (t % a.p_) prod *= a.galois(t);
  return prod.rational_value();
}

CycInt CycInt::inv() const {
  CycInt a = descend();
  if (a.is_zero()) fail(ErrorKind::NotInvertible, "inverse of zero");
  if (a.p_ == 0) {
    Rational v = a.rational_value();
    return CycInt(Rational(1) / v);
  }
  long long n = ipow(a.p_, a.k_);
  CycInt others(1);
  for (long long t = 2; t < n; ++t)
    if (t % a.p_) others *= a.galois(t);
  Rational nrm = (a * others).rational_value();
  return others * CycInt(Rational(1) / nrm);
}

CycInt CycInt::pow(long long e) const {
  if (e < 0) return inv().pow(-e);
  CycInt r(1), b = *this;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

std::string CycInt::ring_name() const {
  if (p_ == 0) return den_ == 1 ? "Z" : "Q";
  std::string n = std::to_string(order());
  return den_ == 1 ? "Z[zeta_" + n + "]" : "Q(zeta_" + n + ")";
}

std::string CycInt::str() const {
  std::string s;
  std::string z = "z" + std::to_string(order());
  for (size_t i = 0; i < num_.size(); ++i) {
    if (num_[i] == 0) continue;
    BigInt c = num_[i];
    bool neg = c < 0;
    if (neg) c = -c;
    if (s.empty())
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    std::string mono = i == 0 ? "" : (i == 1 ? z : z + "^" + std::to_string(i));
    if (i == 0)
      s += c.str();
    else if (c == 1)
      s += mono;
    else
      s += c.str() + "*" + mono;
  }
  if (s.empty()) s = "0";
  if (den_ != 1) s = "(" + s + ")/" + den_.str();
  return s;
}

// ---------------------------------------------------------------- GF

namespace {

const std::map<std::pair<int, int>, std::vector<int>>& conway_table() {
  static const std::map<std::pair<int, int>, std::vector<int>> t = {
      {{2, 2}, {1, 1, 1}},       {{2, 3}, {1, 1, 0, 1}},    {{2, 4}, {1, 1, 0, 0, 1}},
      {{2, 5}, {1, 0, 1, 0, 0, 1}}, {{3, 2}, {2, 2, 1}},    {{3, 3}, {1, 2, 0, 1}},
      {{3, 4}, {2, 0, 0, 2, 1}}, {{5, 2}, {2, 4, 1}},       {{5, 3}, {3, 3, 0, 1}},
      {{5, 4}, {2, 4, 4, 0, 1}}, {{7, 2}, {3, 6, 1}},       {{7, 3}, {4, 0, 6, 1}},
      {{7, 4}, {3, 4, 5, 0, 1}}, {{11, 2}, {2, 7, 1}},      {{13, 2}, {2, 12, 1}},
  };
  return t;
}

using Poly = std::vector<int>;

Poly polymulmod(const Poly& a, const Poly& b, const Poly& m, int p) {
  int d = int(m.size()) - 1;
  std::vector<long long> r(2 * d, 0);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) r[i + j] += (long long)a[i] * b[j];
  for (int i = 2 * d - 2; i >= d; --i) {
    long long c = r[i] % p;
    if (!c) continue;
    for (int j = 0; j <= d; ++j) r[i - d + j] -= c * m[j];
  }
  Poly out(d);
  for (int i = 0; i < d; ++i) out[i] = int(mod_floor(r[i], p));
  return out;
}

uint32_t encode(const Poly& a, int p) {
  uint32_t v = 0;
  for (int i = int(a.size()) - 1; i >= 0; --i) v = v * p + a[i];
  return v;
}

Poly decode(uint32_t v, int p, int d) {
  Poly a(d);
  for (int i = 0; i < d; ++i) {
    a[i] = v % p;
    v /= p;
  }
  return a;
}

// x^(p^d) = x mod f and gcd conditions, by brute force root-free test for small degree
bool irreducible(const Poly& f, int p) {
  int d = int(f.size()) - 1;
  // no factor of degree <= d/2: test all monic polynomials of degree 1..d/2
  for (int e = 1; e <= d / 2; ++e) {
    long long cnt = ipow(p, e);
    for (long long idx = 0; idx < cnt; ++idx) {
      Poly g = decode(uint32_t(idx), p, e);
      g.push_back(1);
      // remainder of f mod g
      std::vector<long long> r(f.begin(), f.end());
      for (int i = d; i >= e; --i) {
        long long c = mod_floor(r[i], p);
        if (!c) continue;
        for (int j = 0; j <= e; ++j) r[i - e + j] -= c * g[j];
      }
      bool zero = true;
      for (int i = 0; i < e; ++i)
        if (mod_floor(r[i], p)) zero = false;
      if (zero) return false;
    }
  }
  return true;
}

}  // namespace

GF::GF(int p, int d) : p_(p), d_(d) {
  if (!is_prime(p) || d < 1) fail(ErrorKind::InvalidInput, "GF needs a prime and degree >= 1");
  long long q = ipow(p, d);
  if (q > (1 << 22)) fail(ErrorKind::Unsupported, "finite field too large");
  q_ = uint32_t(q);
  for (int i = 0; i <= d; ++i) pw_.push_back(uint32_t(ipow(p, i)));
  exp_.assign(q_ - 1, 0);
  log_.assign(q_, 0);
  if (d == 1) {
    mod_ = {0, 1};
    for (uint32_t g = 1; g < q_; ++g) {
      uint32_t x = 1, k = 0;
      do {
        x = uint32_t(uint64_t(x) * g % q_);
        ++k;
      } while (x != 1);
      if (k == q_ - 1 || q_ == 2) {
        gen_ = g;
        break;
      }
    }
    mod_[0] = int(mod_floor(-(long long)gen_, p));
    conway_ = true;
    uint32_t x = 1;
    for (uint32_t e = 0; e < q_ - 1; ++e) {
      exp_[e] = x;
      log_[x] = e;
      x = uint32_t(uint64_t(x) * gen_ % q_);
    }
  } else {
    auto it = conway_table().find({p, d});
    if (it != conway_table().end()) {
      mod_ = it->second;
      conway_ = true;
    } else {
      for (uint32_t idx = 0; idx < q_; ++idx) {
        Poly f = decode(idx, p, d);
        f.push_back(1);
        if (f[0] != 0 && irreducible(f, p)) {
          mod_ = f;
          break;
        }
      }
    }
    auto try_gen = [&](uint32_t g) {
      Poly gp = decode(g, p, d), x = decode(1, p, d);
      std::vector<char> seen(q_, 0);
      for (uint32_t e = 0; e < q_ - 1; ++e) {
        uint32_t v = encode(x, p);
        if (seen[v]) return false;
        seen[v] = 1;
        exp_[e] = v;
        log_[v] = e;
        x = polymulmod(x, gp, mod_, p);
      }
      return true;
    };
    if (try_gen(uint32_t(p))) {
      gen_ = uint32_t(p);
    } else {
      conway_ = false;
      for (uint32_t g = 2; g < q_; ++g)
        if (try_gen(g)) {
          gen_ = g;
          break;
        }
    }
  }
  trace_.assign(q_, 0);
  for (uint32_t a = 0; a < q_; ++a) {
    uint32_t t = 0, x = a;
    for (int i = 0; i < d; ++i) {
      t = add(t, x);
      x = pow(x, p);
    }
    trace_[a] = int(t);  // lies in the prime field, so index < p
  }
}

const GF& GF::get(int p, int d) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<GF>> reg;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = reg[{p, d}];
  if (!slot) slot.reset(new GF(p, d));
  return *slot;
}

uint32_t GF::add(uint32_t a, uint32_t b) const {
  if (d_ == 1) {
    uint32_t s = a + b;
    return s >= q_ ? s - q_ : s;
  }
  uint32_t r = 0;
  for (int i = 0; i < d_; ++i) {
    uint32_t da = a % p_, db = b % p_;
    a /= p_;
    b /= p_;
    uint32_t s = da + db;
    if (s >= uint32_t(p_)) s -= p_;
    r += s * pw_[i];
  }
  return r;
}

uint32_t GF::neg(uint32_t a) const {
  if (d_ == 1) return a ? q_ - a : 0;
  uint32_t r = 0;
  for (int i = 0; i < d_; ++i) {
    uint32_t da = a % p_;
    a /= p_;
    r += (da ? p_ - da : 0) * pw_[i];
  }
  return r;
}

uint32_t GF::inv(uint32_t a) const {
  if (!a) fail(ErrorKind::NotInvertible, "inverse of zero in " + name());
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

uint32_t GF::pow(uint32_t a, long long e) const {
  if (a == 0) {
    if (e < 0) fail(ErrorKind::NotInvertible, "inverse of zero in " + name());
    return e == 0 ? 1 : 0;
  }
  long long m = q_ - 1;
  return exp_[mod_floor((long long)log_[a] * mod_floor(e, m), m)];
}

uint32_t GF::from_rational(const Rational& r) const {
  BigInt n = mod_floor(numerator(r), p_), d = mod_floor(denominator(r), p_);
  if (d == 0) fail(ErrorKind::NotInvertible, "denominator divisible by the characteristic");
  return mul(uint32_t(n.convert_to<long>()), inv(uint32_t(d.convert_to<long>())));
}

uint32_t GF::order(uint32_t a) const {
  if (!a) fail(ErrorKind::InvalidInput, "order of zero");
  return uint32_t((q_ - 1) / std::gcd(log_[a], q_ - 1));
}

uint32_t GF::root_of_unity(long long n) const {
  if (n <= 0 || (q_ - 1) % n != 0)
    fail(ErrorKind::InvalidInput, "no root of unity of order " + std::to_string(n) + " in " + name());
  for (uint32_t a = 1; a < q_; ++a)
    if (order(a) == n) return a;
  fail(ErrorKind::InvalidInput, "root of unity search failed");
}

std::string GF::elem_str(uint32_t a) const {
  if (d_ == 1) return std::to_string(a);
  Poly c = decode(a, p_, d_);
  std::string s;
  for (int i = d_ - 1; i >= 0; --i) {
    if (!c[i]) continue;
    if (!s.empty()) s += "+";
    std::string mono = i == 0 ? "" : (i == 1 ? "x" : "x^" + std::to_string(i));
    if (i == 0 || c[i] != 1)
      s += std::to_string(c[i]) + (i ? "*" : "") + mono;
    else
      s += mono;
  }
  return s.empty() ? "0" : s;
}

std::string GF::name() const { return "F_" + std::to_string(q_); }

// ---------------------------------------------------------------- rings

FiniteRing::FiniteRing(int l, int d, int p_) : F(&GF::get(l, d)), p(p_), root(F->root_of_unity(p_)) {}

GFElem FiniteRing::from_counts(const std::vector<long long>& c) const {
  uint32_t acc = 0;
  for (size_t e = 0; e < c.size(); ++e) {
    if (!c[e]) continue;
    uint32_t z = F->pow(root, (long long)e);
    acc = F->add(acc, F->mul(F->from_int(c[e]), z));
  }
  return {F, acc};
}

int minimal_degree(int l, long long pk) {
  long long x = 1;
  for (int d = 1; d <= 64; ++d) {
    x = x * l % pk;
    if (x == 1 % pk) return d;
  }
  fail(ErrorKind::InvalidInput, "no extension degree found");
}

ReductionMap::ReductionMap(int p, int k, int l, int d)
    : p_(p), k_(k), F_(&GF::get(l, d)), root_(F_->root_of_unity(ipow(p, k))) {
  if (l == p) fail(ErrorKind::InvalidInput, "reduction needs l != p");
}

ReductionMap::ReductionMap(int p, int k, const GF& F, uint32_t root) : p_(p), k_(k), F_(&F), root_(root) {
  if (F.order(root) != ipow(p, k)) fail(ErrorKind::InvalidInput, "designated root has the wrong order");
}

FinCoeff ReductionMap::operator()(const CycInt& x) const {
  CycInt y = x;
  if (y.p() != 0 && y.p() != p_) fail(ErrorKind::Mismatch, "reduction: ring mismatch");
  if (y.level() > k_) y = y.descend();
  if (y.level() > k_) fail(ErrorKind::Mismatch, "reduction: element above the map's level");
  y = y.lifted(p_, k_);
  BigInt dm = mod_floor(y.den(), F_->p());
  if (dm == 0) fail(ErrorKind::NotInvertible, "denominator divisible by l");
  uint32_t acc = 0, z = 1;
  for (const auto& c : y.num()) {
    BigInt cm = mod_floor(c, F_->p());
    if (cm != 0) acc = F_->add(acc, F_->mul(F_->from_int(cm.convert_to<long>()), z));
    z = F_->mul(z, root_);
  }
  acc = F_->mul(acc, F_->inv(F_->from_int(dm.convert_to<long>())));
  return {F_, acc};
}

}  // namespace weilmod
