#include "weilmod/arith.hpp"

#include <random>

namespace weilmod {

void fail(ErrorKind k, const std::string& msg) { throw Error(k, msg); }

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

BigInt bpow(long long b, unsigned e) { return boost::multiprecision::pow(BigInt(b), e); }

Rational rpow(long long b, int e) {
  if (e >= 0) return Rational(bpow(b, e));
  return Rational(BigInt(1), bpow(b, -e));
}

BigInt mod_floor(const BigInt& a, const BigInt& m) {
  BigInt r = a % m;
  if (r < 0) r += m;
  return r;
}

long long mod_floor(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}

BigInt inv_mod(const BigInt& a, const BigInt& m) {
  BigInt old_r = mod_floor(a, m), rr = m, old_s = 1, s = 0;
  while (rr != 0) {
    BigInt q = old_r / rr;
    BigInt t = old_r - q * rr;
    old_r = rr;
    rr = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) fail(ErrorKind::NotInvertible, "not invertible modulo");
  return mod_floor(old_s, m);
}

int val_p(const BigInt& a, long p) {
  if (a == 0) fail(ErrorKind::InvalidInput, "valuation of zero");
  BigInt t = a;
  int v = 0;
  while (t % p == 0) {
    t /= p;
    ++v;
  }
  return v;
}

int val_p(const Rational& x, long p) {
  if (x == 0) fail(ErrorKind::InvalidInput, "valuation of zero");
  return val_p(numerator(x), p) - val_p(denominator(x), p);
}

long unit_residue(const Rational& x, long p) {
  BigInt n = numerator(x), d = denominator(x);
  while (n % p == 0) n /= p;
  while (d % p == 0) d /= p;
  BigInt r = mod_floor(n * inv_mod(d, p), p);
  return r.convert_to<long>();
}

int legendre(long a, long p) {
  a = mod_floor(a, p);
  if (a == 0) return 0;
  long long r = 1, b = a;
  long e = (p - 1) / 2;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r == 1 ? 1 : -1;
}

long smallest_nonresidue(long p) {
  for (long u = 2; u < p; ++u)
    if (legendre(u, p) == -1) return u;
  fail(ErrorKind::InvalidInput, "no non-residue");
}

std::pair<BigInt, int> frac_part(const Rational& x, long p) {
  BigInt n = numerator(x), d = denominator(x);
  int k = 0;
  BigInt dd = d;
  while (dd % p == 0) {
    dd /= p;
    ++k;
  }
  if (k == 0) return {BigInt(0), 0};
  BigInt pk = bpow(p, k);
  BigInt a = mod_floor(n * inv_mod(dd, pk), pk);
  return {a, k};
}

Rational rep_mod(const Rational& x, long p, int e) {
  auto [a, k] = frac_part(x * rpow(p, -e), p);
  return Rational(a) * rpow(p, e - k);
}

std::string to_string(const Rational& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

Rational parse_rational(const std::string& s) {
  auto bad = [&] { fail(ErrorKind::InvalidInput, "cannot parse rational '" + s + "'"); };
  if (s.empty()) bad();
  auto parse_int = [&](const std::string& t) {
    if (t.empty()) bad();
    size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) bad();
    for (size_t j = i; j < t.size(); ++j)
      if (t[j] < '0' || t[j] > '9') bad();
    return BigInt(t[0] == '+' ? t.substr(1) : t);
  };
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(parse_int(s));
  BigInt d = parse_int(s.substr(slash + 1));
  if (d == 0) bad();
  return Rational(parse_int(s.substr(0, slash)), d);
}

Rng::Rng(uint64_t seed) : seed_(seed), gen_(seed) {}

long long Rng::uniform(long long lo, long long hi) {
  return std::uniform_int_distribution<long long>(lo, hi)(gen_);
}

Rng Rng::split(uint64_t stream) const {
  std::seed_seq seq{uint32_t(seed_), uint32_t(seed_ >> 32), uint32_t(stream), uint32_t(stream >> 32)};
  std::mt19937_64 g(seq);
  return Rng(g());
}

}  // namespace weilmod
