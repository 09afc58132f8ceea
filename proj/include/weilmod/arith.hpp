#pragma once
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace weilmod {

// expression templates off: `auto x = a * b` must hold a value, not a lazy reference
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;

enum class ErrorKind { InvalidInput, CheckFailed, Unsupported, Mismatch, NotInvertible };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind k, const std::string& msg) : std::runtime_error(msg), kind_(k) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind k, const std::string& msg);

bool is_prime(long long n);
long long ipow(long long b, int e);
BigInt bpow(long long b, unsigned e);
Rational rpow(long long b, int e);  // b^e for any sign of e

BigInt mod_floor(const BigInt& a, const BigInt& m);
long long mod_floor(long long a, long long m);
BigInt inv_mod(const BigInt& a, const BigInt& m);

int val_p(const BigInt& a, long p);     // a != 0
int val_p(const Rational& x, long p);   // x != 0
// x = p^v * u with u a p-adic unit; returns u mod p in [1, p)
long unit_residue(const Rational& x, long p);
int legendre(long a, long p);  // 0, +1, -1
long smallest_nonresidue(long p);

// x = a / p^n mod Z_p with 0 <= a < p^n and n minimal
std::pair<BigInt, int> frac_part(const Rational& x, long p);
// canonical representative of x modulo p^e Z_p (digits below e)
Rational rep_mod(const Rational& x, long p, int e);

std::string to_string(const Rational& x);
Rational parse_rational(const std::string& s);

class Rng {
 public:
  explicit Rng(uint64_t seed);
  uint64_t next() { return gen_(); }
  long long uniform(long long lo, long long hi);  // inclusive
  // independent stream for worker `stream`; depends only on (seed, stream)
  Rng split(uint64_t stream) const;

 private:
  uint64_t seed_;
  std::mt19937_64 gen_;
};

}  // namespace weilmod
