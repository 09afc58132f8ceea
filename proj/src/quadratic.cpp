#include "weilmod/quadratic.hpp"

namespace weilmod {

SquareClass<FqBase> square_class(const FqBase& F, const GFElem& a) {
  if (a.is_zero()) fail(ErrorKind::InvalidInput, "square class of zero");
  if (F.is_square(a)) return {F.one(), 0};
  return {F.nonresidue(), 1};
}

SquareClass<QpBase> square_class(const QpBase& F, const Rational& a) {
  if (a == 0) fail(ErrorKind::InvalidInput, "square class of zero");
  int p = F.p();
  int odd = val_p(a, p) & 1;
  int nonres = legendre(unit_residue(a, p), p) == -1;
  Rational rep = 1;
  if (nonres) rep *= smallest_nonresidue(p);
  if (odd) rep *= p;
  return {rep, nonres | (odd << 1)};
}

int hilbert(const FqBase&, const GFElem& a, const GFElem& b) {
  if (a.is_zero() || b.is_zero()) fail(ErrorKind::InvalidInput, "hilbert symbol of zero");
  return 1;
}

int hilbert(const QpBase& F, const Rational& a, const Rational& b) {
  if (a == 0 || b == 0) fail(ErrorKind::InvalidInput, "hilbert symbol of zero");
  int p = F.p();
  int al = val_p(a, p), be = val_p(b, p);
  int lu = legendre(unit_residue(a, p), p), lv = legendre(unit_residue(b, p), p);
  int r = 1;
  if (be & 1) r *= lu;
  if (al & 1) r *= lv;
  if ((al & 1) && (be & 1)) r *= legendre(-1, p);
  return r;
}

int hilbert_by_search(int p, const Rational& a0, const Rational& b0) {
  if (a0 == 0 || b0 == 0) fail(ErrorKind::InvalidInput, "hilbert symbol of zero");
  // reduce to integers of valuation 0 or 1 by square factors
  auto squash = [p](const Rational& x) {
    int v = val_p(x, p);
    BigInt n = numerator(x), d = denominator(x);
    while (n % p == 0) n /= p;
    while (d % p == 0) d /= p;
    // n*d lies in the square class of n/d; only its residue mod p^3 matters
    long long p3 = ipow(p, 3);
    BigInt w = mod_floor(n * d, p3);
    return w.convert_to<long long>() * ((v & 1) ? p : 1) % p3;
  };
  long long p3 = ipow(p, 3);
  long long a = squash(a0), b = squash(b0);
  std::vector<char> sq(p3, 0);
  for (long long z = 0; z < p3; ++z) sq[z * z % p3] = 1;
  // x a unit, normalised to 1
  for (long long y = 0; y < p3; ++y)
    if (sq[mod_floor(a + b * (y * y % p3), p3)]) return 1;
  // x divisible by p, y = 1
  for (long long x = 0; x < p3; x += p)
    if (sq[mod_floor(a * (x * x % p3) + b, p3)]) return 1;
  return -1;
}

}  // namespace weilmod
