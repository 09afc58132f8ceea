#include "weilmod/basefield.hpp"

namespace weilmod {

FqBase::FqBase(int p, int f, long long twist) : gf_(nullptr) {
  if (p == 2) fail(ErrorKind::InvalidInput, "base field of characteristic 2 is not supported");
  if (!is_prime(p) || f < 1) fail(ErrorKind::InvalidInput, "fq: need an odd prime and f >= 1");
  if (ipow(p, f) > 2401) fail(ErrorKind::Unsupported, "fq: field too large");
  gf_ = &GF::get(p, f);
  twist_ = from_int(twist);
  if (twist_.is_zero()) fail(ErrorKind::InvalidInput, "psi twist must be nonzero");
}

std::vector<GFElem> FqBase::elements() const {
  std::vector<Elem> v;
  v.reserve(q());
  for (uint32_t i = 0; i < q(); ++i) v.push_back({gf_, i});
  return v;
}

Rational FqBase::modulus(const Elem& x) const {
  if (x.is_zero()) fail(ErrorKind::InvalidInput, "modulus of zero");
  return 1;
}

GFElem FqBase::nonresidue() const {
  for (uint32_t i = 1; i < q(); ++i)
    if (!gf_->is_square(i)) return {gf_, i};
  fail(ErrorKind::InvalidInput, "no non-residue");
}

GFElem FqBase::parse(const std::string& s) const {
  // integers (reduced mod p) or "poly:c0,c1,..." coefficient lists
  if (s.rfind("poly:", 0) == 0) {
    uint32_t v = 0, pw = 1;
    size_t pos = 5;
    int i = 0;
    while (pos <= s.size()) {
      size_t c = s.find(',', pos);
      if (c == std::string::npos) c = s.size();
      long long d = parse_rational(s.substr(pos, c - pos)).convert_to<long long>();
      if (i >= degree()) fail(ErrorKind::InvalidInput, "too many coefficients in '" + s + "'");
      v += uint32_t(mod_floor(d, p())) * pw;
      pw *= p();
      ++i;
      pos = c + 1;
    }
    return {gf_, v};
  }
  return from_rational(parse_rational(s));
}

std::string FqBase::descriptor() const {
  return "fq:" + std::to_string(p()) + ":" + std::to_string(degree());
}

QpBase::QpBase(int p, Rational twist) : p_(p), twist_(std::move(twist)) {
  if (p == 2) fail(ErrorKind::InvalidInput, "Q_2 is not supported");
  if (!is_prime(p)) fail(ErrorKind::InvalidInput, "qp: p must be prime");
  if (twist_ == 0) fail(ErrorKind::InvalidInput, "psi twist must be nonzero");
}

Rational QpBase::random(Rng& rng, int vmax, long long height) const {
  auto unit = [&] {
    long long a;
    do a = rng.uniform(1, height - 1);
    while (a % p_ == 0);
    return a;
  };
  long long a = unit(), b = unit();
  if (rng.uniform(0, 1)) a = -a;
  int v = int(rng.uniform(-vmax, vmax));
  return Rational(a, b) * rpow(p_, v);
}

CycInt QpBase::psi(const Elem& x) const {
  auto [a, n] = frac_part(twist_ * x, p_);
  if (n == 0) return CycInt(1);
  if (n > 12) fail(ErrorKind::Unsupported, "psi: conductor too deep");
  BigInt pn = bpow(p_, n);
  return CycInt::zeta(p_, n, mod_floor(a, pn).convert_to<long long>());
}

Rational QpBase::modulus(const Elem& x) const {
  if (x == 0) fail(ErrorKind::InvalidInput, "modulus of zero");
  return rpow(p_, -val(x));
}

bool QpBase::is_square(const Elem& x) const {
  if (x == 0) return true;
  return val(x) % 2 == 0 && legendre(unit_residue(x, p_), p_) == 1;
}

FieldSpec parse_field(const std::string& d) {
  auto bad = [&] { fail(ErrorKind::InvalidInput, "bad field descriptor '" + d + "'"); };
  FieldSpec s;
  auto num = [&](const std::string& t) {
    if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos) bad();
    return std::stoi(t);
  };
  if (d.rfind("fq:", 0) == 0) {
    std::string rest = d.substr(3);
    auto c = rest.find(':');
    s.finite = true;
    s.p = num(rest.substr(0, c));
    s.f = c == std::string::npos ? 1 : num(rest.substr(c + 1));
  } else if (d.rfind("qp:", 0) == 0) {
    s.finite = false;
    s.p = num(d.substr(3));
  } else {
    bad();
  }
  if (!is_prime(s.p) || s.p == 2 || s.f < 1) bad();
  return s;
}

PsiSpec parse_psi(const std::string& d) {
  PsiSpec s;
  if (d == "psi:level0" || d.empty()) return s;
  if (d.rfind("psi:twist:", 0) == 0) {
    s.twist = parse_rational(d.substr(10));
    if (s.twist == 0) fail(ErrorKind::InvalidInput, "psi twist must be nonzero");
    return s;
  }
  fail(ErrorKind::InvalidInput, "bad character descriptor '" + d + "'");
}

}  // namespace weilmod
