#include "igusa/rational.hpp"

#include <climits>

namespace igusa {

Rat rat_parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational");
  mpq_class r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  r.canonicalize();
  return r;
}

std::string rat_str(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat rat_pow(const Rat& r, long k) {
  if (k == 0) return 1;
  bool neg = k < 0;
  unsigned long e = static_cast<unsigned long>(neg ? -k : k);
  Rat out;
  mpz_pow_ui(out.get_num_mpz_t(), r.get_num_mpz_t(), e);
  mpz_pow_ui(out.get_den_mpz_t(), r.get_den_mpz_t(), e);
  out.canonicalize();
  if (neg) {
    if (out == 0) throw std::domain_error("0 to negative power");
    out = 1 / out;
  }
  return out;
}

static long mpz_ord(const Int& z, long p) {
  if (z == 0) return LONG_MAX;
  Int t = z;
  long v = 0;
  while (mpz_divisible_ui_p(t.get_mpz_t(), static_cast<unsigned long>(p))) {
    mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(p));
    ++v;
  }
  return v;
}

long padic_ord(const Rat& r, long p) {
  if (r == 0) return LONG_MAX;
  return mpz_ord(r.get_num(), p) - mpz_ord(r.get_den(), p);
}

Int padic_unit_mod(const Rat& r, long p, long k) {
  if (r == 0) throw std::domain_error("unit part of zero");
  Int num = r.get_num(), den = r.get_den();
  long vn = mpz_ord(num, p), vd = mpz_ord(den, p);
  Int pk = int_pow(p, 1);
  for (long i = 0; i < vn; ++i) mpz_divexact_ui(num.get_mpz_t(), num.get_mpz_t(), p);
  for (long i = 0; i < vd; ++i) mpz_divexact_ui(den.get_mpz_t(), den.get_mpz_t(), p);
  Int mod = int_pow(p, k);
  Int dinv;
  if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t()) == 0)
    throw std::domain_error("denominator not invertible");
  Int u = (num * dinv) % mod;
  if (u < 0) u += mod;
  return u;
}

Int padic_mod(const Rat& r, long p, long k) {
  Int mod = int_pow(p, k);
  if (r == 0) return 0;
  if (padic_ord(r, p) < 0) throw std::domain_error("not p-integral");
  Int dinv;
  Int den = r.get_den();
  if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t()) == 0)
    throw std::domain_error("denominator not invertible");
  Int u = (r.get_num() * dinv) % mod;
  if (u < 0) u += mod;
  return u;
}

}  // namespace igusa
