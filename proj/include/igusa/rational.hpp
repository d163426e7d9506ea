// Exact rational arithmetic helpers on top of GMP's mpq_class.
#pragma once

#include <gmpxx.h>
#include <optional>
#include <stdexcept>
#include <string>

namespace igusa {

using Rat = mpq_class;
using Int = mpz_class;

// Parse "a/b" or "a" into an exact rational.  Throws std::invalid_argument on junk.
Rat rat_parse(const std::string& s);

// Canonical "num/den" string ("num" when den == 1).
std::string rat_str(const Rat& r);

// r^k for k possibly negative (r != 0 when k < 0).
Rat rat_pow(const Rat& r, long k);

// p-adic valuation of a nonzero rational.  ord(0) is reported as LONG_MAX.
long padic_ord(const Rat& r, long p);

// The unit part of r with respect to p, reduced mod p^k: returns u in [0, p^k)
// with r = p^ord(r) * u' and u == u' mod p^k.  Requires r != 0, k >= 1.
Int padic_unit_mod(const Rat& r, long p, long k);

// r mod p^k for a p-integral rational r (ord_p(r) >= 0), result in [0, p^k).
Int padic_mod(const Rat& r, long p, long k);

inline Int int_pow(long b, long e) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(b), static_cast<unsigned long>(e));
  return r;
}

}  // namespace igusa
