// Exact rational functions in q and t = q^{-s} with factored denominators.
//
// A RationalQT is  num / prod_i (1 - q^{-e_i} t^{d_i})^{m_i}  where num is an
// integer Laurent polynomial in q and t.  Denominator factors keep the
// geometric-series shape so pole data can be read off directly.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "igusa/rational.hpp"

namespace igusa {

// Laurent polynomial in (q, t) over Z: (q-exponent, t-exponent) -> coefficient.
using QTPoly = std::map<std::pair<long, long>, Int>;

QTPoly qt_mono(long eq, long et, const Int& c = 1);
QTPoly qt_add(const QTPoly& a, const QTPoly& b);
QTPoly qt_sub(const QTPoly& a, const QTPoly& b);
QTPoly qt_mul(const QTPoly& a, const QTPoly& b);
bool qt_is_zero(const QTPoly& a);

// 1 - q^{-e} t^{d}; e >= 1 always holds for the factors we build (e = |a|_1).
struct DenFactor {
  long e;
  long d;
  friend auto operator<=>(const DenFactor&, const DenFactor&) = default;
};

struct RationalQT {
  QTPoly num;
  std::map<DenFactor, int> den;  // factor -> multiplicity

  static RationalQT zero() { return {}; }
  static RationalQT from_poly(QTPoly p) { return {std::move(p), {}}; }

  RationalQT operator+(const RationalQT& o) const;
  RationalQT operator-(const RationalQT& o) const;
  RationalQT operator*(const RationalQT& o) const;
  RationalQT& mul_den(DenFactor f, int mult = 1);  // divide by (1-q^-e t^d)^mult
  RationalQT scaled(const QTPoly& m) const;

  // Cross-multiplied equality (exact, independent of representation).
  bool equals(const RationalQT& o) const;

  // Cancel denominator factors dividing the numerator.
  void normalize();

  bool is_zero() const { return qt_is_zero(num); }
};

// Exact division of P by (1 - q^{-e} t^{d}) * q^{x} (any Laurent unit monomial
// folded in); nullopt when not divisible.
std::optional<QTPoly> qt_divide_factor(const QTPoly& P, DenFactor f);

// Substitute t = 1.  Result is a rational function in q alone, returned as a
// pair (numerator Laurent poly in q, denominator Laurent poly in q).
struct QOnly {
  std::map<long, Int> num;  // q-exponent -> coeff
  std::map<long, Int> den;
};
QOnly qt_substitute_t1(const RationalQT& r);

// True iff r(t = 1) == 1 as a rational function of q.
bool qt_is_one_at_t1(const RationalQT& r);

// True iff the numerator vanishes identically at t = 1.
bool qt_num_vanishes_at_t1(const RationalQT& r);

std::string qt_str(const QTPoly& p);
std::string rational_qt_str(const RationalQT& r);

}  // namespace igusa
