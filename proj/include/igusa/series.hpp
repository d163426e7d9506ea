// Exact two-sided coefficient extraction and exponential-polynomial
// asymptotics of a RationalQT at a numeric prime power q = p.
//
// The denominator splits into the product of factors whose t-roots have
// modulus > 1 (d > 0) and those with modulus < 1 (d < 0); the two products
// are coprime in Q[t], so a Bezout identity splits the function into a part
// expanded in nonnegative powers of t and a part expanded around infinity.
// Every window coefficient is an exact rational; there is no truncation
// error.
#pragma once

#include <map>
#include <optional>
#include <vector>

#include "igusa/qt.hpp"

namespace igusa {

// coefficient of t^m for |m| <= M; t^m corresponds to {x : ord f = m}.
std::map<long, Rat> series_expand(const RationalQT& Z, long p, long M);

// One exponential-polynomial family on one side of the expansion.  For m in
// the residue class r mod period (m large), with j = (m - residue) / period,
//   coeff(t^{side*m}) = ratio^j * P_r(j)   where  ratio = q^{rate * period}
// has an integer q-exponent, so every quantity stays rational.  rate is the
// per-step decay log_q |coeff|, negative.
struct AsymFamily {
  Rat rate;                  // log_q of the per-step decay, negative
  long period;               // residue period in m
  long residue;              // class of m mod period
  std::vector<Rat> poly;     // P_r coefficients in j^0..j^deg, exact
  int degree;                // top nonzero degree (<= mu - 1)
};

struct Asymptotics {
  // side = +1: coefficients of t^{+m} (|f| = q^{-m});  -1: of t^{-m}.
  int side;
  std::vector<AsymFamily> families;  // sorted by rate, slowest decay first
  bool certified = true;   // false when beta = -1 with multiplicity 1 applies
  std::optional<Rat> fitted_constant;  // A with |V| <= A m^{mu-1} q^{rate m}
};

Asymptotics asymptotic_terms(const RationalQT& Z, long p, int side,
                             long fit_window = 40);

}  // namespace igusa
