// Exponential sums mod p^m, twisted zeta coefficients, and oscillatory
// integrals E(z, f) with the standard additive character, evaluated by exact
// cell refinement with stationary-phase cancellation; complex outputs carry a
// propagated error bound.
#pragma once

#include <complex>
#include <map>
#include <vector>

#include "igusa/laurent.hpp"
#include "igusa/oracle.hpp"

namespace igusa {

struct ComplexValue {
  std::complex<double> value;
  double err = 0.0;  // rigorous magnitude bound on the defect
};

// S_m(f_i): q^{-2m} * sum over A_m^{(i)} of Psi(u p^{-m} f(x)), where
// A_m^{(0)} = (R/P^m)^* x R/P^m (and mirrored for i = 1).  Requires the
// non-unit coordinate to appear only with nonnegative exponents.
ComplexValue exponential_sum(const Laurent& f, int i, long p, long m, long u = 1);

// E_Phi(z, f) = int_Phi Psi(z f(x)) |dx| at z = u p^{-mz} (mz may be
// negative: small |z|).  Cell refinement; truncation goes into err.
ComplexValue oscillatory_integral_direct(const Laurent& f, long p,
                                         const PhiSpec& phi, long mz, long u,
                                         int depth_cap = 60,
                                         double mass_floor = 1e-12);

// Multiplicative characters of conductor <= cmax (p odd).
struct Character {
  long p;
  long c;        // conductor (1 <= c); trivial character has c = 0 by convention
  long modulus;  // p^level used for evaluation
  long index;    // k: chi(g^j) = e(k j / phi(p^level))
};

// All characters of (Z/p^level)^* grouped with conductors; excludes the
// trivial one.
std::vector<Character> characters_mod(long p, long level);

std::complex<double> character_eval(const Character& chi, const Int& v);

// Gauss sum g_chi = (q-1)^{-1} q^{1-c} sum_{v mod p^c unit} chi(v) e(v / p^c).
std::complex<double> gauss_sum(const Character& chi);

// Twisted coefficient sums over the unit torus:
//   Z_m(chi) = sum over {x : ord f = m} of chi(ac f(x)) dx, 0 <= m <= M.
// Computed exactly by box refinement (finite for each fixed m); the trivial
// character column is rational, others are complex sums of roots of unity.
struct TwistedCoefficients {
  std::map<long, Rat> trivial;                          // m -> volume
  std::map<long, std::vector<std::complex<double>>> twisted;  // m -> per chi
  std::vector<Character> chis;
  double err = 0.0;
};
TwistedCoefficients zeta_coefficients_bruteforce(const Laurent& f, long p,
                                                 long M, long cmax);

// E(u p^{-m}, f) over the unit torus through the character decomposition
// (trivial part from the cumulative series identity, twisted parts from
// Gauss sums); cross-validated against the direct integral.
ComplexValue oscillatory_via_characters(const Laurent& f, long p, long m, long u);

}  // namespace igusa
