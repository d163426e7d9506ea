// Prime-field torus computations: point counts, the non-degeneracy test for
// all faces of the Newton polytope, and good-prime search.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "igusa/laurent.hpp"
#include "igusa/polytope.hpp"

namespace igusa {

long mod_pow(long b, long e, long p);
long mod_inv(long a, long p);

// Number of (x,y) in the torus (F_p^*)^2 with fbar(x,y) = 0.  Negative
// exponents are evaluated through inverses (exponents reduced mod p-1).
long count_torus_zeros(const Laurent& fbar, long p);

struct NondegReport {
  bool ok = false;
  // set when the test cannot be run at p at all:
  std::optional<std::string> error;  // denominator hit / support collapse / p | d_j
  // on failure, a witness singular face and point:
  std::optional<Face> bad_face;
  long witness_x = 0, witness_y = 0;
};

// Lemma-style check on every face tau (including the full polytope): the
// cleared polynomial fhat_tau and both its partials have no common torus zero
// mod p.  Rejects p when coefficients do not reduce faithfully or p divides a
// clearing exponent of some face.
NondegReport is_nondegenerate_mod_p(const Laurent& f, const NewtonPolytope& P, long p);

// Smallest good prime in [from, bound]: f reduces faithfully, no clearing
// exponent collapses, and f is non-degenerate mod p.
std::optional<long> find_good_prime(const Laurent& f, long from = 2, long bound = 211);

// Every torus zero of fbar has a nonvanishing (Laurent) gradient mod p.
// This is the Hensel certificate used by the oracle's exact tails; it is
// implied by non-degeneracy of the full polytope face but checked directly.
bool simple_zeros_certificate(const Laurent& fbar, long p);

}  // namespace igusa
