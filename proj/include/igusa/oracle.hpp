// p-adic oracle: valuation spectra of |f| over standard domains by
// stratified residue-box refinement with certified Hensel tails.
//
// Exactness: most of the measure of each unit-torus stratum resolves at depth
// 1; boxes sitting on simple residue zeros carry an exactly geometric deep
// spectrum (certified by the unit-gradient check, a finite computation), and
// stratum families along the smooth cone decomposition of the quadrant sum to
// exact geometric series.  Degenerate inputs fall back to capped refinement
// and report unresolved mass.
#pragma once

#include <map>
#include <optional>
#include <string>

#include "igusa/fan.hpp"
#include "igusa/fp.hpp"
#include "igusa/laurent.hpp"

namespace igusa {

struct PhiSpec {
  enum Kind {
    Quadrant,   // (Zp \ {0})^2
    Ball,       // (p^e Zp \ {0})^2
    UnitTorus,  // (Zp^*)^2
    HalfTorus,  // A^(i) shape: one unit coordinate, the other ranging over Zp
  } kind = Quadrant;
  long e = 0;       // Ball level
  int unit_var = 0; // HalfTorus: which coordinate is the unit one
};

// measure of the domain (Haar, normalized so Zp^2 has measure 1)
Rat phi_measure(const PhiSpec& phi, long p);

struct ValuationSpectrum {
  std::map<long, Rat> v;   // m -> vol{ x in Phi : ord f(x) = m }, |m| <= M
  Rat tail;                // mass with ord f outside the window (exact)
  Rat unresolved;          // mass not attributed (0 on certified inputs)
  bool certified = false;  // exact tails were used everywhere
};

// Exact spectrum of ord f over Phi for |m| <= M.  Requires p-integral
// coefficients.  `depth_cap` only limits the uncertified fallback path.
ValuationSpectrum valuation_spectrum(const Laurent& f, const NewtonPolytope& P,
                                     long p, const PhiSpec& phi, long M,
                                     int depth_cap = 24);

// Unit-torus spectrum of a single stratum computed by literal box refinement
// (no closed forms): used to cross-check the certified path in tests.
// Returns vol{ord g = J} for 0 <= J <= Jmax plus the remaining mass.
struct TorusSpectrum {
  std::map<long, Rat> v;
  Rat deeper;       // mass with ord > Jmax (or unresolved at depth cap)
  bool exact = true;
};
TorusSpectrum torus_spectrum_bruteforce(const Laurent& g, long p, long Jmax,
                                        int depth_cap = 12);

}  // namespace igusa
