// Symbolic local zeta function over the first quadrant: the explicit
// cone-by-cone decomposition, candidate poles, convergence strip and expected
// multiplicities.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "igusa/fan.hpp"
#include "igusa/fp.hpp"
#include "igusa/qt.hpp"

namespace igusa {

enum class LTauForm {
  MassIdentity,  // q^-2 ((q-1)^2 - N (1-t)/(1-q^{-1}t)); satisfies Z(1) = 1
  Printed,       // q^-2 (q^2-1 + N (t-1)/(1-q^{-1}t)); tabulated variant
};

// L_tau split into an N-free part and the coefficient of N, so N can stay
// symbolic when no prime is chosen.
struct LTauParts {
  RationalQT base;    // N-independent part
  RationalQT n_part;  // multiplied by N_tau
};
LTauParts L_tau(LTauForm form = LTauForm::MassIdentity);

// S_tau for a ray or simplicial 2-D cone of the quadrant fan.
RationalQT S_tau(const Cone& cone, const NewtonPolytope& P);

struct ZetaRow {
  Cone cone;
  LTauParts L;
  RationalQT S;
  std::optional<long> N;  // torus count of the face function, when p is given
};

struct ZetaResult {
  ZetaRow gamma_row;           // the L_{Gamma_infty} term (S = 1)
  std::vector<ZetaRow> rows;   // one per cone of the attainable fan
  // assembled total with numeric N values; absent in fully symbolic mode
  std::optional<RationalQT> total;
};

// The explicit formula over the attainable fan F_A.  When p is given, face
// counts N_tau are computed mod p and the total is assembled (q still
// symbolic).  Throws when p divides a clearing exponent needed for counting.
ZetaResult zeta_first_quadrant(const Laurent& f, const NewtonPolytope& P,
                               std::optional<long> p,
                               LTauForm form = LTauForm::MassIdentity);

// ---- poles -------------------------------------------------------------

struct CandidatePole {
  Rat real_part;        // -|a|_1 / d(a), or -1 for the measure factor
  long period_d;        // imaginary period: poles repeat mod 2*pi/(d ln q)
  int multiplicity;     // expected order (<= 2)
  std::vector<Vec2> sources;  // contributing edges; empty for the -1 factor
};

struct ConvergenceStrip {
  std::optional<Rat> alpha;  // min A(F); nullopt = +infinity (A empty)
  Rat beta;                  // max(B(F) u {-1})
  std::optional<Rat> alpha_max;  // max A(F)
  int beta_multiplicity = 1;
};

struct PoleData {
  std::vector<CandidatePole> poles;  // sorted by real part, descending
  ConvergenceStrip strip;
};

// Candidate poles read off the edges of `fan` plus the -1 family.
// Multiplicities scan the 2-D cones (max count of edges sharing the value).
PoleData candidate_poles(const Fan& fan, const NewtonPolytope& P);

}  // namespace igusa
