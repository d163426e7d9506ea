#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "igusa/oracle.hpp"
#include "igusa/series.hpp"
#include "igusa/zeta.hpp"

using namespace igusa;

namespace {

Rat coeff(const std::map<long, Rat>& w, long m) {
  auto it = w.find(m);
  return it == w.end() ? Rat(0) : it->second;
}

Rat spectrum_mass(const ValuationSpectrum& s) {
  Rat total = s.tail + s.unresolved;
  for (auto& [m, c] : s.v) total += c;
  return total;
}

}  // namespace

TEST_CASE("domain measures") {
  CHECK(phi_measure({PhiSpec::Quadrant}, 5) == Rat(1));
  CHECK(phi_measure({PhiSpec::UnitTorus}, 5) == Rat(16, 25));
  CHECK(phi_measure({PhiSpec::HalfTorus}, 5) == Rat(4, 5));
  PhiSpec ball{PhiSpec::Ball, 2};  // (p^2 Zp)^2 has measure p^-4
  CHECK(phi_measure(ball, 5) == Rat(1, 625));
}

TEST_CASE("unit linear form: spectrum of ord(x + y + 1) on the unit torus") {
  // exactly N = p - 2 simple residue zeros; the rest of the torus has ord 0:
  // vol{ord = m} = N (1 - 1/p) p^{-m-1} for m >= 1
  Laurent f = laurent_parse("x + y + 1");
  NewtonPolytope P(f);
  const long p = 7;
  PhiSpec phi{PhiSpec::UnitTorus};
  ValuationSpectrum s = valuation_spectrum(f, P, p, phi, 5);
  REQUIRE(s.certified);
  CHECK(s.unresolved == 0);
  Rat torus = phi_measure(phi, p);
  CHECK(coeff(s.v, 0) == torus - Rat(5, 49));
  for (long m = 1; m <= 5; ++m)
    CHECK(coeff(s.v, m) == Rat(5) * Rat(6, 7) * rat_pow(Rat(7), -m - 1));
  CHECK(spectrum_mass(s) == torus);
}

TEST_CASE("quadrant spectrum of the triangle example at p = 5") {
  Laurent f = laurent_parse("x^-3 + y^2 + y^4");
  NewtonPolytope P(f);
  ValuationSpectrum s = valuation_spectrum(f, P, 5, {PhiSpec::Quadrant}, 6);
  REQUIRE(s.certified);
  CHECK(s.unresolved == 0);
  CHECK(coeff(s.v, 0) == Rat(18, 25));
  CHECK(coeff(s.v, -3) == Rat(4, 25));
  CHECK(coeff(s.v, -6) == Rat(4, 125));
  CHECK(coeff(s.v, 1) == Rat(8, 125));
  CHECK(coeff(s.v, 2) == Rat(8, 625));
  CHECK(coeff(s.v, -1) == 0);
  CHECK(coeff(s.v, -2) == 0);
  CHECK(spectrum_mass(s) == 1);
}

TEST_CASE("small ball pushes the spectrum down by the polytope weights") {
  // on (p^1 Zp)^2 the x^-3 vertex dominates: ord f = -3(k+1) on the shell
  // ord x = k+1, so vol{ord = -3(k+1)} = (1 - 1/p) p^{-2-k}
  Laurent f = laurent_parse("x^-3 + y^2 + y^4");
  NewtonPolytope P(f);
  PhiSpec ball{PhiSpec::Ball, 1};
  ValuationSpectrum s = valuation_spectrum(f, P, 5, ball, 12);
  REQUIRE(s.certified);
  CHECK(s.unresolved == 0);
  for (long k = 0; k <= 3; ++k)
    CHECK(coeff(s.v, -3 * (k + 1)) == Rat(4, 5) * rat_pow(Rat(5), -2 - k));
  for (long m = -12; m <= 12; ++m)
    if (m % 3 != 0 || m >= 0) CHECK(coeff(s.v, m) == 0);
  CHECK(s.tail == Rat(1, 15625));  // deeper shells, ord < -12
  CHECK(spectrum_mass(s) == phi_measure(ball, 5));
}

TEST_CASE("certified spectra match the symbolic formula exactly") {
  const char* polys[] = {"x^-3 + y^2 + y^4", "x^-3 + y^-2 + y^4",
                         "x*y + x^-1 + y^-1", "x^-2*y^-1 + x + y^3"};
  for (auto* str : polys) {
    Laurent f = laurent_parse(str);
    NewtonPolytope P(f);
    auto p = find_good_prime(f);
    REQUIRE(p);
    ZetaResult Z = zeta_first_quadrant(f, P, *p);
    REQUIRE(Z.total);
    auto w = series_expand(*Z.total, *p, 8);
    ValuationSpectrum s = valuation_spectrum(f, P, *p, {PhiSpec::Quadrant}, 8);
    REQUIRE(s.certified);
    for (long m = -8; m <= 8; ++m) CHECK(coeff(s.v, m) == coeff(w, m));
  }
}

TEST_CASE("bruteforce torus refinement agrees with the certified strata") {
  Laurent f = laurent_parse("x^-3 + y^2 + y^4");
  const long p = 5;
  PhiSpec phi{PhiSpec::UnitTorus};
  NewtonPolytope P(f);
  ValuationSpectrum s = valuation_spectrum(f, P, p, phi, 4);
  TorusSpectrum b = torus_spectrum_bruteforce(f, p, 4);
  REQUIRE(b.exact);
  for (long m = 0; m <= 4; ++m) CHECK(coeff(s.v, m) == coeff(b.v, m));
  CHECK(s.tail == b.deeper);
}

TEST_CASE("bruteforce refinement: exact flag drops at the depth cap") {
  // a double zero keeps deepening; a cap below Jmax forces giving up
  Laurent g = laurent_parse("x^2 + 2*x*y + y^2");
  TorusSpectrum capped = torus_spectrum_bruteforce(g, 3, 6, 3);
  CHECK(!capped.exact);
  CHECK(capped.deeper > 0);
  // with the cap past Jmax the lumped deeper mass is still exact
  TorusSpectrum lumped = torus_spectrum_bruteforce(g, 3, 2, 4);
  CHECK(lumped.exact);
  CHECK(lumped.deeper > 0);
}

TEST_CASE("degenerate input falls back and reports unresolved mass") {
  // (x + y)^2 + x^3 y^3 is degenerate on the (1,1)-edge at every prime
  Laurent f = laurent_parse("x^2 + 2*x*y + y^2 + x^3*y^3");
  NewtonPolytope P(f);
  ValuationSpectrum s = valuation_spectrum(f, P, 7, {PhiSpec::UnitTorus}, 3, 3);
  CHECK(!s.certified);
  CHECK(s.unresolved > 0);
  CHECK(spectrum_mass(s) == phi_measure({PhiSpec::UnitTorus}, 7));
}

TEST_CASE("non p-integral coefficients are rejected") {
  Laurent f = laurent_parse("1/5*x^-3 + y^2 + y^4");
  NewtonPolytope P(f);
  CHECK_THROWS_AS(valuation_spectrum(f, P, 5, {PhiSpec::Quadrant}, 3),
                  std::invalid_argument);
}

TEST_CASE("mass conservation across domains") {
  Laurent f = laurent_parse("x^-3 + y^-2 + y^4");
  NewtonPolytope P(f);
  for (auto kind : {PhiSpec::Quadrant, PhiSpec::UnitTorus, PhiSpec::HalfTorus}) {
    PhiSpec phi;
    phi.kind = kind;
    ValuationSpectrum s = valuation_spectrum(f, P, 5, phi, 10);
    REQUIRE(s.certified);
    CHECK(spectrum_mass(s) == phi_measure(phi, 5));
  }
}
