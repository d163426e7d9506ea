#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "igusa/series.hpp"
#include "igusa/zeta.hpp"

using namespace igusa;

namespace {

Rat coeff(const std::map<long, Rat>& w, long m) {
  auto it = w.find(m);
  return it == w.end() ? Rat(0) : it->second;
}

}  // namespace

TEST_CASE("one-sided geometric factor expands forward") {
  // q^-1 t / (1 - q^-1 t) at q = 5: coeff(t^m) = 5^-m for m >= 1
  RationalQT r = RationalQT::from_poly(qt_mono(-1, 1));
  r.mul_den({1, 1});
  auto w = series_expand(r, 5, 6);
  CHECK(coeff(w, 0) == 0);
  CHECK(coeff(w, 1) == Rat(1, 5));
  CHECK(coeff(w, 4) == Rat(1, 625));
  CHECK(coeff(w, -1) == 0);
}

TEST_CASE("d < 0 factor expands toward negative powers") {
  // q^-1 t^-3 / (1 - q^-1 t^-3) at q = 5: coeff(t^{-3k}) = 5^-k, k >= 1
  RationalQT r = RationalQT::from_poly(qt_mono(-1, -3));
  r.mul_den({1, -3});
  auto w = series_expand(r, 5, 10);
  CHECK(coeff(w, -3) == Rat(1, 5));
  CHECK(coeff(w, -6) == Rat(1, 25));
  CHECK(coeff(w, -9) == Rat(1, 125));
  CHECK(coeff(w, -2) == 0);
  CHECK(coeff(w, 0) == 0);
  CHECK(coeff(w, 3) == 0);
}

TEST_CASE("two-sided product splits by partial fractions") {
  // 1 / ((1 - q^-1 t)(1 - q^-1 t^-1)) at q = 2:
  // closed form: coeff(t^m) = 2^-|m| * (1/(1 - 1/4)) = (4/3) 2^-|m| ... check
  // against direct convolution sum_{a-b=m} 2^-a 2^-b = 2^-|m| sum_k 4^-k
  RationalQT r = RationalQT::from_poly(qt_mono(0, 0));
  r.mul_den({1, 1});
  r.mul_den({1, -1});
  auto w = series_expand(r, 2, 5);
  CHECK(coeff(w, 0) == Rat(4, 3));
  CHECK(coeff(w, 1) == Rat(2, 3));
  CHECK(coeff(w, -1) == Rat(2, 3));
  CHECK(coeff(w, 3) == Rat(1, 6));
  CHECK(coeff(w, -3) == Rat(1, 6));
}

TEST_CASE("scalar d = 0 factors rescale every coefficient") {
  RationalQT r = RationalQT::from_poly(qt_mono(0, 1));
  r.mul_den({2, 0});  // 1/(1 - q^-2) = 25/24 at q = 5
  auto w = series_expand(r, 5, 2);
  CHECK(coeff(w, 1) == Rat(25, 24));
}

TEST_CASE("zeta window of x^-3 + y^2 + y^4 at p = 5") {
  Laurent f = laurent_parse("x^-3 + y^2 + y^4");
  NewtonPolytope P(f);
  ZetaResult Z = zeta_first_quadrant(f, P, 5);
  REQUIRE(Z.total);
  auto w = series_expand(*Z.total, 5, 6);
  CHECK(coeff(w, 0) == Rat(18, 25));
  CHECK(coeff(w, -3) == Rat(4, 25));
  CHECK(coeff(w, -6) == Rat(4, 125));
  CHECK(coeff(w, -1) == 0);
  CHECK(coeff(w, 1) == Rat(8, 125));
  CHECK(coeff(w, 2) == Rat(8, 625));
  CHECK(coeff(w, 6) == Rat(8, 390625));
}

TEST_CASE("asymptotic families of the zeta window") {
  Laurent f = laurent_parse("x^-3 + y^2 + y^4");
  NewtonPolytope P(f);
  ZetaResult Z = zeta_first_quadrant(f, P, 5);
  REQUIRE(Z.total);

  Asymptotics neg = asymptotic_terms(*Z.total, 5, -1);
  REQUIRE(neg.families.size() == 1);
  CHECK(neg.families[0].rate == Rat(-1, 3));
  CHECK(neg.families[0].period == 3);
  CHECK(neg.families[0].residue == 0);
  CHECK(neg.families[0].degree == 0);
  REQUIRE(neg.families[0].poly.size() == 1);
  CHECK(neg.families[0].poly[0] == Rat(4, 5));
  CHECK(neg.certified);

  Asymptotics pos = asymptotic_terms(*Z.total, 5, +1);
  REQUIRE(pos.families.size() == 1);
  CHECK(pos.families[0].rate == Rat(-1));
  CHECK(pos.families[0].poly == std::vector<Rat>{Rat(8, 25)});
  CHECK(!pos.certified);  // the -1 family is only a candidate bound
  REQUIRE(pos.fitted_constant);
  CHECK(*pos.fitted_constant > 0);
}

TEST_CASE("families reproduce the exact window term by term") {
  const char* polys[] = {"x^-3 + y^2 + y^4", "x^-3 + y^-2 + y^4",
                         "x*y + x^-1 + y^-1"};
  for (auto* s : polys) {
    Laurent f = laurent_parse(s);
    NewtonPolytope P(f);
    auto p = find_good_prime(f);
    REQUIRE(p);
    ZetaResult Z = zeta_first_quadrant(f, P, *p);
    REQUIRE(Z.total);
    auto w = series_expand(*Z.total, *p, 30);
    for (int side : {-1, +1}) {
      Asymptotics A = asymptotic_terms(*Z.total, *p, side);
      for (long m = 20; m <= 30; ++m) {
        Rat predicted = 0;
        for (auto& fam : A.families) {
          if ((m - fam.residue) % fam.period != 0) continue;
          long j = (m - fam.residue) / fam.period;
          Rat pj = 0;
          for (int k = (int)fam.poly.size() - 1; k >= 0; --k)
            pj = pj * Rat(j) + fam.poly[k];
          Rat rp = fam.rate * Rat(fam.period);  // integer q-exponent of ratio
          REQUIRE(rp.get_den() == 1);
          predicted += pj * rat_pow(rat_pow(Rat(*p), rp.get_num().get_si()), j);
        }
        CHECK(predicted == coeff(w, side * m));
      }
    }
  }
}

TEST_CASE("window coefficients are nonnegative and bounded by total mass") {
  Laurent f = laurent_parse("x^-3 + y^-2 + y^4");
  NewtonPolytope P(f);
  ZetaResult Z = zeta_first_quadrant(f, P, 5);
  REQUIRE(Z.total);
  auto w = series_expand(*Z.total, 5, 12);
  Rat sum = 0;
  for (auto& [m, c] : w) {
    CHECK(c >= 0);
    sum += c;
  }
  CHECK(sum <= 1);
  CHECK(sum > Rat(99, 100));  // the window catches almost everything
}
