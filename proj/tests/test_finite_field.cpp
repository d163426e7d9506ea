#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "igusa/fp.hpp"
#include "igusa/laurent.hpp"
#include "igusa/polytope.hpp"

using namespace igusa;

TEST_CASE("modular helpers") {
  CHECK(mod_pow(2, 10, 1000) == 24);
  CHECK(mod_pow(3, 0, 7) == 1);
  CHECK(mod_inv(3, 7) == 5);
  CHECK(mod_inv(1, 2) == 1);
}

TEST_CASE("torus zero counts against direct enumeration") {
  // x + y + 1 on (F_p^*)^2: y = -1 - x with x != 0, -1  =>  p - 2 zeros
  for (long p : {3, 5, 7, 11})
    CHECK(count_torus_zeros(laurent_parse("x + y + 1"), p) == p - 2);
  // x*y - 1: y = x^-1, one per unit  =>  p - 1 zeros
  CHECK(count_torus_zeros(laurent_parse("x*y - 1"), 7) == 6);
  // no zeros when the value is a nonresidue shift
  CHECK(count_torus_zeros(laurent_parse("1"), 5) == 0);
}

TEST_CASE("negative exponents count through inverses") {
  // x^-1 + y = 0 on the torus <=> x*y + 1 = 0 on the torus
  for (long p : {3, 5, 7})
    CHECK(count_torus_zeros(laurent_parse("x^-1 + y"), p) ==
          count_torus_zeros(laurent_parse("x*y + 1"), p));
  CHECK(count_torus_zeros(laurent_parse("x^-3 + y^-2 + y^4"), 5) == 2);
}

TEST_CASE("non-degeneracy of the triangle example") {
  Laurent f = laurent_parse("x^-3 + y^-2 + y^4");
  NewtonPolytope P(f);
  // p = 2 and p = 3 divide clearing exponents or kill the certificate
  CHECK(!is_nondegenerate_mod_p(f, P, 2).ok);
  CHECK(!is_nondegenerate_mod_p(f, P, 3).ok);
  NondegReport r5 = is_nondegenerate_mod_p(f, P, 5);
  CHECK(r5.ok);
  CHECK(!r5.error);
}

TEST_CASE("degenerate face is detected with a witness") {
  // full face of (x + y)^2-like support: x^2 + 2xy + y^2 has the double
  // line x = -y of singular torus zeros mod every p
  Laurent f = laurent_parse("x^2 + 2*x*y + y^2 + x^3*y^3");
  NewtonPolytope P(f);
  NondegReport r = is_nondegenerate_mod_p(f, P, 7);
  CHECK(!r.ok);
  REQUIRE(r.bad_face);
  // the witness really is a common zero of the face function and gradient
  std::vector<Exp> pts;
  for (auto& v : r.bad_face->points) pts.push_back({v.x, v.y});
  Laurent tau = f.restrict_support(pts);
  HatDecomposition h = hat_decomposition(tau);
  long x = r.witness_x, y = r.witness_y;
  long s = 0;  // fhat has nonnegative exponents by construction
  for (auto& [e, c] : h.fhat.terms()) {
    long t = padic_mod(c, 7, 1).get_si();
    t = t * mod_pow(x, e.a, 7) % 7;
    t = t * mod_pow(y, e.b, 7) % 7;
    s = (s + t) % 7;
  }
  CHECK(s == 0);
}

TEST_CASE("reduction problems are reported, not silently accepted") {
  Laurent f = laurent_parse("1/3*x^-1 + y + x*y^3");
  NewtonPolytope P(f);
  NondegReport r = is_nondegenerate_mod_p(f, P, 3);
  CHECK(!r.ok);
  REQUIRE(r.error);
}

TEST_CASE("good prime search") {
  Laurent f = laurent_parse("x^-3 + y^-2 + y^4");
  auto p = find_good_prime(f);
  REQUIRE(p);
  CHECK(*p == 5);
  NewtonPolytope P(f);
  CHECK(is_nondegenerate_mod_p(f, P, *p).ok);
}

TEST_CASE("simple zeros certificate") {
  // x + y + 1: every torus zero has gradient (1,1), always simple
  CHECK(simple_zeros_certificate(laurent_parse("x + y + 1"), 7));
  // (x + y)^2 shape: zeros along x = -y are not simple
  CHECK(!simple_zeros_certificate(laurent_parse("x^2 + 2*x*y + y^2"), 7));
  // no torus zeros at all passes vacuously
  CHECK(simple_zeros_certificate(laurent_parse("1"), 5));
}
