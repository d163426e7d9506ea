#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "igusa/laurent.hpp"

using namespace igusa;

TEST_CASE("parse a plain term sum") {
  Laurent f = laurent_parse("x^-3 + y^2 + y^4");
  REQUIRE(f.size() == 3);
  CHECK(f.terms().at({-3, 0}) == Rat(1));
  CHECK(f.terms().at({0, 2}) == Rat(1));
  CHECK(f.terms().at({0, 4}) == Rat(1));
}

TEST_CASE("parse signs, coefficients, products and rational coefficients") {
  Laurent f = laurent_parse("2*x^2*y^-1 - 7 + 1/3*x*y");
  CHECK(f.terms().at({2, -1}) == Rat(2));
  CHECK(f.terms().at({0, 0}) == Rat(-7));
  CHECK(f.terms().at({1, 1}) == Rat(1, 3));
}

TEST_CASE("like terms merge and zero coefficients are dropped") {
  Laurent f = laurent_parse("x + x - 2*x + y");
  CHECK(f.size() == 1);
  CHECK(f.terms().count({1, 0}) == 0);
}

TEST_CASE("parse rejects malformed input") {
  CHECK_THROWS_AS(laurent_parse(""), std::invalid_argument);
  CHECK_THROWS_AS(laurent_parse("x^"), std::invalid_argument);
  CHECK_THROWS_AS(laurent_parse("z + 1"), std::invalid_argument);
  CHECK_THROWS_AS(laurent_parse("x +"), std::invalid_argument);
}

TEST_CASE("ring operations") {
  Laurent f = laurent_parse("x + y^-1");
  Laurent g = laurent_parse("x - y^-1");
  CHECK((f + g) == laurent_parse("2*x"));
  CHECK((f - g) == laurent_parse("2*y^-1"));
  CHECK((f * g) == laurent_parse("x^2 - y^-2"));
}

TEST_CASE("derivative handles negative exponents") {
  Laurent f = laurent_parse("x^-3 + 5*x^2*y + y^4");
  CHECK(f.derivative(0) == laurent_parse("-3*x^-4 + 10*x*y"));
  CHECK(f.derivative(1) == laurent_parse("5*x^2 + 4*y^3"));
}

TEST_CASE("exact evaluation") {
  Laurent f = laurent_parse("x^-3 + y^2");
  CHECK(f.eval(Rat(1, 2), Rat(3)) == Rat(17));
  CHECK_THROWS(f.eval(Rat(0), Rat(1)));
}

TEST_CASE("shift and support restriction") {
  Laurent f = laurent_parse("x^-1*y + x");
  CHECK(f.shifted(1, 0) == laurent_parse("y + x^2"));
  Laurent r = f.restrict_support({{1, 0}});
  CHECK(r == laurent_parse("x"));
}

TEST_CASE("hat decomposition clears negative exponents minimally") {
  Laurent f = laurent_parse("x^-3 + y^-2 + y^4");
  HatDecomposition h = hat_decomposition(f);
  CHECK(h.d1 == 3);
  CHECK(h.d2 == 2);
  CHECK(h.fhat == laurent_parse("y^2 + x^3 + x^3*y^6"));
  // no clearing needed when exponents are already nonnegative
  HatDecomposition h2 = hat_decomposition(laurent_parse("x + y^2"));
  CHECK(h2.d1 == 0);
  CHECK(h2.d2 == 0);
}

TEST_CASE("hat decomposition round trip: f = x^-d1 y^-d2 fhat") {
  Laurent f = laurent_parse("2*x^-1*y^-3 + x^2 - y");
  HatDecomposition h = hat_decomposition(f);
  CHECK(h.fhat.shifted(-h.d1, -h.d2) == f);
}

TEST_CASE("reduction mod p") {
  Laurent f = laurent_parse("6*x + y + 10*y^2");
  ModpReduction r2 = reduce_mod_p(f, 2);
  CHECK(r2.fbar == laurent_parse("y"));
  CHECK(r2.support_collapsed);
  CHECK(!r2.denominator_hit);

  ModpReduction r7 = reduce_mod_p(f, 7);
  CHECK(!r7.support_collapsed);
  CHECK(r7.fbar == laurent_parse("6*x + y + 3*y^2"));

  ModpReduction r5 = reduce_mod_p(laurent_parse("1/5*x + y"), 5);
  CHECK(r5.denominator_hit);
}
