#include "doctest.h"
#include "turanlab/errors.hpp"
#include "turanlab/rational.hpp"

using namespace turanlab;

TEST_SUITE_BEGIN("rational");

TEST_CASE("normalisation") {
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(-6, 4) == Rational(-3, 2));
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(5, 1).is_integer());
  CHECK_FALSE(Rational(5, 2).is_integer());
  CHECK_THROWS_AS(Rational(1, 0), TuranError);
}

TEST_CASE("arithmetic") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(2, 3) / Rational(4, 3) == Rational(1, 2));
  CHECK(Rational(7) * Rational(0) == Rational(0));
}

TEST_CASE("ordering") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(3, 2) > Rational(1));
  CHECK(Rational(4, 2) == Rational(2));
}

TEST_CASE("floor rounds toward negative infinity") {
  CHECK(Rational(7, 2).floor() == 3);
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(6, 3).floor() == 2);
  CHECK(Rational(-6, 3).floor() == -2);
}

TEST_CASE("printing") {
  CHECK(Rational(3, 2).str() == "3/2");
  CHECK(Rational(4, 2).str() == "2");
  CHECK(Rational(-3, 2).str() == "-3/2");
  CHECK(Rational(0).str() == "0");
}

TEST_SUITE_END();
