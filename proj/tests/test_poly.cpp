#include "doctest.h"

#include "torsionlab/poly.hpp"

using namespace torsionlab;

TEST_CASE("parse and print") {
  const PolyQ p = parse_poly("xi_3_3*(xi_2_2 + xi_1_1) - xi_2_2*xi_1_1 + xi_2_1*xi_1_2 + 1");
  CHECK(p.total_degree() == 2);
  CHECK(p.to_string() == "-xi_1_1*xi_2_2 + xi_1_1*xi_3_3 + xi_1_2*xi_2_1 + xi_2_2*xi_3_3 + 1");
  CHECK(parse_poly("(xi_2_3)^2").to_string() == "(xi_2_3)^2");
  CHECK(parse_poly("2 xi_1_1 xi_2_2").to_string() == "2*xi_1_1*xi_2_2");
  CHECK(parse_poly("x/2 - 3/4").to_string() == "1/2*x - 3/4");
  CHECK(parse_poly("(xi_2_3)^2").to_latex() == "(\\xi^{2}_{3})^{2}");
  CHECK(latex_name("eta_1_2") == "\\eta^{1}_{2}");
  CHECK(latex_name("lambda") == "\\lambda");
  CHECK_THROWS_AS(parse_poly("x +"), Error);
  CHECK_THROWS_AS(parse_poly("x / y"), Error);
}

TEST_CASE("arithmetic") {
  const PolyQ x = PolyQ::variable("x"), y = PolyQ::variable("y");
  CHECK((x + y) * (x - y) == x * x - y * y);
  CHECK((x + 1).pow(3) == x * x * x + 3 * x * x + 3 * x + 1);
  CHECK((x - x).is_zero());
  CHECK(PolyQ(0).is_zero());
  CHECK((x * y).substitute("y", x + 1) == x * x + x);
  CHECK((x * y + 2).evaluate({{"x", 3}, {"y", Rational(1, 3)}}) == 3);
  CHECK_THROWS_AS((x * y).evaluate({{"x", 1}}), Error);
}

TEST_CASE("ratio and normalization") {
  const PolyQ p = parse_poly("xi_1_3*xi_2_3 - 1");
  CHECK(p.ratio_to(-2 * p) == Rational(-1, 2));
  CHECK_FALSE(p.ratio_to(p + 1).has_value());
  CHECK_FALSE(p.ratio_to(PolyQ(0)).has_value());
  CHECK((-p).sign_normalized() == p);
  CHECK(PolyQ(0).ratio_to(PolyQ(0)).has_value());
}

TEST_CASE("definite sums of squares") {
  CHECK(parse_poly("(a)^2 + 1").is_definite_sum_of_squares());
  CHECK(parse_poly("-2*(a)^2 - 2*(b)^2 - 4").is_definite_sum_of_squares());
  CHECK_FALSE(parse_poly("(a)^2 - 1").is_definite_sum_of_squares());
  CHECK_FALSE(parse_poly("(a)^2 + a*b + 1").is_definite_sum_of_squares());
  CHECK_FALSE(parse_poly("(a)^2").is_definite_sum_of_squares());
  CHECK(PolyQ(2).is_definite_sum_of_squares());
}

TEST_CASE("grid variables order row-major") {
  VarLess less;
  CHECK(less("xi_1_2", "xi_2_1"));
  CHECK(less("xi_2_9", "xi_10_1"));
  CHECK(less("xi_3_3", "lambda"));
  const PolyQ p = parse_poly("xi_1_2 + xi_1_1");
  CHECK(p.to_string() == "xi_1_1 + xi_1_2");
}
