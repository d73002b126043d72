#include "doctest.h"
#include "support.hpp"

#include "torsionlab/io.hpp"

using namespace torsionlab;

TEST_CASE("rationals from JSON") {
  CHECK(rational_from_json(Json("3/6")) == Rational(1, 2));
  CHECK(rational_from_json(Json(-4)) == Rational(-4));
  CHECK(rational_from_json(Json("0.25")) == Rational(1, 4));
  CHECK(rational_from_json(Json("-7")) == Rational(-7));
  CHECK(to_json(Rational(-2, 3)) == Json("-2/3"));
  CHECK(to_json(Rational(5)) == Json("5"));
  CHECK_THROWS_AS(rational_from_json(Json("1/0")), Error);
  CHECK_THROWS_AS(rational_from_json(Json("abc")), Error);
  CHECK_THROWS_AS(rational_from_json(Json::array()), Error);
}

TEST_CASE("matrix round trip") {
  testsupport::RandomQ rq;
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t r = 1 + rq.integer(0, 5), c = 1 + rq.integer(0, 5);
    const MatrixQ m = rq.matrix(r, c, 40, 9);
    CHECK(matrix_from_json(to_json(m)) == m);
    CHECK(matrix_from_json(Json::parse(to_json(m).dump())) == m);
  }
  const Json sq = to_json(MatrixQ::identity(2));
  CHECK(sq.at("dim") == 2);
  CHECK(sq.at("entries") == Json::parse(R"([["1","0"],["0","1"]])"));
}

TEST_CASE("malformed matrices are parse errors") {
  auto kind_of = [](const char* text) {
    try {
      matrix_from_json(Json::parse(text));
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Internal;
  };
  CHECK(kind_of(R"({"dim": 2, "entries": [["1","0"]]})") == ErrorKind::Parse);
  CHECK(kind_of(R"({"dim": 2, "entries": [["1","0"],["0"]]})") == ErrorKind::Parse);
  CHECK(kind_of(R"({"entries": 3})") == ErrorKind::Parse);
  CHECK(kind_of(R"([1, 2])") == ErrorKind::Parse);
}

TEST_CASE("built-in algebras survive a JSON round trip") {
  for (const auto& a : {heisenberg3(), sl2_h(), sl2_y(), n_x_n(), sl2_x_sl2()}) {
    const AlgebraPtr b = algebra_from_json(Json::parse(to_json(*a).dump()));
    CHECK(b->same_structure(*a));
    CHECK(b->name() == a->name());
  }
}

TEST_CASE("algebra loader checks the Jacobi identity") {
  const Json broken = Json::parse(R"({"name": "broken", "dim": 3,
    "brackets": [{"i": 1, "j": 2, "coeffs": {"3": "1"}},
                 {"i": 1, "j": 3, "coeffs": {"1": "1"}},
                 {"i": 2, "j": 3, "coeffs": {"3": "1"}}]})");
  try {
    algebra_from_json(broken);
    FAIL("accepted a table failing Jacobi");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Structure);
  }
  const AlgebraPtr loose = algebra_from_json(broken, false);
  CHECK(loose->dim() == 3);
  CHECK_FALSE(jacobi_check(*loose));

  const Json bad_index = Json::parse(R"({"dim": 3, "brackets": [{"i": 1, "j": 4, "coeffs": {"3": "1"}}]})");
  CHECK_THROWS_AS(algebra_from_json(bad_index), Error);
}

TEST_CASE("resolve_algebra") {
  CHECK(resolve_algebra("heisenberg3")->same_structure(*heisenberg3()));
  CHECK(resolve_algebra("sl2-Y")->same_structure(*sl2_y()));
  try {
    resolve_algebra("so3");
    FAIL("unknown name accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Parse);
  }
  CHECK_THROWS_AS(resolve_algebra("file:/nonexistent/algebra.json"), Error);
}

TEST_CASE("pattern JSON") {
  const PatternSpec p = pattern_from_json(
      Json::parse(R"({"prefix": "eta", "fixed": [{"i": 1, "j": 3, "value": 0}, {"i": 3, "j": 3, "value": "lambda + 1"}]})"), 3);
  CHECK(p.prefix == "eta");
  CHECK(p.pattern.size() == 2);
  CHECK(p.pattern.at({0, 2}).is_zero());
  CHECK(p.pattern.at({2, 2}) == PolyQ::variable("lambda") + PolyQ(Rational(1)));
  CHECK_THROWS_AS(pattern_from_json(Json::parse(R"({"fixed": [{"i": 0, "j": 1, "value": 0}]})"), 3), Error);

  // fixing the third column of a heisenberg3 map to zero leaves 12|3 alone
  const PatternSpec h = pattern_from_json(
      Json::parse(R"({"fixed": [{"i": 1, "j": 3, "value": 0}, {"i": 2, "j": 3, "value": 0}]})"), 3);
  const auto eqs = generate_system(heisenberg3(), h.pattern, h.prefix).nonzero();
  REQUIRE(eqs.size() == 1);
  CHECK(eqs.front().label == "12|3");
}

TEST_CASE("result serialization") {
  const auto s = build_canonical(Family::S, {Rational(2)});
  const ClassificationResult r = classify_n(s.map());
  const Json j = to_json(r);
  CHECK(j.at("family") == "S");
  CHECK(j.at("params") == Json::parse(R"(["2"])"));
  CHECK(j.at("certified") == true);
  CHECK(j.at("conjugator").at("matrix").at("dim") == 3);

  const auto d = build_canonical(Family::D, {Rational(3)});
  const Json e = to_json(equivalent_n(s.map(), d.map()));
  CHECK(e.at("equivalent") == false);
  CHECK(e.at("invariant").get<std::string>().find("xi_3_3") != std::string::npos);

  const Json o = to_json(classify_orbit({Rational(0), Rational(1), Rational(-1)}));
  CHECK(o.contains("q"));
}
