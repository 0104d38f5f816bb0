#include "specbundle/json_io.hpp"

#include "specbundle/errors.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <string>

using namespace specbundle;

TEST_CASE("integers cross the wire as numbers or decimal strings") {
  CHECK(parse_int(Json(12)) == 12);
  CHECK(parse_int(Json(-3)) == -3);
  CHECK(parse_int(Json("12")) == 12);
  CHECK(parse_int(Json("123456789012345678901234567890")) ==
        Int("123456789012345678901234567890"));
  CHECK_THROWS_AS(parse_int(Json(1.5)), InputError);
  CHECK_THROWS_AS(parse_int(Json("3/2")), InputError);
  CHECK_THROWS_AS(parse_int(Json("x")), InputError);
  CHECK_THROWS_AS(parse_int(Json::array()), InputError);

  CHECK(int_json(Int(7)).is_number_integer());
  CHECK(int_json(Int("123456789012345678901234567890")).is_string());
  CHECK(parse_int(int_json(Int("123456789012345678901234567890"))) ==
        Int("123456789012345678901234567890"));
}

TEST_CASE("rationals cross the wire as strings") {
  CHECK(parse_rational(Json("-3/4")) == Rational(Int(-3), Int(4)));
  CHECK(parse_rational(Json(5)) == Rational(5));
  CHECK(rational_json(Rational(Int(-3), Int(4))) == Json("-3/4"));
  CHECK(rational_json(Rational(1)) == Json("1"));
  CHECK_THROWS_AS(parse_rational(Json(0.25)), InputError);
  CHECK_THROWS_AS(parse_rational(Json("1.5")), InputError);
}

TEST_CASE("threefold records use the documented keys") {
  Json j = {{"lambda3", 8}, {"lambda_c2Z", 12}, {"dim_L", 9}, {"name", "p3-o2"}};
  ThreefoldInvariants inv = threefold_from_json(j);
  CHECK(inv.lambda3 == 8);
  CHECK(inv.lambda_c2z == 12);
  CHECK(inv.dim_l == 9);
  CHECK(inv.name == "p3-o2");

  Json out = threefold_to_json(inv);
  CHECK(out["lambda3"] == 8);
  CHECK(out["lambda_c2Z"] == 12);
  CHECK(out["dim_L"] == 9);
  CHECK(threefold_from_json(out) == inv);

  CHECK_THROWS_AS(threefold_from_json(Json{{"lambda3", 8}}), InputError);
  CHECK_THROWS_AS(threefold_from_json(Json(3)), InputError);
}

TEST_CASE("chern records round-trip with exact keys") {
  BundleChern e = testutil::null_correlation_twist();
  Json j = chern_to_json(e);
  CHECK(j["c1_cubed"] == -8);
  CHECK(j["c1_c2"] == -4);
  CHECK(j["c1sq_lambda"] == 8);
  CHECK(j["c2_lambda"] == 4);
  CHECK(j["c1_lambdasq"] == -8);
  CHECK(j["c1_c2Z"] == -12);
  CHECK(chern_from_json(j) == e);
  CHECK_THROWS_AS(chern_from_json(Json{{"c1_cubed", 1}}), InputError);
}

TEST_CASE("spectra serialize with descending support and derived fields") {
  Spectrum s({{0, 1}, {-1, 1}});
  Json j = spectrum_to_json(s);
  CHECK(j["a"] == -1);
  CHECK(j["b"] == 0);
  CHECK(j["r"] == 2);
  CHECK(j["d"] == -1);
  std::string dumped = j.dump();
  CHECK(dumped.find("\"0\"") < dumped.find("\"-1\""));

  CHECK(spectrum_from_json(j) == s);
  CHECK(spectrum_from_json(Json{{"0", 1}, {"-1", 1}}) == s);

  Json empty = spectrum_to_json(Spectrum{});
  CHECK(empty["a"].is_null());
  CHECK(empty["b"].is_null());
  CHECK(empty["r"] == 0);
  CHECK(spectrum_from_json(empty).empty());

  CHECK_THROWS_AS(spectrum_from_json(Json{{"x", 1}}), InputError);
  CHECK_THROWS_AS(spectrum_from_json(Json{{"0", 0}}), InputError);
  CHECK_THROWS_AS(spectrum_from_json(Json(4)), InputError);
}

TEST_CASE("point lists and polygons") {
  Json pts = Json::parse("[[0,0],[1,2],[2,2]]");
  auto points = points_from_json(pts);
  REQUIRE(points.size() == 3);
  CHECK(points[1] == RankDegreePoint{1, 2});
  CHECK(points_to_json(points) == pts);
  CHECK_THROWS_AS(points_from_json(Json::parse("[[1]]")), InputError);
  CHECK_THROWS_AS(points_from_json(Json(0)), InputError);

  HNPolygon p = polygon_from_json(pts);
  CHECK(p.vertices() == points);
  CHECK(polygon_from_json(polygon_to_json(p)) == p);
  CHECK(polygon_to_json(p)["vertices"] == pts);
  // Vertex lists must already satisfy the polygon invariants.
  CHECK_THROWS_AS(polygon_from_json(Json::parse("[[0,0],[1,1],[2,2]]")), InputError);
}

TEST_CASE("family descriptors") {
  CurveFamily lines = family_from_json(
      Json{{"kind", "rational"}, {"normal_degrees", Json::array({1, 1})}});
  CHECK(lines.kind == CurveFamily::Kind::rational_curves);
  CHECK(lines.normal_degrees == std::vector<Int>{1, 1});
  CHECK(!lines.mu_max_override.has_value());
  CHECK(family_from_json(family_to_json(lines)).d_invariant() == Rational(1));

  CurveFamily pencil =
      family_from_json(Json{{"kind", "elliptic_pencil"}, {"dim_L", 9}});
  CHECK(pencil.dim_l == 9);
  CHECK(pencil.d_invariant() == Rational(Int(8), Int(7)));

  CurveFamily expert = family_from_json(
      Json{{"kind", "elliptic_pencil"}, {"dim_L", 9}, {"mu_max", "7/3"}});
  CHECK(expert.mu_max_override == Rational(Int(7), Int(3)));
  CHECK(family_to_json(expert)["mu_max"] == "7/3");

  CHECK_THROWS_AS(family_from_json(Json{{"kind", "nodal"}}), InputError);
  CHECK_THROWS_AS(family_from_json(Json{{"kind", "rational"}}), InputError);
  CHECK_THROWS_AS(family_from_json(Json{{"kind", "elliptic_pencil"}}), InputError);
}
