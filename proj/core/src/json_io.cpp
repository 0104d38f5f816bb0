#include "specbundle/json_io.hpp"

#include "specbundle/errors.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace specbundle {

namespace {

const Json& require_field(const Json& j, const char* key) {
  if (!j.is_object())
    throw InputError(std::string("expected an object with field '") + key + "'");
  auto it = j.find(key);
  if (it == j.end())
    throw InputError(std::string("missing required field '") + key + "'");
  return *it;
}

std::int64_t parse_index(const std::string& key) {
  try {
    std::size_t used = 0;
    std::int64_t v = std::stoll(key, &used);
    if (used != key.size()) throw std::invalid_argument(key);
    return v;
  } catch (const std::exception&) {
    throw InputError("spectrum index '" + key + "' is not an integer");
  }
}

}  // namespace

Int parse_int(const Json& v) {
  if (v.is_number_integer()) return Int(v.get<std::int64_t>());
  if (v.is_number_unsigned()) return Int(v.get<std::uint64_t>());
  if (v.is_string()) {
    try {
      Rational r = Rational::parse(v.get<std::string>());
      if (!r.is_integer()) throw std::invalid_argument("fractional");
      return r.num();
    } catch (const std::invalid_argument&) {
      throw InputError("'" + v.get<std::string>() + "' is not an integer");
    }
  }
  throw InputError("expected an integer, got " + v.dump());
}

Json int_json(const Int& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max())
    return Json(v.convert_to<std::int64_t>());
  return Json(v.str());
}

Rational parse_rational(const Json& v) {
  if (v.is_number_integer() || v.is_number_unsigned()) return Rational(parse_int(v));
  if (v.is_string()) {
    try {
      return Rational::parse(v.get<std::string>());
    } catch (const std::invalid_argument&) {
      throw InputError("'" + v.get<std::string>() + "' is not a rational p/q");
    }
  }
  throw InputError("expected a rational, got " + v.dump());
}

Json rational_json(const Rational& x) { return Json(x.str()); }

ThreefoldInvariants threefold_from_json(const Json& j) {
  ThreefoldInvariants inv;
  inv.lambda3 = parse_int(require_field(j, "lambda3"));
  inv.lambda_c2z = parse_int(require_field(j, "lambda_c2Z"));
  inv.dim_l = parse_int(require_field(j, "dim_L"));
  if (auto it = j.find("name"); it != j.end() && it->is_string())
    inv.name = it->get<std::string>();
  return inv;
}

Json threefold_to_json(const ThreefoldInvariants& inv) {
  Json j;
  j["lambda3"] = int_json(inv.lambda3);
  j["lambda_c2Z"] = int_json(inv.lambda_c2z);
  j["dim_L"] = int_json(inv.dim_l);
  if (!inv.name.empty()) j["name"] = inv.name;
  return j;
}

BundleChern chern_from_json(const Json& j) {
  BundleChern e;
  e.c1_cubed = parse_int(require_field(j, "c1_cubed"));
  e.c1_c2 = parse_int(require_field(j, "c1_c2"));
  e.c1sq_lambda = parse_int(require_field(j, "c1sq_lambda"));
  e.c2_lambda = parse_int(require_field(j, "c2_lambda"));
  e.c1_lambdasq = parse_int(require_field(j, "c1_lambdasq"));
  e.c1_c2z = parse_int(require_field(j, "c1_c2Z"));
  return e;
}

Json chern_to_json(const BundleChern& e) {
  Json j;
  j["c1_cubed"] = int_json(e.c1_cubed);
  j["c1_c2"] = int_json(e.c1_c2);
  j["c1sq_lambda"] = int_json(e.c1sq_lambda);
  j["c2_lambda"] = int_json(e.c2_lambda);
  j["c1_lambdasq"] = int_json(e.c1_lambdasq);
  j["c1_c2Z"] = int_json(e.c1_c2z);
  return j;
}

Spectrum spectrum_from_json(const Json& j) {
  const Json* map = &j;
  if (j.is_object())
    if (auto it = j.find("multiplicities"); it != j.end()) map = &*it;
  if (!map->is_object())
    throw InputError("spectrum must be a JSON object of index -> multiplicity");
  std::map<std::int64_t, std::int64_t> m;
  for (const auto& [key, value] : map->items())
    m[parse_index(key)] = to_int64(parse_int(value));
  return Spectrum(std::move(m));
}

Json spectrum_to_json(const Spectrum& s) {
  Json mult = Json::object();
  for (const auto& [j, m] : s.descending()) mult[std::to_string(j)] = m;
  Json out;
  out["multiplicities"] = std::move(mult);
  out["a"] = s.a() ? Json(*s.a()) : Json(nullptr);
  out["b"] = s.b() ? Json(*s.b()) : Json(nullptr);
  out["r"] = s.rank();
  out["d"] = s.degree();
  return out;
}

RankDegreePoint point_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2)
    throw InputError("point must be a [rank, degree] pair");
  return RankDegreePoint{parse_int(j[0]), parse_int(j[1])};
}

std::vector<RankDegreePoint> points_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("expected an array of [rank, degree] pairs");
  std::vector<RankDegreePoint> out;
  out.reserve(j.size());
  for (const auto& entry : j) out.push_back(point_from_json(entry));
  return out;
}

Json points_to_json(const std::vector<RankDegreePoint>& points) {
  Json j = Json::array();
  for (const auto& p : points) j.push_back(Json::array({int_json(p.rank), int_json(p.degree)}));
  return j;
}

HNPolygon polygon_from_json(const Json& j) {
  const Json* verts = &j;
  if (j.is_object()) verts = &require_field(j, "vertices");
  return HNPolygon::from_vertices(points_from_json(*verts));
}

Json polygon_to_json(const HNPolygon& p) {
  Json j;
  j["vertices"] = points_to_json(p.vertices());
  return j;
}

CurveFamily family_from_json(const Json& j) {
  const Json& kind = require_field(j, "kind");
  if (!kind.is_string()) throw InputError("family 'kind' must be a string");
  CurveFamily f;
  const std::string k = kind.get<std::string>();
  if (k == "rational") {
    f.kind = CurveFamily::Kind::rational_curves;
    const Json& degrees = require_field(j, "normal_degrees");
    if (!degrees.is_array())
      throw InputError("'normal_degrees' must be an array of integers");
    for (const auto& d : degrees) f.normal_degrees.push_back(parse_int(d));
  } else if (k == "elliptic_pencil") {
    f.kind = CurveFamily::Kind::elliptic_pencil;
    f.dim_l = parse_int(require_field(j, "dim_L"));
  } else {
    throw InputError("unknown family kind '" + k +
                     "' (expected 'rational' or 'elliptic_pencil')");
  }
  if (auto it = j.find("mu_max"); it != j.end())
    f.mu_max_override = parse_rational(*it);
  return f;
}

Json family_to_json(const CurveFamily& f) {
  Json j;
  if (f.kind == CurveFamily::Kind::rational_curves) {
    j["kind"] = "rational";
    Json degrees = Json::array();
    for (const Int& d : f.normal_degrees) degrees.push_back(int_json(d));
    j["normal_degrees"] = std::move(degrees);
  } else {
    j["kind"] = "elliptic_pencil";
    j["dim_L"] = int_json(f.dim_l);
  }
  if (f.mu_max_override) j["mu_max"] = rational_json(*f.mu_max_override);
  return j;
}

}  // namespace specbundle
