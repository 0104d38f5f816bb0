#pragma once

#include "specbundle/chern.hpp"
#include "specbundle/gm_family.hpp"
#include "specbundle/hn_polygon.hpp"
#include "specbundle/rational.hpp"
#include "specbundle/spectrum.hpp"
#include "specbundle/threefold.hpp"

#include <nlohmann/json.hpp>

#include <vector>

namespace specbundle {

/// Order-preserving JSON everywhere so serialized output is byte-stable.
using Json = nlohmann::ordered_json;

/// Integer from a JSON number or decimal string. Floats and anything
/// non-numeric raise InputError; strings cover values beyond 64 bits.
Int parse_int(const Json& v);

/// JSON number when the value fits in 64 bits, decimal string otherwise.
Json int_json(const Int& v);

/// Rational from a JSON integer or a "p/q" / "p" string.
Rational parse_rational(const Json& v);

/// Rationals always serialize as strings, "p/q" or bare "p".
Json rational_json(const Rational& x);

ThreefoldInvariants threefold_from_json(const Json& j);
Json threefold_to_json(const ThreefoldInvariants& inv);

BundleChern chern_from_json(const Json& j);
Json chern_to_json(const BundleChern& e);

/// Accepts {"multiplicities": {"j": m_j, ...}, ...} or a bare map of the
/// same shape. Keys must be integers, multiplicities positive.
Spectrum spectrum_from_json(const Json& j);

/// {"multiplicities": {...}} with indices descending, plus derived
/// "a", "b" (null when empty), "r", "d".
Json spectrum_to_json(const Spectrum& s);

/// Array of [rank, degree] pairs.
std::vector<RankDegreePoint> points_from_json(const Json& j);
Json points_to_json(const std::vector<RankDegreePoint>& points);
RankDegreePoint point_from_json(const Json& j);

/// Accepts {"vertices": [[r, d], ...]} or a bare vertex array; the vertex
/// list must already satisfy the polygon invariants.
HNPolygon polygon_from_json(const Json& j);
Json polygon_to_json(const HNPolygon& p);

/// {"kind": "rational", "normal_degrees": [...]} or
/// {"kind": "elliptic_pencil", "dim_L": n}, optional "mu_max" override.
CurveFamily family_from_json(const Json& j);
Json family_to_json(const CurveFamily& f);

}  // namespace specbundle
