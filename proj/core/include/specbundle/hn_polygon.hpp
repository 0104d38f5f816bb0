#pragma once

#include "specbundle/rational.hpp"

#include <vector>

namespace specbundle {

/// A (rank, degree) pair of a subsheaf; rank >= 0, degree any integer.
struct RankDegreePoint {
  Int rank;
  Int degree;

  bool operator==(const RankDegreePoint&) const = default;
};

/// Upper boundary of the convex hull of an evidence set in the (rank, degree)
/// plane: vertices strictly increasing in rank from (0, 0) to the total
/// point, consecutive edge slopes strictly decreasing. A single vertex
/// (total = (0, 0)) and a single edge are both legal.
class HNPolygon {
public:
  /// Validates the invariants above; throws InputError when they fail.
  static HNPolygon from_vertices(std::vector<RankDegreePoint> vertices);

  const std::vector<RankDegreePoint>& vertices() const noexcept { return v_; }
  const RankDegreePoint& total() const noexcept { return v_.back(); }

  /// Piecewise linear value at a rank abscissa in [0, total rank]; exact.
  /// Throws InputError outside that range.
  Rational value_at(const Rational& rank_abscissa) const;

  bool operator==(const HNPolygon&) const = default;

private:
  HNPolygon() = default;
  std::vector<RankDegreePoint> v_;
};

/// Monotone-chain upper hull of the evidence points together with the
/// implicit endpoints (0, 0) and total. Per rank only the largest degree
/// matters; collinear interior points are absorbed into their edge.
/// Errors: InputError for negative-rank points, DomainError("RankOverflow")
/// for points beyond the total rank, DomainError("EndpointDominated") when a
/// point at rank 0 exceeds degree 0 or a point at full rank exceeds the total
/// degree (then no polygon with the required endpoints exists).
HNPolygon hnp_from_points(const std::vector<RankDegreePoint>& points,
                          const RankDegreePoint& total);

/// Edge slopes, steepest first; strictly decreasing by construction.
std::vector<Rational> slopes(const HNPolygon& p);

/// Pointwise comparison p >= q over the shared rank range. Both polygons
/// must run between the same endpoints (DomainError "EndpointMismatch");
/// the comparison is decided at the union of the two vertex abscissae.
bool polygon_geq(const HNPolygon& p, const HNPolygon& q);

/// True iff no evidence point lies strictly above the segment from (0, 0) to
/// total, i.e. the polygon the evidence generates is the single edge.
bool is_semistable_profile(const std::vector<RankDegreePoint>& points,
                           const RankDegreePoint& total);

}  // namespace specbundle
