#include "specbundle/hn_polygon.hpp"

#include "specbundle/errors.hpp"

#include <map>
#include <set>
#include <utility>

namespace specbundle {

HNPolygon HNPolygon::from_vertices(std::vector<RankDegreePoint> vertices) {
  if (vertices.empty()) throw InputError("polygon needs at least one vertex");
  if (!(vertices.front() == RankDegreePoint{0, 0}))
    throw InputError("polygon must start at (0, 0)");
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i)
    if (vertices[i + 1].rank <= vertices[i].rank)
      throw InputError("polygon vertex ranks must increase strictly");
  for (std::size_t i = 0; i + 2 < vertices.size(); ++i) {
    // slope(v[i] -> v[i+1]) > slope(v[i+1] -> v[i+2]), cross multiplied.
    const auto& o = vertices[i];
    const auto& a = vertices[i + 1];
    const auto& b = vertices[i + 2];
    if ((a.degree - o.degree) * (b.rank - a.rank) <=
        (b.degree - a.degree) * (a.rank - o.rank))
      throw InputError("polygon edge slopes must decrease strictly");
  }
  HNPolygon p;
  p.v_ = std::move(vertices);
  return p;
}

Rational HNPolygon::value_at(const Rational& rank_abscissa) const {
  if (rank_abscissa < 0 || rank_abscissa > Rational(total().rank))
    throw InputError("rank abscissa " + rank_abscissa.str() +
                     " outside [0, total rank]");
  for (std::size_t i = 0; i + 1 < v_.size(); ++i) {
    if (rank_abscissa <= Rational(v_[i + 1].rank)) {
      const auto& a = v_[i];
      const auto& b = v_[i + 1];
      return Rational(a.degree) +
             (rank_abscissa - Rational(a.rank)) *
                 Rational(b.degree - a.degree, b.rank - a.rank);
    }
  }
  return Rational(v_.back().degree);  // single-vertex polygon, abscissa 0
}

HNPolygon hnp_from_points(const std::vector<RankDegreePoint>& points,
                          const RankDegreePoint& total) {
  if (total.rank < 0) throw InputError("total rank must be >= 0");
  if (total.rank == 0 && total.degree != 0)
    throw InputError("total of rank 0 must be (0, 0)");

  // Per rank only the highest degree can be a vertex.
  std::map<Int, Int> best;
  for (const auto& p : points) {
    if (p.rank < 0) throw InputError("evidence point with negative rank");
    if (p.rank > total.rank)
      fail("RankOverflow", "evidence point of rank " + p.rank.str() +
                               " exceeds total rank " + total.rank.str());
    auto [it, inserted] = best.emplace(p.rank, p.degree);
    if (!inserted && p.degree > it->second) it->second = p.degree;
  }
  if (auto it = best.find(0); it != best.end() && it->second > 0)
    fail("EndpointDominated", "rank-0 evidence above the origin");
  if (auto it = best.find(total.rank); it != best.end() && it->second > total.degree)
    fail("EndpointDominated", "full-rank evidence above the total point");
  best[0] = 0;
  best[total.rank] = total.degree;

  // Monotone chain, ranks ascending; pop while the middle point sits on or
  // below the chord of its neighbours so collinear points merge into edges.
  std::vector<RankDegreePoint> hull;
  for (const auto& [r, d] : best) {
    RankDegreePoint p{r, d};
    while (hull.size() >= 2) {
      const auto& o = hull[hull.size() - 2];
      const auto& a = hull[hull.size() - 1];
      Int cross = (a.rank - o.rank) * (p.degree - o.degree) -
                  (a.degree - o.degree) * (p.rank - o.rank);
      if (cross >= 0) hull.pop_back();
      else break;
    }
    hull.push_back(std::move(p));
  }
  return HNPolygon::from_vertices(std::move(hull));
}

std::vector<Rational> slopes(const HNPolygon& p) {
  const auto& v = p.vertices();
  std::vector<Rational> out;
  out.reserve(v.size() > 0 ? v.size() - 1 : 0);
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    out.emplace_back(v[i + 1].degree - v[i].degree, v[i + 1].rank - v[i].rank);
  return out;
}

bool polygon_geq(const HNPolygon& p, const HNPolygon& q) {
  if (!(p.total() == q.total()))
    fail("EndpointMismatch", "polygons end at different total points");
  // Both sides are linear between consecutive abscissae of the union grid,
  // so comparing at the grid points decides the whole range.
  std::set<Int> xs;
  for (const auto& v : p.vertices()) xs.insert(v.rank);
  for (const auto& v : q.vertices()) xs.insert(v.rank);
  for (const Int& x : xs)
    if (p.value_at(Rational(x)) < q.value_at(Rational(x))) return false;
  return true;
}

bool is_semistable_profile(const std::vector<RankDegreePoint>& points,
                           const RankDegreePoint& total) {
  if (total.rank < 0) throw InputError("total rank must be >= 0");
  if (total.rank == 0 && total.degree != 0)
    throw InputError("total of rank 0 must be (0, 0)");
  for (const auto& p : points) {
    if (p.rank < 0) throw InputError("evidence point with negative rank");
    if (p.rank > total.rank)
      fail("RankOverflow", "evidence point of rank " + p.rank.str() +
                               " exceeds total rank " + total.rank.str());
    const bool above = total.rank == 0
                           ? p.degree > 0
                           : p.degree * total.rank > total.degree * p.rank;
    if (above) return false;
  }
  return true;
}

}  // namespace specbundle
