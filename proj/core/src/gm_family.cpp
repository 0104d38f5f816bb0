#include "specbundle/gm_family.hpp"

#include "specbundle/errors.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace specbundle {

Rational d_rational(const std::vector<Int>& normal_degrees) {
  bool some_positive = false;
  for (const Int& a : normal_degrees) {
    if (a < 0)
      fail("NotGloballyGenerated",
           "normal bundle summand of degree " + a.str() + " on a rational curve");
    if (a > 0) some_positive = true;
  }
  if (!some_positive)
    fail("TrivialNormalBundle",
         "evaluation is an isomorphism for a trivial normal bundle, d(W) undefined");
  return Rational(1);
}

Rational d_elliptic(const Int& dim_l) {
  if (dim_l < 3)
    fail("PencilTooSmall", "dim |L| must be >= 3, got " + dim_l.str());
  return Rational(dim_l - 1, dim_l - 2);
}

KernelBundle kernel_slope(const Int& n) {
  if (n < 2) fail("DegreeTooSmall", "kernel bundle needs deg L >= 2, got " + n.str());
  return KernelBundle{n - 1, -n, Rational(-n, n - 1)};
}

bool gm_gap_ok(const std::vector<Rational>& slope_profile, const Rational& dw) {
  for (std::size_t i = 0; i + 1 < slope_profile.size(); ++i) {
    if (slope_profile[i] < slope_profile[i + 1])
      fail("NotSorted", "slope profile must be weakly decreasing");
    if (slope_profile[i] - slope_profile[i + 1] > dw) return false;
  }
  return true;
}

std::vector<SplittingType> splitting_types_rational(std::int64_t rank,
                                                    const Int& total_degree) {
  if (rank < 1) throw InputError("splitting type needs rank >= 1");
  // Any admissible tuple lives in a window of width rank around the mean.
  const Int lo = floor_div(total_degree, rank) - rank;
  const Int hi = ceil_div(total_degree, rank) + rank;

  std::vector<SplittingType> out;
  SplittingType cur(static_cast<std::size_t>(rank));
  std::function<void(std::int64_t, Int, Int)> walk = [&](std::int64_t pos,
                                                         Int prev_max, Int left) {
    const Int slots = rank - pos;
    if (slots == 0) {
      if (left == 0) out.push_back(cur);
      return;
    }
    // Entries are weakly decreasing, so the remaining sum is boxed by
    // slots * lo and slots * min(prev_max, hi).
    Int top = std::min(prev_max, hi);
    if (left < slots * lo || left > slots * top) return;
    for (Int v = top; v >= lo; --v) {
      cur[static_cast<std::size_t>(pos)] = v;
      walk(pos + 1, v, left - v);
    }
  };
  walk(0, hi, total_degree);

  // Keep tuples whose value set is one consecutive run: max - min stays
  // within the number of distinct values, equivalently adjacent gaps <= 1.
  std::erase_if(out, [](const SplittingType& t) {
    for (std::size_t i = 0; i + 1 < t.size(); ++i)
      if (t[i] - t[i + 1] > 1) return true;
    return false;
  });
  std::sort(out.begin(), out.end());
  return out;
}

EllipticRestriction restriction_types_elliptic(const Int& total_degree) {
  return EllipticRestriction{
      SplittingType{ceil_div(total_degree, 2), floor_div(total_degree, 2)}, true};
}

Rational CurveFamily::d_invariant() const {
  if (mu_max_override) return *mu_max_override;
  return kind == Kind::rational_curves ? d_rational(normal_degrees)
                                       : d_elliptic(dim_l);
}

}  // namespace specbundle
