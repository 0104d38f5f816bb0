#pragma once

#include "specbundle/rational.hpp"

#include <optional>
#include <vector>

namespace specbundle {

/// Splitting type on a curve: degrees of the line-bundle summands, weakly
/// decreasing.
using SplittingType = std::vector<Int>;

/// d(W) for a complete family of rational curves whose normal bundle splits
/// as sum O(a_i) with the given degrees. The kernel of the evaluation map of
/// O(a) on P^1 is O(-1)^a, so mu_min of the full kernel is -1 as soon as one
/// a_i > 0; hence the value is always 1 on valid input.
/// Errors: DomainError("NotGloballyGenerated") if some degree < 0,
/// ("TrivialNormalBundle") if all degrees are 0 (evaluation is an
/// isomorphism, d(W) undefined).
Rational d_rational(const std::vector<Int>& normal_degrees);

/// d(W) = (dim|L| - 1)/(dim|L| - 2) for the pencil of elliptic curves cut by
/// |L|. Requires dim_L >= 3 (DomainError "PencilTooSmall").
Rational d_elliptic(const Int& dim_l);

struct KernelBundle {
  Int rank;
  Int degree;
  Rational slope;
};

/// Kernel R of the evaluation map H^0(L) x O_C -> L on an elliptic curve for
/// deg L = n >= 2: R is stable of rank n-1, degree -n, slope -n/(n-1).
/// DomainError("DegreeTooSmall") for n < 2.
KernelBundle kernel_slope(const Int& n);

/// Admissibility test of a restriction slope profile: weakly decreasing
/// (DomainError "NotSorted" otherwise) with every consecutive gap <= dW.
bool gm_gap_ok(const std::vector<Rational>& slope_profile, const Rational& dw);

/// All weakly decreasing integer tuples of the given length summing to
/// total_degree whose value set is a consecutive interval (the dW = 1
/// admissible splitting types on a rational curve), lexicographic ascending.
/// InputError for rank < 1.
std::vector<SplittingType> splitting_types_rational(std::int64_t rank,
                                                    const Int& total_degree);

struct EllipticRestriction {
  SplittingType split;  // the one permitted decomposable type
  /// The restriction may instead be semistable without splitting; callers
  /// must treat that branch as always open.
  bool semistable_alternative_allowed;
};

/// Restriction alternatives for a rank-2 bundle of degree total_degree on an
/// elliptic curve: the balanced split (ceil(d/2), floor(d/2)), or semistable.
EllipticRestriction restriction_types_elliptic(const Int& total_degree);

/// Family descriptor matching the JSON wire shape; dispatches d(W).
struct CurveFamily {
  enum class Kind { rational_curves, elliptic_pencil };

  Kind kind = Kind::rational_curves;
  std::vector<Int> normal_degrees;         // rational_curves only
  Int dim_l = 0;                           // elliptic_pencil only
  std::optional<Rational> mu_max_override; // expert escape hatch, not validated

  /// mu_max_override when present, else d_rational / d_elliptic by kind.
  Rational d_invariant() const;
};

}  // namespace specbundle
