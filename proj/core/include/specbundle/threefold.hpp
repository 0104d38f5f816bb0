#pragma once

#include "specbundle/rational.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace specbundle {

/// Intersection data of a polarized threefold (Z, L) with -K_Z = 2*lambda,
/// lambda = c1(L). Only three numbers enter any formula downstream.
struct ThreefoldInvariants {
  Int lambda3;       // lambda^3
  Int lambda_c2z;    // lambda . c2(Z)
  Int dim_l;         // dim |L|
  std::string name;  // optional identifier, empty for ad hoc data

  bool operator==(const ThreefoldInvariants& o) const {
    return lambda3 == o.lambda3 && lambda_c2z == o.lambda_c2z && dim_l == o.dim_l;
  }
};

/// Proof token: instances exist only for data that passed validate_threefold.
/// Downstream formulas take this type, so unchecked invariants cannot reach
/// them by construction.
class ValidatedThreefold {
public:
  const ThreefoldInvariants& invariants() const noexcept { return inv_; }
  const Int& lambda3() const noexcept { return inv_.lambda3; }
  const Int& lambda_c2z() const noexcept { return inv_.lambda_c2z; }
  const Int& dim_l() const noexcept { return inv_.dim_l; }

private:
  friend ValidatedThreefold validate_threefold(const ThreefoldInvariants& inv);
  explicit ValidatedThreefold(ThreefoldInvariants inv) : inv_(std::move(inv)) {}

  ThreefoldInvariants inv_;
};

/// Checks the constraints every admissible (Z, L) satisfies:
///   lambda^3 >= 1           (NonPositiveDegree)
///   lambda . c2(Z) == 12    (ToddViolation; chi(O_Z) = 1 forces this)
///   dim |L| >= 3            (PencilTooSmall; need pencils in general position)
ValidatedThreefold validate_threefold(const ThreefoldInvariants& inv);

/// Slope of L restricted to the base curve of a generic pencil in |L|,
/// i.e. deg(L|_{lambda^2}) = lambda^3 as a rational.
Rational mu_l(const ValidatedThreefold& z);

/// Names of the built-in examples, in catalog order.
std::vector<std::string> catalog_names();

/// Looks up a built-in polarized threefold. Throws DomainError("UnknownEntry")
/// for names not in the catalog.
ValidatedThreefold catalog_lookup(std::string_view name);

}  // namespace specbundle
