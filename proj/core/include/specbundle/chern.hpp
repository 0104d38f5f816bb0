#pragma once

#include "specbundle/rational.hpp"
#include "specbundle/threefold.hpp"

namespace specbundle {

/// The six intersection numbers of a rank-2 bundle E on (Z, L) that the
/// rank/degree formulas consume. Working with pairings instead of classes
/// keeps the model independent of the Picard group of Z.
struct BundleChern {
  Int c1_cubed;     // c1(E)^3
  Int c1_c2;        // c1(E) . c2(E)
  Int c1sq_lambda;  // c1(E)^2 . lambda
  Int c2_lambda;    // c2(E) . lambda
  Int c1_lambdasq;  // c1(E) . lambda^2
  Int c1_c2z;       // c1(E) . c2(Z)

  static constexpr int rank = 2;

  /// p1(E) . lambda with p1 = c1^2 - 2 c2. Twist invariant.
  Int p1_lambda() const { return c1sq_lambda - 2 * c2_lambda; }

  /// Slope mu(E) = (c1(E) . lambda^2) / rank.
  Rational mu() const { return Rational(c1_lambdasq, 2); }

  bool operator==(const BundleChern&) const = default;
};

/// mu(E) on (Z, L); the threefold only fixes the ambient pairing conventions.
Rational slope(const BundleChern& e, const ValidatedThreefold& z);

/// Chern data of E(m) = E tensor L^m, pushed through the Whitney and
/// twisting identities for rank 2:
///   c1(E(m)) = c1 + 2 m lambda,  c2(E(m)) = c2 + m c1.lambda + m^2 lambda^2.
BundleChern twist(const BundleChern& e, const ValidatedThreefold& z, const Int& m);

struct NormalizationResult {
  Int twist_exponent;      // the unique m below
  BundleChern normalized;  // twist(e, z, m)
  Rational mu_normalized;  // mu(E(m)), lies in [1 - lambda^3, 0)
};

/// Finds the unique m with 1 - lambda^3 <= mu(E) + m lambda^3 < 0. Twisting
/// by L^m shifts the slope by lambda^3, so mu(E(m)) lands in a window of
/// width lambda^3 - 1 inside [-lambda^3, 0); if the shifted slope falls in
/// [-lambda^3, 1 - lambda^3) no valid m exists and DomainError
/// ("NotNormalizable") is thrown. In particular lambda^3 = 1 never normalizes.
NormalizationResult normalize(const BundleChern& e, const ValidatedThreefold& z);

}  // namespace specbundle
