#pragma once

#include "specbundle/chern.hpp"
#include "specbundle/rational.hpp"
#include "specbundle/threefold.hpp"

namespace specbundle {

/// Scalar Todd data of Z in the basis the pairings use:
///   Td1 = td1_lambda * lambda
///   Td2 = td2_lambdasq * lambda^2 + c2(Z) / 12
///   Td3 = chi(O_Z) = 1, equivalently lambda.c2(Z) / 12.
/// On these threefolds td1_lambda = 1 and td2_lambdasq = 1/3 always; they are
/// exposed so callers can assemble pairings themselves.
struct ToddComponents {
  Rational td1_lambda;
  Rational td2_lambdasq;
  Rational td3;
};

ToddComponents todd_components(const ValidatedThreefold& z);

/// c1(E) . Td2(Z) = c1.lambda^2 / 3 + c1.c2(Z) / 12.
Rational c1_pair_td2(const BundleChern& e);

/// chi(E) by Hirzebruch-Riemann-Roch on the threefold:
///   chi(E) = (c1^3 - 3 c1.c2) / 6 + p1.lambda / 2 + c1.lambda^2 / 3
///            + c1.c2(Z) / 12 + 2.
Rational euler_char_threefold(const BundleChern& e, const ValidatedThreefold& z);

/// Same value as an integer; DomainError("NonIntegralChi") when the data is
/// not the Chern data of any actual bundle.
Int euler_char_integral(const BundleChern& e, const ValidatedThreefold& z);

/// chi(E|_S) for S a generic member of |L| (a surface with K_S = -lambda|_S):
///   chi(E|_S) = -c2.lambda + c1^2.lambda / 2 + c1.lambda^2 / 2 + 2.
Rational euler_char_surface(const BundleChern& e);

/// Spectrum length r = -p1.lambda/2 - mu - 2 = h1(E|_S) for normalized
/// semistable E. DomainError("NonIntegralRank") or ("NegativeRank") when the
/// data cannot come from such a bundle.
Int spectrum_rank(const BundleChern& e, const ValidatedThreefold& z);

/// Spectrum degree d = (3 c1.c2 - c1^3)/6 - c1.c2(Z)/12 + mu/3. Also equal to
/// -chi(E) - r; both routes are computed and cross-checked, a mismatch throws
/// DomainError("RouteMismatch"). Non-integral output throws
/// ("NonIntegralDegree"). Valid for any r, so it works as a diagnostic even
/// when spectrum_rank would reject.
Int spectrum_degree(const BundleChern& e, const ValidatedThreefold& z);

struct SpectrumInvariants {
  Int r;
  Int d;
  Int chi_e;
  Int chi_e_s;
};

/// Bundles rank, degree and the two Euler characteristics in one call.
SpectrumInvariants spectrum_invariants(const BundleChern& e, const ValidatedThreefold& z);

}  // namespace specbundle
