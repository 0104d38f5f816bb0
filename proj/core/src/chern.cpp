#include "specbundle/chern.hpp"

#include "specbundle/errors.hpp"

namespace specbundle {

Rational slope(const BundleChern& e, const ValidatedThreefold&) { return e.mu(); }

BundleChern twist(const BundleChern& e, const ValidatedThreefold& z, const Int& m) {
  const Int& l3 = z.lambda3();
  const Int& lc2z = z.lambda_c2z();
  const Int m2 = m * m;
  const Int m3 = m2 * m;
  BundleChern t;
  t.c1_cubed = e.c1_cubed + 6 * m * e.c1sq_lambda + 12 * m2 * e.c1_lambdasq + 8 * m3 * l3;
  t.c1sq_lambda = e.c1sq_lambda + 4 * m * e.c1_lambdasq + 4 * m2 * l3;
  t.c1_lambdasq = e.c1_lambdasq + 2 * m * l3;
  t.c2_lambda = e.c2_lambda + m * e.c1_lambdasq + m2 * l3;
  t.c1_c2 = e.c1_c2 + m * (e.c1sq_lambda + 2 * e.c2_lambda) + 3 * m2 * e.c1_lambdasq +
            2 * m3 * l3;
  t.c1_c2z = e.c1_c2z + 2 * m * lc2z;
  return t;
}

NormalizationResult normalize(const BundleChern& e, const ValidatedThreefold& z) {
  const Int& l3 = z.lambda3();
  const Rational mu = e.mu();
  // Largest m with mu + m*lambda^3 < 0, i.e. m = ceil(-mu/lambda^3) - 1.
  const Int m = (-mu / Rational(l3)).ceil() - 1;
  const Rational shifted = mu + Rational(m * l3);
  if (shifted < Rational(1 - l3))
    fail("NotNormalizable",
         "slope " + mu.str() + " misses the window [1 - lambda^3, 0) mod lambda^3");
  return NormalizationResult{m, twist(e, z, m), shifted};
}

}  // namespace specbundle
