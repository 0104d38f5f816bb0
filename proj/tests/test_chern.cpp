#include "specbundle/chern.hpp"

#include "specbundle/errors.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <random>

using namespace specbundle;
using testutil::code_of;

namespace {

BundleChern random_chern(std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-40, 40);
  return BundleChern{coeff(rng), coeff(rng), coeff(rng),
                     coeff(rng), coeff(rng), coeff(rng)};
}

}  // namespace

TEST_CASE("slope halves the lambda^2 pairing") {
  auto z = testutil::p3_o2();
  CHECK(slope(BundleChern{0, 0, 0, 0, -8, 0}, z) == Rational(-4));
  CHECK(slope(BundleChern{0, 0, 0, 0, 0, 0}, z) == Rational(0));
  CHECK(slope(BundleChern{0, 0, 0, 0, -7, 0}, z) == Rational(Int(-7), Int(2)));
  CHECK(testutil::null_correlation_twist().p1_lambda() == 0);
}

TEST_CASE("twist by zero is the identity") {
  auto z = testutil::p3_o2();
  auto e = testutil::null_correlation_twist();
  CHECK(twist(e, z, 0) == e);
}

TEST_CASE("twisting the zero data by one step lifts the slope by mu(L)") {
  auto z = testutil::p3_o2();
  BundleChern zero{0, 0, 0, 0, 0, 0};
  BundleChern t = twist(zero, z, 1);
  CHECK(t.c1_lambdasq == 16);
  CHECK(t.mu() == Rational(8));
  CHECK(t.c1_cubed == 64);
  CHECK(t.c1sq_lambda == 32);
  CHECK(t.c2_lambda == 8);
  CHECK(t.c1_c2 == 16);
  CHECK(t.c1_c2z == 24);
}

TEST_CASE("twisting O + L matches the directly assembled O(m) + O(m+1) data") {
  // Independent oracle for all six twist identities: E = L^m + L^(m+1) has
  // c1 = (2m+1) lambda and c2 = m(m+1) lambda^2, so every pairing is a
  // polynomial in m that can be written down without the twist formulas.
  for (const auto& name : catalog_names()) {
    ValidatedThreefold z = catalog_lookup(name);
    const Int l3 = z.lambda3();
    for (int m = -4; m <= 4; ++m) {
      const Int c1 = 2 * m + 1;
      const Int c2 = Int(m) * (m + 1);
      BundleChern direct{c1 * c1 * c1 * l3, c1 * c2 * l3, c1 * c1 * l3,
                         c2 * l3,           c1 * l3,      c1 * 12};
      CHECK(twist(testutil::split_o_l(z), z, m) == direct);
    }
  }
}

TEST_CASE("twist is a Z-action and shifts slopes linearly") {
  auto z = catalog_lookup("cubic");
  std::mt19937 rng(911);
  std::uniform_int_distribution<int> twist_step(-5, 5);
  for (int trial = 0; trial < 50; ++trial) {
    BundleChern e = random_chern(rng);
    int m1 = twist_step(rng);
    int m2 = twist_step(rng);
    CHECK(twist(e, z, Int(m1) + m2) == twist(twist(e, z, m1), z, m2));
    CHECK(twist(twist(e, z, m1), z, -m1) == e);
    CHECK(slope(twist(e, z, m1), z) == slope(e, z) + Rational(m1 * z.lambda3()));
  }
}

TEST_CASE("normalization lands in the half-open slope window") {
  auto z = testutil::p3_o2();
  auto nc = testutil::null_correlation_twist();

  NormalizationResult r0 = normalize(nc, z);
  CHECK(r0.twist_exponent == 0);
  CHECK(r0.mu_normalized == Rational(-4));
  CHECK(r0.normalized == nc);

  // mu = 12 after twisting up twice; normalization undoes exactly that.
  NormalizationResult r2 = normalize(twist(nc, z, 2), z);
  CHECK(r2.twist_exponent == -2);
  CHECK(r2.mu_normalized == Rational(-4));
  CHECK(r2.normalized == nc);

  // mu = 0 only meets multiples of lambda^3, never the window [-7, 0).
  CHECK(code_of([&] { normalize(BundleChern{0, 0, 0, 0, 0, 0}, z); }) ==
        "NotNormalizable");
}

TEST_CASE("normalization agrees with a brute window scan") {
  std::mt19937 rng(424242);
  std::uniform_int_distribution<int> coeff(-30, 30);
  for (const char* name : {"p3-o2", "cubic", "double-solid"}) {
    ValidatedThreefold z = catalog_lookup(name);
    const Int l3 = z.lambda3();
    for (int trial = 0; trial < 200; ++trial) {
      BundleChern e{coeff(rng), coeff(rng), coeff(rng),
                    coeff(rng), coeff(rng), coeff(rng)};
      Int found = 0;
      bool any = false;
      for (int m = -40; m <= 40; ++m) {
        Rational mu = e.mu() + Rational(Int(m) * l3);
        if (Rational(1 - l3) <= mu && mu < Rational(0)) {
          found = m;
          any = true;
          break;
        }
      }
      if (any) {
        NormalizationResult n = normalize(e, z);
        CHECK(n.twist_exponent == found);
        CHECK(Rational(1 - l3) <= n.mu_normalized);
        CHECK(n.mu_normalized < Rational(0));
        // Orbit invariance: any pre-twist normalizes to the same data.
        CHECK(normalize(twist(e, z, 3), z).normalized == n.normalized);
      } else {
        CHECK(code_of([&] { normalize(e, z); }) == "NotNormalizable");
      }
    }
  }
}

TEST_CASE("lambda^3 = 1 never normalizes because the window is empty") {
  ValidatedThreefold z = validate_threefold({1, 12, 3, ""});
  CHECK(code_of([&] { normalize(BundleChern{0, 0, 0, 0, -1, 0}, z); }) ==
        "NotNormalizable");
  CHECK(code_of([&] { normalize(BundleChern{0, 0, 0, 0, 4, 0}, z); }) ==
        "NotNormalizable");
}
