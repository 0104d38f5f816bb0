#include "specbundle/gm_family.hpp"

#include "specbundle/errors.hpp"
#include "specbundle/threefold.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <vector>

using namespace specbundle;
using testutil::code_of;

TEST_CASE("d(W) = 1 for every globally generated rational-curve family") {
  CHECK(d_rational({1, 1}) == Rational(1));            // twistor lines
  CHECK(d_rational({0, 1, 1}) == Rational(1));         // lines on a quadric
  for (int n = 2; n <= 7; ++n) {                       // lines in P^n
    std::vector<Int> degrees(static_cast<std::size_t>(n - 1), Int(1));
    CHECK(d_rational(degrees) == Rational(1));
  }
  CHECK(d_rational({5, 0, 2}) == Rational(1));

  CHECK(code_of([] { d_rational({-1, 2}); }) == "NotGloballyGenerated");
  CHECK(code_of([] { d_rational({0, 0}); }) == "TrivialNormalBundle");
  CHECK(code_of([] { d_rational({}); }) == "TrivialNormalBundle");
}

TEST_CASE("d(W) for elliptic pencils") {
  CHECK(d_elliptic(9) == Rational(Int(8), Int(7)));
  CHECK(d_elliptic(3) == Rational(2));
  CHECK(d_elliptic(4) == Rational(Int(3), Int(2)));
  CHECK(code_of([] { d_elliptic(2); }) == "PencilTooSmall");

  // Catalog pipeline: dim|L| = lambda^3 + 1 gives d(W) = lambda^3/(lambda^3-1).
  for (const auto& name : catalog_names()) {
    ValidatedThreefold z = catalog_lookup(name);
    CHECK(d_elliptic(z.dim_l()) == Rational(z.lambda3(), z.lambda3() - 1));
  }
}

TEST_CASE("kernel of the evaluation map on an elliptic curve") {
  KernelBundle k2 = kernel_slope(2);
  CHECK(k2.rank == 1);
  CHECK(k2.degree == -2);
  CHECK(k2.slope == Rational(-2));

  KernelBundle k3 = kernel_slope(3);
  CHECK(k3.rank == 2);
  CHECK(k3.degree == -3);
  CHECK(k3.slope == Rational(Int(-3), Int(2)));

  CHECK(code_of([] { kernel_slope(1); }) == "DegreeTooSmall");

  // Strictly increasing toward -1, always below it.
  Rational prev = kernel_slope(2).slope;
  for (int n = 3; n <= 100; ++n) {
    Rational cur = kernel_slope(n).slope;
    CHECK(cur > prev);
    CHECK(cur < Rational(-1));
    prev = cur;
  }

  // The elliptic d(W) is exactly minus the kernel slope at n = dim|L| - 1.
  for (int dim_l = 3; dim_l <= 50; ++dim_l)
    CHECK(d_elliptic(dim_l) == -kernel_slope(dim_l - 1).slope);
}

TEST_CASE("slope-gap admissibility") {
  CHECK(gm_gap_ok({Rational(1), Rational(0)}, Rational(1)));
  CHECK(!gm_gap_ok({Rational(2), Rational(0)}, Rational(1)));
  CHECK(gm_gap_ok({}, Rational(0)));
  CHECK(gm_gap_ok({Rational(5)}, Rational(0)));
  CHECK(gm_gap_ok({Rational(Int(1), Int(2)), Rational(Int(-1), Int(2)), Rational(-1)},
                  Rational(1)));
  CHECK(!gm_gap_ok({Rational(Int(1), Int(2)), Rational(Int(-2), Int(3))}, Rational(1)));
  CHECK(code_of([] { gm_gap_ok({Rational(0), Rational(1)}, Rational(1)); }) ==
        "NotSorted");
}

TEST_CASE("rational splitting types have consecutive-interval values") {
  using Types = std::vector<SplittingType>;
  CHECK(splitting_types_rational(2, -1) == Types{{0, -1}});
  CHECK(splitting_types_rational(2, 0) == Types{{0, 0}});
  CHECK(splitting_types_rational(1, 5) == Types{{5}});
  CHECK(splitting_types_rational(2, 1) == Types{{1, 0}});
  CHECK(splitting_types_rational(3, 0) == Types{{0, 0, 0}, {1, 0, -1}});
  CHECK(splitting_types_rational(4, 2) ==
        Types{{1, 1, 0, 0}, {2, 1, 0, -1}});
  CHECK_THROWS_AS(splitting_types_rational(0, 0), InputError);

  // Every output passes the gap predicate with dW = 1 and sums correctly.
  for (std::int64_t rank = 1; rank <= 4; ++rank)
    for (int delta = -6; delta <= 6; ++delta)
      for (const auto& t : splitting_types_rational(rank, delta)) {
        Int sum = 0;
        std::vector<Rational> profile;
        for (const Int& a : t) {
          sum += a;
          profile.emplace_back(a);
        }
        CHECK(sum == delta);
        CHECK(gm_gap_ok(profile, Rational(1)));
      }
}

TEST_CASE("elliptic restrictions balance the degree or stay semistable") {
  EllipticRestriction even = restriction_types_elliptic(-8);
  CHECK(even.split == SplittingType{-4, -4});
  CHECK(even.semistable_alternative_allowed);

  CHECK(restriction_types_elliptic(-1).split == SplittingType{0, -1});
  CHECK(restriction_types_elliptic(0).split == SplittingType{0, 0});
  CHECK(restriction_types_elliptic(7).split == SplittingType{4, 3});

  for (int delta = -12; delta <= 12; ++delta) {
    EllipticRestriction r = restriction_types_elliptic(delta);
    Int gap = r.split[0] - r.split[1];
    CHECK(r.split[0] + r.split[1] == delta);
    CHECK((gap == 0 || gap == 1));
    CHECK(r.semistable_alternative_allowed);
  }
}

TEST_CASE("family descriptors dispatch and honor overrides") {
  CurveFamily lines;
  lines.kind = CurveFamily::Kind::rational_curves;
  lines.normal_degrees = {1, 1, 1};
  CHECK(lines.d_invariant() == Rational(1));

  CurveFamily pencil;
  pencil.kind = CurveFamily::Kind::elliptic_pencil;
  pencil.dim_l = 9;
  CHECK(pencil.d_invariant() == Rational(Int(8), Int(7)));

  pencil.mu_max_override = Rational(Int(7), Int(3));
  CHECK(pencil.d_invariant() == Rational(Int(7), Int(3)));

  // The override skips validation entirely, as an expert escape hatch.
  CurveFamily degenerate;
  degenerate.kind = CurveFamily::Kind::elliptic_pencil;
  degenerate.dim_l = 1;
  degenerate.mu_max_override = Rational(4);
  CHECK(degenerate.d_invariant() == Rational(4));
}
