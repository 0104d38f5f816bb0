#include "specbundle/threefold.hpp"

#include "specbundle/chern.hpp"
#include "specbundle/errors.hpp"
#include "specbundle/riemann_roch.hpp"

#include <array>
#include <stdexcept>

namespace specbundle {

ValidatedThreefold validate_threefold(const ThreefoldInvariants& inv) {
  if (inv.lambda3 < 1)
    fail("NonPositiveDegree", "lambda^3 must be >= 1, got " + inv.lambda3.str());
  if (inv.lambda_c2z != 12)
    fail("ToddViolation",
         "lambda.c2(Z) must equal 12, got " + inv.lambda_c2z.str());
  if (inv.dim_l < 3)
    fail("PencilTooSmall", "dim |L| must be >= 3, got " + inv.dim_l.str());
  return ValidatedThreefold(inv);
}

Rational mu_l(const ValidatedThreefold& z) { return Rational(z.lambda3()); }

namespace {

struct CatalogEntry {
  const char* name;
  int lambda3;
  int dim_l;
};

// Index threefolds of index 2 over Pic = Z.H with L = O(H), plus (P^3, O(2)).
// lambda.c2(Z) = 12 across the board.
constexpr std::array<CatalogEntry, 5> kCatalog = {{
    {"p3-o2", 8, 9},                 // P^3 polarized by O(2)
    {"flag", 6, 7},                  // flag variety F(1,2) in P^2 x P^2*
    {"quadric-intersection", 4, 5},  // (2,2) complete intersection in P^5
    {"cubic", 3, 4},                 // cubic hypersurface in P^4
    {"double-solid", 2, 3},          // double cover of P^3 branched in a quartic
}};

// Every catalog entry is re-derived at first use: chi(L) computed through the
// full Riemann-Roch route on the split bundle O + L must come out as
// lambda^3 + 2 and match dim |L| + 1 (these L have no higher cohomology).
bool catalog_self_check() {
  for (const auto& entry : kCatalog) {
    ThreefoldInvariants inv{entry.lambda3, 12, entry.dim_l, entry.name};
    ValidatedThreefold z = validate_threefold(inv);
    const Int l3 = z.lambda3();
    BundleChern split_ol{l3, 0, l3, 0, l3, z.lambda_c2z()};
    Int chi_l = euler_char_integral(split_ol, z) - 1;  // chi(O + L) - chi(O)
    if (chi_l != l3 + 2 || chi_l != z.dim_l() + 1)
      throw std::logic_error(std::string("catalog entry fails chi(L) self-check: ") +
                             entry.name);
  }
  return true;
}

void ensure_catalog_checked() {
  static const bool ok = catalog_self_check();
  (void)ok;
}

}  // namespace

std::vector<std::string> catalog_names() {
  ensure_catalog_checked();
  std::vector<std::string> names;
  names.reserve(kCatalog.size());
  for (const auto& entry : kCatalog) names.emplace_back(entry.name);
  return names;
}

ValidatedThreefold catalog_lookup(std::string_view name) {
  ensure_catalog_checked();
  for (const auto& entry : kCatalog)
    if (name == entry.name)
      return validate_threefold(
          ThreefoldInvariants{entry.lambda3, 12, entry.dim_l, entry.name});
  fail("UnknownEntry", "no catalog entry named '" + std::string(name) + "'");
}

}  // namespace specbundle
