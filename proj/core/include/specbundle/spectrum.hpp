#pragma once

#include "specbundle/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace specbundle {

/// Multiplicity vector of a spectrum H = sum_j O_{P^1}(j)^{m_j}: finitely
/// many j with m_j >= 1. The empty spectrum (r = 0) is legal and plays the
/// role of the spectrum of a split bundle.
class Spectrum {
public:
  Spectrum() = default;

  /// Throws InputError unless every stored multiplicity is >= 1.
  explicit Spectrum(std::map<std::int64_t, std::int64_t> multiplicities);

  bool empty() const noexcept { return m_.empty(); }

  /// Smallest / largest index in the support; nullopt when empty.
  std::optional<std::int64_t> a() const;
  std::optional<std::int64_t> b() const;

  std::int64_t rank() const;    // sum of m_j
  std::int64_t degree() const;  // sum of j * m_j

  std::int64_t multiplicity(std::int64_t j) const;
  const std::map<std::int64_t, std::int64_t>& multiplicities() const noexcept { return m_; }

  /// (j, m_j) pairs with j descending: the canonical serialization order.
  std::vector<std::pair<std::int64_t, std::int64_t>> descending() const;

  bool operator==(const Spectrum&) const = default;

private:
  std::map<std::int64_t, std::int64_t> m_;
};

/// Canonical presentation order for lists of spectra: lexicographic on the
/// descending serialization, larger entries first. Under this order
/// {1,-2} precedes {0,-1}, matching how the existence arguments list cases.
bool canonical_less(const Spectrum& x, const Spectrum& y);

/// The reflection m_j -> m_{-1-j} (mirror about j = -1/2).
Spectrum mirror(const Spectrum& s);

/// No gaps in the support where a gap would disconnect the two mandatory
/// runs: all of 1..b-1 present when b > 1, all of a+1..-2 present when
/// a < -2. Indices -1 and 0 themselves may be absent.
bool connectedness_check(const Spectrum& s);

/// Self-mirrored: m_j == m_{-1-j} for all j.
bool symmetry_check(const Spectrum& s);

/// Support is a single consecutive interval (vacuously true when empty).
bool gapless_support(const Spectrum& s);

struct SpectrumBounds {
  Rational a_min;
  Rational b_max;
};

/// Window every admissible spectrum index lies in:
///   a_min = (d-1)/(r+2) - (r+1)/2,   b_max = (d-1)/(r+2) + (r+1)/2.
/// Requires r >= 1 (DomainError "InvalidRank").
SpectrumBounds bounds(std::int64_t r, std::int64_t d);

struct SpectrumConstraints {
  bool connected = false;
  bool symmetric = false;
  bool use_bounds = false;
};

using SupportWindow = std::pair<std::int64_t, std::int64_t>;

/// All spectra with rank r and degree d meeting the constraints, in canonical
/// order. The support is confined to the intersection of the windows implied
/// by the active constraints and window:
///   use_bounds -> [ceil(a_min), floor(b_max)]
///   connected  -> [-(r+1), max(1, r)]
///   window     -> as given
/// With none of these there is no window to enumerate over and DomainError
/// ("UnboundedEnumeration") is thrown; symmetric is a filter applied inside
/// the window, never a window source. It selects spectra that are
/// self-mirrored AND gap-free, the shape actual symmetric spectra have.
/// r = 0 yields [{}] when d = 0 and [] otherwise. r < 0 throws
/// ("InvalidRank").
std::vector<Spectrum> enumerate_spectra(std::int64_t r, std::int64_t d,
                                        const SpectrumConstraints& constraints,
                                        std::optional<SupportWindow> window = std::nullopt);

/// h^1(Z, E(l)) = sum_j m_j * max(0, j + l + 1) for twists l <= 0; larger l
/// throws DomainError("TwistOutOfRange").
std::int64_t h1_value(const Spectrum& s, std::int64_t l);

/// h^2(Z, E(l)) = sum_j m_j * max(0, -(j + l + 1)) for twists l >= -1.
std::int64_t h2_value(const Spectrum& s, std::int64_t l);

/// Counting function f(l) = sum_{j <= l} m_j.
std::int64_t partial_sum_f(const Spectrum& s, std::int64_t l);

struct VanishingThresholds {
  std::int64_t t1;  // h1(E(l)) = 0 for all l <= -t1
  std::int64_t t2;  // h2(E(l)) = 0 for all l >= t2
};

/// Sharp twist thresholds from the index window of bounds():
///   t1 = max(0, floor(b_max) + 1),  t2 = max(-1, -ceil(a_min) - 1).
/// r = 0 has empty spectrum, so (0, -1). r < 0 throws ("InvalidRank").
VanishingThresholds vanishing_thresholds(std::int64_t r, std::int64_t d);

}  // namespace specbundle
