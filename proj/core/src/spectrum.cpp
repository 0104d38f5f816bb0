#include "specbundle/spectrum.hpp"

#include "specbundle/errors.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace specbundle {

Spectrum::Spectrum(std::map<std::int64_t, std::int64_t> multiplicities)
    : m_(std::move(multiplicities)) {
  for (const auto& [j, m] : m_)
    if (m < 1)
      throw InputError("spectrum multiplicity m_" + std::to_string(j) +
                       " = " + std::to_string(m) + " must be >= 1");
}

std::optional<std::int64_t> Spectrum::a() const {
  if (m_.empty()) return std::nullopt;
  return m_.begin()->first;
}

std::optional<std::int64_t> Spectrum::b() const {
  if (m_.empty()) return std::nullopt;
  return m_.rbegin()->first;
}

std::int64_t Spectrum::rank() const {
  Int r = 0;
  for (const auto& [j, m] : m_) r += m;
  return to_int64(r);
}

std::int64_t Spectrum::degree() const {
  Int d = 0;
  for (const auto& [j, m] : m_) d += Int(j) * m;
  return to_int64(d);
}

std::int64_t Spectrum::multiplicity(std::int64_t j) const {
  auto it = m_.find(j);
  return it == m_.end() ? 0 : it->second;
}

std::vector<std::pair<std::int64_t, std::int64_t>> Spectrum::descending() const {
  return {m_.rbegin(), m_.rend()};
}

bool canonical_less(const Spectrum& x, const Spectrum& y) {
  return x.descending() > y.descending();
}

Spectrum mirror(const Spectrum& s) {
  std::map<std::int64_t, std::int64_t> m;
  for (const auto& [j, mj] : s.multiplicities()) m[-1 - j] = mj;
  return Spectrum(std::move(m));
}

bool connectedness_check(const Spectrum& s) {
  if (s.empty()) return true;
  const std::int64_t a = *s.a();
  const std::int64_t b = *s.b();
  for (std::int64_t j = 1; j < b; ++j)
    if (s.multiplicity(j) == 0) return false;
  for (std::int64_t j = a + 1; j <= -2; ++j)
    if (s.multiplicity(j) == 0) return false;
  return true;
}

bool symmetry_check(const Spectrum& s) { return s == mirror(s); }

bool gapless_support(const Spectrum& s) {
  if (s.empty()) return true;
  for (std::int64_t j = *s.a(); j <= *s.b(); ++j)
    if (s.multiplicity(j) == 0) return false;
  return true;
}

SpectrumBounds bounds(std::int64_t r, std::int64_t d) {
  if (r < 1) fail("InvalidRank", "index bounds need rank >= 1, got " + std::to_string(r));
  const Rational center = Rational(Int(d) - 1, Int(r) + 2);
  const Rational half_width = Rational(Int(r) + 1, 2);
  return SpectrumBounds{center - half_width, center + half_width};
}

namespace {

struct Window {
  std::int64_t lo = 0;
  std::int64_t hi = -1;
  bool set = false;

  void intersect(std::int64_t l, std::int64_t h) {
    if (!set) {
      lo = l;
      hi = h;
      set = true;
    } else {
      lo = std::max(lo, l);
      hi = std::min(hi, h);
    }
  }
};

}  // namespace

std::vector<Spectrum> enumerate_spectra(std::int64_t r, std::int64_t d,
                                        const SpectrumConstraints& constraints,
                                        std::optional<SupportWindow> window) {
  if (r < 0) fail("InvalidRank", "cannot enumerate spectra of rank " + std::to_string(r));
  if (r == 0) {
    // Only the empty spectrum has rank 0; it satisfies every constraint.
    if (d != 0) return {};
    return {Spectrum{}};
  }

  Window w;
  if (constraints.use_bounds) {
    SpectrumBounds bd = bounds(r, d);
    w.intersect(to_int64(bd.a_min.ceil()), to_int64(bd.b_max.floor()));
  }
  if (constraints.connected) {
    // b >= 2 forces 1..b-1 in the support, so b <= r; a <= -3 forces
    // a+1..-2, so a >= -(r+1). Smaller |a|, |b| are unconstrained.
    w.intersect(-(r + 1), std::max<std::int64_t>(1, r));
  }
  if (window) w.intersect(window->first, window->second);
  if (!w.set)
    fail("UnboundedEnumeration",
         "no finite support window: enable bounds or connectedness, or pass one "
         "explicitly");
  if (w.lo > w.hi) return {};

  std::vector<Spectrum> out;
  std::map<std::int64_t, std::int64_t> cur;
  // Walk indices hi -> lo, spending the remaining rank; prune branches whose
  // residual degree is unreachable with the indices that are left.
  std::function<void(std::int64_t, std::int64_t, std::int64_t)> walk =
      [&](std::int64_t j, std::int64_t rank_left, std::int64_t deg_left) {
        if (rank_left == 0) {
          if (deg_left != 0) return;
          Spectrum s(cur);
          if (constraints.connected && !connectedness_check(s)) return;
          if (constraints.symmetric && !(symmetry_check(s) && gapless_support(s))) return;
          out.push_back(std::move(s));
          return;
        }
        if (j < w.lo) return;
        if (deg_left < rank_left * w.lo || deg_left > rank_left * j) return;
        for (std::int64_t m = rank_left; m >= 0; --m) {
          if (m > 0) cur[j] = m;
          else cur.erase(j);
          walk(j - 1, rank_left - m, deg_left - m * j);
        }
        cur.erase(j);
      };
  walk(w.hi, r, d);

  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

namespace {

std::int64_t cohomology_sum(const Spectrum& s, std::int64_t l, bool h1) {
  Int total = 0;
  for (const auto& [j, m] : s.multiplicities()) {
    Int level = Int(j) + l + 1;
    if (!h1) level = -level;
    if (level > 0) total += Int(m) * level;
  }
  return to_int64(total);
}

}  // namespace

std::int64_t h1_value(const Spectrum& s, std::int64_t l) {
  if (l > 0)
    fail("TwistOutOfRange", "h1 formula only valid for twists l <= 0, got l = " +
                                std::to_string(l));
  return cohomology_sum(s, l, true);
}

std::int64_t h2_value(const Spectrum& s, std::int64_t l) {
  if (l < -1)
    fail("TwistOutOfRange", "h2 formula only valid for twists l >= -1, got l = " +
                                std::to_string(l));
  return cohomology_sum(s, l, false);
}

std::int64_t partial_sum_f(const Spectrum& s, std::int64_t l) {
  Int total = 0;
  for (const auto& [j, m] : s.multiplicities()) {
    if (j > l) break;
    total += m;
  }
  return to_int64(total);
}

VanishingThresholds vanishing_thresholds(std::int64_t r, std::int64_t d) {
  if (r < 0) fail("InvalidRank", "rank must be >= 0, got " + std::to_string(r));
  if (r == 0) return VanishingThresholds{0, -1};
  SpectrumBounds bd = bounds(r, d);
  std::int64_t t1 = std::max<std::int64_t>(0, to_int64(bd.b_max.floor()) + 1);
  std::int64_t t2 = std::max<std::int64_t>(-1, -to_int64(bd.a_min.ceil()) - 1);
  return VanishingThresholds{t1, t2};
}

}  // namespace specbundle
