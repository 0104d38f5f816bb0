#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace specbundle {

/// Arbitrary-precision integer. Everything in this library is exact; no
/// floating point is used anywhere.
using Int = boost::multiprecision::cpp_int;

/// Exact fraction over Int, kept in lowest terms with denominator > 0.
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(int v) : num_(v), den_(1) {}                // NOLINT: implicit by design
  Rational(long v) : num_(v), den_(1) {}               // NOLINT
  Rational(long long v) : num_(v), den_(1) {}          // NOLINT
  Rational(Int v) : num_(std::move(v)), den_(1) {}     // NOLINT
  Rational(Int num, Int den);

  const Int& num() const noexcept { return num_; }
  const Int& den() const noexcept { return den_; }

  bool is_integer() const noexcept { return den_ == 1; }
  bool is_zero() const noexcept { return num_ == 0; }
  int sign() const noexcept { return num_ < 0 ? -1 : (num_ > 0 ? 1 : 0); }

  Int floor() const;
  Int ceil() const;

  /// "p/q", or just "p" when the value is integral.
  std::string str() const;

  /// Parses "p", "p/q", with optional leading '-'. Throws std::invalid_argument
  /// on anything else (including q = 0).
  static Rational parse(std::string_view text);

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    // Denominators are positive, so cross multiplication preserves order.
    Int lhs = a.num_ * b.den_;
    Int rhs = b.num_ * a.den_;
    return lhs < rhs ? std::strong_ordering::less
                     : (lhs > rhs ? std::strong_ordering::greater
                                  : std::strong_ordering::equal);
  }

private:
  void reduce();

  Int num_;
  Int den_;
};

Rational abs(const Rational& x);
std::ostream& operator<<(std::ostream& os, const Rational& x);

/// floor(a / b) for exact integers, b != 0. Rounds toward negative infinity.
Int floor_div(const Int& a, const Int& b);
/// ceil(a / b) for exact integers, b != 0. Rounds toward positive infinity.
Int ceil_div(const Int& a, const Int& b);

/// Narrowing helper for values known to be small (spectrum indices, table
/// rows). Throws std::overflow_error if the value does not fit.
std::int64_t to_int64(const Int& v);

}  // namespace specbundle
