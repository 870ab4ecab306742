#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qgf {

/**
 * Exact rational number backed by GMP.
 *
 * Values are always kept in lowest terms with a positive denominator.
 * Division by zero throws DomainError instead of trapping.
 */
class Rational {
public:
  Rational() = default;
  Rational(long value) : value_(value) {} // NOLINT(google-explicit-constructor)
  Rational(long numerator, long denominator);
  explicit Rational(const mpq_class &value);

  /// Parses "p/r", an integer, or a decimal literal such as "0.9" or "-2.5e-3".
  /// Decimals are expanded digit by digit, so "0.9" is exactly 9/10.
  static Rational parse(std::string_view text);

  Rational &operator+=(const Rational &rhs);
  Rational &operator-=(const Rational &rhs);
  Rational &operator*=(const Rational &rhs);
  Rational &operator/=(const Rational &rhs);

  friend Rational operator+(Rational lhs, const Rational &rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational &rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational &rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational &rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational &a, const Rational &b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// Non-negative integer power; pow(0) == 1 (including 0^0).
  Rational pow(std::uint64_t exponent) const;
  Rational reciprocal() const;

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const;

  double to_double() const { return value_.get_d(); }
  /// "p/r" in lowest terms, or "p" when the denominator is 1.
  std::string str() const;

  std::string numerator_str() const { return value_.get_num().get_str(); }
  std::string denominator_str() const { return value_.get_den().get_str(); }
  /// Bit length of numerator plus denominator; a rough size measure for tests.
  std::size_t bit_size() const;

  const mpq_class &mpq() const { return value_; }

private:
  mpq_class value_;
};

std::ostream &operator<<(std::ostream &os, const Rational &r);

} // namespace qgf
