#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qgf/parallel.hpp"
#include "qgf/qcore.hpp"
#include "qgf/rational.hpp"

namespace qgf {

/**
 * Formal power series in t truncated after t^order, with exact coefficients.
 *
 * There are always exactly order + 1 stored coefficients. Binary operations
 * truncate to the smaller of the two operand orders.
 */
class TruncatedSeries {
public:
  /// Zero series.
  explicit TruncatedSeries(std::size_t order);
  /// Coefficients c_0, c_1, ...; missing ones are zero and those past `order` are dropped.
  TruncatedSeries(std::vector<Rational> coeffs, std::size_t order);

  static TruncatedSeries one(std::size_t order);
  /// c * t^power.
  static TruncatedSeries monomial(const Rational &c, std::size_t power, std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  std::span<const Rational> coefficients() const { return coeffs_; }

  /// Unchecked access; j <= order().
  const Rational &operator[](std::size_t j) const { return coeffs_[j]; }
  Rational &operator[](std::size_t j) { return coeffs_[j]; }

  TruncatedSeries &operator*=(const Rational &scalar);
  friend TruncatedSeries operator*(TruncatedSeries s, const Rational &scalar) { return s *= scalar; }

  friend TruncatedSeries operator+(const TruncatedSeries &a, const TruncatedSeries &b);
  friend TruncatedSeries operator-(const TruncatedSeries &a, const TruncatedSeries &b);
  friend bool operator==(const TruncatedSeries &a, const TruncatedSeries &b) = default;

private:
  std::vector<Rational> coeffs_;
};

/// Cauchy product truncated at min(a.order(), b.order()). Large products use
/// the OpenMP kernel.
TruncatedSeries series_mul(const TruncatedSeries &a, const TruncatedSeries &b);
TruncatedSeries series_mul(const TruncatedSeries &a, const TruncatedSeries &b, Execution exec);

inline TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b) { return series_mul(a, b); }

/// Multiplicative inverse to the same order. Throws NotInvertible when c_0 == 0.
TruncatedSeries series_inverse(const TruncatedSeries &a);

/// c_j; throws TruncationError when j > a.order().
Rational coefficient(const TruncatedSeries &a, std::size_t j);

// Generating-function right-hand sides. Coefficients are stored plain; the
// factorial scaling in front of t^n is applied by the caller. All three
// require 0 < q < 1.
//
// A symbol written as (1 - x)_q or (1 + q^{n+1} x)_q inside a q-exponential
// is read so that its j-th power is the q-shifted product of length j, which
// is the reading under which the expansions are identities.

/// (x^k t^k / [k]_q!) e_q((1-q)(1-x)_q t): coefficient of t^m is
/// x^k (1-x)_q^{m-k} / ([k]_q! [m-k]_q!) for m >= k, zero below.
TruncatedSeries gf_bernstein_rhs(QContext &ctx, int k, const Rational &x, std::size_t order);

/// (1-x)_q^n / (1-xt)_q^{n+2}, obtained by inverting the polynomial
/// prod_{s=0}^{n+1} (1 - q^s x t).
TruncatedSeries gf_mkz_rhs(QContext &ctx, int n, const Rational &x, std::size_t order);

/// (1/(1+x)_q^{n+1}) E_q((1-q) x t / (1+q^{n+1} x)_q); requires n >= 1, x >= 0.
TruncatedSeries gf_beta_rhs(QContext &ctx, int n, const Rational &x, std::size_t order);

} // namespace qgf
