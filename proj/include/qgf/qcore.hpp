#pragma once

#include <deque>
#include <string_view>
#include <vector>

#include "qgf/rational.hpp"

namespace qgf {

/**
 * The deformation parameter q together with memoized tables of q-powers,
 * q-integers [k]_q and q-factorials [k]_q!.
 *
 * Requires 0 < q <= 1. q == 1 is the classical limit and is only accepted by
 * the scalar primitives; everything involving q-exponentials requires q < 1.
 *
 * Tables grow on demand, so a context must not be shared between threads
 * while it is being used. Copies are independent; parallel code gives every
 * task its own copy.
 */
class QContext {
public:
  explicit QContext(Rational q);

  const Rational &q() const { return q_; }
  bool classical() const { return classical_; }

  /// q^k for k >= 0.
  const Rational &power(int k);
  /// [k]_q for k >= 0.
  const Rational &integer(int k);
  /// [k]_q! for k >= 0.
  const Rational &factorial(int k);

  /// Throws DomainError unless q < 1; `what` names the caller in the message.
  void require_q_below_one(std::string_view what) const;

private:
  Rational q_;
  bool classical_;
  // deque keeps references stable while the tables grow
  std::deque<Rational> powers_;
  std::deque<Rational> integers_;
  std::deque<Rational> factorials_;
};

/// [k]_q = (1 - q^k)/(1 - q), or k when q = 1.
Rational q_integer(QContext &ctx, int k);

/// [k]_q! = [k]_q [k-1]_q ... [1]_q, with [0]_q! = 1.
Rational q_factorial(QContext &ctx, int k);

/// Gaussian binomial [n choose k]_q; zero when k < 0 or k > n.
Rational q_binomial(QContext &ctx, int n, int k);

/// q-shifted power (a - b)_q^n = prod_{s=0}^{n-1} (a - q^s b). Pass b = -x for (1 + x)_q^n.
Rational q_shifted_power(QContext &ctx, const Rational &a, const Rational &b, int n);

/// prod_{s=0}^{m-1} (a - q^{offset+s} b), the tail factor of a longer shifted power:
/// (a - b)_q^{n+m} = (a - b)_q^n * q_shifted_power_from(a, b, m, n).
Rational q_shifted_power_from(QContext &ctx, const Rational &a, const Rational &b, int m, int offset);

/// Coefficients 1/((1-q)(1-q^2)...(1-q^k)), k = 0..order, of the q-exponential e_q(x).
std::vector<Rational> small_qexp_coefficients(QContext &ctx, int order);

/// Coefficients q^{k(k-1)/2}/((1-q)...(1-q^k)), k = 0..order, of the q-exponential E_q(x).
std::vector<Rational> big_qexp_coefficients(QContext &ctx, int order);

/// Partial sum of e_q(x) through x^order. Requires q < 1.
Rational small_qexp_partial(QContext &ctx, const Rational &x, int order);

/// Partial sum of E_q(x) through x^order. Requires q < 1.
Rational big_qexp_partial(QContext &ctx, const Rational &x, int order);

/// q-Beta function B_q(m, n) = [m-1]_q! [n-1]_q! / [m+n-1]_q! for m, n >= 1.
Rational q_beta(QContext &ctx, int m, int n);

} // namespace qgf
