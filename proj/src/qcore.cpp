#include "qgf/qcore.hpp"

#include <string>

#include "qgf/errors.hpp"

namespace qgf {

namespace {

void require_nonnegative(int k, const char *what) {
  if (k < 0)
    throw DomainError(std::string(what) + ": index must be non-negative, got " + std::to_string(k));
}

Rational evaluate_series(const std::vector<Rational> &coeffs, const Rational &x) {
  // Horner
  Rational acc;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

} // namespace

QContext::QContext(Rational q) : q_(std::move(q)), classical_(q_ == Rational(1)) {
  if (q_.sign() <= 0 || q_ > Rational(1))
    throw DomainError("q must satisfy 0<q<=1, got " + q_.str());
  powers_.emplace_back(1);
  integers_.emplace_back(0);
  factorials_.emplace_back(1);
}

const Rational &QContext::power(int k) {
  require_nonnegative(k, "q power");
  while (static_cast<int>(powers_.size()) <= k)
    powers_.push_back(powers_.back() * q_);
  return powers_[static_cast<std::size_t>(k)];
}

const Rational &QContext::integer(int k) {
  require_nonnegative(k, "q-integer");
  // [j]_q = [j-1]_q + q^{j-1}; at q = 1 this is j
  while (static_cast<int>(integers_.size()) <= k) {
    const int j = static_cast<int>(integers_.size());
    integers_.push_back(integers_.back() + power(j - 1));
  }
  return integers_[static_cast<std::size_t>(k)];
}

const Rational &QContext::factorial(int k) {
  require_nonnegative(k, "q-factorial");
  while (static_cast<int>(factorials_.size()) <= k) {
    const int j = static_cast<int>(factorials_.size());
    factorials_.push_back(factorials_.back() * integer(j));
  }
  return factorials_[static_cast<std::size_t>(k)];
}

void QContext::require_q_below_one(std::string_view what) const {
  if (classical_)
    throw DomainError(std::string(what) + ": q must satisfy 0<q<1");
}

Rational q_integer(QContext &ctx, int k) { return ctx.integer(k); }

Rational q_factorial(QContext &ctx, int k) { return ctx.factorial(k); }

Rational q_binomial(QContext &ctx, int n, int k) {
  require_nonnegative(n, "q-binomial");
  if (k < 0 || k > n)
    return Rational(0);
  return ctx.factorial(n) / (ctx.factorial(k) * ctx.factorial(n - k));
}

Rational q_shifted_power(QContext &ctx, const Rational &a, const Rational &b, int n) {
  return q_shifted_power_from(ctx, a, b, n, 0);
}

Rational q_shifted_power_from(QContext &ctx, const Rational &a, const Rational &b, int m, int offset) {
  require_nonnegative(m, "q-shifted power");
  require_nonnegative(offset, "q-shifted power offset");
  Rational acc(1);
  for (int s = 0; s < m; ++s)
    acc *= a - ctx.power(offset + s) * b;
  return acc;
}

std::vector<Rational> small_qexp_coefficients(QContext &ctx, int order) {
  ctx.require_q_below_one("e_q");
  require_nonnegative(order, "e_q order");
  std::vector<Rational> coeffs;
  coeffs.reserve(static_cast<std::size_t>(order) + 1);
  Rational denom(1);
  coeffs.emplace_back(1);
  for (int k = 1; k <= order; ++k) {
    denom *= Rational(1) - ctx.power(k);
    coeffs.push_back(denom.reciprocal());
  }
  return coeffs;
}

std::vector<Rational> big_qexp_coefficients(QContext &ctx, int order) {
  std::vector<Rational> coeffs = small_qexp_coefficients(ctx, order);
  // q^{k(k-1)/2} = prod_{j<k} q^j
  Rational weight(1);
  for (int k = 1; k <= order; ++k) {
    weight *= ctx.power(k - 1);
    coeffs[static_cast<std::size_t>(k)] *= weight;
  }
  return coeffs;
}

Rational small_qexp_partial(QContext &ctx, const Rational &x, int order) {
  return evaluate_series(small_qexp_coefficients(ctx, order), x);
}

Rational big_qexp_partial(QContext &ctx, const Rational &x, int order) {
  return evaluate_series(big_qexp_coefficients(ctx, order), x);
}

Rational q_beta(QContext &ctx, int m, int n) {
  if (m < 1 || n < 1)
    throw DomainError("q-Beta: arguments must be positive, got m=" + std::to_string(m) +
                      ", n=" + std::to_string(n));
  return ctx.factorial(m - 1) * ctx.factorial(n - 1) / ctx.factorial(m + n - 1);
}

} // namespace qgf
