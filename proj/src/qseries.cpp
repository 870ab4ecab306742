#include "qgf/qseries.hpp"

#include <algorithm>
#include <string>

#include "qgf/errors.hpp"

namespace qgf {

namespace {

// below this the OpenMP fork costs more than the product
constexpr std::size_t kParallelOrder = 48;

} // namespace

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs, std::size_t order) : coeffs_(std::move(coeffs)) {
  coeffs_.resize(order + 1);
}

TruncatedSeries TruncatedSeries::one(std::size_t order) { return monomial(Rational(1), 0, order); }

TruncatedSeries TruncatedSeries::monomial(const Rational &c, std::size_t power, std::size_t order) {
  TruncatedSeries s(order);
  if (power <= order)
    s.coeffs_[power] = c;
  return s;
}

TruncatedSeries &TruncatedSeries::operator*=(const Rational &scalar) {
  for (auto &c : coeffs_)
    c *= scalar;
  return *this;
}

TruncatedSeries operator+(const TruncatedSeries &a, const TruncatedSeries &b) {
  TruncatedSeries out(std::min(a.order(), b.order()));
  for (std::size_t j = 0; j <= out.order(); ++j)
    out[j] = a[j] + b[j];
  return out;
}

TruncatedSeries operator-(const TruncatedSeries &a, const TruncatedSeries &b) {
  TruncatedSeries out(std::min(a.order(), b.order()));
  for (std::size_t j = 0; j <= out.order(); ++j)
    out[j] = a[j] - b[j];
  return out;
}

TruncatedSeries series_mul(const TruncatedSeries &a, const TruncatedSeries &b) {
  const std::size_t order = std::min(a.order(), b.order());
  return series_mul(a, b, order >= kParallelOrder ? Execution::parallel : Execution::serial);
}

TruncatedSeries series_mul(const TruncatedSeries &a, const TruncatedSeries &b, Execution exec) {
  const std::size_t order = std::min(a.order(), b.order());
  const auto lhs = a.coefficients().first(order + 1);
  const auto rhs = b.coefficients().first(order + 1);
  auto coeffs = exec == Execution::parallel ? cauchy_product_parallel(lhs, rhs, order)
                                            : cauchy_product_serial(lhs, rhs, order);
  return TruncatedSeries(std::move(coeffs), order);
}

TruncatedSeries series_inverse(const TruncatedSeries &a) {
  if (a[0].is_zero())
    throw NotInvertible("series not invertible: zero constant term");
  const std::size_t order = a.order();
  const Rational inv0 = a[0].reciprocal();
  TruncatedSeries b(order);
  b[0] = inv0;
  for (std::size_t j = 1; j <= order; ++j) {
    Rational acc;
    for (std::size_t i = 1; i <= j; ++i)
      if (!a[i].is_zero())
        acc += a[i] * b[j - i];
    b[j] = -(acc * inv0);
  }
  return b;
}

Rational coefficient(const TruncatedSeries &a, std::size_t j) {
  if (j > a.order())
    throw TruncationError("coefficient t^" + std::to_string(j) + " beyond truncation order " +
                          std::to_string(a.order()));
  return a[j];
}

TruncatedSeries gf_bernstein_rhs(QContext &ctx, int k, const Rational &x, std::size_t order) {
  ctx.require_q_below_one("Bernstein generating function");
  if (k < 0)
    throw DomainError("Bernstein generating function: k must be non-negative");
  const auto ord = static_cast<int>(order);

  // e_q((1-q) y t) with y^m read as (1-x)_q^m: coefficient (1-q)^m (1-x)_q^m / prod_{j<=m}(1-q^j)
  const std::vector<Rational> eq = small_qexp_coefficients(ctx, ord);
  const Rational one_minus_q = Rational(1) - ctx.q();
  TruncatedSeries exp_part(order);
  Rational shifted(1);
  Rational scale(1);
  for (int m = 0; m <= ord; ++m) {
    if (m > 0) {
      shifted *= Rational(1) - ctx.power(m - 1) * x;
      scale *= one_minus_q;
    }
    exp_part[static_cast<std::size_t>(m)] = eq[static_cast<std::size_t>(m)] * scale * shifted;
  }

  const auto lead = TruncatedSeries::monomial(x.pow(static_cast<std::uint64_t>(k)) / ctx.factorial(k),
                                              static_cast<std::size_t>(k), order);
  return series_mul(lead, exp_part);
}

TruncatedSeries gf_mkz_rhs(QContext &ctx, int n, const Rational &x, std::size_t order) {
  ctx.require_q_below_one("MKZ generating function");
  if (n < 0)
    throw DomainError("MKZ generating function: n must be non-negative");

  // (1 - xt)_q^{n+2} as a polynomial in t, truncated to the requested order
  TruncatedSeries denom = TruncatedSeries::one(order);
  for (int s = 0; s <= n + 1; ++s) {
    TruncatedSeries factor(std::vector<Rational>{Rational(1), -(ctx.power(s) * x)}, order);
    denom = series_mul(denom, factor);
  }
  return series_inverse(denom) * q_shifted_power(ctx, Rational(1), x, n);
}

TruncatedSeries gf_beta_rhs(QContext &ctx, int n, const Rational &x, std::size_t order) {
  ctx.require_q_below_one("q-Beta generating function");
  if (n < 1)
    throw DomainError("q-Beta generating function: n must be at least 1");
  if (x.sign() < 0)
    throw DomainError("q-Beta generating function: x must be non-negative");
  const auto ord = static_cast<int>(order);

  // E_q(z) with z^k read as (1-q)^k x^k t^k / prod_{s<k}(1 + q^{n+1+s} x)
  const std::vector<Rational> big = big_qexp_coefficients(ctx, ord);
  const Rational one_minus_q = Rational(1) - ctx.q();
  TruncatedSeries out(order);
  Rational numer(1);
  Rational shifted(1);
  for (int k = 0; k <= ord; ++k) {
    if (k > 0) {
      numer *= one_minus_q * x;
      shifted *= Rational(1) + ctx.power(n + k) * x;
    }
    out[static_cast<std::size_t>(k)] = big[static_cast<std::size_t>(k)] * numer / shifted;
  }
  return out * q_shifted_power(ctx, Rational(1), -x, n + 1).reciprocal();
}

} // namespace qgf
