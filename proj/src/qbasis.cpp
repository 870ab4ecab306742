#include "qgf/qbasis.hpp"

#include <string>

#include "qgf/errors.hpp"

namespace qgf {

namespace {

void require_unit_interval(const Rational &x, const char *family) {
  if (x.sign() < 0 || x > Rational(1))
    throw DomainError(std::string(family) + " basis: x must lie in [0,1], got " + x.str());
}

void require_index(int v, const char *family, const char *name) {
  if (v < 0)
    throw DomainError(std::string(family) + " basis: " + name + " must be non-negative");
}

} // namespace

std::string_view to_string(BasisFamily family) {
  switch (family) {
  case BasisFamily::bernstein:
    return "bernstein";
  case BasisFamily::mkz:
    return "mkz";
  case BasisFamily::beta:
    return "beta";
  }
  return "unknown";
}

std::optional<BasisFamily> basis_family_from_string(std::string_view name) {
  if (name == "bernstein")
    return BasisFamily::bernstein;
  if (name == "mkz")
    return BasisFamily::mkz;
  if (name == "beta")
    return BasisFamily::beta;
  return std::nullopt;
}

Rational bernstein_basis(QContext &ctx, int k, int n, const Rational &x) {
  require_unit_interval(x, "Bernstein");
  require_index(n, "Bernstein", "n");
  if (k < 0 || k > n)
    return Rational(0);
  return q_binomial(ctx, n, k) * x.pow(static_cast<std::uint64_t>(k)) *
         q_shifted_power(ctx, Rational(1), x, n - k);
}

Rational mkz_basis(QContext &ctx, int k, int n, const Rational &x) {
  require_unit_interval(x, "MKZ");
  require_index(n, "MKZ", "n");
  require_index(k, "MKZ", "k");
  return q_binomial(ctx, n + k + 1, k) * x.pow(static_cast<std::uint64_t>(k)) *
         q_shifted_power(ctx, Rational(1), x, n);
}

Rational beta_basis(QContext &ctx, int k, int n, const Rational &x) {
  if (x.sign() < 0)
    throw DomainError("q-Beta basis: x must be non-negative, got " + x.str());
  if (n < 1)
    throw DomainError("q-Beta basis: n must be at least 1");
  require_index(k, "q-Beta", "k");
  // q^{k(k-1)/2}
  const auto tri = static_cast<std::uint64_t>(k) * static_cast<std::uint64_t>(k > 0 ? k - 1 : 0) / 2;
  return ctx.q().pow(tri) * x.pow(static_cast<std::uint64_t>(k)) /
         (q_beta(ctx, k + 1, n) * q_shifted_power(ctx, Rational(1), -x, n + k + 1));
}

BasisValue evaluate_basis(QContext &ctx, BasisFamily family, int k, int n, const Rational &x) {
  Rational value;
  switch (family) {
  case BasisFamily::bernstein:
    value = bernstein_basis(ctx, k, n, x);
    break;
  case BasisFamily::mkz:
    value = mkz_basis(ctx, k, n, x);
    break;
  case BasisFamily::beta:
    value = beta_basis(ctx, k, n, x);
    break;
  }
  return {family, k, n, x, std::move(value)};
}

} // namespace qgf
