#include "qgf/verify.hpp"

#include <stdexcept>
#include <string>

#include "qgf/errors.hpp"
#include "qgf/qbasis.hpp"
#include "qgf/qseries.hpp"

namespace qgf {

namespace {

void check(VerificationReport &report, std::size_t index, const Rational &expected, const Rational &got,
           std::string label = {}) {
  ++report.checks_run;
  if (expected != got)
    report.failures.push_back({index, expected, got, std::move(label)});
}

TruncatedSeries alternate_signs(TruncatedSeries s) {
  for (std::size_t j = 1; j <= s.order(); j += 2)
    s[j] = -s[j];
  return s;
}

} // namespace

std::string_view to_string(Identity id) {
  switch (id) {
  case Identity::bernstein_gf:
    return "bernstein-gf";
  case Identity::mkz_gf:
    return "mkz-gf";
  case Identity::beta_gf:
    return "beta-gf";
  case Identity::exp_identity:
    return "exp-identity";
  }
  return "unknown";
}

std::optional<Identity> identity_from_string(std::string_view name) {
  for (Identity id : {Identity::bernstein_gf, Identity::mkz_gf, Identity::beta_gf, Identity::exp_identity})
    if (to_string(id) == name)
      return id;
  return std::nullopt;
}

VerificationReport verify_bernstein_gf(QContext &ctx, int k, const Rational &x, std::size_t n_max) {
  ctx.require_q_below_one("bernstein-gf");
  if (x.sign() < 0 || x > Rational(1))
    throw DomainError("bernstein-gf: x must lie in [0,1]");
  if (k < 0)
    throw DomainError("bernstein-gf: k must be non-negative");

  VerificationReport report{Identity::bernstein_gf, ctx.q(), x, k, n_max, 0, {}};
  const TruncatedSeries rhs = gf_bernstein_rhs(ctx, k, x, n_max);
  for (std::size_t n = 0; n <= n_max; ++n) {
    const int ni = static_cast<int>(n);
    check(report, n, bernstein_basis(ctx, k, ni, x), ctx.factorial(ni) * coefficient(rhs, n));
  }
  return report;
}

VerificationReport verify_mkz_gf(QContext &ctx, int n, const Rational &x, std::size_t k_max) {
  ctx.require_q_below_one("mkz-gf");
  if (x.sign() < 0 || x > Rational(1))
    throw DomainError("mkz-gf: x must lie in [0,1]");
  if (n < 0)
    throw DomainError("mkz-gf: n must be non-negative");

  VerificationReport report{Identity::mkz_gf, ctx.q(), x, n, k_max, 0, {}};
  const TruncatedSeries rhs = gf_mkz_rhs(ctx, n, x, k_max);
  for (std::size_t k = 0; k <= k_max; ++k)
    check(report, k, mkz_basis(ctx, static_cast<int>(k), n, x), coefficient(rhs, k));
  return report;
}

VerificationReport verify_beta_gf(QContext &ctx, int n, const Rational &x, std::size_t k_max) {
  ctx.require_q_below_one("beta-gf");
  if (n < 1)
    throw DomainError("beta-gf: n must be at least 1");
  if (x.sign() < 0)
    throw DomainError("beta-gf: x must be non-negative");

  VerificationReport report{Identity::beta_gf, ctx.q(), x, n, k_max, 0, {}};
  const TruncatedSeries rhs = gf_beta_rhs(ctx, n, x, k_max);
  const Rational scale = ctx.factorial(n - 1);
  for (std::size_t k = 0; k <= k_max; ++k) {
    const int ki = static_cast<int>(k);
    check(report, k, scale * beta_basis(ctx, ki, n, x), ctx.factorial(n + ki) * coefficient(rhs, k));
  }
  return report;
}

VerificationReport verify_exp_identity(QContext &ctx, std::size_t order) {
  ctx.require_q_below_one("exp-identity");
  const auto ord = static_cast<int>(order);
  const TruncatedSeries small(small_qexp_coefficients(ctx, ord), order);
  const TruncatedSeries big(big_qexp_coefficients(ctx, ord), order);

  VerificationReport report{Identity::exp_identity, ctx.q(), std::nullopt, 0, order, 0, {}};
  const TruncatedSeries one = TruncatedSeries::one(order);
  const TruncatedSeries forward = series_mul(small, alternate_signs(big));
  const TruncatedSeries backward = series_mul(alternate_signs(small), big);
  for (std::size_t j = 0; j <= order; ++j)
    check(report, j, one[j], forward[j], "e_q(x)E_q(-x)");
  for (std::size_t j = 0; j <= order; ++j)
    check(report, j, one[j], backward[j], "e_q(-x)E_q(x)");
  return report;
}

VerificationReport run_task(QContext &ctx, const VerifyTask &task) {
  switch (task.identity) {
  case Identity::bernstein_gf:
    return verify_bernstein_gf(ctx, task.fixed_index, task.x, task.bound);
  case Identity::mkz_gf:
    return verify_mkz_gf(ctx, task.fixed_index, task.x, task.bound);
  case Identity::beta_gf:
    return verify_beta_gf(ctx, task.fixed_index, task.x, task.bound);
  case Identity::exp_identity:
    return verify_exp_identity(ctx, task.bound);
  }
  throw std::logic_error("unknown identity");
}

std::vector<VerificationReport> run_verification(const Rational &q, std::span<const VerifyTask> tasks,
                                                 Execution exec) {
  std::vector<std::optional<VerificationReport>> slots(tasks.size());
  for_each_index(
      tasks.size(),
      [&](std::size_t i) {
        QContext ctx(q);
        slots[i] = run_task(ctx, tasks[i]);
      },
      exec);
  std::vector<VerificationReport> reports;
  reports.reserve(slots.size());
  for (auto &slot : slots)
    reports.push_back(std::move(*slot));
  return reports;
}

std::vector<Rational> default_points() {
  return {Rational(0), Rational(1, 7), Rational(1, 2), Rational(9, 10), Rational(1)};
}

std::vector<VerifyTask> default_tasks(Identity identity) {
  const std::vector<Rational> xs = default_points();
  std::vector<VerifyTask> tasks;
  switch (identity) {
  case Identity::bernstein_gf:
    for (int k = 0; k <= 8; ++k)
      for (const auto &x : xs)
        tasks.push_back({identity, k, x, 16});
    break;
  case Identity::mkz_gf:
    for (int n = 0; n <= 16; ++n)
      for (const auto &x : xs)
        tasks.push_back({identity, n, x, 8});
    break;
  case Identity::beta_gf:
    for (int n = 1; n <= 16; ++n)
      for (const auto &x : xs)
        tasks.push_back({identity, n, x, 8});
    break;
  case Identity::exp_identity:
    tasks.push_back({identity, 0, Rational(0), 32});
    break;
  }
  return tasks;
}

SuiteSummary summarize(std::span<const VerificationReport> reports) {
  SuiteSummary s;
  for (const auto &r : reports) {
    ++s.reports;
    s.checks += r.checks_run;
    s.failures += r.failures.size();
  }
  return s;
}

} // namespace qgf
