#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qgf/parallel.hpp"
#include "qgf/qcore.hpp"
#include "qgf/rational.hpp"

namespace qgf {

/// Identity checked by a verifier.
enum class Identity { bernstein_gf, mkz_gf, beta_gf, exp_identity };

std::string_view to_string(Identity id);
std::optional<Identity> identity_from_string(std::string_view name);

struct VerificationFailure {
  std::size_t index;
  Rational expected;
  Rational got;
  std::string label; // which side of a two-part check; empty otherwise
};

/**
 * Outcome of checking one identity coefficient by coefficient.
 *
 * `fixed_index` is the parameter held fixed (k for the Bernstein identity,
 * n for MKZ and q-Beta, unused for the exponential identity); `bound` is the
 * largest coefficient index checked. Values in failures are exact.
 */
struct VerificationReport {
  Identity identity;
  Rational q;
  std::optional<Rational> x;
  int fixed_index = 0;
  std::size_t bound = 0;
  std::size_t checks_run = 0;
  std::vector<VerificationFailure> failures;

  bool passed() const { return failures.empty(); }
};

/// For n = 0..n_max: [n]_q! * [t^n] gf_bernstein_rhs(k, x) == b_{k,n}(x), including n < k.
VerificationReport verify_bernstein_gf(QContext &ctx, int k, const Rational &x, std::size_t n_max);

/// For k = 0..k_max: [t^k] gf_mkz_rhs(n, x) == m_{k,n}(x). The left side comes
/// from series inversion, the right side from the closed-form q-binomial.
VerificationReport verify_mkz_gf(QContext &ctx, int n, const Rational &x, std::size_t k_max);

/// For k = 0..k_max: [n+k]_q! * [t^k] gf_beta_rhs(n, x) == [n-1]_q! * v_{k,n}(x).
/// The expansion carries the factor [n-1]_q!, so the two sides agree without it only for n <= 2.
VerificationReport verify_beta_gf(QContext &ctx, int n, const Rational &x, std::size_t k_max);

/// e_q(x) E_q(-x) == 1 and e_q(-x) E_q(x) == 1 as formal series in x through x^order.
VerificationReport verify_exp_identity(QContext &ctx, std::size_t order);

/// One verifier invocation inside a suite.
struct VerifyTask {
  Identity identity;
  int fixed_index = 0;
  Rational x;
  std::size_t bound = 0;
};

VerificationReport run_task(QContext &ctx, const VerifyTask &task);

/// Runs every task with its own context for q. Reports come back in task order
/// for either execution.
std::vector<VerificationReport> run_verification(const Rational &q, std::span<const VerifyTask> tasks,
                                                 Execution exec = Execution::parallel);

/// x in {0, 1/7, 1/2, 9/10, 1}; every point lies in all three basis domains.
std::vector<Rational> default_points();

/// Default grid: x in {0, 1/7, 1/2, 9/10, 1} (restricted to each domain),
/// k <= 8 and n <= 16, exponential identity to order 32.
std::vector<VerifyTask> default_tasks(Identity identity);

struct SuiteSummary {
  std::size_t reports = 0;
  std::size_t checks = 0;
  std::size_t failures = 0;
  bool passed() const { return failures == 0; }
};

SuiteSummary summarize(std::span<const VerificationReport> reports);

} // namespace qgf
