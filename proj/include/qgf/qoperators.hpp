#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qgf/parallel.hpp"
#include "qgf/qbasis.hpp"
#include "qgf/qcore.hpp"
#include "qgf/rational.hpp"

namespace qgf {

/**
 * Test function from a fixed catalog. Every entry is defined, nonnegative and
 * monotone on [0, inf). Monomials (const1, identity, square, monomial(j))
 * evaluate exactly at rationals; reciprocal1p = 1/(1+u) and expneg = exp(-u)
 * are float-only.
 */
class FunctionSpec {
public:
  enum class Kind { const1, identity, square, monomial, reciprocal1p, expneg };

  static FunctionSpec const1() { return FunctionSpec(Kind::const1, 0); }
  static FunctionSpec identity() { return FunctionSpec(Kind::identity, 1); }
  static FunctionSpec square() { return FunctionSpec(Kind::square, 2); }
  static FunctionSpec monomial(int degree);
  static FunctionSpec reciprocal1p() { return FunctionSpec(Kind::reciprocal1p, 0); }
  static FunctionSpec expneg() { return FunctionSpec(Kind::expneg, 0); }

  /// Accepts the catalog names plus "monomial:j" (also "monomial(j)").
  static std::optional<FunctionSpec> parse(std::string_view name);

  Kind kind() const { return kind_; }
  std::string name() const;
  bool exact() const { return kind_ != Kind::reciprocal1p && kind_ != Kind::expneg; }
  bool increasing() const { return exact() && degree_ > 0; }
  /// Polynomial degree for exact kinds.
  int degree() const { return degree_; }

  /// Throws DomainError for float-only kinds.
  Rational operator()(const Rational &u) const;
  /// Throws std::overflow_error when the argument or the result is not finite.
  double operator()(double u) const;

  /// max |f| over [lo, hi], using monotonicity.
  double sup_abs(double lo, double hi) const;

  /// Bound on f(b)/f(a) for 0 < a <= b given the argument ratio b/a.
  double growth_bound(double argument_ratio) const;

  friend bool operator==(const FunctionSpec &, const FunctionSpec &) = default;

private:
  FunctionSpec(Kind kind, int degree) : kind_(kind), degree_(degree) {}

  Kind kind_;
  int degree_;
};

struct OperatorResult {
  double value = 0.0;
  /// Set in exact mode only.
  std::optional<Rational> exact;
  std::size_t terms_used = 0;
  /// Upper bound on the neglected tail; 0 for finite sums. The float-mode
  /// infinite sums add a bound on the accumulated rounding error.
  double residual_estimate = 0.0;
  bool converged = true;
};

struct SumControl {
  double tol = 1e-12;
  std::size_t k_max = 0; // 0 picks the operator's default
};

inline constexpr std::size_t kMkzDefaultKMax = 10'000;
inline constexpr std::size_t kBetaDefaultKMax = 500;
/// Float-mode MKZ points above this have too weak a geometric tail bound.
inline constexpr double kMkzFloatMaxX = 0.99;

// Float mode. The q-integers and basis weights are recomputed in double from
// ctx.q().

OperatorResult bernstein_op(QContext &ctx, const FunctionSpec &f, int n, double x);

/// Sums until the term, its decrease and the geometric tail bound all pass
/// tol, or k_max terms were used (converged = false).
OperatorResult mkz_op(QContext &ctx, const FunctionSpec &f, int n, double x, SumControl control = {});

/// Same stopping rule as mkz_op. The weights carry q^{k(k-1)/2}, so the sum
/// stops after a handful of terms for moderate x.
OperatorResult beta_op(QContext &ctx, const FunctionSpec &f, int n, double x, SumControl control = {});

// Exact mode: monomial f only, rational x, fixed number of terms for the
// infinite sums. residual_estimate still bounds the omitted tail (in double).

OperatorResult bernstein_op_exact(QContext &ctx, const FunctionSpec &f, int n, const Rational &x);
OperatorResult mkz_op_exact(QContext &ctx, const FunctionSpec &f, int n, const Rational &x, std::size_t terms);
OperatorResult beta_op_exact(QContext &ctx, const FunctionSpec &f, int n, const Rational &x, std::size_t terms);

/// Node [k]_q/[n]_q used by the Bernstein and MKZ operators.
Rational bernstein_node(QContext &ctx, int k, int n);
/// Node [k]_q/(q^{k-1}[n]_q) used by the q-Beta operator.
Rational beta_node(QContext &ctx, int k, int n);

enum class EvalMode { exact, floating };

struct OperatorRequest {
  BasisFamily family = BasisFamily::bernstein;
  FunctionSpec f = FunctionSpec::const1();
  int n = 1;
  Rational x;
  EvalMode mode = EvalMode::floating;
  SumControl control;
  std::size_t exact_terms = 64;
};

/// Evaluates one request with a fresh context for q.
OperatorResult evaluate_operator(const Rational &q, const OperatorRequest &request);

/// Evaluates many requests; results are in request order for either execution.
std::vector<OperatorResult> evaluate_operator_grid(const Rational &q, std::span<const OperatorRequest> requests,
                                                   Execution exec = Execution::parallel);

} // namespace qgf
