#include "qgf/qoperators.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "qgf/errors.hpp"

namespace qgf {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// [j]_q in double; expm1 keeps q close to 1 accurate
double qint(double q, double j) {
  if (q == 1.0)
    return j;
  const double lq = std::log(q);
  return std::expm1(j * lq) / std::expm1(lq);
}

void require_degree(int n, const char *op) {
  if (n < 1)
    throw DomainError(std::string(op) + ": n must be at least 1, got " + std::to_string(n));
}

void require_exact(const FunctionSpec &f) {
  if (!f.exact())
    throw DomainError("function '" + f.name() + "' has no exact evaluation; use float mode");
}

double geometric_tail(double term, double ratio) {
  if (term == 0.0)
    return 0.0;
  if (!(ratio < 1.0))
    return kInf;
  return term * ratio / (1.0 - ratio);
}

struct Accumulator {
  double sum = 0.0;
  double abs_sum = 0.0;
  double previous = kInf;
  std::size_t terms = 0;

  // Adds one term; returns true once the sum may stop.
  bool add(double value, double magnitude, double tail, double tol) {
    sum += value;
    abs_sum += magnitude;
    ++terms;
    const bool done = magnitude < tol && magnitude <= previous && tail < tol;
    previous = magnitude;
    return done;
  }

  // Each weight is a running product of O(k + n) roundings of a few ulps.
  double rounding_bound(int n) const {
    constexpr double eps = std::numeric_limits<double>::epsilon();
    return 16.0 * eps * static_cast<double>(terms + static_cast<std::size_t>(n) + 8) * abs_sum;
  }

  OperatorResult finish(int n, double tail, bool converged) const {
    return {sum, std::nullopt, terms, tail + rounding_bound(n), converged};
  }
};

} // namespace

FunctionSpec FunctionSpec::monomial(int degree) {
  if (degree < 0)
    throw DomainError("monomial degree must be non-negative");
  switch (degree) {
  case 0:
    return const1();
  case 1:
    return identity();
  case 2:
    return square();
  default:
    return FunctionSpec(Kind::monomial, degree);
  }
}

std::optional<FunctionSpec> FunctionSpec::parse(std::string_view name) {
  if (name == "const1")
    return const1();
  if (name == "identity")
    return identity();
  if (name == "square")
    return square();
  if (name == "reciprocal1p")
    return reciprocal1p();
  if (name == "expneg")
    return expneg();
  constexpr std::string_view prefix = "monomial";
  if (name.substr(0, prefix.size()) != prefix)
    return std::nullopt;
  std::string_view rest = name.substr(prefix.size());
  if (rest.size() >= 2 && rest.front() == '(' && rest.back() == ')')
    rest = rest.substr(1, rest.size() - 2);
  else if (!rest.empty() && rest.front() == ':')
    rest.remove_prefix(1);
  else
    return std::nullopt;
  int degree = 0;
  auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), degree);
  if (ec != std::errc() || ptr != rest.data() + rest.size() || degree < 0)
    return std::nullopt;
  return monomial(degree);
}

std::string FunctionSpec::name() const {
  switch (kind_) {
  case Kind::const1:
    return "const1";
  case Kind::identity:
    return "identity";
  case Kind::square:
    return "square";
  case Kind::monomial:
    return "monomial:" + std::to_string(degree_);
  case Kind::reciprocal1p:
    return "reciprocal1p";
  case Kind::expneg:
    return "expneg";
  }
  return "unknown";
}

Rational FunctionSpec::operator()(const Rational &u) const {
  require_exact(*this);
  return u.pow(static_cast<std::uint64_t>(degree_));
}

double FunctionSpec::operator()(double u) const {
  if (!std::isfinite(u))
    throw std::overflow_error("function '" + name() + "' evaluated at a non-finite node");
  double v = 0.0;
  switch (kind_) {
  case Kind::reciprocal1p:
    v = 1.0 / (1.0 + u);
    break;
  case Kind::expneg:
    v = std::exp(-u);
    break;
  default:
    v = std::pow(u, degree_);
    break;
  }
  if (!std::isfinite(v))
    throw std::overflow_error("function '" + name() + "' overflows at node " + std::to_string(u));
  return v;
}

double FunctionSpec::sup_abs(double lo, double hi) const {
  if (std::isinf(hi) && increasing())
    return kInf;
  return increasing() ? std::fabs((*this)(hi)) : std::fabs((*this)(lo));
}

double FunctionSpec::growth_bound(double argument_ratio) const {
  return increasing() ? std::pow(argument_ratio, degree_) : 1.0;
}

Rational bernstein_node(QContext &ctx, int k, int n) { return ctx.integer(k) / ctx.integer(n); }

Rational beta_node(QContext &ctx, int k, int n) {
  if (k == 0)
    return Rational(0);
  return ctx.integer(k) / (ctx.power(k - 1) * ctx.integer(n));
}

OperatorResult bernstein_op(QContext &ctx, const FunctionSpec &f, int n, double x) {
  require_degree(n, "q-Bernstein operator");
  if (!(x >= 0.0 && x <= 1.0))
    throw DomainError("q-Bernstein operator: x must lie in [0,1]");
  const double q = ctx.q().to_double();
  const double qn = qint(q, n);

  // (1-x)_q^{n-k} for k = n..0, built from the short end
  std::vector<double> shifted(static_cast<std::size_t>(n) + 1, 1.0);
  for (int m = 1; m <= n; ++m)
    shifted[static_cast<std::size_t>(m)] = shifted[static_cast<std::size_t>(m - 1)] * (1.0 - std::pow(q, m - 1) * x);

  OperatorResult out;
  double binom = 1.0;
  double xk = 1.0;
  for (int k = 0; k <= n; ++k) {
    if (k > 0) {
      binom *= qint(q, n - k + 1) / qint(q, k);
      xk *= x;
    }
    const double weight = binom * xk * shifted[static_cast<std::size_t>(n - k)];
    out.value += weight * f(qint(q, k) / qn);
  }
  out.terms_used = static_cast<std::size_t>(n) + 1;
  return out;
}

OperatorResult mkz_op(QContext &ctx, const FunctionSpec &f, int n, double x, SumControl control) {
  ctx.require_q_below_one("q-MKZ operator");
  require_degree(n, "q-MKZ operator");
  if (!(x >= 0.0 && x <= kMkzFloatMaxX))
    throw DomainError("q-MKZ operator: float mode needs 0 <= x <= 0.99");
  if (!(control.tol > 0.0))
    throw DomainError("q-MKZ operator: tol must be positive");
  const std::size_t k_max = control.k_max ? control.k_max : kMkzDefaultKMax;
  const double q = ctx.q().to_double();
  const double qn = qint(q, n);
  // nodes [k]/[n] increase to 1/(1-q^n)
  const double fsup = f.sup_abs(0.0, 1.0 / -std::expm1(n * std::log(q)));

  double weight = 1.0;
  for (int s = 0; s < n; ++s)
    weight *= 1.0 - std::pow(q, s) * x;

  Accumulator acc;
  double tail = kInf;
  for (std::size_t k = 0; k < k_max; ++k) {
    const auto kd = static_cast<double>(k);
    // weights decrease geometrically once ratio < 1, and the ratio itself decreases in k
    const double ratio = x * qint(q, n + kd + 2) / qint(q, kd + 1);
    tail = geometric_tail(weight, ratio) * fsup;
    if (acc.add(weight * f(qint(q, kd) / qn), weight * fsup, tail, control.tol))
      return acc.finish(n, tail, true);
    weight *= ratio;
  }
  return acc.finish(n, tail, tail <= control.tol);
}

OperatorResult beta_op(QContext &ctx, const FunctionSpec &f, int n, double x, SumControl control) {
  ctx.require_q_below_one("q-Beta operator");
  require_degree(n, "q-Beta operator");
  if (!(x >= 0.0) || !std::isfinite(x))
    throw DomainError("q-Beta operator: x must be non-negative");
  if (!(control.tol > 0.0))
    throw DomainError("q-Beta operator: tol must be positive");
  const std::size_t k_max = control.k_max ? control.k_max : kBetaDefaultKMax;
  const double q = ctx.q().to_double();
  const double qn = qint(q, n);

  // v_{k,n}(x)/[n]_q, starting from 1/(1+x)_q^{n+1}
  double weight = 1.0;
  for (int s = 0; s <= n; ++s)
    weight /= 1.0 + std::pow(q, s) * x;

  Accumulator acc;
  double tail = kInf;
  for (std::size_t k = 0; k < k_max; ++k) {
    const auto kd = static_cast<double>(k);
    const double node = k == 0 ? 0.0 : qint(q, kd) / (std::pow(q, kd - 1) * qn);
    const double fv = f(node);
    const double term = weight * std::fabs(fv);
    if (x == 0.0) {
      tail = 0.0;
    } else if (k > 0) {
      // both the weight ratio bound and the node ratio decrease in k
      const double weight_ratio = std::pow(q, kd) * x * qint(q, n + kd + 1) / qint(q, kd + 1);
      const double node_ratio = qint(q, kd + 1) / (q * qint(q, kd));
      tail = geometric_tail(term, weight_ratio * f.growth_bound(node_ratio));
    }
    if (acc.add(weight * fv, term, tail, control.tol))
      return acc.finish(n, tail, true);
    weight *= std::pow(q, kd) * qint(q, n + kd + 1) / qint(q, kd + 1) * x / (1.0 + std::pow(q, n + kd + 1) * x);
  }
  return acc.finish(n, tail, tail <= control.tol);
}

OperatorResult bernstein_op_exact(QContext &ctx, const FunctionSpec &f, int n, const Rational &x) {
  require_exact(f);
  require_degree(n, "q-Bernstein operator");
  Rational sum;
  for (int k = 0; k <= n; ++k)
    sum += bernstein_basis(ctx, k, n, x) * f(bernstein_node(ctx, k, n));
  return {sum.to_double(), sum, static_cast<std::size_t>(n) + 1, 0.0, true};
}

OperatorResult mkz_op_exact(QContext &ctx, const FunctionSpec &f, int n, const Rational &x, std::size_t terms) {
  require_exact(f);
  ctx.require_q_below_one("q-MKZ operator");
  require_degree(n, "q-MKZ operator");
  if (x.sign() < 0 || x >= Rational(1))
    throw DomainError("q-MKZ operator: x must lie in [0,1)");
  if (terms == 0)
    throw DomainError("q-MKZ operator: exact mode needs at least one term");

  Rational weight = q_shifted_power(ctx, Rational(1), x, n);
  Rational sum;
  for (std::size_t k = 0; k < terms; ++k) {
    const int ki = static_cast<int>(k);
    sum += weight * f(bernstein_node(ctx, ki, n));
    if (k + 1 < terms)
      weight *= x * ctx.integer(n + ki + 2) / ctx.integer(ki + 1);
  }
  const int last = static_cast<int>(terms) - 1;
  const double ratio = (x * ctx.integer(n + last + 2) / ctx.integer(last + 1)).to_double();
  const double q = ctx.q().to_double();
  const double fsup = f.sup_abs(0.0, 1.0 / -std::expm1(n * std::log(q)));
  const double tail = geometric_tail(weight.to_double(), ratio) * fsup;
  return {sum.to_double(), sum, terms, tail, std::isfinite(tail)};
}

OperatorResult beta_op_exact(QContext &ctx, const FunctionSpec &f, int n, const Rational &x, std::size_t terms) {
  require_exact(f);
  ctx.require_q_below_one("q-Beta operator");
  require_degree(n, "q-Beta operator");
  if (x.sign() < 0)
    throw DomainError("q-Beta operator: x must be non-negative");
  if (terms == 0)
    throw DomainError("q-Beta operator: exact mode needs at least one term");

  Rational weight = q_shifted_power(ctx, Rational(1), -x, n + 1).reciprocal();
  Rational sum;
  Rational last_term;
  for (std::size_t k = 0; k < terms; ++k) {
    const int ki = static_cast<int>(k);
    last_term = weight * f(beta_node(ctx, ki, n));
    sum += last_term;
    if (k + 1 < terms)
      weight *= ctx.power(ki) * ctx.integer(n + ki + 1) / ctx.integer(ki + 1) * x /
                (Rational(1) + ctx.power(n + ki + 1) * x);
  }
  double tail = 0.0;
  if (!x.is_zero()) {
    const int k = static_cast<int>(terms) - 1;
    if (k == 0) {
      tail = kInf;
    } else {
      const double weight_ratio =
          (ctx.power(k) * x * ctx.integer(n + k + 1) / ctx.integer(k + 1)).to_double();
      const double node_ratio = (ctx.integer(k + 1) / (ctx.q() * ctx.integer(k))).to_double();
      tail = geometric_tail(last_term.to_double(), weight_ratio * f.growth_bound(node_ratio));
    }
  }
  return {sum.to_double(), sum, terms, tail, std::isfinite(tail)};
}

OperatorResult evaluate_operator(const Rational &q, const OperatorRequest &request) {
  QContext ctx(q);
  const bool exact = request.mode == EvalMode::exact;
  switch (request.family) {
  case BasisFamily::bernstein:
    if (exact)
      return bernstein_op_exact(ctx, request.f, request.n, request.x);
    return bernstein_op(ctx, request.f, request.n, request.x.to_double());
  case BasisFamily::mkz:
    if (exact)
      return mkz_op_exact(ctx, request.f, request.n, request.x, request.exact_terms);
    return mkz_op(ctx, request.f, request.n, request.x.to_double(), request.control);
  case BasisFamily::beta:
    if (exact)
      return beta_op_exact(ctx, request.f, request.n, request.x, request.exact_terms);
    return beta_op(ctx, request.f, request.n, request.x.to_double(), request.control);
  }
  throw std::logic_error("unknown operator family");
}

std::vector<OperatorResult> evaluate_operator_grid(const Rational &q, std::span<const OperatorRequest> requests,
                                                   Execution exec) {
  std::vector<OperatorResult> results(requests.size());
  for_each_index(
      requests.size(), [&](std::size_t i) { results[i] = evaluate_operator(q, requests[i]); }, exec);
  return results;
}

} // namespace qgf
