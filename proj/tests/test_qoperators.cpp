#include <cmath>
#include <stdexcept>

#include <doctest.h>

#include "oracles.hpp"
#include "qgf/errors.hpp"
#include "qgf/qoperators.hpp"

using qgf::FunctionSpec;
using qgf::QContext;
using qgf::Rational;

namespace {

std::vector<FunctionSpec> catalog() {
  return {FunctionSpec::const1(),       FunctionSpec::identity(), FunctionSpec::square(),
          FunctionSpec::monomial(3),    FunctionSpec::reciprocal1p(), FunctionSpec::expneg()};
}

double mkz_row_sum(double q, int n, double x) {
  return 1.0 / ((1.0 - std::pow(q, n) * x) * (1.0 - std::pow(q, n + 1) * x));
}

} // namespace

TEST_CASE("FunctionSpec catalog") {
  CHECK(FunctionSpec::parse("const1") == FunctionSpec::const1());
  CHECK(FunctionSpec::parse("monomial:2") == FunctionSpec::square());
  CHECK(FunctionSpec::parse("monomial(4)")->degree() == 4);
  CHECK(FunctionSpec::parse("monomial:4")->name() == "monomial:4");
  CHECK_FALSE(FunctionSpec::parse("sin").has_value());
  CHECK_FALSE(FunctionSpec::parse("monomial:-1").has_value());
  CHECK_FALSE(FunctionSpec::parse("monomial").has_value());

  CHECK(FunctionSpec::square()(Rational(2, 3)) == Rational(4, 9));
  CHECK(FunctionSpec::const1()(Rational(0)) == Rational(1));
  CHECK_THROWS_AS(FunctionSpec::expneg()(Rational(1)), qgf::DomainError);
  CHECK(FunctionSpec::reciprocal1p()(1.0) == 0.5);
  CHECK(FunctionSpec::expneg()(0.0) == 1.0);
  CHECK_THROWS_AS(FunctionSpec::monomial(400)(1e10), std::overflow_error);
  CHECK_THROWS_AS(FunctionSpec::identity()(INFINITY), std::overflow_error);
}

TEST_CASE("bernstein_op examples") {
  for (const auto &q : {Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(1)}) {
    QContext ctx(q);
    for (int n = 1; n <= 6; ++n)
      for (const auto &x : {Rational(0), Rational(1, 3), Rational(5, 6), Rational(1)}) {
        CHECK(*bernstein_op_exact(ctx, FunctionSpec::const1(), n, x).exact == Rational(1));
        CHECK(*bernstein_op_exact(ctx, FunctionSpec::identity(), n, x).exact == x);
      }
    CHECK(*bernstein_op_exact(ctx, FunctionSpec::square(), 1, Rational(2, 7)).exact == Rational(2, 7));
  }
  // classical second moment x^2 + x(1-x)/n at q = 1
  QContext one(Rational(1));
  const Rational x(1, 3);
  CHECK(*bernstein_op_exact(one, FunctionSpec::square(), 4, x).exact == x * x + x * (Rational(1) - x) / Rational(4));

  QContext half(Rational(1, 2));
  const auto r = bernstein_op_exact(half, FunctionSpec::identity(), 4, Rational(1, 3));
  CHECK(r.terms_used == 5);
  CHECK(r.residual_estimate == 0.0);
  CHECK(r.converged);
  CHECK_THROWS_AS(bernstein_op_exact(half, FunctionSpec::expneg(), 4, Rational(1, 3)), qgf::DomainError);
  CHECK_THROWS_AS(bernstein_op(half, FunctionSpec::identity(), 4, 1.5), qgf::DomainError);
  CHECK_THROWS_AS(bernstein_op(half, FunctionSpec::identity(), 0, 0.5), qgf::DomainError);
}

TEST_CASE("bernstein_op float mirror agrees with exact mode") {
  for (const auto &q : {Rational(1, 4), Rational(9, 10), Rational(1)}) {
    QContext ctx(q);
    for (int n = 1; n <= 10; ++n)
      for (const auto &x : {Rational(1, 7), Rational(1, 2), Rational(9, 10)})
        for (const auto &f : {FunctionSpec::const1(), FunctionSpec::identity(), FunctionSpec::square()}) {
          const double exact = bernstein_op_exact(ctx, f, n, x).value;
          CHECK(bernstein_op(ctx, f, n, x.to_double()).value == doctest::Approx(exact).epsilon(1e-13));
        }
  }
}

TEST_CASE("mkz_op examples") {
  QContext half(Rational(1, 2));
  const auto r = mkz_op(half, FunctionSpec::const1(), 1, 0.5);
  CHECK(r.converged);
  CHECK(std::fabs(r.value - 32.0 / 21.0) <= 1e-12);
  CHECK(std::fabs(r.value - 32.0 / 21.0) <= r.residual_estimate + 1e-15);

  for (const auto &f : catalog()) {
    const auto z = mkz_op(half, f, 3, 0.0);
    CHECK(z.value == f(0.0));
    CHECK(z.converged);
  }

  // 200-term exact brute force as the oracle
  const double oracle = qgf::oracle::mkz_operator_bruteforce(Rational(1, 2), 2, Rational(1, 4), 1, 200).to_double();
  const auto id = mkz_op(half, FunctionSpec::identity(), 2, 0.25);
  CHECK(std::fabs(id.value - oracle) <= 1e-12);

  QContext one(Rational(1));
  CHECK_THROWS_AS(mkz_op(one, FunctionSpec::const1(), 1, 0.5), qgf::DomainError);
  CHECK_THROWS_AS(mkz_op(half, FunctionSpec::const1(), 1, 0.995), qgf::DomainError);
  CHECK_THROWS_AS(mkz_op(half, FunctionSpec::const1(), 1, 0.5, {0.0, 0}), qgf::DomainError);
}

TEST_CASE("mkz_op converges to the row sum, error below the residual estimate") {
  for (double q : {0.25, 0.5, 0.75, 0.9}) {
    QContext ctx(Rational::parse(std::to_string(q)));
    for (int n = 1; n <= 6; ++n)
      for (double x : {0.0, 0.125, 0.5, 0.9, 0.99}) {
        double previous_error = INFINITY;
        for (double tol : {1e-4, 1e-8, 1e-12}) {
          const auto r = mkz_op(ctx, FunctionSpec::const1(), n, x, {tol, 0});
          REQUIRE(r.converged);
          const double err = std::fabs(r.value - mkz_row_sum(q, n, x));
          CHECK(err <= r.residual_estimate + 4e-16 * r.value);
          CHECK(err <= previous_error + 1e-15);
          previous_error = err;
        }
      }
  }
}

TEST_CASE("mkz_op reports non-convergence when k_max is too small") {
  QContext ctx(Rational(9, 10));
  const auto r = mkz_op(ctx, FunctionSpec::const1(), 1, 0.95, {1e-12, 10});
  CHECK_FALSE(r.converged);
  CHECK(r.terms_used == 10);
  CHECK(r.residual_estimate > 1e-12);
}

TEST_CASE("mkz_op exact mode matches the brute-force oracle") {
  QContext ctx(Rational(1, 2));
  const auto r = mkz_op_exact(ctx, FunctionSpec::square(), 2, Rational(1, 3), 30);
  CHECK(*r.exact == qgf::oracle::mkz_operator_bruteforce(Rational(1, 2), 2, Rational(1, 3), 2, 30));
  CHECK(r.terms_used == 30);
  CHECK(r.residual_estimate > 0.0);
  CHECK(r.residual_estimate < 1e-10);
  CHECK_THROWS_AS(mkz_op_exact(ctx, FunctionSpec::const1(), 2, Rational(1), 30), qgf::DomainError);
}

TEST_CASE("beta_op examples") {
  QContext half(Rational(1, 2));
  for (const auto &f : catalog()) {
    const auto z = beta_op(half, f, 2, 0.0);
    CHECK(z.value == doctest::Approx(f(0.0)).epsilon(1e-15));
    CHECK(z.converged);
  }
  const auto r = beta_op(half, FunctionSpec::const1(), 1, 1.0);
  CHECK(r.converged);
  CHECK(std::fabs(r.value - 1.0) <= 1e-9);

  // partial sums 1/3, 11/15 of the exact weights
  CHECK(qgf::oracle::beta_operator_bruteforce(Rational(1, 2), 1, Rational(1), 0, 1) == Rational(1, 3));
  CHECK(qgf::oracle::beta_operator_bruteforce(Rational(1, 2), 1, Rational(1), 0, 2) == Rational(11, 15));

  QContext near_one(Rational(9999, 10000));
  const auto classical = beta_op(near_one, FunctionSpec::const1(), 1, 0.5);
  CHECK(classical.converged);
  CHECK(std::fabs(classical.value - 1.0) <= 1e-9);

  QContext one(Rational(1));
  CHECK_THROWS_AS(beta_op(one, FunctionSpec::const1(), 1, 0.5), qgf::DomainError);
  CHECK_THROWS_AS(beta_op(half, FunctionSpec::const1(), 0, 0.5), qgf::DomainError);
  CHECK_THROWS_AS(beta_op(half, FunctionSpec::const1(), 1, -0.5), qgf::DomainError);
}

TEST_CASE("beta_op float sum against the 200-term exact oracle") {
  for (const auto &q : {Rational(1, 4), Rational(1, 2), Rational(3, 4)})
    for (int n : {1, 3})
      for (const auto &x : {Rational(1, 2), Rational(3)})
        for (int degree : {0, 1, 2}) {
          QContext ctx(q);
          const double oracle = qgf::oracle::beta_operator_bruteforce(q, n, x, degree, 200).to_double();
          const auto r = beta_op(ctx, FunctionSpec::monomial(degree), n, x.to_double());
          REQUIRE(r.converged);
          CHECK(std::fabs(r.value - oracle) <= 1e-12 * std::max(1.0, oracle) + r.residual_estimate);
        }
}

TEST_CASE("beta_op exact mode") {
  QContext ctx(Rational(1, 2));
  const auto r = beta_op_exact(ctx, FunctionSpec::identity(), 2, Rational(3, 2), 40);
  CHECK(*r.exact == qgf::oracle::beta_operator_bruteforce(Rational(1, 2), 2, Rational(3, 2), 1, 40));
  CHECK(r.converged);
  const auto z = beta_op_exact(ctx, FunctionSpec::square(), 2, Rational(0), 3);
  CHECK(*z.exact == Rational(0));
  CHECK(z.residual_estimate == 0.0);
}

TEST_CASE("beta_op raises overflow when f cannot be evaluated at a node") {
  // q small and x large: weights stay significant while nodes 4^k blow past double range
  QContext ctx(Rational(1, 4));
  CHECK_THROWS_AS(beta_op(ctx, FunctionSpec::monomial(300), 1, 1e6, {1e-300, 500}), std::overflow_error);
}

TEST_CASE("operators are positive and monotone") {
  const std::vector<std::pair<FunctionSpec, FunctionSpec>> ordered = {
      // pointwise f <= g on [0, inf) restricted to the relevant node sets
      {FunctionSpec::expneg(), FunctionSpec::const1()},
      {FunctionSpec::reciprocal1p(), FunctionSpec::const1()},
  };
  for (const auto &q : {Rational(1, 4), Rational(1, 2), Rational(3, 4)}) {
    QContext ctx(q);
    for (int n = 1; n <= 5; ++n) {
      for (double x : {0.0, 0.3, 0.7, 0.95}) {
        for (const auto &f : catalog()) {
          CHECK(bernstein_op(ctx, f, n, x).value >= 0.0);
          CHECK(mkz_op(ctx, f, n, x).value >= 0.0);
        }
        for (const auto &[f, g] : ordered) {
          CHECK(bernstein_op(ctx, f, n, x).value <= bernstein_op(ctx, g, n, x).value);
          CHECK(mkz_op(ctx, f, n, x).value <= mkz_op(ctx, g, n, x).value);
        }
        // on the Bernstein nodes (all in [0,1]) u^2 <= u
        CHECK(bernstein_op(ctx, FunctionSpec::square(), n, x).value <=
              bernstein_op(ctx, FunctionSpec::identity(), n, x).value + 1e-15);
      }
      for (double x : {0.0, 0.5, 1.0, 3.0}) {
        for (const auto &f : catalog())
          CHECK(beta_op(ctx, f, n, x).value >= 0.0);
        for (const auto &[f, g] : ordered)
          CHECK(beta_op(ctx, f, n, x).value <= beta_op(ctx, g, n, x).value + 1e-15);
      }
    }
  }
}

TEST_CASE("operator nodes") {
  for (const auto &q : {Rational(1, 4), Rational(1, 2), Rational(9, 10)}) {
    QContext ctx(q);
    for (int n = 1; n <= 5; ++n) {
      const Rational sup = (Rational(1) - ctx.power(n)).reciprocal();
      for (int k = 0; k <= n; ++k) {
        CHECK(bernstein_node(ctx, k, n).sign() >= 0);
        CHECK(bernstein_node(ctx, k, n) <= Rational(1));
      }
      // MKZ nodes run past 1 but stay below 1/(1-q^n)
      for (int k = 0; k <= 60; ++k)
        CHECK(bernstein_node(ctx, k, n) < sup);
      CHECK(beta_node(ctx, 0, n) == Rational(0));
      for (int k = 0; k < 40; ++k)
        CHECK(beta_node(ctx, k, n) < beta_node(ctx, k + 1, n));
      CHECK(beta_node(ctx, 40, n) > bernstein_node(ctx, 40, n));
    }
  }
}

TEST_CASE("evaluate_operator dispatches family and mode") {
  qgf::OperatorRequest req;
  req.family = qgf::BasisFamily::bernstein;
  req.f = FunctionSpec::identity();
  req.n = 4;
  req.x = Rational(1, 3);
  req.mode = qgf::EvalMode::exact;
  CHECK(*qgf::evaluate_operator(Rational(1, 2), req).exact == Rational(1, 3));

  req.family = qgf::BasisFamily::mkz;
  req.f = FunctionSpec::const1();
  req.n = 1;
  req.x = Rational(1, 2);
  req.mode = qgf::EvalMode::floating;
  CHECK(qgf::evaluate_operator(Rational(1, 2), req).value == doctest::Approx(32.0 / 21.0).epsilon(1e-12));
}
