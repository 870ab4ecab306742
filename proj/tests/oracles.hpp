#pragma once

// Independent reference computations for the tests. Nothing here calls into
// the library's q-calculus code; only the Rational type is shared.

#include <cstdint>
#include <random>
#include <vector>

#include "qgf/rational.hpp"

namespace qgf::oracle {

inline Rational power(const Rational &q, int e) {
  Rational r(1);
  for (int i = 0; i < e; ++i)
    r *= q;
  return r;
}

/// [k]_q as the plain geometric sum 1 + q + ... + q^{k-1}.
inline Rational qint(const Rational &q, int k) {
  Rational r;
  for (int i = 0; i < k; ++i)
    r += power(q, i);
  return r;
}

inline Rational qfact(const Rational &q, int k) {
  Rational r(1);
  for (int j = 1; j <= k; ++j)
    r *= qint(q, j);
  return r;
}

/// Table C[n][k] of Gaussian binomials from C(n,k) = C(n-1,k-1) + q^k C(n-1,k).
inline std::vector<std::vector<Rational>> pascal_table(const Rational &q, int n_max) {
  std::vector<std::vector<Rational>> c(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    auto &row = c[static_cast<std::size_t>(n)];
    row.assign(static_cast<std::size_t>(n) + 1, Rational(0));
    row[0] = Rational(1);
    row[static_cast<std::size_t>(n)] = Rational(1);
    for (int k = 1; k < n; ++k) {
      const auto &up = c[static_cast<std::size_t>(n - 1)];
      row[static_cast<std::size_t>(k)] =
          up[static_cast<std::size_t>(k - 1)] + power(q, k) * up[static_cast<std::size_t>(k)];
    }
  }
  return c;
}

/// Coefficients of the Gaussian polynomial [n choose k] in q: entry j counts
/// partitions of j into at most k parts, each at most n-k.
inline std::vector<std::int64_t> gaussian_polynomial(int n, int k) {
  const int parts = k, largest = n - k;
  std::vector<std::int64_t> coeff(static_cast<std::size_t>(parts * largest) + 1, 0);
  // non-increasing part sequences bounded by `largest`
  const auto enumerate = [&](auto &&self, int idx, int cap, int sum) -> void {
    if (idx == parts) {
      ++coeff[static_cast<std::size_t>(sum)];
      return;
    }
    for (int v = 0; v <= cap; ++v)
      self(self, idx + 1, v, sum + v);
  };
  enumerate(enumerate, 0, largest, 0);
  return coeff;
}

inline Rational evaluate_polynomial(const std::vector<std::int64_t> &coeff, const Rational &q) {
  Rational acc;
  for (auto it = coeff.rbegin(); it != coeff.rend(); ++it)
    acc = acc * q + Rational(static_cast<long>(*it));
  return acc;
}

/// prod_{s=0}^{n-1} (a - q^s b)
inline Rational shifted(const Rational &q, const Rational &a, const Rational &b, int n) {
  Rational r(1);
  for (int s = 0; s < n; ++s)
    r *= a - power(q, s) * b;
  return r;
}

/// Tables q^i and [i]_q for i = 0..size-1, by direct accumulation.
struct Tables {
  std::vector<Rational> pw, qi;
  Tables(const Rational &q, int size) : pw(static_cast<std::size_t>(size)), qi(static_cast<std::size_t>(size)) {
    pw[0] = Rational(1);
    for (std::size_t i = 1; i < pw.size(); ++i)
      pw[i] = pw[i - 1] * q;
    for (std::size_t i = 1; i < qi.size(); ++i)
      qi[i] = qi[i - 1] + pw[i - 1];
  }
  const Rational &p(int i) const { return pw[static_cast<std::size_t>(i)]; }
  const Rational &i(int k) const { return qi[static_cast<std::size_t>(k)]; }
};

/// q-Beta operator on f(u) = u^degree, summing `terms` terms exactly from the
/// closed form v_{k,n}(x)/[n]_q = q^{k(k-1)/2} [n+k]! / ([k]! [n]!) x^k / (1+x)_q^{n+k+1}.
inline Rational beta_operator_bruteforce(const Rational &q, int n, const Rational &x, int degree, int terms) {
  const Tables t(q, n + terms + 2);
  Rational sum;
  Rational fact_k(1), fact_n(1);
  for (int j = 1; j <= n; ++j)
    fact_n *= t.i(j);
  Rational fact_nk = fact_n;
  Rational tri(1); // q^{k(k-1)/2}
  Rational xk(1);
  Rational denom(1);
  for (int s = 0; s <= n; ++s)
    denom *= Rational(1) + t.p(s) * x;
  for (int k = 0; k < terms; ++k) {
    if (k > 0) {
      fact_k *= t.i(k);
      fact_nk *= t.i(n + k);
      tri *= t.p(k - 1);
      xk *= x;
      denom *= Rational(1) + t.p(n + k) * x;
    }
    const Rational weight = tri * fact_nk / (fact_k * fact_n) * xk / denom;
    const Rational node = k == 0 ? Rational(0) : t.i(k) / (t.p(k - 1) * t.i(n));
    sum += weight * node.pow(static_cast<std::uint64_t>(degree));
  }
  return sum;
}

/// q-MKZ operator on u^degree, `terms` terms, each weight from the closed form.
inline Rational mkz_operator_bruteforce(const Rational &q, int n, const Rational &x, int degree, int terms) {
  const Tables t(q, n + terms + 2);
  Rational sum;
  Rational base(1);
  for (int s = 0; s < n; ++s)
    base *= Rational(1) - t.p(s) * x;
  Rational binom(1); // [n+k+1 choose k]
  Rational xk(1);
  for (int k = 0; k < terms; ++k) {
    if (k > 0) {
      binom = binom * t.i(n + k + 1) / t.i(k);
      xk *= x;
    }
    sum += binom * xk * base * (t.i(k) / t.i(n)).pow(static_cast<std::uint64_t>(degree));
  }
  return sum;
}

/// Random rational with numerator in [-span, span] and denominator in [1, den_max].
inline Rational random_rational(std::mt19937_64 &rng, long span, long den_max) {
  std::uniform_int_distribution<long> num(-span, span), den(1, den_max);
  return Rational(num(rng), den(rng));
}

} // namespace qgf::oracle
