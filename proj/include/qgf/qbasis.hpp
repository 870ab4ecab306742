#pragma once

#include <optional>
#include <string_view>

#include "qgf/qcore.hpp"
#include "qgf/rational.hpp"

namespace qgf {

enum class BasisFamily { bernstein, mkz, beta };

std::string_view to_string(BasisFamily family);
std::optional<BasisFamily> basis_family_from_string(std::string_view name);

struct BasisValue {
  BasisFamily family;
  int k;
  int n;
  Rational x;
  Rational value;
};

/// b_{k,n}(x) = [n choose k]_q x^k (1-x)_q^{n-k}, 0 <= x <= 1. Zero for k > n.
Rational bernstein_basis(QContext &ctx, int k, int n, const Rational &x);

/// m_{k,n}(x) = [n+k+1 choose k]_q x^k (1-x)_q^n, 0 <= x <= 1.
Rational mkz_basis(QContext &ctx, int k, int n, const Rational &x);

/// v_{k,n}(x) = q^{k(k-1)/2} x^k / (B_q(k+1,n) (1+x)_q^{n+k+1}), x >= 0, n >= 1.
Rational beta_basis(QContext &ctx, int k, int n, const Rational &x);

BasisValue evaluate_basis(QContext &ctx, BasisFamily family, int k, int n, const Rational &x);

} // namespace qgf
