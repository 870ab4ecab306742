#include "qgf/parallel.hpp"

#include <algorithm>
#include <cstdint>

#include <omp.h>

namespace qgf {

namespace {

Rational convolve_at(std::span<const Rational> a, std::span<const Rational> b, std::size_t j) {
  Rational acc;
  const std::size_t lo = j >= b.size() ? j - b.size() + 1 : 0;
  const std::size_t hi = std::min(j, a.size() - 1);
  for (std::size_t i = lo; i <= hi; ++i)
    acc += a[i] * b[j - i];
  return acc;
}

} // namespace

int worker_threads() { return omp_get_max_threads(); }

void for_each_index(std::size_t count, const std::function<void(std::size_t)> &body, Execution exec) {
  if (exec == Execution::serial) {
    for (std::size_t i = 0; i < count; ++i)
      body(i);
    return;
  }
  std::exception_ptr error;
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(qgf_for_each_error)
      if (!error)
        error = std::current_exception();
    }
  }
  if (error)
    std::rethrow_exception(error);
}

std::vector<Rational> cauchy_product_serial(std::span<const Rational> a, std::span<const Rational> b,
                                            std::size_t order) {
  std::vector<Rational> out(order + 1);
  if (a.empty() || b.empty())
    return out;
  for (std::size_t j = 0; j <= order; ++j)
    out[j] = convolve_at(a, b, j);
  return out;
}

std::vector<Rational> cauchy_product_parallel(std::span<const Rational> a, std::span<const Rational> b,
                                              std::size_t order) {
  std::vector<Rational> out(order + 1);
  if (a.empty() || b.empty())
    return out;
  const auto n = static_cast<std::int64_t>(order) + 1;
  // work per coefficient grows with j, so hand out small chunks
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t j = 0; j < n; ++j)
    out[static_cast<std::size_t>(j)] = convolve_at(a, b, static_cast<std::size_t>(j));
  return out;
}

} // namespace qgf
