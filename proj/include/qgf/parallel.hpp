#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <span>
#include <vector>

#include "qgf/rational.hpp"

namespace qgf {

enum class Execution { serial, parallel };

/// Number of OpenMP worker threads available to `Execution::parallel`.
int worker_threads();

/**
 * Calls body(i) for i in [0, count). The parallel path distributes indices
 * with a dynamic OpenMP schedule; the first exception thrown by any index is
 * rethrown on the calling thread after the loop. Results must be written to
 * pre-sized per-index slots so output order never depends on scheduling.
 */
void for_each_index(std::size_t count, const std::function<void(std::size_t)> &body,
                    Execution exec = Execution::parallel);

/// Truncated Cauchy product c_j = sum_{i<=j} a_i b_{j-i}, j = 0..order.
/// Serial reference.
std::vector<Rational> cauchy_product_serial(std::span<const Rational> a, std::span<const Rational> b,
                                            std::size_t order);

/// Same product with the output coefficients computed in an OpenMP loop.
std::vector<Rational> cauchy_product_parallel(std::span<const Rational> a, std::span<const Rational> b,
                                              std::size_t order);

} // namespace qgf
