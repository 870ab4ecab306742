#pragma once

#include <stdexcept>

namespace qgf {

// A parameter lies outside the region where an operation is defined
// (q outside (0,1], x outside a basis domain, division by zero, ...).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// Series with a vanishing constant term has no multiplicative inverse.
class NotInvertible : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// Coefficient requested past the retained order of a truncated series.
class TruncationError : public std::out_of_range {
public:
  using std::out_of_range::out_of_range;
};

} // namespace qgf
