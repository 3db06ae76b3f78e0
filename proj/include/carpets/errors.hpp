#ifndef CARPETS_ERRORS_HPP
#define CARPETS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace carpets {

// Caller passed something malformed: bad descriptor, mismatched fields,
// index out of range.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input is well-formed but outside the mathematical domain of the
// operation (inverse of zero, m = 0 for the row rescale, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Refused to materialize something larger than the configured guard.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// A consistency check that should be impossible failed.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace carpets

#endif  // CARPETS_ERRORS_HPP
