#pragma once

#include <stdexcept>
#include <string>

namespace pmahler {

// Raised when an argument lies outside the domain of an operation
// (zero divisor, point outside a convergence disc, bad prime, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// The Laurent polynomial has a zero on the p-adic torus, so its
// Shnirelman integrals of log_p^k do not exist.
class NonvanishingError : public DomainError {
 public:
  explicit NonvanishingError(const std::string& what) : DomainError(what) {}
};

// Malformed literal, polynomial JSON or command line.
class ParseError : public std::invalid_argument {
 public:
  explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace pmahler
