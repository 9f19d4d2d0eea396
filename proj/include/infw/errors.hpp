#pragma once

#include <stdexcept>
#include <string>

namespace infw {

// Operands live on different ground sets (or different sizes).
class SizeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A subset handed to restrict() is not invariant under the permutation.
class NotInvariant : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input is not a member of the family an operation was defined on.
// The message names the condition that failed.
class NotMember : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A configured enumeration cap would be exceeded.
class CapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Malformed textual input (cycle strings, polynomials, rationals).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Evaluation outside the domain of an analytic function (on a branch cut,
// at a pole, at an endpoint of a density).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace infw
