#pragma once

#include <stdexcept>
#include <string>

namespace smt {

/// Bad input: out-of-range parameters, malformed tuples, m <= n, ...
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Text that does not parse as an element, monomial or polynomial.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured enumeration or matrix-size cap was exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal invariant failed. These signal bugs and are never expected.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The standard-monomial linear system had no solution or several.
class BasisFailure : public InvariantError {
 public:
  using InvariantError::InvariantError;
};

/// Straightening exceeded its step guard or a rewrite failed to raise the weight.
class TerminationFailure : public InvariantError {
 public:
  using InvariantError::InvariantError;
};

}  // namespace smt
