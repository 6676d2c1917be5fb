#pragma once

#include <stdexcept>
#include <string>

namespace ctxprob {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input text: bad JSON, bad "p/q" syntax, structural fields missing or unknown.
struct ParseError : Error {
  using Error::Error;
};

// Well-formed input that violates a precondition: invalid logic, unknown context,
// non-orthonormal basis, matrix not doubly stochastic, and so on.
struct DomainError : Error {
  using Error::Error;
};

}  // namespace ctxprob
