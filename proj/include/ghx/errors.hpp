#pragma once

#include <stdexcept>
#include <string>

namespace ghx {

/// Base class for every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Broken call contract: mismatched dimensions, out-of-range degree, ...
struct ContractViolation : Error {
  using Error::Error;
};

/// Numerically degenerate input (zero matrix, zero polynomial).
struct DegenerateInput : Error {
  using Error::Error;
};

/// A documented precondition does not hold.
struct PreconditionError : Error {
  using Error::Error;
};

/// An argument required to lie in a positivity cone does not.
struct ConeViolation : PreconditionError {
  ConeViolation(const std::string& what, int index_in, double margin_in)
      : PreconditionError(what), index(index_in), margin(margin_in) {}
  int index;      ///< position of the offending argument
  double margin;  ///< worst relative sigma-level margin
};

/// Spectral content at or above the aliasing guard frequency.
struct AliasingError : Error {
  using Error::Error;
};

/// Malformed input file; carries the offending position.
struct ParseError : Error {
  ParseError(const std::string& what, int line_in, int column_in)
      : Error(what), line(line_in), column(column_in) {}
  int line;
  int column;
};

}  // namespace ghx
