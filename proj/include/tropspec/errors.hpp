#pragma once

#include <stdexcept>
#include <string>

namespace tropspec {

/// Base class for all domain errors raised by this library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Checked 64-bit rational arithmetic left the representable range.
struct OverflowError : Error {
  explicit OverflowError(const std::string& what) : Error(what) {}
};

struct DimensionError : Error {
  explicit DimensionError(const std::string& what) : Error(what) {}
};

/// A spectral operation received a matrix whose graph is not strongly
/// connected.
struct ReducibleMatrixError : Error {
  explicit ReducibleMatrixError(const std::string& what) : Error(what) {}
};

struct NoCircuitError : Error {
  explicit NoCircuitError(const std::string& what) : Error(what) {}
};

/// The Kleene star has -inf entries (a negative circuit exists).
struct DivergentStarError : Error {
  explicit DivergentStarError(const std::string& what) : Error(what) {}
};

/// A complex pivot block failed the invertibility test.
struct SingularBlockError : Error {
  explicit SingularBlockError(const std::string& what) : Error(what) {}
};

/// First-order data is insufficient to determine branch asymptotics.
struct DegenerateError : Error {
  explicit DegenerateError(const std::string& what) : Error(what) {}
};

struct NonSimpleEigenvalueError : Error {
  explicit NonSimpleEigenvalueError(const std::string& what) : Error(what) {}
};

struct SingularLevelError : Error {
  explicit SingularLevelError(const std::string& what) : Error(what) {}
};

struct NoNonzeroAnchorError : Error {
  explicit NoNonzeroAnchorError(const std::string& what) : Error(what) {}
};

struct ConvergenceError : Error {
  explicit ConvergenceError(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace tropspec
