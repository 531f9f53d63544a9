#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ldal {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A family or construction parameter is outside its admissible range.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// An edge set violates the simple-graph invariants (loop, duplicate, range).
class GraphError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input; carries the 1-based line number of the offence.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A labeling is not a bijection onto {1..order}.
class LabelingError : public Error {
 public:
  using Error::Error;
};

/// The hypotheses of a construction do not hold for the given input.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

/// The requested parameter region has no construction and no oracle fallback.
class NotCoveredError : public Error {
 public:
  using Error::Error;
};

/// A graph is larger than the exact-search cap.
class CapExceededError : public Error {
 public:
  using Error::Error;
};

/// A construction produced output that failed its own verification.
/// Always indicates a bug; never returned as a certificate.
class SelfCheckError : public Error {
 public:
  using Error::Error;
};

}  // namespace ldal
