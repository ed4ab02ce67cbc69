#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hamclosure {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed arguments: out-of-range vertices, loops, invalid embeddings.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Text input that does not follow its format (graph6, edge list, params, trace).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// An operation's structural hypothesis (claw-free, claw-o-heavy, ...) fails.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A search ran out of its node or edge budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// A filtered sampler hit its attempt budget without yielding a graph.
class SamplingExhausted : public Error {
 public:
  using Error::Error;
};

/// Family parameters that violate a construction clause.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// A region decomposition that breaks the interior/frontier dichotomy.
class DecompositionError : public Error {
 public:
  using Error::Error;
};

}  // namespace hamclosure
