#pragma once

#include <stdexcept>
#include <string>

namespace sylvan {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called on input outside its domain (non-cubic graph,
/// invalid triangle, matching that is not perfect, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class DisconnectedGraphError : public PreconditionError {
 public:
  DisconnectedGraphError() : PreconditionError("graph is not connected") {}
};

/// Malformed graph6 / sparse6 / pgf text.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace sylvan
