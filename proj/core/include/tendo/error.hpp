#pragma once

#include <stdexcept>
#include <string>

namespace tendo {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A precondition on an argument was violated.
class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what) : Error("invalid argument: " + what) {}
};

/// The request is well-formed but outside the supported range.
class Unsupported : public Error {
 public:
  explicit Unsupported(const std::string& what) : Error("unsupported: " + what) {}
};

/// Malformed textual input. `where` locates the offending token.
class ParseError : public Error {
 public:
  ParseError(const std::string& where, const std::string& what)
      : Error("parse error at " + where + ": " + what), where_(where) {}
  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

/// An internal consistency check failed. Indicates a library bug.
class InternalError : public Error {
 public:
  explicit InternalError(const std::string& what) : Error("internal error: " + what) {}
};

/// Throws InvalidArgument with `message` unless `condition` holds.
void require(bool condition, const std::string& message);

}  // namespace tendo
