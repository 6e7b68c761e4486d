#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace accel {

enum class ErrorKind {
  NonFiniteValue,
  InvalidParams,
  SingularSystem,
  DegenerateDifference,
  ParseError,
  ContextError,
  DomainError,
  UnboundParameter,
  QuadratureNoConvergence,
};

std::string_view to_string(ErrorKind kind);

/// Base exception for everything the library throws. `kind()` identifies the
/// failure class so callers can branch without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse failure with the byte offset into the source text and the set of
/// tokens that would have been accepted there.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, std::string expected, const std::string& what)
      : Error(ErrorKind::ParseError, what),
        offset_(offset),
        expected_(std::move(expected)) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::string expected_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace accel
