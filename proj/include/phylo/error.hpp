#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace phylo {

enum class ErrorKind {
  NoCommand,
  InvalidCommand,
  MissingType,
  InvalidType,
  RepeatedCommand,
  MissingInput,
  ParseFailure,
  IoFailure,
  // Input that parsed fine but is outside an operation's domain
  // (Jukes-Cantor argument >= 3/4, metric/kind mismatch, tree/matrix mismatch).
  InvalidInput,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// User-facing failure. Anything thrown that is not an Error is treated as an
/// internal failure by the workflow driver.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised by distance metrics and corrections when a formula leaves its domain.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& detail)
      : Error(ErrorKind::InvalidInput, detail) {}
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& detail) {
  throw Error(kind, detail);
}

}  // namespace phylo
