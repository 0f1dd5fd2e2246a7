#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace minedit {

enum class ErrorKind {
  UnknownLanguageTag,
  EmptySource,
  DomainError,
  GoldenIsIdentical,
  InconsistentN,
  ExactTooLarge,
  EmptyGroup,
  NoCorrectSamples,
  EmptyDataset,
  ParseError,
  SchemaError,
  IoError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Base exception for every failure the library reports. The kind is stable
/// and is what callers (and the CLI exit-code mapping) should switch on.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

/// Errors tied to a line of an input stream (1-based).
class LineError : public Error {
public:
  LineError(ErrorKind kind, std::size_t line, const std::string& message)
      : Error(kind, "line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

} // namespace minedit
