#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace hive {

// Base of the error hierarchy. Subclasses map to the stable CLI exit codes
// documented in the README (1 config, 2 parse, 3 provider, 4 validation).
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class ProviderError : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

enum class ParseErrorKind {
  NoResultBlock,   // missing <result>...</result> span
  Malformed,       // block present but not a valid JSON array
  SchemaViolation  // a record breaks the field contract
};

class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, const std::string& msg,
             std::optional<std::size_t> record_index = std::nullopt)
      : Error(msg), kind_(kind), record_index_(record_index) {}

  ParseErrorKind kind() const { return kind_; }
  std::optional<std::size_t> record_index() const { return record_index_; }

 private:
  ParseErrorKind kind_;
  std::optional<std::size_t> record_index_;
};

// Raised by edit() when scoring produced no positive-score scene at all.
class EmptyHighlightsError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Raised by edit() when every top-k clip was skipped during boundary selection.
class NoWindowsError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Internal signal: a clip whose boundary filter returned an empty opening or
// ending set. edit() catches it and moves on to the next clip.
class ClipSkippedError : public Error {
 public:
  using Error::Error;
};

}  // namespace hive
