#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lyntree {

enum class ErrorKind {
  UnknownSymbol,
  DuplicateSymbol,
  AlphabetMismatch,
  EmptyWord,
  EmptyBase,
  OmegaEqual,
  PreconditionFailed,
  NotLyndon,
  TooShort,
  BadAddress,
  DuplicateEntry,
  EmptySequence,
  SizeMismatch,
  UniquenessViolation,
  ParseError,
  InternalError,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library. The kind is stable and meant to be
// matched on; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Raised by make_word; position is 1-based.
class UnknownSymbolError : public Error {
 public:
  UnknownSymbolError(std::size_t position, char symbol);

  std::size_t position() const noexcept { return position_; }
  char symbol() const noexcept { return symbol_; }

 private:
  std::size_t position_;
  char symbol_;
};

}  // namespace lyntree
