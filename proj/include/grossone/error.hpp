#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace grossone {

/// Base class for every domain error raised by the library. `kind()` is the
/// stable error name printed by the CLI diagnostics ("DivisionInexact", ...).
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

  /// "Kind: message", the one-line form used on the error stream.
  std::string diagnostic() const { return kind_ + ": " + what(); }

 private:
  std::string kind_;
};

#define GROSSONE_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                         \
   public:                                                            \
    explicit Name(const std::string& message) : Error(#Name, message) {} \
  };

GROSSONE_DEFINE_ERROR(DivisionByZero)
GROSSONE_DEFINE_ERROR(DivisionInexact)
GROSSONE_DEFINE_ERROR(NonExactSubstitution)
GROSSONE_DEFINE_ERROR(NonIntegerExponent)
GROSSONE_DEFINE_ERROR(SubstitutionOverflow)
GROSSONE_DEFINE_ERROR(InvalidArgument)
GROSSONE_DEFINE_ERROR(MalformedSpec)
GROSSONE_DEFINE_ERROR(UnknownEntry)
GROSSONE_DEFINE_ERROR(NoOracle)
GROSSONE_DEFINE_ERROR(InapplicableN)
GROSSONE_DEFINE_ERROR(DerivationMismatch)

#undef GROSSONE_DEFINE_ERROR

/// Lexer failure at a byte offset of the input.
class LexError : public Error {
 public:
  LexError(std::size_t position, const std::string& message)
      : Error("LexError", message + " at offset " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Parser failure; `expected()` lists the token classes that would have been accepted.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, std::string expected, const std::string& found)
      : Error("ParseError", "expected " + expected + " but found " + found + " at offset " +
                                std::to_string(position)),
        position_(position),
        expected_(std::move(expected)) {}
  std::size_t position() const noexcept { return position_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

}  // namespace grossone
