#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "grossone/expr.hpp"

namespace grossone {

enum class TokenKind { Number, Grossone, Operator, LeftParen, RightParen, Identifier };

struct Token {
  TokenKind kind;
  std::string lexeme;
  std::size_t position;  // byte offset in the input
};

/// Splits input into tokens, skipping whitespace. Numbers are INT, INT.DIGITS
/// or INT/POSINT written without spaces; the grossone symbol is "G1",
/// "grossone" or U+2460. Throws LexError at the first unrecognized byte.
std::vector<Token> tokenize(std::string_view input);

/// Recursive descent over
///   expr  := term (("+"|"-") term)*
///   term  := unary (("*"|"/") unary)*
///   unary := "-" unary | power
///   power := atom ("^" unary)?
///   atom  := NUMBER | GROSSONE | "(" expr ")" | "floor" "(" "sqrt" "(" GROSSONE ")" ")"
/// and returns the simplified tree. Throws ParseError.
Expr parse(const std::vector<Token>& tokens);

/// parse(tokenize(text)) without the final simplification.
Expr parse_unsimplified(std::string_view text);

inline Expr parse_expression(std::string_view text) { return parse(tokenize(text)); }

struct RenderOptions {
  bool unicode = false;  // print U+2460 instead of G1
};

/// Canonical text. A top-level gross-number is printed with spaced signs
/// ("5.7*G1^16.8 - 7.4*G1^-14.9"); everything else is compact.
std::string render(const Expr& e, const RenderOptions& options = {});

}  // namespace grossone
