#include <cctype>

#include "grossone/error.hpp"
#include "grossone/syntax.hpp"

namespace grossone {

namespace {

constexpr std::string_view kCircledOne = "\xE2\x91\xA0";

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }

std::size_t scan_digits(std::string_view s, std::size_t i) {
  while (i < s.size() && is_digit(s[i])) ++i;
  return i;
}

}  // namespace

std::vector<Token> tokenize(std::string_view input) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < input.size()) {
    const char c = input[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (is_digit(c)) {
      i = scan_digits(input, i);
      if (i < input.size() && input[i] == '.') {
        if (i + 1 >= input.size() || !is_digit(input[i + 1])) throw LexError(i, "expected digits after '.'");
        i = scan_digits(input, i + 1);
      } else if (i + 1 < input.size() && input[i] == '/' && is_digit(input[i + 1])) {
        const std::size_t end = scan_digits(input, i + 1);
        const auto den = input.substr(i + 1, end - i - 1);
        if (den.find_first_not_of('0') != std::string_view::npos) i = end;
      }
      tokens.push_back({TokenKind::Number, std::string(input.substr(start, i - start)), start});
    } else if (input.substr(i).starts_with(kCircledOne)) {
      i += kCircledOne.size();
      tokens.push_back({TokenKind::Grossone, std::string(kCircledOne), start});
    } else if (is_ident_start(c)) {
      while (i < input.size() && is_ident_char(input[i])) ++i;
      std::string word(input.substr(start, i - start));
      const bool grossone = word == "G1" || word == "grossone";
      tokens.push_back({grossone ? TokenKind::Grossone : TokenKind::Identifier, std::move(word), start});
    } else if (c == '+' || c == '-' || c == '*' || c == '/' || c == '^') {
      tokens.push_back({TokenKind::Operator, std::string(1, c), start});
      ++i;
    } else if (c == '(') {
      tokens.push_back({TokenKind::LeftParen, "(", start});
      ++i;
    } else if (c == ')') {
      tokens.push_back({TokenKind::RightParen, ")", start});
      ++i;
    } else {
      throw LexError(start, "unrecognized character");
    }
  }
  return tokens;
}

}  // namespace grossone
