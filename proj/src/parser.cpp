#include "grossone/error.hpp"
#include "grossone/syntax.hpp"

namespace grossone {

namespace {

class Parser {
 public:
  Parser(const std::vector<Token>& tokens, std::size_t end) : tokens_(tokens), end_(end) {}

  Expr parse_all() {
    Expr e = expr();
    if (pos_ < tokens_.size()) fail("operator or end of input");
    return e;
  }

 private:
  const Token* peek() const { return pos_ < tokens_.size() ? &tokens_[pos_] : nullptr; }

  bool at_operator(char op) const {
    const Token* t = peek();
    return t && t->kind == TokenKind::Operator && t->lexeme[0] == op;
  }

  [[noreturn]] void fail(const std::string& expected) const {
    const Token* t = peek();
    throw ParseError(t ? t->position : end_, expected, t ? "'" + t->lexeme + "'" : "end of input");
  }

  void expect(TokenKind kind, const std::string& lexeme, const std::string& what) {
    const Token* t = peek();
    if (!t || t->kind != kind || (!lexeme.empty() && t->lexeme != lexeme)) fail(what);
    ++pos_;
  }

  Expr expr() {
    Expr left = term();
    while (at_operator('+') || at_operator('-')) {
      const bool minus = at_operator('-');
      ++pos_;
      Expr right = term();
      left = minus ? left - right : left + right;
    }
    return left;
  }

  Expr term() {
    Expr left = unary();
    while (at_operator('*') || at_operator('/')) {
      const bool divide = at_operator('/');
      ++pos_;
      Expr right = unary();
      left = divide ? left / right : left * right;
    }
    return left;
  }

  Expr unary() {
    if (at_operator('-')) {
      ++pos_;
      return -unary();
    }
    return power();
  }

  Expr power() {
    Expr base = atom();
    if (at_operator('^')) {
      ++pos_;
      return Expr::pow(base, unary());
    }
    return base;
  }

  Expr atom() {
    const Token* t = peek();
    if (!t) fail("number, grossone or '('");
    switch (t->kind) {
      case TokenKind::Number:
        ++pos_;
        return Expr::atom(GrossNumber(Rational::parse(t->lexeme)));
      case TokenKind::Grossone:
        ++pos_;
        return Expr::atom(GrossNumber::grossone());
      case TokenKind::LeftParen: {
        ++pos_;
        Expr inner = expr();
        expect(TokenKind::RightParen, ")", "')'");
        return inner;
      }
      case TokenKind::Identifier:
        if (t->lexeme == "floor") {
          ++pos_;
          expect(TokenKind::LeftParen, "(", "'('");
          expect(TokenKind::Identifier, "sqrt", "'sqrt'");
          expect(TokenKind::LeftParen, "(", "'('");
          expect(TokenKind::Grossone, "", "grossone");
          expect(TokenKind::RightParen, ")", "')'");
          expect(TokenKind::RightParen, ")", "')'");
          return Expr::floor_sqrt();
        }
        break;
      default:
        break;
    }
    fail("number, grossone or '('");
  }

  const std::vector<Token>& tokens_;
  std::size_t end_;
  std::size_t pos_ = 0;
};

std::size_t end_offset(const std::vector<Token>& tokens) {
  return tokens.empty() ? 0 : tokens.back().position + tokens.back().lexeme.size();
}

}  // namespace

Expr parse(const std::vector<Token>& tokens) { return simplify(Parser(tokens, end_offset(tokens)).parse_all()); }

Expr parse_unsimplified(std::string_view text) {
  const auto tokens = tokenize(text);
  return Parser(tokens, text.size()).parse_all();
}

}  // namespace grossone
