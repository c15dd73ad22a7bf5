#include <gtest/gtest.h>

#include "grossone/bounds.hpp"
#include "grossone/error.hpp"
#include "grossone/reference.hpp"
#include "grossone/syntax.hpp"

using namespace grossone;

namespace {

const GrossNumber kG1 = GrossNumber::grossone();

std::vector<std::pair<TokenKind, std::string>> kinds(std::string_view text) {
  std::vector<std::pair<TokenKind, std::string>> out;
  for (const auto& t : tokenize(text)) out.emplace_back(t.kind, t.lexeme);
  return out;
}

}  // namespace

TEST(Tokenize, Basic) {
  using K = TokenKind;
  const std::vector<std::pair<TokenKind, std::string>> expected = {
      {K::Number, "2"}, {K::Operator, "*"}, {K::Grossone, "G1"}, {K::Operator, "+"}, {K::Number, "1"}};
  EXPECT_EQ(kinds("2*G1+1"), expected);
}

TEST(Tokenize, DecimalsStayExact) {
  const auto tokens = tokenize("74.9*G1^42.3");
  ASSERT_EQ(tokens.size(), 5u);
  EXPECT_EQ(tokens[0].lexeme, "74.9");
  EXPECT_EQ(Rational::parse(tokens[0].lexeme), Rational(749, 10));
  EXPECT_EQ(Rational::parse(tokens[4].lexeme), Rational(423, 10));
}

TEST(Tokenize, PositionsAreLossless) {
  const std::string input = "  (2 * G1 +1)^ grossone";
  std::string rebuilt(input.size(), ' ');
  for (const auto& t : tokenize(input)) rebuilt.replace(t.position, t.lexeme.size(), t.lexeme);
  EXPECT_EQ(rebuilt, input);
}

TEST(Tokenize, GrossoneSpellings) {
  for (const char* text : {"G1", "grossone", "\xE2\x91\xA0"}) {
    const auto tokens = tokenize(text);
    ASSERT_EQ(tokens.size(), 1u);
    EXPECT_EQ(tokens[0].kind, TokenKind::Grossone);
  }
}

TEST(Tokenize, RejectsUnknownCharacter) {
  try {
    tokenize("2*\xE2\x8D\xB0");
    FAIL() << "expected LexError";
  } catch (const LexError& e) {
    EXPECT_EQ(e.position(), 2u);
  }
}

TEST(Parse, ReferenceNumbers) {
  EXPECT_EQ(render(parse_expression("74.9*G1^42.3+5.1+13.8*G1^-25.6")), reference::kA);
  EXPECT_EQ(render(parse_expression("74.9*G1^42.3+5.1+13.8*G1^-25.6 * 1")), reference::kA);
}

TEST(Parse, SymbolicPower) {
  EXPECT_EQ(parse_expression("(2*G1+1)^G1"), Expr::pow(Expr::atom(2 * kG1 + 1), Expr::atom(kG1)));
  EXPECT_EQ(parse_expression("G1^0"), Expr::atom(GrossNumber(1)));
}

TEST(Parse, Precedence) {
  EXPECT_EQ(render(parse_expression("-G1^2")), "-G1^2");
  EXPECT_EQ(render(parse_expression("(-G1)^2")), "G1^2");
  EXPECT_EQ(render(parse_expression("2^3^2")), "512");
  EXPECT_EQ(render(parse_expression("2*-3")), "-6");
  EXPECT_EQ(render(parse_expression("8/2/2")), "2");
  EXPECT_EQ(render(parse_expression("1-2-3")), "-4");
  EXPECT_EQ(render(parse_expression("G1^-1")), "G1^-1");
  EXPECT_EQ(render(parse_expression("2^-1")), "0.5");
}

TEST(Parse, FractionLiteralsBindAsNumbers) {
  EXPECT_EQ(parse_expression("G1^1/2"), Expr::atom(GrossNumber::term(1, Rational(1, 2))));
  EXPECT_EQ(parse_expression("G1^1 / 2"), Expr::atom(GrossNumber::term(Rational(1, 2), 1)));
}

TEST(Parse, Errors) {
  try {
    parse_expression("2*(G1+1");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 7u);
    EXPECT_EQ(e.expected(), "')'");
  }
  EXPECT_THROW(parse_expression(""), ParseError);
  EXPECT_THROW(parse_expression("2 3"), ParseError);
  EXPECT_THROW(parse_expression("floor(G1)"), ParseError);
  EXPECT_THROW(parse_expression("1/0"), DivisionByZero);
}

TEST(Render, Canonical) {
  EXPECT_EQ(render(Expr::atom(GrossNumber(1))), "1");
  EXPECT_EQ(render(parse_expression(reference::kE)), reference::kE);
  EXPECT_EQ(render(upper_bound()), "(2*G1+1)*((2*G1+1)^G1*(2*G1^2-1)+1)/(2*G1)");
  EXPECT_EQ(render(parse_expression("1/3*G1")), "1/3*G1");
  EXPECT_EQ(render(parse_expression("G1/3+1")), "1/3*G1 + 1");
  EXPECT_EQ(render(parse_expression("(G1+1)^G1/3")), "(G1+1)^G1/3");
}

TEST(Render, Unicode) {
  EXPECT_EQ(render(parse_expression("2*G1+1"), {true}), "2*\xE2\x91\xA0 + 1");
  EXPECT_EQ(render(parse_expression("(2*G1+1)^G1"), {true}), "(2*\xE2\x91\xA0+1)^\xE2\x91\xA0");
}

TEST(Render, RoundTripReferenceForms) {
  for (const char* text : {reference::kA, reference::kB, reference::kC, reference::kD, reference::kE,
                           reference::kKQKSum, kUpperBoundText}) {
    const Expr e = parse_expression(text);
    EXPECT_EQ(parse_expression(render(e)), e) << text;
    EXPECT_EQ(render(e), text);
  }
}
