#include <cctype>

#include "grossone/syntax.hpp"

namespace grossone {

namespace {

// Binding strength of a rendered piece.
enum Level { kSum = 1, kProduct = 2, kNegated = 3, kPower = 4, kPrimary = 5 };

struct Piece {
  std::string text;
  int level;
};

std::string wrap(const Piece& p) { return "(" + p.text + ")"; }

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Renderer {
 public:
  explicit Renderer(const RenderOptions& options) : symbol_(options.unicode ? "\xE2\x91\xA0" : "G1") {}

  std::string top(const Expr& e) const {
    if (e.is_atom()) return to_string(e.value(), symbol_, true);
    return piece(e).text;
  }

  Piece piece(const Expr& e) const {
    switch (e.kind()) {
      case ExprKind::Atom: return atom(e.value());
      case ExprKind::FloorSqrt: return {"floor(sqrt(" + symbol_ + "))", kPrimary};
      case ExprKind::Pow: return power(e);
      case ExprKind::Mul: return product(e);
      case ExprKind::Div: return quotient(e);
      case ExprKind::Add: return sum(e);
    }
    return {"?", kPrimary};
  }

 private:
  Piece atom(const GrossNumber& g) const {
    const std::string text = to_string(g, symbol_, false);
    if (g.is_zero()) return {text, kPrimary};
    if (g.size() > 1) return {text, kSum};
    const Rational& c = g.leading_coefficient();
    const Rational& p = g.leading_exponent();
    if (c.sign() < 0) return {text, kNegated};
    if (p.is_zero()) return {text, c.has_terminating_decimal() ? kPrimary : kProduct};
    if (c != Rational(1)) return {text, kProduct};
    return {text, p == Rational(1) ? kPrimary : kPower};
  }

  Piece power(const Expr& e) const {
    const Piece base = piece(e.base());
    const Piece exponent = piece(e.exponent());
    std::string text = base.level >= kPrimary ? base.text : wrap(base);
    text += "^";
    const bool bare = exponent.level >= kPower ||
                      (exponent.level == kNegated && e.exponent().is_atom() && e.exponent().value().is_finite() &&
                       e.exponent().value().as_finite()->has_terminating_decimal());
    text += bare ? exponent.text : wrap(exponent);
    return {text, kPower};
  }

  Piece product(const Expr& e) const {
    const auto& xs = e.children();
    if (xs.front().is_atom() && xs.front().value() == GrossNumber(-1)) {
      const std::vector<Expr> rest(xs.begin() + 1, xs.end());
      const Piece inner = piece(Expr::mul(rest));
      return {"-" + (inner.level >= kProduct && inner.level != kNegated ? inner.text : wrap(inner)), kNegated};
    }
    std::string text;
    bool first = true;
    for (const auto& x : xs) {
      const Piece p = piece(x);
      const bool ok = x.kind() != ExprKind::Div && p.level >= kProduct && (first || p.level != kNegated);
      if (!first) text += "*";
      text += ok ? p.text : wrap(p);
      first = false;
    }
    return {text, text.front() == '-' ? kNegated : kProduct};
  }

  Piece quotient(const Expr& e) const {
    const Piece num = piece(e.numerator());
    const Piece den = piece(e.denominator());
    std::string top = num.level >= kProduct ? num.text : wrap(num);
    std::string bottom = den.level >= kPower ? den.text : wrap(den);
    if (is_digit(top.back()) && !top.ends_with("G1") && is_digit(bottom.front())) bottom = wrap(den);
    return {top + "/" + bottom, top.front() == '-' ? kNegated : kProduct};
  }

  Piece sum(const Expr& e) const {
    std::string text;
    bool first = true;
    for (const auto& x : e.children()) {
      const Piece p = piece(x);
      if (first) {
        text = p.text;
      } else if (p.text.front() == '-') {
        text += p.text;
      } else {
        text += "+" + p.text;
      }
      first = false;
    }
    return {text, kSum};
  }

  std::string symbol_;
};

}  // namespace

std::string render(const Expr& e, const RenderOptions& options) { return Renderer(options).top(e); }

}  // namespace grossone
