#include "grossone/expr.hpp"

#include <sstream>

#include "grossone/error.hpp"

namespace grossone {

struct Expr::Node {
  ExprKind kind;
  GrossNumber value;
  std::vector<Expr> children;
};

Expr::Expr() : node_(std::make_shared<const Node>(Node{ExprKind::Atom, {}, {}})) {}

Expr Expr::atom(GrossNumber value) {
  return Expr(std::make_shared<const Node>(Node{ExprKind::Atom, std::move(value), {}}));
}

Expr Expr::add(std::vector<Expr> terms) {
  if (terms.empty()) return atom(GrossNumber());
  if (terms.size() == 1) return terms.front();
  return Expr(std::make_shared<const Node>(Node{ExprKind::Add, {}, std::move(terms)}));
}

Expr Expr::mul(std::vector<Expr> factors) {
  if (factors.empty()) return atom(GrossNumber(1));
  if (factors.size() == 1) return factors.front();
  return Expr(std::make_shared<const Node>(Node{ExprKind::Mul, {}, std::move(factors)}));
}

Expr Expr::div(Expr numerator, Expr denominator) {
  return Expr(std::make_shared<const Node>(Node{ExprKind::Div, {}, {std::move(numerator), std::move(denominator)}}));
}

Expr Expr::pow(Expr base, Expr exponent) {
  return Expr(std::make_shared<const Node>(Node{ExprKind::Pow, {}, {std::move(base), std::move(exponent)}}));
}

Expr Expr::floor_sqrt() {
  static const Expr instance(std::make_shared<const Node>(Node{ExprKind::FloorSqrt, {}, {}}));
  return instance;
}

ExprKind Expr::kind() const { return node_->kind; }
const GrossNumber& Expr::value() const { return node_->value; }
const std::vector<Expr>& Expr::children() const { return node_->children; }

bool operator==(const Expr& a, const Expr& b) { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const Expr& a, const Expr& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (a.kind() != b.kind()) return static_cast<int>(a.kind()) <=> static_cast<int>(b.kind());
  if (a.kind() == ExprKind::Atom) return compare(a.value(), b.value());
  const auto& xs = a.children();
  const auto& ys = b.children();
  if (xs.size() != ys.size()) return xs.size() <=> ys.size();
  for (std::size_t i = 0; i < xs.size(); ++i)
    if (const auto c = xs[i] <=> ys[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

Expr operator+(const Expr& a, const Expr& b) { return Expr::add({a, b}); }
Expr operator-(const Expr& a, const Expr& b) { return Expr::add({a, -b}); }
Expr operator*(const Expr& a, const Expr& b) { return Expr::mul({a, b}); }
Expr operator/(const Expr& a, const Expr& b) { return Expr::div(a, b); }
Expr operator-(const Expr& a) { return Expr::mul({Expr::atom(GrossNumber(-1)), a}); }

namespace {

unsigned long bit_size(const Rational& r) {
  return mpz_sizeinbase(r.value().get_num_mpz_t(), 2) + mpz_sizeinbase(r.value().get_den_mpz_t(), 2);
}

Rational power(const Rational& base, const Rational& exponent) {
  if (!exponent.is_integer() || exponent.sign() < 0)
    throw NonIntegerExponent("exponent evaluates to " + exponent.to_string() +
                             ", not a nonnegative integer");
  const BigInt k = exponent.numerator();
  if (base.is_zero() || base == Rational(1)) return k == 0 ? Rational(1) : base;
  if (base == Rational(-1)) return mpz_odd_p(k.get_mpz_t()) ? base : Rational(1);
  if (!k.fits_ulong_p() || bit_size(base) * k.get_ui() > kMaxSubstitutionBits)
    throw SubstitutionOverflow(base.to_string() + "^" + k.get_str() + " is too large to evaluate");
  return base.pow(k.get_si());
}

}  // namespace

Rational substitute_expr(const Expr& e, const BigInt& n) {
  if (n < 1) throw InvalidArgument("substitution needs a positive integer n, got " + n.get_str());
  switch (e.kind()) {
    case ExprKind::Atom:
      return substitute(e.value(), n);
    case ExprKind::Add: {
      Rational total;
      for (const auto& c : e.children()) total += substitute_expr(c, n);
      return total;
    }
    case ExprKind::Mul: {
      Rational product(1);
      for (const auto& c : e.children()) product *= substitute_expr(c, n);
      return product;
    }
    case ExprKind::Div: {
      const Rational den = substitute_expr(e.denominator(), n);
      if (den.is_zero()) throw DivisionByZero("denominator vanishes at n=" + n.get_str());
      return substitute_expr(e.numerator(), n) / den;
    }
    case ExprKind::Pow:
      return power(substitute_expr(e.base(), n), substitute_expr(e.exponent(), n));
    case ExprKind::FloorSqrt: {
      BigInt root;
      mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
      return Rational(root);
    }
  }
  return Rational();
}

std::string to_string(Dominance d) {
  switch (d) {
    case Dominance::Less: return "<";
    case Dominance::Equal: return "=";
    case Dominance::Greater: return ">";
    case Dominance::Unknown: return "unknown";
  }
  return "?";
}

bool has_infinite_power(const Expr& e) {
  if (e.kind() == ExprKind::Pow) {
    const Expr& x = e.exponent();
    if (!x.is_atom() || !x.value().is_finite()) return true;
  }
  for (const auto& c : e.children())
    if (has_infinite_power(c)) return true;
  return false;
}

std::string debug_string(const Expr& e) {
  static constexpr const char* kNames[] = {"atom", "add", "mul", "div", "pow", "floor-sqrt"};
  if (e.kind() == ExprKind::FloorSqrt) return "(floor-sqrt)";
  std::ostringstream out;
  out << "(" << kNames[static_cast<int>(e.kind())];
  if (e.is_atom()) out << " " << to_string(e.value());
  for (const auto& c : e.children()) out << " " << debug_string(c);
  out << ")";
  return out.str();
}

std::ostream& operator<<(std::ostream& os, const Expr& e) { return os << debug_string(e); }

}  // namespace grossone
