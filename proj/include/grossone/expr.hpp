#pragma once

#include <compare>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "grossone/gross_number.hpp"

namespace grossone {

enum class ExprKind { Atom, Add, Mul, Div, Pow, FloorSqrt };

/// Immutable expression tree over gross-numbers. Copies share structure.
///
/// Nodes:
///   Atom(g)            a gross-number
///   Add(xs), Mul(xs)   n-ary sum and product
///   Div(num, den)
///   Pow(base, exponent)
///   FloorSqrt          the value floor(sqrt(G1))
class Expr {
 public:
  Expr();  // Atom(0)

  static Expr atom(GrossNumber value);
  static Expr add(std::vector<Expr> terms);
  static Expr mul(std::vector<Expr> factors);
  static Expr div(Expr numerator, Expr denominator);
  static Expr pow(Expr base, Expr exponent);
  static Expr floor_sqrt();

  ExprKind kind() const;
  bool is_atom() const { return kind() == ExprKind::Atom; }
  /// Precondition: is_atom().
  const GrossNumber& value() const;
  /// Add/Mul operands; Div is {numerator, denominator}; Pow is {base, exponent}.
  const std::vector<Expr>& children() const;
  const Expr& numerator() const { return children()[0]; }
  const Expr& denominator() const { return children()[1]; }
  const Expr& base() const { return children()[0]; }
  const Expr& exponent() const { return children()[1]; }

  friend bool operator==(const Expr& a, const Expr& b);
  /// Structural total order: by node kind, then atom value, then children.
  friend std::strong_ordering operator<=>(const Expr& a, const Expr& b);

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

inline Expr lift(const GrossNumber& x) { return Expr::atom(x); }

Expr operator+(const Expr& a, const Expr& b);
Expr operator-(const Expr& a, const Expr& b);
Expr operator*(const Expr& a, const Expr& b);
Expr operator/(const Expr& a, const Expr& b);
Expr operator-(const Expr& a);

/// Canonical form. Atom arithmetic is folded, finite integer powers of atoms
/// are expanded, like powers of one base are merged (q^a * q^b = q^(a+b)) and
/// exact quotients are folded. Throws DivisionByZero when a divisor is zero.
Expr simplify(const Expr& e);
bool is_simplified(const Expr& e);

/// Exact value with G1 replaced by n. Pow exponents must evaluate to
/// nonnegative integers (NonIntegerExponent otherwise).
Rational substitute_expr(const Expr& e, const BigInt& n);

/// Upper limit on the bit size of any intermediate power during substitution.
inline constexpr unsigned long kMaxSubstitutionBits = 1UL << 26;

enum class Dominance { Less, Equal, Greater, Unknown };
std::string to_string(Dominance d);

/// Sound, incomplete ordering. Equal only for identical simplified forms;
/// Unknown whenever the rule set cannot decide.
Dominance dominance_compare(const Expr& a, const Expr& b);

/// S-expression dump for diagnostics, e.g. (pow (atom 2*G1+1) (atom G1)).
std::string debug_string(const Expr& e);
std::ostream& operator<<(std::ostream& os, const Expr& e);

/// True when some Pow in e has an exponent that is not finite.
bool has_infinite_power(const Expr& e);

}  // namespace grossone
