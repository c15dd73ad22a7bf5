#pragma once

#include <map>
#include <vector>

#include "grossone/expr.hpp"

namespace grossone::nf {

// A power base^exponent that is not folded into a coefficient.
struct Factor {
  Expr base;
  Expr exponent;
};

// Factors with pairwise distinct bases, sorted by base.
using Monomial = std::vector<Factor>;

// Non-empty monomials first, the constant monomial last.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

using Poly = std::map<Monomial, GrossNumber, MonomialOrder>;

struct Fraction {
  Poly num;
  Poly den;
};

inline constexpr long kMaxAtomPower = 256;
inline constexpr long kMaxUnitShift = 100000;
inline constexpr long kMaxPolyPower = 16;

Fraction normal_form(const Expr& e);
Expr to_expr(const Fraction& f);

Fraction add(const Fraction& a, const Fraction& b);
Fraction mul(const Fraction& a, const Fraction& b);
Fraction divide(const Fraction& a, const Fraction& b);

bool is_constant(const Poly& p);
GrossNumber constant_value(const Poly& p);

}  // namespace grossone::nf
