#include <optional>
#include <set>

#include "grossone/expr.hpp"
#include "normal_form.hpp"

namespace grossone {

namespace {

using nf::Factor;
using nf::Monomial;
using nf::Poly;

std::optional<int> factor_sign(const Factor& f) {
  switch (f.base.kind()) {
    case ExprKind::Atom:
      if (sign(f.base.value()) > 0) return 1;
      return std::nullopt;
    case ExprKind::FloorSqrt:
      return 1;
    default:
      if (dominance_compare(f.base, Expr()) == Dominance::Greater) return 1;
      return std::nullopt;
  }
}

std::optional<int> term_sign(const Monomial& m, const GrossNumber& c) {
  int s = sign(c);
  for (const auto& f : m) {
    const auto fs = factor_sign(f);
    if (!fs) return std::nullopt;
    s *= *fs;
  }
  return s;
}

bool at_least_two(const Expr& base) {
  switch (base.kind()) {
    case ExprKind::Atom:
      return compare(base.value(), GrossNumber(2)) >= 0;
    case ExprKind::FloorSqrt:
      return true;
    default: {
      const Dominance d = dominance_compare(base, Expr::atom(GrossNumber(2)));
      return d == Dominance::Greater || d == Dominance::Equal;
    }
  }
}

// delta >= c*G1 for some c > 0.
bool grows_linearly(const Expr& delta) {
  if (delta.is_atom()) {
    const GrossNumber& d = delta.value();
    return !d.is_zero() && d.leading_exponent() >= Rational(1) && d.leading_coefficient().sign() > 0;
  }
  return dominance_compare(delta, Expr::atom(GrossNumber::grossone())) == Dominance::Greater;
}

const Expr* exponent_of(const Monomial& m, const Expr& base) {
  for (const auto& f : m)
    if (f.base == base) return &f.exponent;
  return nullptr;
}

// t / u grows without bound: every base exponent difference is zero or at
// least linear in G1 over a base >= 2, and at least one is nonzero.
bool dominates(const Monomial& t, const Monomial& u) {
  std::set<Expr> bases;
  for (const auto& f : t) bases.insert(f.base);
  for (const auto& f : u) bases.insert(f.base);
  bool grows = false;
  for (const auto& base : bases) {
    const Expr* et = exponent_of(t, base);
    const Expr* eu = exponent_of(u, base);
    const Expr delta = simplify((et ? *et : Expr()) - (eu ? *eu : Expr()));
    if (delta.is_atom() && delta.value().is_zero()) continue;
    if (!grows_linearly(delta) || !at_least_two(base)) return false;
    grows = true;
  }
  return grows;
}

std::optional<int> poly_sign(const Poly& p) {
  if (p.empty()) return 0;
  if (nf::is_constant(p)) return sign(nf::constant_value(p));
  for (auto it = p.begin(); it != p.end(); ++it) {
    bool all = true;
    for (auto other = p.begin(); other != p.end() && all; ++other)
      if (other != it && !dominates(it->first, other->first)) all = false;
    if (all) return term_sign(it->first, it->second);
  }
  std::optional<int> common;
  for (const auto& [m, c] : p) {
    const auto s = term_sign(m, c);
    if (!s || (common && *common != *s)) return std::nullopt;
    common = s;
  }
  return common;
}

}  // namespace

Dominance dominance_compare(const Expr& a, const Expr& b) {
  const Expr sa = simplify(a);
  const Expr sb = simplify(b);
  if (sa == sb) return Dominance::Equal;
  const nf::Fraction diff = nf::normal_form(sa - sb);
  if (diff.num.empty()) return Dominance::Unknown;
  const auto sn = poly_sign(diff.num);
  const auto sd = poly_sign(diff.den);
  if (!sn || !sd || *sn == 0 || *sd == 0) return Dominance::Unknown;
  return *sn * *sd > 0 ? Dominance::Greater : Dominance::Less;
}

}  // namespace grossone
