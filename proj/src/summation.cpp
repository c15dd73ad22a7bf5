#include "grossone/summation.hpp"

#include "grossone/error.hpp"

namespace grossone {

namespace {

Expr atom(const GrossNumber& g) { return Expr::atom(g); }

bool is_one(const Expr& q) { return q.is_atom() && q.value() == GrossNumber(1); }

void check_bounds(const SumSpec& spec) {
  if (sign(spec.lower) < 0) throw MalformedSpec("lower bound " + to_string(spec.lower) + " is negative");
  if (compare(spec.lower, spec.upper) > 0)
    throw MalformedSpec("lower bound " + to_string(spec.lower) + " exceeds upper bound " + to_string(spec.upper));
}

BigInt integer_bound(const GrossNumber& bound, const BigInt& n) {
  const Rational v = substitute(bound, n);
  if (!v.is_integer()) throw MalformedSpec("bound " + to_string(bound) + " is not an integer at n=" + n.get_str());
  return v.numerator();
}

}  // namespace

Expr sum_geometric(const SumSpec& spec) {
  if (spec.form != SumForm::Geometric) throw MalformedSpec("not a geometric sum");
  check_bounds(spec);
  const Expr q = simplify(spec.ratio);
  if (is_one(q)) return atom(spec.upper - spec.lower + 1);
  const Expr first = Expr::pow(q, atom(spec.lower));
  const Expr past_last = Expr::pow(q, atom(spec.upper + 1));
  return simplify((first - past_last) / (atom(GrossNumber(1)) - q));
}

Expr sum_k_qk(const SumSpec& spec) {
  if (spec.form != SumForm::ArithmeticoGeometric) throw MalformedSpec("not an arithmetico-geometric sum");
  if (spec.lower != GrossNumber(1)) throw MalformedSpec("sum of k*q^k needs lower bound 1, got " + to_string(spec.lower));
  check_bounds(spec);
  const Expr q = simplify(spec.ratio);
  const GrossNumber& n = spec.upper;
  if (is_one(q)) return simplify(atom(n) * atom(n + 1) / atom(GrossNumber(2)));
  const Expr one = atom(GrossNumber(1));
  const Expr inner = one - atom(n + 1) * Expr::pow(q, atom(n)) + atom(n) * Expr::pow(q, atom(n + 1));
  return simplify(q * inner / Expr::pow(one - q, atom(GrossNumber(2))));
}

Expr closed_form(const SumSpec& spec) {
  return spec.form == SumForm::Geometric ? sum_geometric(spec) : sum_k_qk(spec);
}

Rational direct_sum(const SumSpec& spec, const BigInt& n) {
  const Rational q = substitute_expr(spec.ratio, n);
  const BigInt lo = integer_bound(spec.lower, n);
  const BigInt hi = integer_bound(spec.upper, n);
  if (lo < 0 || lo > hi) throw MalformedSpec("empty or negative range at n=" + n.get_str());
  if (!lo.fits_slong_p()) throw SubstitutionOverflow("lower bound too large");
  Rational power = q.pow(lo.get_si());
  Rational total;
  for (BigInt k = lo; k <= hi; ++k) {
    total += spec.form == SumForm::Geometric ? power : Rational(k) * power;
    power *= q;
  }
  return total;
}

bool verify_sum_finite(const SumSpec& spec, const BigInt& n) {
  return direct_sum(spec, n) == substitute_expr(closed_form(spec), n);
}

}  // namespace grossone
