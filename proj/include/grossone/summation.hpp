#pragma once

#include "grossone/expr.hpp"

namespace grossone {

enum class SumForm {
  Geometric,             // sum q^k for k = lower..upper
  ArithmeticoGeometric,  // sum k*q^k for k = 1..upper
};

struct SumSpec {
  SumForm form = SumForm::Geometric;
  Expr ratio;
  GrossNumber lower;
  GrossNumber upper;
};

/// (q^lower - q^(upper+1)) / (1 - q), or upper - lower + 1 when q = 1.
/// Throws MalformedSpec for lower > upper or a negative lower bound.
Expr sum_geometric(const SumSpec& spec);

/// q*(1 - (N+1)*q^N + N*q^(N+1)) / (1-q)^2 with N = upper, or N*(N+1)/2 when
/// q = 1. Requires lower = 1 (MalformedSpec otherwise).
Expr sum_k_qk(const SumSpec& spec);

/// Dispatches on spec.form.
Expr closed_form(const SumSpec& spec);

/// Term-by-term exact sum with G1 replaced by n.
Rational direct_sum(const SumSpec& spec, const BigInt& n);

/// direct_sum(spec, n) == substitute_expr(closed_form(spec), n).
bool verify_sum_finite(const SumSpec& spec, const BigInt& n);

}  // namespace grossone
