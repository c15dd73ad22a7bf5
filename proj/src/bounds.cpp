#include "grossone/bounds.hpp"

#include <algorithm>

#include "grossone/error.hpp"
#include "grossone/summation.hpp"
#include "grossone/syntax.hpp"

namespace grossone {

namespace {

const GrossNumber g1 = GrossNumber::grossone();

Expr estimate_ratio() { return Expr::atom(2 * g1 + 1); }

// m = c^2 * r with r squarefree.
void split_square(BigInt m, BigInt& c, BigInt& r) {
  c = 1;
  for (BigInt d = 2; d * d <= m; ++d) {
    const BigInt d2 = d * d;
    while (m % d2 == 0) {
      m /= d2;
      c *= d;
    }
  }
  r = m;
}

}  // namespace

Expr lower_bound() { return Expr::atom(4 * g1 + 1); }

std::vector<long> first_primes(long k) {
  if (k < 1) throw InvalidArgument("first_primes needs k >= 1, got " + std::to_string(k));
  std::vector<long> primes;
  long lo = 2;
  long width = 64;
  while (static_cast<long>(primes.size()) < k) {
    // Sieve [lo, lo + width) with the primes found so far, then scan it.
    const long hi = lo + width;
    std::vector<bool> composite(width, false);
    for (long p : primes) {
      if (p * p >= hi) break;
      for (long x = std::max(p * p, (lo + p - 1) / p * p); x < hi; x += p) composite[x - lo] = true;
    }
    for (long x = lo; x < hi && static_cast<long>(primes.size()) < k; ++x) {
      if (composite[x - lo]) continue;
      primes.push_back(x);
      for (long y = x * x; y < hi; y += x) composite[y - lo] = true;
    }
    lo = hi;
    width *= 2;
  }
  return primes;
}

Expr lower_bound_improved(long k) {
  if (k < 1) throw InvalidArgument("k must be >= 1 (for k = 0 use the plain lower bound 4*G1+1)");
  return Expr::atom(4 * g1 + (2 * k + 1));
}

Expr tuple_count(long k) {
  if (k < 1) throw InvalidArgument("tuple_count needs k >= 1, got " + std::to_string(k));
  return simplify(Expr::atom(2 * g1) * Expr::pow(estimate_ratio(), Expr::atom(GrossNumber(k))));
}

Expr upper_bound() {
  static const Expr derived = [] {
    const SumSpec s{SumForm::ArithmeticoGeometric, estimate_ratio(), GrossNumber(1), g1};
    Expr e = simplify(Expr::atom(2 * g1) * sum_k_qk(s));
    const Expr expected = parse_expression(kUpperBoundText);
    if (e != expected)
      throw DerivationMismatch("summation gave " + render(e) + ", expected " + kUpperBoundText);
    return e;
  }();
  return derived;
}

FiniteCheck check_upper_finite(long n) {
  if (n < 1) throw InvalidArgument("n must be >= 1, got " + std::to_string(n));
  const SumSpec s{SumForm::ArithmeticoGeometric, estimate_ratio(), GrossNumber(1), g1};
  const Rational sum = direct_sum(s, n);
  FiniteCheck c;
  c.n = n;
  c.direct = (Rational(2 * n) * sum).numerator();
  c.formula = substitute_expr(upper_bound(), n);
  c.equal = c.formula == Rational(c.direct);
  return c;
}

bool verify_upper_finite(long n) { return check_upper_finite(n).equal; }

std::vector<FiniteCheck> upper_sweep(long max_n, kernels::Backend backend) {
  upper_bound();
  std::vector<FiniteCheck> out(static_cast<std::size_t>(std::max(0L, max_n)));
  if (backend == kernels::Backend::Serial) {
    for (long n = 1; n <= max_n; ++n) out[n - 1] = check_upper_finite(n);
    return out;
  }
#pragma omp parallel for schedule(dynamic)
  for (long n = 1; n <= max_n; ++n) out[n - 1] = check_upper_finite(n);
  return out;
}

BoundsReport bounds_report(std::optional<long> primes, std::optional<long> finite_n) {
  BoundsReport r{lower_bound(), std::nullopt, {}, upper_bound(), std::nullopt};
  if (primes) {
    r.improved = lower_bound_improved(*primes);
    r.primes = first_primes(*primes);
  }
  if (finite_n) r.check = check_upper_finite(*finite_n);
  return r;
}

AlgebraicWitness AlgebraicWitness::integer(const BigInt& value) { return {WitnessKind::IntegerRoot, value, 1}; }

AlgebraicWitness AlgebraicWitness::imaginary_sqrt(int sign, const BigInt& m) {
  if (m < 1) throw InvalidArgument("radicand must be >= 1");
  BigInt c, r;
  split_square(m, c, r);
  return {WitnessKind::ImaginarySurd, sign < 0 ? BigInt(-c) : c, r};
}

AlgebraicWitness AlgebraicWitness::real_sqrt(int sign, const BigInt& m) {
  if (m < 1) throw InvalidArgument("radicand must be >= 1");
  BigInt c, r;
  split_square(m, c, r);
  if (r == 1) return integer(sign < 0 ? BigInt(-c) : c);
  return {WitnessKind::RealSurd, sign < 0 ? BigInt(-c) : c, r};
}

std::string to_string(const AlgebraicWitness& w) {
  const std::string c = w.coefficient.get_str();
  auto scaled = [&](const std::string& unit) {
    if (w.coefficient == 1) return unit;
    if (w.coefficient == -1) return "-" + unit;
    return c + "*" + unit;
  };
  switch (w.kind) {
    case WitnessKind::IntegerRoot: return c;
    case WitnessKind::ImaginarySurd:
      return scaled(w.radicand == 1 ? "i" : "i*sqrt(" + w.radicand.get_str() + ")");
    case WitnessKind::RealSurd: return scaled("sqrt(" + w.radicand.get_str() + ")");
  }
  return c;
}

std::set<AlgebraicWitness> witness_set(long n, long k) {
  if (n < 1) throw InvalidArgument("n must be >= 1, got " + std::to_string(n));
  if (k < 0) throw InvalidArgument("k must be >= 0, got " + std::to_string(k));
  std::set<AlgebraicWitness> out;
  for (long m = -n; m <= n; ++m) out.insert(AlgebraicWitness::integer(m));
  for (long m = 1; m <= n; ++m) {
    out.insert(AlgebraicWitness::imaginary_sqrt(1, m));
    out.insert(AlgebraicWitness::imaginary_sqrt(-1, m));
  }
  if (k > 0)
    for (long p : first_primes(k)) {
      out.insert(AlgebraicWitness::real_sqrt(1, p));
      out.insert(AlgebraicWitness::real_sqrt(-1, p));
    }
  return out;
}

std::vector<std::pair<long, long>> tuple_grid(long limit) {
  std::vector<std::pair<long, long>> out;
  for (long n = 1; (2 * n + 1) * (2 * n + 1) <= limit; ++n)
    for (long k = 1;; ++k) {
      const kernels::Count size = kernels::checked_power(2 * n + 1, static_cast<unsigned>(k + 1));
      if (size == 0 || size > static_cast<kernels::Count>(limit)) break;
      out.emplace_back(n, k);
    }
  return out;
}

}  // namespace grossone
