#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "grossone/expr.hpp"
#include "grossone/kernels.hpp"

namespace grossone {

/// 4*G1+1.
Expr lower_bound();

/// First k primes, ascending. k >= 1.
std::vector<long> first_primes(long k);

/// 4*G1+2k+1 for k >= 1; k = 0 is rejected in favour of lower_bound().
Expr lower_bound_improved(long k);

/// 2*G1*(2*G1+1)^k, expanded.
Expr tuple_count(long k);

/// 2*G1 * sum_{k=1}^{G1} k*(2*G1+1)^k, built through the summation engine and
/// checked against the expected closed form (DerivationMismatch otherwise).
Expr upper_bound();

/// The closed form upper_bound() must reproduce.
inline constexpr const char* kUpperBoundText = "(2*G1+1)*((2*G1+1)^G1*(2*G1^2-1)+1)/(2*G1)";

struct FiniteCheck {
  long n = 0;
  BigInt direct;
  Rational formula;
  bool equal = false;
};

/// 2n * sum_{k=1}^{n} k*(2n+1)^k by direct summation against upper_bound() at n.
FiniteCheck check_upper_finite(long n);
bool verify_upper_finite(long n);

/// check_upper_finite for n = 1..max_n, in order.
std::vector<FiniteCheck> upper_sweep(long max_n, kernels::Backend backend = kernels::Backend::Parallel);

struct BoundsReport {
  Expr lower;
  std::optional<Expr> improved;
  std::vector<long> primes;
  Expr upper;
  std::optional<FiniteCheck> check;
};

BoundsReport bounds_report(std::optional<long> primes = std::nullopt, std::optional<long> finite_n = std::nullopt);

enum class WitnessKind { IntegerRoot, ImaginarySurd, RealSurd };

/// c, c*i*sqrt(r) or c*sqrt(r) with r squarefree. Real perfect squares
/// collapse to IntegerRoot; imaginary ones keep r = 1.
struct AlgebraicWitness {
  WitnessKind kind = WitnessKind::IntegerRoot;
  BigInt coefficient;
  BigInt radicand = 1;

  static AlgebraicWitness integer(const BigInt& value);
  /// sign * i * sqrt(m), m >= 1.
  static AlgebraicWitness imaginary_sqrt(int sign, const BigInt& m);
  /// sign * sqrt(m), m >= 1.
  static AlgebraicWitness real_sqrt(int sign, const BigInt& m);

  auto operator<=>(const AlgebraicWitness& other) const {
    if (auto c = kind <=> other.kind; c != 0) return c;
    if (auto c = cmp(coefficient, other.coefficient); c != 0) return c <=> 0;
    return cmp(radicand, other.radicand) <=> 0;
  }
  bool operator==(const AlgebraicWitness& other) const = default;
};

std::string to_string(const AlgebraicWitness& w);

/// Roots of z - m (|m| <= n), z^2 + m (1 <= m <= n) and z^2 - p for the
/// first k primes.
std::set<AlgebraicWitness> witness_set(long n, long k);

/// (n, k) pairs with (2n+1)^(k+1) <= limit, k >= 1.
std::vector<std::pair<long, long>> tuple_grid(long limit = 1000000);

}  // namespace grossone
