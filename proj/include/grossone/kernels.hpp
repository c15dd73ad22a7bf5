#pragma once

#include <cstdint>

// Brute-force enumeration kernels behind the finite-analog oracles. Every
// function exists twice with identical results: serial:: is the reference,
// parallel:: splits the same enumeration across OpenMP threads.

namespace grossone::kernels {

using Count = std::uint64_t;

enum class Backend { Serial, Parallel };

enum class NaturalFilter { All, Even, Odd, Square, WithoutFive };

// Interval with integer endpoints, in whole units.
struct Interval {
  std::int64_t lo = 0;
  std::int64_t hi = 1;
  bool lo_closed = true;
  bool hi_closed = false;
};

namespace serial {

// Members of {1..n} passing the filter. WithoutFive drops {3,5,10,23,114}.
Count count_naturals(std::int64_t n, NaturalFilter filter);
// {-n..n}, optionally without zero.
Count count_integers(std::int64_t n, bool exclude_zero);
// (p,q) in {1..n}^2.
Count count_pairs(std::int64_t n);
// Numerals p/q, p in {-n..n}, q in {-n..n} without zero.
Count count_q1_numerals(std::int64_t n);
// The zero numeral plus -p/q and p/q for p,q in {1..n}.
Count count_q2_numerals(std::int64_t n);
// Every subset of a set of the given size (at most 40).
Count count_subsets(unsigned set_size);
// Strings "i.d1..dk" in the given base (integer part i ranging over the
// interval's whole units) whose value lies in the interval.
Count count_digit_grid(unsigned base, unsigned digits, const Interval& interval);
// m-tuples over {1..n}.
Count count_tuples(std::int64_t n, unsigned m);
// Coefficient tuples (a0..ak) over {-n..n} with a0 != 0.
Count count_coefficient_tuples(std::int64_t n, unsigned k);

}  // namespace serial

namespace parallel {

Count count_naturals(std::int64_t n, NaturalFilter filter);
Count count_integers(std::int64_t n, bool exclude_zero);
Count count_pairs(std::int64_t n);
Count count_q1_numerals(std::int64_t n);
Count count_q2_numerals(std::int64_t n);
Count count_subsets(unsigned set_size);
Count count_digit_grid(unsigned base, unsigned digits, const Interval& interval);
Count count_tuples(std::int64_t n, unsigned m);
Count count_coefficient_tuples(std::int64_t n, unsigned k);

}  // namespace parallel

// Exact integer power, or 0 when it exceeds 2^63.
Count checked_power(std::int64_t base, unsigned exponent);

}  // namespace grossone::kernels
