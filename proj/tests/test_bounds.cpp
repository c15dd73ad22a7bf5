#include <gtest/gtest.h>

#include "grossone/bounds.hpp"
#include "grossone/error.hpp"
#include "grossone/syntax.hpp"

using namespace grossone;

TEST(Lower, Plain) {
  EXPECT_EQ(render(lower_bound()), "4*G1 + 1");
  EXPECT_EQ(substitute_expr(lower_bound(), 5), Rational(21));
  EXPECT_EQ(dominance_compare(lower_bound(), upper_bound()), Dominance::Less);
}

TEST(Lower, Primes) {
  EXPECT_EQ(first_primes(5), (std::vector<long>{2, 3, 5, 7, 11}));
  EXPECT_EQ(first_primes(13), (std::vector<long>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41}));
  EXPECT_EQ(first_primes(1), (std::vector<long>{2}));
  const auto many = first_primes(1000);
  EXPECT_EQ(many.back(), 7919);
  EXPECT_THROW(first_primes(0), InvalidArgument);
}

TEST(Lower, Improved) {
  EXPECT_EQ(render(lower_bound_improved(3)), "4*G1 + 7");
  EXPECT_EQ(substitute_expr(lower_bound_improved(2), 10), Rational(45));
  EXPECT_THROW(lower_bound_improved(0), InvalidArgument);
  for (long k = 1; k <= 100; ++k) EXPECT_EQ(dominance_compare(lower_bound_improved(k), upper_bound()), Dominance::Less);
}

TEST(Tuples, Counts) {
  EXPECT_EQ(render(tuple_count(1)), "4*G1^2 + 2*G1");
  EXPECT_EQ(substitute_expr(tuple_count(2), 2), Rational(100));
  EXPECT_EQ(substitute_expr(tuple_count(3), 1), Rational(54));
  EXPECT_EQ(kernels::serial::count_coefficient_tuples(2, 2), 100u);
  EXPECT_EQ(kernels::serial::count_coefficient_tuples(1, 3), 54u);
  EXPECT_THROW(tuple_count(0), InvalidArgument);
}

TEST(Tuples, SmallGridBruteForce) {
  for (const auto& [n, k] : tuple_grid(20000))
    EXPECT_EQ(substitute_expr(tuple_count(k), n),
              Rational(BigInt(static_cast<unsigned long>(kernels::serial::count_coefficient_tuples(n, unsigned(k))))))
        << "n=" << n << " k=" << k;
}

TEST(Upper, DerivedForm) {
  EXPECT_EQ(render(upper_bound()), kUpperBoundText);
  EXPECT_EQ(upper_bound(), parse_expression(kUpperBoundText));
}

TEST(Upper, SmallValues) {
  EXPECT_EQ(substitute_expr(upper_bound(), 2), Rational(220));
  EXPECT_EQ(substitute_expr(upper_bound(), 1), Rational(6));
  const FiniteCheck c = check_upper_finite(5);
  EXPECT_TRUE(c.equal);
  EXPECT_EQ(c.direct, BigInt(8680650));
}

TEST(Upper, FiniteSweep) {
  Rational previous;
  for (const auto& c : upper_sweep(50)) {
    EXPECT_TRUE(c.equal) << "n=" << c.n;
    EXPECT_GT(c.formula, previous) << "n=" << c.n;
    previous = c.formula;
  }
  EXPECT_TRUE(verify_upper_finite(20));
}

TEST(Upper, SerialSweepMatches) {
  const auto a = upper_sweep(20, kernels::Backend::Serial);
  const auto b = upper_sweep(20, kernels::Backend::Parallel);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].direct, b[i].direct);
}

TEST(Report, WithPrimesAndCheck) {
  const BoundsReport r = bounds_report(3, 5);
  ASSERT_TRUE(r.improved.has_value());
  EXPECT_EQ(render(*r.improved), "4*G1 + 7");
  EXPECT_EQ(r.primes, (std::vector<long>{2, 3, 5}));
  ASSERT_TRUE(r.check.has_value());
  EXPECT_TRUE(r.check->equal);
}

TEST(Witness, Canonical) {
  EXPECT_EQ(AlgebraicWitness::imaginary_sqrt(1, 4), (AlgebraicWitness{WitnessKind::ImaginarySurd, 2, 1}));
  EXPECT_EQ(AlgebraicWitness::imaginary_sqrt(-1, 12), (AlgebraicWitness{WitnessKind::ImaginarySurd, -2, 3}));
  EXPECT_EQ(AlgebraicWitness::real_sqrt(1, 9), AlgebraicWitness::integer(3));
  EXPECT_EQ(AlgebraicWitness::real_sqrt(-1, 8), (AlgebraicWitness{WitnessKind::RealSurd, -2, 2}));
  EXPECT_EQ(to_string(AlgebraicWitness::imaginary_sqrt(1, 4)), "2*i");
  EXPECT_EQ(to_string(AlgebraicWitness::imaginary_sqrt(-1, 3)), "-i*sqrt(3)");
  EXPECT_EQ(to_string(AlgebraicWitness::real_sqrt(1, 2)), "sqrt(2)");
}

TEST(Witness, Sizes) {
  const auto one = witness_set(1, 0);
  EXPECT_EQ(one.size(), 5u);
  EXPECT_TRUE(one.count(AlgebraicWitness::imaginary_sqrt(-1, 1)));

  const auto four = witness_set(4, 0);
  EXPECT_EQ(four.size(), 17u);
  EXPECT_TRUE(four.count(AlgebraicWitness{WitnessKind::ImaginarySurd, 2, 1}));
  EXPECT_TRUE(four.count(AlgebraicWitness{WitnessKind::ImaginarySurd, -1, 3}));

  const auto mixed = witness_set(3, 2);
  EXPECT_EQ(mixed.size(), 17u);
  EXPECT_TRUE(mixed.count(AlgebraicWitness::real_sqrt(1, 2)));
  EXPECT_TRUE(mixed.count(AlgebraicWitness::real_sqrt(-1, 3)));

  for (long n = 1; n <= 50; ++n)
    for (long k = 0; k <= 25; ++k) {
      EXPECT_EQ(witness_set(n, k).size(), static_cast<std::size_t>(4 * n + 2 * k + 1)) << n << "," << k;
      if (k > 0) EXPECT_EQ(substitute_expr(lower_bound_improved(k), n), Rational(4 * n + 2 * k + 1));
    }
}
