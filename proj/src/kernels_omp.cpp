#include <bit>
#include <stdexcept>

#include "kernels_common.hpp"

namespace grossone::kernels::parallel {

namespace {

// Counts indices in [0, end) accepted by `accept`, split across threads.
template <typename Accept>
Count count_indices(std::int64_t end, Accept accept) {
  Count total = 0;
#pragma omp parallel for reduction(+ : total) schedule(static)
  for (std::int64_t i = 0; i < end; ++i)
    if (accept(i)) ++total;
  return total;
}

// Counts cells (r, c) of a rows x cols grid accepted by `accept`.
template <typename Accept>
Count count_grid(std::int64_t rows, std::int64_t cols, Accept accept) {
  Count total = 0;
#pragma omp parallel for collapse(2) reduction(+ : total) schedule(static)
  for (std::int64_t r = 0; r < rows; ++r)
    for (std::int64_t c = 0; c < cols; ++c)
      if (accept(r, c)) ++total;
  return total;
}

std::int64_t checked(std::int64_t base, unsigned exponent) {
  const Count p = checked_power(base, exponent);
  if (p == 0) throw std::invalid_argument("enumeration too large");
  return static_cast<std::int64_t>(p);
}

}  // namespace

Count count_naturals(std::int64_t n, NaturalFilter filter) {
  return count_indices(n, [=](std::int64_t i) { return detail::keep(i + 1, filter); });
}

Count count_integers(std::int64_t n, bool exclude_zero) {
  return count_indices(2 * n + 1, [=](std::int64_t i) { return !(exclude_zero && i - n == 0); });
}

Count count_pairs(std::int64_t n) {
  return count_grid(n, n, [](std::int64_t, std::int64_t) { return true; });
}

Count count_q1_numerals(std::int64_t n) {
  const std::int64_t side = 2 * n + 1;
  return count_grid(side, side, [=](std::int64_t, std::int64_t q) { return q - n != 0; });
}

Count count_q2_numerals(std::int64_t n) {
  return 1 + count_grid(2 * n, n, [=](std::int64_t r, std::int64_t) {
           const std::int64_t sign = r < n ? -1 : 1;
           return sign * (r % n + 1) != 0;
         });
}

Count count_subsets(unsigned set_size) {
  if (set_size > 40) throw std::invalid_argument("subset enumeration limited to 40 elements");
  Count by_size[41] = {};
  const auto end = static_cast<std::int64_t>(std::uint64_t{1} << set_size);
#pragma omp parallel for reduction(+ : by_size[:41]) schedule(static)
  for (std::int64_t mask = 0; mask < end; ++mask) ++by_size[std::popcount(static_cast<std::uint64_t>(mask))];
  Count total = 0;
  for (Count c : by_size) total += c;
  return total;
}

Count count_digit_grid(unsigned base, unsigned digits, const Interval& interval) {
  const std::int64_t unit = checked(base, digits);
  const std::int64_t wholes = interval.hi - interval.lo + 1;
  return count_grid(wholes, unit, [&](std::int64_t w, std::int64_t f) {
    return detail::in_interval((interval.lo + w) * unit + f, unit, interval);
  });
}

Count count_tuples(std::int64_t n, unsigned m) {
  if (n < 1) return 0;
  return count_indices(checked(n, m), [](std::int64_t) { return true; });
}

Count count_coefficient_tuples(std::int64_t n, unsigned k) {
  const std::int64_t side = 2 * n + 1;
  const std::int64_t tail = checked(side, k);
  // Rows are a0, columns enumerate (a1..ak).
  return count_grid(side, tail, [=](std::int64_t a0, std::int64_t) { return a0 - n != 0; });
}

}  // namespace grossone::kernels::parallel
