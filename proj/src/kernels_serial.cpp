#include <array>
#include <bit>
#include <stdexcept>
#include <vector>

#include "kernels_common.hpp"

namespace grossone::kernels {

Count checked_power(std::int64_t base, unsigned exponent) {
  std::int64_t result = 1;
  for (unsigned i = 0; i < exponent; ++i)
    if (__builtin_mul_overflow(result, base, &result)) return 0;
  return static_cast<Count>(result);
}

namespace serial {

Count count_naturals(std::int64_t n, NaturalFilter filter) {
  Count total = 0;
  for (std::int64_t x = 1; x <= n; ++x)
    if (detail::keep(x, filter)) ++total;
  return total;
}

Count count_integers(std::int64_t n, bool exclude_zero) {
  Count total = 0;
  for (std::int64_t x = -n; x <= n; ++x)
    if (!(exclude_zero && x == 0)) ++total;
  return total;
}

Count count_pairs(std::int64_t n) {
  Count total = 0;
  for (std::int64_t p = 1; p <= n; ++p)
    for (std::int64_t q = 1; q <= n; ++q) ++total;
  return total;
}

Count count_q1_numerals(std::int64_t n) {
  Count total = 0;
  for (std::int64_t p = -n; p <= n; ++p)
    for (std::int64_t q = -n; q <= n; ++q)
      if (q != 0) ++total;
  return total;
}

Count count_q2_numerals(std::int64_t n) {
  Count total = 1;
  for (int sign : {-1, 1})
    for (std::int64_t p = 1; p <= n; ++p)
      for (std::int64_t q = 1; q <= n; ++q)
        if (sign * p != 0) ++total;
  return total;
}

Count count_subsets(unsigned set_size) {
  if (set_size > 40) throw std::invalid_argument("subset enumeration limited to 40 elements");
  std::array<Count, 41> by_size{};
  const std::uint64_t end = std::uint64_t{1} << set_size;
  for (std::uint64_t mask = 0; mask < end; ++mask) ++by_size[std::popcount(mask)];
  Count total = 0;
  for (Count c : by_size) total += c;
  return total;
}

Count count_digit_grid(unsigned base, unsigned digits, const Interval& interval) {
  const auto unit = static_cast<std::int64_t>(checked_power(base, digits));
  if (unit == 0) throw std::invalid_argument("digit grid too large");
  Count total = 0;
  std::vector<unsigned> d(digits, 0);
  for (std::int64_t i = interval.lo; i <= interval.hi; ++i) {
    std::fill(d.begin(), d.end(), 0u);
    std::int64_t frac = 0;
    for (;;) {
      if (detail::in_interval(i * unit + frac, unit, interval)) ++total;
      // Advance the fraction digits as an odometer, least significant last.
      unsigned pos = digits;
      while (pos > 0 && d[pos - 1] == base - 1) d[--pos] = 0;
      if (pos == 0) break;
      ++d[pos - 1];
      frac = 0;
      for (unsigned x : d) frac = frac * base + x;
    }
  }
  return total;
}

Count count_tuples(std::int64_t n, unsigned m) {
  if (n < 1) return 0;
  std::vector<std::int64_t> t(m, 1);
  Count total = 0;
  for (;;) {
    ++total;
    unsigned pos = m;
    while (pos > 0 && t[pos - 1] == n) t[--pos] = 1;
    if (pos == 0) break;
    ++t[pos - 1];
  }
  return total;
}

Count count_coefficient_tuples(std::int64_t n, unsigned k) {
  std::vector<std::int64_t> a(k + 1, -n);
  Count total = 0;
  for (;;) {
    if (a[0] != 0) ++total;
    unsigned pos = k + 1;
    while (pos > 0 && a[pos - 1] == n) a[--pos] = -n;
    if (pos == 0) break;
    ++a[pos - 1];
  }
  return total;
}

}  // namespace serial
}  // namespace grossone::kernels
