#pragma once

#include <array>
#include <cstdint>

#include "grossone/kernels.hpp"

namespace grossone::kernels::detail {

inline constexpr std::array<std::int64_t, 5> kRemoved = {3, 5, 10, 23, 114};

inline bool is_square(std::int64_t x) {
  std::int64_t r = 0;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r * r == x;
}

inline bool keep(std::int64_t x, NaturalFilter filter) {
  switch (filter) {
    case NaturalFilter::All: return true;
    case NaturalFilter::Even: return x % 2 == 0;
    case NaturalFilter::Odd: return x % 2 != 0;
    case NaturalFilter::Square: return is_square(x);
    case NaturalFilter::WithoutFive:
      for (auto r : kRemoved)
        if (x == r) return false;
      return true;
  }
  return false;
}

// Value of grid point `index` in units of base^-digits, shifted by the
// interval's lower whole unit.
inline bool in_interval(std::int64_t scaled, std::int64_t unit, const Interval& iv) {
  const std::int64_t lo = iv.lo * unit;
  const std::int64_t hi = iv.hi * unit;
  if (scaled < lo || (scaled == lo && !iv.lo_closed)) return false;
  if (scaled > hi || (scaled == hi && !iv.hi_closed)) return false;
  return true;
}

}  // namespace grossone::kernels::detail
