#pragma once

#include <functional>
#include <string>

#include "generators.hpp"
#include "grossone/error.hpp"
#include "grossone/syntax.hpp"

namespace grossone::testing {

struct PropertyResult {
  std::string name;
  long cases = 0;  // cases where the property was evaluated
  long failures = 0;
  std::string first_failure;

  bool ok(long min_cases) const { return failures == 0 && cases >= min_cases; }
};

// Runs `body` until `cases` evaluations happened. Body returns false for a
// failure, true for a pass, and throws Skip when the sample is out of domain.
struct Skip {};

inline PropertyResult run_property(const std::string& name, long cases, std::uint64_t seed,
                                   const std::function<bool(Rng&, std::string&)>& body) {
  PropertyResult r{name};
  Rng rng(seed);
  long attempts = 0;
  while (r.cases < cases && attempts < cases * 20) {
    ++attempts;
    std::string note;
    try {
      const bool ok = body(rng, note);
      ++r.cases;
      if (!ok) {
        ++r.failures;
        if (r.first_failure.empty()) r.first_failure = note;
      }
    } catch (const Skip&) {
    } catch (const Error& e) {
      ++r.cases;
      ++r.failures;
      if (r.first_failure.empty()) r.first_failure = note + ": " + e.diagnostic();
    }
  }
  return r;
}

// Random trees may divide by a subtree that cancels to zero.
inline Expr simplified_or_skip(const Expr& e) {
  try {
    return simplify(e);
  } catch (const DivisionByZero&) {
    throw Skip{};
  }
}

inline std::string show(const GrossNumber& g) { return to_string(g, "G1", true); }

inline PropertyResult ring_axioms(long cases, std::uint64_t seed) {
  return run_property("ring axioms", cases, seed, [](Rng& rng, std::string& note) {
    const bool integral = chance(rng, 0.5);
    const GrossNumber x = random_gross(rng, 5, integral);
    const GrossNumber y = random_gross(rng, 5, integral);
    const GrossNumber z = random_gross(rng, 5, integral);
    note = show(x) + " | " + show(y) + " | " + show(z);
    return x + y == y + x && x * y == y * x && (x + y) + z == x + (y + z) && (x * y) * z == x * (y * z) &&
           x * (y + z) == x * y + x * z && x + GrossNumber() == x && x * GrossNumber(1) == x &&
           (x - x).is_zero();
  });
}

inline PropertyResult order_compatibility(long cases, std::uint64_t seed) {
  return run_property("order compatibility", cases, seed, [](Rng& rng, std::string& note) {
    const GrossNumber x = random_gross(rng, 4, false);
    const GrossNumber y = random_gross(rng, 4, false);
    const GrossNumber z = random_gross(rng, 4, false);
    GrossNumber w = random_nonzero_gross(rng, 4, false);
    if (sign(w) < 0) w = negate(w);
    note = show(x) + " | " + show(y) + " | " + show(z) + " | " + show(w);
    const auto xy = compare(x, y);
    const auto yx = compare(y, x);
    const auto yz = compare(y, z);
    // Trichotomy and antisymmetry.
    if ((xy < 0) != (yx > 0) || (xy == 0) != (x == y)) return false;
    // Transitivity.
    if (xy < 0 && yz < 0 && !(compare(x, z) < 0)) return false;
    if (xy < 0) return compare(x + z, y + z) < 0 && compare(x * w, y * w) < 0;
    if (xy > 0) return compare(x + z, y + z) > 0 && compare(x * w, y * w) > 0;
    return true;
  });
}

inline PropertyResult division_round_trip(long cases, std::uint64_t seed) {
  return run_property("division round-trip", cases, seed, [](Rng& rng, std::string& note) {
    const bool integral = chance(rng, 0.5);
    const GrossNumber x = random_nonzero_gross(rng, 6, integral);
    const GrossNumber y = random_nonzero_gross(rng, 6, integral);
    note = show(x) + " | " + show(y);
    return div_exact(x * y, x, 64) == y;
  });
}

inline PropertyResult substitution_homomorphism(long cases, std::uint64_t seed) {
  return run_property("substitution homomorphism", cases, seed, [](Rng& rng, std::string& note) {
    const GrossNumber x = random_gross(rng, 4, true);
    const GrossNumber y = random_gross(rng, 4, true);
    const long n = uniform(rng, 1, 12);
    note = show(x) + " | " + show(y) + " | n=" + std::to_string(n);
    const Rational sx = substitute(x, n);
    const Rational sy = substitute(y, n);
    return substitute(x + y, n) == sx + sy && substitute(x - y, n) == sx - sy && substitute(x * y, n) == sx * sy;
  });
}

inline PropertyResult simplify_properties(long cases, std::uint64_t seed) {
  return run_property("simplify idempotence and value", cases, seed, [](Rng& rng, std::string& note) {
    const Expr e = random_expr(rng, 3);
    note = debug_string(e);
    const Expr s = simplified_or_skip(e);
    if (simplify(s) != s) return false;
    long compared = 0;
    for (long n = 2; n <= 12; ++n) {
      Rational before;
      try {
        before = substitute_expr(e, n);
      } catch (const Error&) {
        continue;
      }
      Rational after;
      try {
        after = substitute_expr(s, n);
      } catch (const SubstitutionOverflow&) {
        continue;
      }
      if (before != after) {
        note += " at n=" + std::to_string(n);
        return false;
      }
      ++compared;
    }
    if (compared == 0) throw Skip{};
    return true;
  });
}

inline PropertyResult parser_round_trip(long cases, std::uint64_t seed) {
  return run_property("parser round-trip", cases, seed, [](Rng& rng, std::string& note) {
    const Expr e = chance(rng, 0.3) ? Expr::atom(random_gross(rng, 5, false)) : simplified_or_skip(random_expr(rng, 3));
    const std::string text = render(e);
    note = text;
    return parse_expression(text) == e && parse_expression(render(e, {true})) == e;
  });
}

}  // namespace grossone::testing
