// Prints one PASS/FAIL line per acceptance criterion; exits nonzero if any fails.
// A budget of 0 means the criterion has no time limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "grossone/verification.hpp"
#include "properties.hpp"

using namespace grossone;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;
};

Outcome from_checks(const std::vector<Check>& checks, std::size_t min_count) {
  Outcome o;
  std::size_t failed = 0;
  for (const auto& c : checks)
    if (!c.ok) {
      if (failed++ == 0) o.detail = "first failure [" + c.suite + "] " + c.name + ": " + c.detail + "; ";
    }
  o.ok = failed == 0 && checks.size() >= min_count;
  o.detail += std::to_string(checks.size()) + " checks, " + std::to_string(failed) + " failed";
  return o;
}

int failures = 0;

void criterion(const char* id, const char* title, double budget_ms, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const Error& e) {
    o = {false, e.diagnostic()};
  }
  const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  const bool in_time = budget_ms <= 0 || ms < budget_ms;
  const bool pass = o.ok && in_time;
  if (!pass) ++failures;
  const std::string budget = budget_ms > 0 ? ", budget " + std::to_string(static_cast<long>(budget_ms)) + " ms" : "";
  std::printf("%s %s: %s (%s; %.3f ms%s%s)\n", pass ? "PASS" : "FAIL", id, title, o.detail.c_str(), ms,
              budget.c_str(), in_time ? "" : ", over budget");
  std::fflush(stdout);
}

}  // namespace

int main() {
  criterion("AC1", "arithmetic vectors A+B, A-B, A*B, E/A", 1.0,
            [] { return from_checks(arithmetic_checks(), 4); });

  criterion("AC2", "upper bound and S derived through the summation engine", 0,
            [] { return from_checks(derivation_checks(), 3); });

  criterion("AC3", "finite summation oracle n = 1..50", 5000.0,
            [] { return from_checks(upper_sweep_checks(50), 50); });

  criterion("AC4", "catalog oracles across the sweep", 60000.0, [] { return from_checks(catalog_checks(), 1); });

  criterion("AC5", "witness sets n <= 50, k <= 25", 1000.0,
            [] { return from_checks(witness_checks(50, 25), 50 * 26); });

  criterion("AC6", "tuple counts with (2n+1)^(k+1) <= 10^6", 5000.0,
            [] { return from_checks(tuple_checks(1000000), 1); });

  criterion("AC7", "property suites, 1000 cases each", 0, [] {
    constexpr long cases = 1000;
    const std::vector<testing::PropertyResult> results = {
        testing::ring_axioms(cases, 101),        testing::order_compatibility(cases, 102),
        testing::division_round_trip(cases, 103), testing::substitution_homomorphism(cases, 104),
        testing::simplify_properties(cases, 105), testing::parser_round_trip(cases, 106),
    };
    Outcome o;
    for (const auto& r : results) {
      if (!r.ok(cases)) {
        o.ok = false;
        o.detail += r.name + " failed " + std::to_string(r.failures) + "/" + std::to_string(r.cases) +
                    (r.first_failure.empty() ? "" : " (" + r.first_failure + ")") + "; ";
      }
    }
    o.detail += std::to_string(results.size()) + " suites";
    return o;
  });

  criterion("AC8", "lower < upper symbolically and at n = 10, 100, 1000", 0,
            [] { return from_checks(inequality_checks(), 4); });

  std::printf("%d of 8 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
