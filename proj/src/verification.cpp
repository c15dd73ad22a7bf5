#include "grossone/verification.hpp"

#include <functional>

#include "grossone/bounds.hpp"
#include "grossone/catalog.hpp"
#include "grossone/error.hpp"
#include "grossone/reference.hpp"
#include "grossone/summation.hpp"
#include "grossone/syntax.hpp"

namespace grossone {

namespace {

const GrossNumber g1 = GrossNumber::grossone();

Check make(std::string suite, std::string name, std::string detail, bool ok) {
  return {std::move(suite), std::move(name), std::move(detail), ok};
}

// Runs one check body, turning a domain error into a failed check.
Check guarded(const std::string& suite, const std::string& name, const std::function<Check()>& body) {
  try {
    return body();
  } catch (const Error& e) {
    return make(suite, name, e.diagnostic(), false);
  }
}

GrossNumber number(const char* text) { return parse_expression(text).value(); }

std::string spaced(const GrossNumber& g) { return to_string(g, "G1", true); }

Check same_text(const std::string& suite, const std::string& name, const std::string& got,
                const std::string& expected) {
  return make(suite, name, got == expected ? got : got + " != " + expected, got == expected);
}

}  // namespace

std::vector<Check> arithmetic_checks() {
  const std::string s = "arithmetic";
  std::vector<Check> out;
  const GrossNumber a = number(reference::kA);
  const GrossNumber b = number(reference::kB);
  out.push_back(guarded(s, "A+B=C", [&] { return same_text(s, "A+B=C", spaced(a + b), reference::kC); }));
  out.push_back(guarded(s, "A-B=D", [&] { return same_text(s, "A-B=D", spaced(a - b), reference::kD); }));
  out.push_back(guarded(s, "A*B=E", [&] { return same_text(s, "A*B=E", spaced(a * b), reference::kE); }));
  out.push_back(guarded(s, "E/A=B", [&] {
    return same_text(s, "E/A=B", spaced(div_exact(number(reference::kE), a)), reference::kB);
  }));
  return out;
}

std::vector<Check> derivation_checks() {
  const std::string s = "derivation";
  const Expr q = Expr::atom(2 * g1 + 1);
  std::vector<Check> out;
  out.push_back(guarded(s, "sum k*q^k", [&] {
    const Expr sum = sum_k_qk({SumForm::ArithmeticoGeometric, q, GrossNumber(1), g1});
    const bool ok = sum == parse_expression(reference::kKQKSum);
    return make(s, "sum k*q^k", render(sum), ok && render(sum) == reference::kKQKSum);
  }));
  out.push_back(guarded(s, "upper bound", [&] {
    const Expr up = upper_bound();
    return make(s, "upper bound", render(up), render(up) == kUpperBoundText);
  }));
  out.push_back(guarded(s, "S/q - S", [&] {
    const Expr sum = sum_k_qk({SumForm::ArithmeticoGeometric, q, GrossNumber(1), g1});
    const Expr left = simplify(sum / q - sum);
    const Expr geom = sum_geometric({SumForm::Geometric, q, GrossNumber(0), g1 - 1});
    const Expr right = simplify(geom - Expr::atom(g1) * Expr::pow(q, Expr::atom(g1)));
    return make(s, "S/q - S", render(left) + " = " + render(right), left == right);
  }));
  return out;
}

std::vector<Check> upper_sweep_checks(long max_n) {
  std::vector<Check> out;
  for (const auto& c : upper_sweep(max_n)) {
    const std::string name = "n=" + std::to_string(c.n);
    const std::string detail = c.equal ? "2n*sum = formula = " + c.direct.get_str()
                                       : "2n*sum = " + c.direct.get_str() + ", formula = " + c.formula.to_string();
    out.push_back(make("summation", name, detail, c.equal));
  }
  return out;
}

std::vector<Check> catalog_checks() {
  const std::string s = "catalog";
  std::vector<Check> out;
  for (const auto& p : default_sweep()) {
    std::string name = p.id + " n=" + std::to_string(p.n);
    if (p.m) name += " m=" + std::to_string(p.m->m);
    out.push_back(guarded(s, name, [&] {
      const BigInt counted = finite_count_oracle(p.id, p.n, p.m);
      const Rational formula = substitute_expr(gross_count(p.id, p.m), BigInt(p.n));
      return make(s, name, "oracle = " + counted.get_str() + ", formula = " + formula.to_string(),
                  formula == Rational(counted));
    }));
  }
  return out;
}

std::vector<Check> witness_checks(long max_n, long max_k) {
  std::vector<Check> out;
  for (long n = 1; n <= max_n; ++n)
    for (long k = 0; k <= max_k; ++k) {
      const std::size_t size = witness_set(n, k).size();
      const auto expected = static_cast<std::size_t>(4 * n + 2 * k + 1);
      out.push_back(make("witnesses", "n=" + std::to_string(n) + " k=" + std::to_string(k),
                         "|W| = " + std::to_string(size) + ", 4n+2k+1 = " + std::to_string(expected),
                         size == expected));
    }
  return out;
}

std::vector<Check> tuple_checks(long limit) {
  std::vector<Check> out;
  for (const auto& [n, k] : tuple_grid(limit)) {
    const auto counted = kernels::parallel::count_coefficient_tuples(n, static_cast<unsigned>(k));
    const Rational formula = substitute_expr(tuple_count(k), BigInt(n));
    out.push_back(make("tuples", "n=" + std::to_string(n) + " k=" + std::to_string(k),
                       "enumerated = " + std::to_string(counted) + ", 2n(2n+1)^k = " + formula.to_string(),
                       formula == Rational(BigInt(static_cast<unsigned long>(counted)))));
  }
  return out;
}

std::vector<Check> inequality_checks() {
  const std::string s = "inequality";
  std::vector<Check> out;
  out.push_back(guarded(s, "lower < upper", [&] {
    const Dominance d = dominance_compare(lower_bound(), upper_bound());
    return make(s, "lower < upper", "dominance: " + to_string(d), d == Dominance::Less);
  }));
  for (long n : {10L, 100L, 1000L}) {
    const std::string name = "n=" + std::to_string(n);
    out.push_back(guarded(s, name, [&] {
      const Rational lo = substitute_expr(lower_bound(), n);
      const Rational up = substitute_expr(upper_bound(), n);
      const std::string digits = up.to_string();
      return make(s, name, "lower = " + lo.to_string() + " < upper (" + std::to_string(digits.size()) + " digits)",
                  lo < up);
    }));
  }
  return out;
}

std::vector<Check> run_all_checks(long max_n) {
  const std::vector<std::function<std::vector<Check>()>> suites = {
      arithmetic_checks,
      derivation_checks,
      [max_n] { return upper_sweep_checks(max_n); },
      catalog_checks,
      [max_n] { return witness_checks(max_n, 25); },
      [] { return tuple_checks(1000000); },
      inequality_checks,
  };
  std::vector<std::vector<Check>> results(suites.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < suites.size(); ++i) results[i] = suites[i]();
  std::vector<Check> all;
  for (auto& r : results) all.insert(all.end(), r.begin(), r.end());
  return all;
}

}  // namespace grossone
