#include "grossone/catalog.hpp"

#include <functional>

#include "grossone/error.hpp"
#include "grossone/syntax.hpp"

namespace grossone {

namespace {

using kernels::Backend;
using kernels::Count;
using kernels::Interval;
using kernels::NaturalFilter;

struct KernelSet {
  Count (*naturals)(std::int64_t, NaturalFilter);
  Count (*integers)(std::int64_t, bool);
  Count (*pairs)(std::int64_t);
  Count (*q1)(std::int64_t);
  Count (*q2)(std::int64_t);
  Count (*subsets)(unsigned);
  Count (*digit_grid)(unsigned, unsigned, const Interval&);
  Count (*tuples)(std::int64_t, unsigned);
};

const KernelSet& kernel_set(Backend backend) {
  namespace s = kernels::serial;
  namespace p = kernels::parallel;
  static const KernelSet serial{s::count_naturals, s::count_integers,    s::count_pairs,
                                s::count_q1_numerals, s::count_q2_numerals, s::count_subsets,
                                s::count_digit_grid,  s::count_tuples};
  static const KernelSet parallel{p::count_naturals, p::count_integers,    p::count_pairs,
                                  p::count_q1_numerals, p::count_q2_numerals, p::count_subsets,
                                  p::count_digit_grid,  p::count_tuples};
  return backend == Backend::Serial ? serial : parallel;
}

constexpr long kLinearCap = 100000000;
constexpr long kQuadraticCap = 10000;
constexpr unsigned kSubsetCap = 20;
constexpr long kBinaryDigitCap = 20;
constexpr long kDecimalDigitCap = 6;
constexpr Count kTupleCap = 1000000;

// Empty when n is in range, otherwise the InapplicableN message.
using Applicability = std::function<std::string(long n)>;
using Oracle = std::function<Count(long n, const KernelSet& k)>;

struct Row {
  CatalogEntry entry;
  Applicability applicable;
  Oracle oracle;
};

Applicability at_most(long cap, std::string what) {
  return [cap, what](long n) { return n <= cap ? std::string() : what + " oracle requires n <= " + std::to_string(cap); };
}

Count subsets_of(Count size) {
  if (size > kSubsetCap) throw InapplicableN("power-set oracle enumerates at most 2^20 subsets");
  return size;
}

Applicability subset_cap(std::string id, std::function<Count(long)> size) {
  return [id, size](long n) {
    return size(n) <= kSubsetCap ? std::string()
                                 : id + " oracle requires an underlying set of at most 20 elements (n=" +
                                       std::to_string(n) + " gives " + std::to_string(size(n)) + ")";
  };
}

Row row(std::string id, std::string description, CantorLabel label, std::string_view count, std::string range,
        Applicability app, Oracle oracle) {
  CatalogEntry e{std::move(id), std::move(description), label, parse_expression(count), "", std::move(range), false};
  e.count_text = render(e.gross_count);
  return {std::move(e), std::move(app), std::move(oracle)};
}

std::vector<Row> build_rows() {
  const auto C = CantorLabel::Countable;
  const auto K = CantorLabel::Continuum;
  std::vector<Row> rows;
  rows.push_back(row("naturals", "the set of natural numbers N = {1, 2, 3, ...}", C, "G1", "n <= 100000000",
                     at_most(kLinearCap, "naturals"),
                     [](long n, const KernelSet& k) { return k.naturals(n, NaturalFilter::All); }));
  rows.push_back(row("naturals-minus-5", "N without {3, 5, 10, 23, 114}", C, "G1-5", "n >= 114",
                     [](long n) { return n >= 114 ? std::string() : "naturals-minus-5 oracle requires n >= 114"; },
                     [](long n, const KernelSet& k) { return k.naturals(n, NaturalFilter::WithoutFive); }));
  rows.push_back(row("evens", "the even numbers E (alias odds: the odd numbers O)", C, "G1/2", "even n",
                     [](long n) { return n % 2 == 0 ? std::string() : "evens oracle requires even n"; },
                     [](long n, const KernelSet& k) { return k.naturals(n, NaturalFilter::Even); }));
  rows.push_back(row("integers", "the set of integers Z", C, "2*G1+1", "n <= 100000000", at_most(kLinearCap, "integers"),
                     [](long n, const KernelSet& k) { return k.integers(n, false); }));
  rows.push_back(row("integers-nonzero", "Z without 0", C, "2*G1", "n <= 100000000", at_most(kLinearCap, "integers-nonzero"),
                     [](long n, const KernelSet& k) { return k.integers(n, true); }));
  rows.push_back(row("squares", "squares of natural numbers", C, "floor(sqrt(G1))", "n <= 100000000",
                     at_most(kLinearCap, "squares"),
                     [](long n, const KernelSet& k) { return k.naturals(n, NaturalFilter::Square); }));
  rows.push_back(row("pairs", "pairs (p, q) of natural numbers", C, "G1^2", "n <= 10000", at_most(kQuadraticCap, "pairs"),
                     [](long n, const KernelSet& k) { return k.pairs(n); }));
  rows.push_back(row("rationals-q1", "numerals p/q with p, q in Z, q != 0", C, "4*G1^2+2*G1", "n <= 10000",
                     at_most(kQuadraticCap, "rationals-q1"), [](long n, const KernelSet& k) { return k.q1(n); }));
  rows.push_back(row("rationals-q2", "numerals 0, -p/q, p/q with p, q in N", C, "2*G1^2+1", "n <= 10000",
                     at_most(kQuadraticCap, "rationals-q2"), [](long n, const KernelSet& k) { return k.q2(n); }));

  rows.push_back(row("powerset-naturals", "the power set of N", K, "2^G1", "n <= 20",
                     subset_cap("powerset-naturals", [](long n) { return Count(n); }),
                     [](long n, const KernelSet& k) {
                       return k.subsets(subsets_of(k.naturals(n, NaturalFilter::All)));
                     }));
  rows.push_back(row("powerset-evens", "the power set of the even numbers", K, "2^(0.5*G1)", "even n <= 40",
                     [](long n) {
                       if (n % 2 != 0) return std::string("powerset-evens oracle requires even n");
                       return n / 2 <= long(kSubsetCap) ? std::string()
                                                        : std::string("powerset-evens oracle requires n <= 40");
                     },
                     [](long n, const KernelSet& k) {
                       return k.subsets(subsets_of(k.naturals(n, NaturalFilter::Even)));
                     }));
  rows.push_back(row("powerset-integers", "the power set of Z", K, "2^(2*G1+1)", "n <= 9",
                     subset_cap("powerset-integers", [](long n) { return Count(2 * n + 1); }),
                     [](long n, const KernelSet& k) { return k.subsets(subsets_of(k.integers(n, false))); }));
  rows.push_back(row("powerset-q1", "the power set of the numerals Q1", K, "2^(4*G1^2+2*G1)", "n <= 2",
                     subset_cap("powerset-q1", [](long n) { return Count(4 * n * n + 2 * n); }),
                     [](long n, const KernelSet& k) { return k.subsets(subsets_of(k.q1(n))); }));
  rows.push_back(row("powerset-q2", "the power set of the numerals Q2", K, "2^(2*G1^2+1)", "n <= 3",
                     subset_cap("powerset-q2", [](long n) { return Count(2 * n * n + 1); }),
                     [](long n, const KernelSet& k) { return k.subsets(subsets_of(k.q2(n))); }));

  rows.push_back(row("binary-unit", "x in [0,1) written with binary digits", K, "2^G1", "n <= 20",
                     at_most(kBinaryDigitCap, "binary-unit"),
                     [](long n, const KernelSet& k) { return k.digit_grid(2, unsigned(n), {0, 1, true, false}); }));
  rows.push_back(row("binary-unit-closed", "x in [0,1] written with binary digits", K, "2^G1+1", "n <= 20",
                     at_most(kBinaryDigitCap, "binary-unit-closed"),
                     [](long n, const KernelSet& k) { return k.digit_grid(2, unsigned(n), {0, 1, true, true}); }));
  rows.push_back(row("decimal-unit-open", "x in (0,1) written with decimal digits", K, "10^G1-1", "n <= 6",
                     at_most(kDecimalDigitCap, "decimal-unit-open"),
                     [](long n, const KernelSet& k) { return k.digit_grid(10, unsigned(n), {0, 1, false, false}); }));
  rows.push_back(row("decimal-zero-two", "x in [0,2) written with decimal digits", K, "2*10^G1", "n <= 6",
                     at_most(kDecimalDigitCap, "decimal-zero-two"),
                     [](long n, const KernelSet& k) { return k.digit_grid(10, unsigned(n), {0, 2, true, false}); }));

  Row tuples = row("tuples", "m-tuples (a1, ..., am) of natural numbers, m >= 2 or m = G1", C, "G1^2", "n^m <= 1000000", {}, {});
  tuples.entry.count_text = "G1^m";
  tuples.entry.parametric = true;
  rows.push_back(std::move(tuples));

  return rows;
}

const std::vector<Row>& rows() {
  static const std::vector<Row> all = build_rows();
  return all;
}

const Row& find_row(std::string_view id) {
  const std::string_view key = id == "odds" ? "evens" : id;
  for (const auto& r : rows())
    if (r.entry.id == key) return r;
  throw UnknownEntry("no catalog entry '" + std::string(id) + "'");
}

std::string need_arity(std::string_view id, const std::optional<Arity>& m) {
  if (id == "tuples") {
    if (!m) throw InvalidArgument("tuples needs an arity m");
    if (!m->grossone && m->m < 2) throw InvalidArgument("tuples needs m >= 2, got " + std::to_string(m->m));
  } else if (m) {
    throw InvalidArgument("entry '" + std::string(id) + "' takes no arity");
  }
  return std::string(id);
}

}  // namespace

std::string to_string(CantorLabel label) { return label == CantorLabel::Countable ? "countable" : "continuum"; }

const std::vector<CatalogEntry>& list_entries() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> out;
    for (const auto& r : rows()) out.push_back(r.entry);
    return out;
  }();
  return entries;
}

const CatalogEntry& find_entry(std::string_view id) { return find_row(id).entry; }

Expr gross_count(std::string_view id, std::optional<Arity> m) {
  const Row& r = find_row(id);
  need_arity(r.entry.id, m);
  if (!r.entry.parametric) return r.entry.gross_count;
  const Expr g1 = Expr::atom(GrossNumber::grossone());
  const Expr exponent = m->grossone ? g1 : Expr::atom(GrossNumber(m->m));
  return simplify(Expr::pow(g1, exponent));
}

BigInt finite_count_oracle(std::string_view id, long n, std::optional<Arity> m, Backend backend) {
  const Row& r = find_row(id);
  need_arity(r.entry.id, m);
  if (n < 1) throw InvalidArgument("n must be a positive integer, got " + std::to_string(n));
  const KernelSet& k = kernel_set(backend);
  if (r.entry.parametric) {
    if (m->grossone) throw NoOracle("tuples with m = G1 have no finite enumeration");
    const Count size = kernels::checked_power(n, unsigned(m->m));
    if (size == 0 || size > kTupleCap) throw InapplicableN("tuples oracle requires n^m <= 1000000");
    return BigInt(static_cast<unsigned long>(k.tuples(n, unsigned(m->m))));
  }
  if (id == "odds") {
    if (n % 2 != 0) throw InapplicableN("odds oracle requires even n");
    return BigInt(static_cast<unsigned long>(k.naturals(n, NaturalFilter::Odd)));
  }
  if (const std::string why = r.applicable(n); !why.empty()) throw InapplicableN(why);
  const Count c = r.oracle(n, k);
  return BigInt(static_cast<unsigned long>(c));
}

bool check_entry(std::string_view id, long n, std::optional<Arity> m, Backend backend) {
  const BigInt counted = finite_count_oracle(id, n, m, backend);
  return substitute_expr(gross_count(id, m), BigInt(n)) == Rational(counted);
}

CantorLabel label_for(const Expr& count) {
  return has_infinite_power(count) ? CantorLabel::Continuum : CantorLabel::Countable;
}

std::vector<SweepPoint> default_sweep() {
  std::vector<SweepPoint> points;
  for (const auto& r : rows()) {
    const std::string& id = r.entry.id;
    if (r.entry.parametric) {
      for (long m = 2; m <= 6; ++m)
        for (long n = 1; n <= 30; ++n)
          if (const Count s = kernels::checked_power(n, unsigned(m)); s != 0 && s <= kTupleCap)
            points.push_back({id, n, Arity::finite(m)});
      continue;
    }
    const bool five = id == "naturals-minus-5";
    for (long n = five ? 114 : 1; n <= (five ? 130 : 30); ++n) {
      if (!r.applicable(n).empty()) continue;
      points.push_back({id, n, std::nullopt});
      if (id == "evens") points.push_back({"odds", n, std::nullopt});
    }
  }
  return points;
}

}  // namespace grossone
