#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "grossone/expr.hpp"
#include "grossone/kernels.hpp"

namespace grossone {

enum class CantorLabel { Countable, Continuum };

std::string to_string(CantorLabel label);

/// Tuple length for the parametric entry: a finite m >= 2 or the G1 token.
struct Arity {
  long m = 2;
  bool grossone = false;

  static Arity finite(long m) { return {m, false}; }
  static Arity grossone_token() { return {0, true}; }
};

struct CatalogEntry {
  std::string id;
  std::string description;
  CantorLabel cantor_label;
  Expr gross_count;         // for "tuples" the m = 2 instance
  std::string count_text;   // rendered count, "G1^m" for tuples
  std::string oracle_range; // applicability of the finite oracle, human readable
  bool parametric = false;
};

/// The 18 set rows followed by the parametric tuple entry, in table order.
const std::vector<CatalogEntry>& list_entries();

/// Entry by id. "odds" resolves to the "evens" row. Throws UnknownEntry.
const CatalogEntry& find_entry(std::string_view id);

/// Simplified count expression. "tuples" needs m; other ids reject it.
Expr gross_count(std::string_view id, std::optional<Arity> m = std::nullopt);

/// Literal enumeration of the row's finite analog with G1 replaced by n.
/// Throws NoOracle for the G1 tuple token and InapplicableN outside the range.
BigInt finite_count_oracle(std::string_view id, long n, std::optional<Arity> m = std::nullopt,
                           kernels::Backend backend = kernels::Backend::Parallel);

/// substitute_expr(gross_count(id, m), n) == finite_count_oracle(id, n, m).
bool check_entry(std::string_view id, long n, std::optional<Arity> m = std::nullopt,
                 kernels::Backend backend = kernels::Backend::Parallel);

/// Continuum iff the count raises something to an infinite power.
CantorLabel label_for(const Expr& count);

struct SweepPoint {
  std::string id;
  long n;
  std::optional<Arity> m;
};

/// Every applicable (id, n, m) with n <= 30, power sets and digit rows up to
/// n = 20, the five-removed row on 114..130 and both evens and odds.
std::vector<SweepPoint> default_sweep();

}  // namespace grossone
