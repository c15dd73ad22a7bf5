#pragma once

#include <string>
#include <vector>

namespace grossone {

struct Check {
  std::string suite;
  std::string name;
  std::string detail;  // the exact values compared
  bool ok = false;
};

std::vector<Check> arithmetic_checks();
std::vector<Check> derivation_checks();
std::vector<Check> upper_sweep_checks(long max_n);
std::vector<Check> catalog_checks();
std::vector<Check> witness_checks(long max_n, long max_k);
std::vector<Check> tuple_checks(long limit);
std::vector<Check> inequality_checks();

/// Every suite above; suites run concurrently, output order is fixed.
std::vector<Check> run_all_checks(long max_n);

}  // namespace grossone
