#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "latstack/hypercube.hpp"

namespace latstack {

struct Params {
  std::size_t k = 0, n = 0, m = 0;
};

std::string to_string(const Params& p);

/// Column parameters with k <= k_max, m <= m_max and (k+m+1)^n <= limit.
std::vector<Params> column_window(std::size_t limit, std::size_t k_max, std::size_t m_max,
                                  std::size_t n_max);
/// Row parameters with n <= n_max, k <= k_max, m <= m_max and (m+1)^(n+k) <= limit.
std::vector<Params> row_window(std::size_t limit, std::size_t n_max, std::size_t k_max,
                               std::size_t m_max);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  // first failure, or a summary
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool passed() const;
};

/// formulas, representation, structure, bijections, dyck, oracle.
const std::vector<std::string>& suite_names();

/// `name` may also be "all". ParseError for an unknown suite.
std::vector<SuiteReport> run_suite(const std::string& name, std::size_t budget = kDefaultBudget);

}  // namespace latstack
