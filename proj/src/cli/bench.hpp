#pragma once

#include <cstddef>
#include <map>
#include <vector>

namespace apollo::cli {

struct BenchRow {
  std::size_t d = 0;
  int recipe = 0;
  double ns_per_solve = 0.0;
  double residual_p50 = 0.0;
  double residual_p99 = 0.0;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  std::map<int, double> exponent;  // per recipe: slope of ln(cost) vs ln(d)
};

/// Times recipes 1-3 over `trials` random well-separated sets per dimension
/// and fits a power-law cost exponent per recipe.
BenchReport run_bench(const std::vector<std::size_t>& dims, int trials);

}  // namespace apollo::cli
