#include "bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "apollo/apollonius.hpp"
#include "apollo/oracle.hpp"

namespace apollo::cli {

namespace {

volatile double g_sink = 0.0;  // keeps the optimizer from dropping solves

double percentile(std::vector<double> v, double q) {
  if (v.empty()) return 0.0;
  const std::size_t k = std::min(v.size() - 1, static_cast<std::size_t>(q * (v.size() - 1)));
  std::nth_element(v.begin(), v.begin() + k, v.end());
  return v[k];
}

}  // namespace

BenchReport run_bench(const std::vector<std::size_t>& dims, int trials) {
  BenchReport rep;
  if (trials <= 0 || dims.empty()) return rep;
  using clock = std::chrono::steady_clock;

  for (std::size_t d : dims) {
    std::vector<BallSet> sets;
    sets.reserve(trials);
    for (int t = 0; t < trials; ++t)
      sets.push_back(oracle::random_ball_set(d, 7000 + t, oracle::Conditioning::WellSeparated));

    for (int recipe = 1; recipe <= 3; ++recipe) {
      auto solve = [&](const BallSet& s) {
        switch (recipe) {
          case 1: return solve_recipe1(s);
          case 2: return solve_recipe2(s);
          default: return solve_recipe3(s);
        }
      };

      std::vector<double> residuals;
      residuals.reserve(sets.size());
      for (const BallSet& s : sets) {
        const SolveOutcome out = solve(s);
        double worst = 0.0;
        for (const ApolloniusSolution& sol : out.solutions)
          worst = std::max(worst, oracle::tangency_residual(s, sol).max_abs);
        residuals.push_back(worst);
      }

      // warm pass done above; time whole passes until ~20ms accumulated
      long long total_ns = 0;
      long long solves = 0;
      do {
        const auto t0 = clock::now();
        double acc = 0.0;
        for (const BallSet& s : sets) {
          const SolveOutcome out = solve(s);
          for (const ApolloniusSolution& sol : out.solutions) acc += sol.r;
        }
        const auto t1 = clock::now();
        g_sink = acc;
        total_ns += std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count();
        solves += sets.size();
      } while (total_ns < 40'000'000);

      BenchRow row;
      row.d = d;
      row.recipe = recipe;
      row.ns_per_solve = double(total_ns) / double(solves);
      row.residual_p50 = percentile(residuals, 0.50);
      row.residual_p99 = percentile(residuals, 0.99);
      rep.rows.push_back(row);
    }
  }

  if (dims.size() >= 2) {
    for (int recipe = 1; recipe <= 3; ++recipe) {
      double sx = 0, sy = 0, sxx = 0, sxy = 0;
      int n = 0;
      for (const BenchRow& row : rep.rows) {
        if (row.recipe != recipe || row.ns_per_solve <= 0.0) continue;
        const double x = std::log(double(row.d));
        const double y = std::log(row.ns_per_solve);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++n;
      }
      if (n >= 2) rep.exponent[recipe] = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    }
  }
  return rep;
}

}  // namespace apollo::cli
