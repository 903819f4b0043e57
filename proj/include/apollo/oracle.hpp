#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "apollo/apollonius.hpp"
#include "apollo/types.hpp"

namespace apollo::oracle {

/// Per-generator signed tangency defects |x_i - x| - |s_i r_i + r|.
struct ResidualReport {
  std::vector<double> per_ball;
  double max_abs = 0.0;
};

ResidualReport tangency_residual(const BallSet& set, const ApolloniusSolution& sol,
                                 const SignSet& signs);
ResidualReport tangency_residual(const BallSet& set, const ApolloniusSolution& sol);

/// Independent root finder: damped Newton on the d+1 tangency equations from
/// a grid of starts (starts_per_axis points per coordinate and per radius
/// seed). Converged points are deduplicated and sorted by radius descending,
/// then lexicographic center. Never used by the solvers themselves.
std::vector<std::pair<std::vector<double>, double>> brute_force_solutions(
    const BallSet& set, const SignSet& signs, int starts_per_axis = 5,
    const Tolerances& tol = {});

enum class Conditioning { WellSeparated, Overlapping, NearDegenerate };

/// Deterministic pseudo-random vertex problems. WellSeparated draws disjoint
/// balls with positive gaps, Overlapping allows intersections (but no
/// contained/trivial pairs), NearDegenerate places centers within ~1e-8 of
/// an affine hyperplane.
BallSet random_ball_set(std::size_t d, std::uint64_t seed, Conditioning mode);

}  // namespace apollo::oracle
