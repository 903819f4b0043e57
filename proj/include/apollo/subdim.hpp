#pragma once

#include "apollo/apollonius.hpp"
#include "apollo/types.hpp"

namespace apollo {

/// Solver for det(V) = 0 with rank(V) = d-1 (collinear centers in 2-d,
/// coplanar in 3-d). Two mirror-symmetric centers share a single radius:
/// x_pm = x_base + c +- h*n_hat, r = w - r_base, where the base ball is the
/// smallest-radius one. Returns USingular when the reduced system is
/// singular (all radii equal, and some higher-d cases the closed form does
/// not cover) and RankTooLow when the centers span less than d-1.
SolveOutcome solve_subdimensional(const BallSet& set, const Tolerances& tol = {});

/// Routes on the numerical rank of V: full rank to the gradient solver,
/// rank d-1 to the sub-dimensional solver, anything lower to RankTooLow.
SolveOutcome dispatch_solve(const BallSet& set, const Tolerances& tol = {});

}  // namespace apollo
