#pragma once

#include <vector>

#include "apollo/smallmat.hpp"
#include "apollo/types.hpp"

namespace apollo {

/// Power vertex p, power radius squared and power gradient of a ball set,
/// plus the determinant/rank diagnostics needed to route sub-dimensional
/// configurations. p, ptilde and rp2 are only meaningful when full_rank.
struct PowerSolution {
  std::vector<double> p;       // power vertex
  double rp2 = 0.0;            // squared power radius (can be negative)
  std::vector<double> ptilde;  // power gradient, dimensionless
  double detV = 0.0;
  int rankV = 0;
  Matrix V;  // retained for downstream predicates
  bool full_rank = false;
};

/// |x_i - point|^2 - r_i^2; negative iff the point is strictly inside.
double power_distance(const Ball& b, const std::vector<double>& point);

/// Solves V p = t and V ptilde = -r in one factorization. full_rank=false
/// (with rankV filled) signals det(V) numerically zero; callers dispatch
/// to the sub-dimensional solver.
PowerSolution power_vertex(const BallSet& set, const Tolerances& tol = {});

/// Power vertex of the radii-zeroed set; coincides with the power vertex
/// whenever all radii are equal.
PowerSolution voronoi_vertex(const BallSet& set, const Tolerances& tol = {});

/// p' = p + r_eps * ptilde: the power vertex after incrementing every
/// radius by r_eps.
std::vector<double> incremented_power_vertex(const BallSet& set, double r_eps,
                                             const Tolerances& tol = {});

}  // namespace apollo
