#include "apollo/power.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace apollo {

double power_distance(const Ball& b, const std::vector<double>& point) {
  assert(b.center.size() == point.size());
  double d2 = 0.0;
  for (std::size_t j = 0; j < point.size(); ++j) {
    const double e = b.center[j] - point[j];
    d2 += e * e;
  }
  return d2 - b.radius * b.radius;
}

PowerSolution power_vertex(const BallSet& set, const Tolerances& tol) {
  const std::size_t d = set.dim();
  const Ball& last = set[d];
  double last_pow = -last.radius * last.radius;
  for (double cj : last.center) last_pow += cj * cj;

  PowerSolution ps;
  ps.V = Matrix(d, d);
  Matrix rhs(d, 2);  // column 0: t, column 1: -r
  for (std::size_t i = 0; i < d; ++i) {
    double norm2 = 0.0;
    for (std::size_t j = 0; j < d; ++j) {
      ps.V(i, j) = set[i].center[j] - last.center[j];
      norm2 += set[i].center[j] * set[i].center[j];
    }
    rhs(i, 0) = 0.5 * ((norm2 - set[i].radius * set[i].radius) - last_pow);
    rhs(i, 1) = -(set[i].radius - last.radius);
  }
  ps.detV = determinant(ps.V);

  auto x = solve_linear(ps.V, rhs, tol.singular_rel);
  if (!x) {
    ps.full_rank = false;
    ps.rankV = rank(ps.V, tol.singular_rel);
    return ps;
  }
  ps.full_rank = true;
  ps.rankV = static_cast<int>(d);
  ps.p.resize(d);
  ps.ptilde.resize(d);
  for (std::size_t j = 0; j < d; ++j) {
    ps.p[j] = (*x)(j, 0);
    ps.ptilde[j] = (*x)(j, 1);
  }

  // rp2 from the largest-radius ball: biggest r_i^2 gives the least relative
  // cancellation in |x_i - p|^2 - r_i^2.
  std::size_t ref = 0;
  for (std::size_t i = 1; i <= d; ++i)
    if (set[i].radius > set[ref].radius) ref = i;
  ps.rp2 = power_distance(set[ref], ps.p);
  return ps;
}

PowerSolution voronoi_vertex(const BallSet& set, const Tolerances& tol) {
  std::vector<Ball> zeroed = set.balls();
  for (Ball& b : zeroed) b.radius = 0.0;
  return power_vertex(unchecked_ball_set(std::move(zeroed), set.dim()), tol);
}

std::vector<double> incremented_power_vertex(const BallSet& set, double r_eps,
                                             const Tolerances& tol) {
  PowerSolution ps = power_vertex(set, tol);
  if (!ps.full_rank) throw std::runtime_error("incremented_power_vertex: sub-dimensional set");
  std::vector<double> out(set.dim());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = ps.p[j] + r_eps * ps.ptilde[j];
  return out;
}

}  // namespace apollo
