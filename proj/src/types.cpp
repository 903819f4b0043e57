#include "apollo/types.hpp"

#include <algorithm>
#include <cmath>

namespace apollo {

BallSet::BallSet(std::vector<Ball> balls, std::size_t d)
    : balls_(std::move(balls)), dim_(d) {
  double max_coord = 0.0, max_radius = 0.0;
  for (const Ball& b : balls_) {
    for (double c : b.center) max_coord = std::max(max_coord, std::fabs(c));
    max_radius = std::max(max_radius, std::fabs(b.radius));
  }
  scale_ = max_coord + max_radius;
  if (scale_ == 0.0) scale_ = 1.0;
}

BallSet validate_ball_set(std::vector<Ball> balls, std::size_t d) {
  if (d < 1)
    throw ValidationError(ValidationCode::DimensionMismatch, "dimension must be >= 1");
  if (balls.size() != d + 1)
    throw ValidationError(ValidationCode::WrongCount,
                          "expected " + std::to_string(d + 1) + " balls, got " +
                              std::to_string(balls.size()));
  for (std::size_t i = 0; i < balls.size(); ++i) {
    const Ball& b = balls[i];
    if (b.center.size() != d)
      throw ValidationError(ValidationCode::DimensionMismatch,
                            "ball " + std::to_string(i) + " has " +
                                std::to_string(b.center.size()) + " coordinates, expected " +
                                std::to_string(d));
    for (double c : b.center)
      if (!std::isfinite(c))
        throw ValidationError(ValidationCode::NonFinite,
                              "ball " + std::to_string(i) + " has a non-finite coordinate");
    if (!std::isfinite(b.radius))
      throw ValidationError(ValidationCode::NonFinite,
                            "ball " + std::to_string(i) + " has a non-finite radius");
  }
  // Concentric means equal centers regardless of radii; identical balls are a
  // special case of that. Exact comparison: inputs are caller-supplied numbers.
  for (std::size_t i = 0; i < balls.size(); ++i)
    for (std::size_t j = i + 1; j < balls.size(); ++j)
      if (balls[i].center == balls[j].center)
        throw ValidationError(ValidationCode::ConcentricPair,
                              "balls " + std::to_string(i) + " and " + std::to_string(j) +
                                  " are concentric");
  return BallSet(std::move(balls), d);
}

BallSet unchecked_ball_set(std::vector<Ball> balls, std::size_t d) {
  return BallSet(std::move(balls), d);
}

RadiusShift normalize_radii(const BallSet& set) {
  double rmin = set[0].radius;
  for (std::size_t i = 1; i < set.size(); ++i) rmin = std::min(rmin, set[i].radius);
  const double shift = rmin < 0.0 ? -rmin : 0.0;
  if (shift == 0.0) return RadiusShift{set, 0.0};
  std::vector<Ball> shifted = set.balls();
  for (Ball& b : shifted) b.radius += shift;
  return RadiusShift{unchecked_ball_set(std::move(shifted), set.dim()), shift};
}

Preprocessed preprocess_translate(const BallSet& set) {
  std::size_t k = 0;
  for (std::size_t i = 1; i < set.size(); ++i)
    if (set[i].radius < set[k].radius) k = i;  // ties keep the lowest index

  const std::vector<double> offset = set[k].center;
  const double r_offset = set[k].radius;

  std::vector<Ball> moved = set.balls();
  for (Ball& b : moved) {
    for (std::size_t j = 0; j < b.center.size(); ++j) b.center[j] -= offset[j];
    b.radius -= r_offset;
  }
  return Preprocessed{unchecked_ball_set(std::move(moved), set.dim()), k, offset, r_offset};
}

std::vector<double> restore_center(const Preprocessed& pre, const std::vector<double>& x) {
  std::vector<double> out = x;
  for (std::size_t j = 0; j < out.size(); ++j) out[j] += pre.center_offset[j];
  return out;
}

double restore_radius(const Preprocessed& pre, double r) {
  // Generators were decremented by radius_offset, so solution radii of the
  // translated set are larger by the same amount.
  return r - pre.radius_offset;
}

}  // namespace apollo
