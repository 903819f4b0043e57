#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace apollo {

/// An input ball: center in R^d plus a radius. Radii may be negative on
/// input; normalize_radii() shifts a set to non-negative radii.
struct Ball {
  std::vector<double> center;
  double radius = 0.0;

  Ball() = default;
  Ball(std::vector<double> c, double r) : center(std::move(c)), radius(r) {}
  std::size_t dim() const { return center.size(); }
};

enum class ValidationCode {
  WrongCount,
  DimensionMismatch,
  NonFinite,
  ConcentricPair,
};

class ValidationError : public std::runtime_error {
 public:
  ValidationError(ValidationCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ValidationCode code() const { return code_; }

 private:
  ValidationCode code_;
};

/// Relative tolerances, all against the input scale
/// (max |coordinate| + max |radius|).
struct Tolerances {
  double singular_rel = 1e-12;  // pivot/determinant cutoff for det(V)=0
  double residual_rel = 1e-9;   // tangency residual bound
  double dedupe_rel = 1e-9;     // solution de-duplication distance
};

/// A validated vertex problem: exactly d+1 balls, pairwise non-concentric,
/// all finite. Immutable after construction.
class BallSet {
 public:
  std::size_t dim() const { return dim_; }
  std::size_t size() const { return balls_.size(); }  // always dim()+1
  const Ball& operator[](std::size_t i) const { return balls_[i]; }
  const std::vector<Ball>& balls() const { return balls_; }

  /// max |coordinate| + max |radius|; the reference scale for every
  /// relative tolerance.
  double scale() const { return scale_; }

  friend BallSet validate_ball_set(std::vector<Ball> balls, std::size_t d);
  friend BallSet unchecked_ball_set(std::vector<Ball> balls, std::size_t d);

 private:
  BallSet(std::vector<Ball> balls, std::size_t d);
  std::vector<Ball> balls_;
  std::size_t dim_ = 0;
  double scale_ = 0.0;
};

/// Checks count, dimensions, finiteness and the no-concentric-pair rule.
/// Concentricity is exact coordinate equality; overlapping, hidden and
/// trivial balls are all accepted.
BallSet validate_ball_set(std::vector<Ball> balls, std::size_t d);

/// Rebuilds a set whose balls are already known valid (internal reorderings,
/// radius shifts). Skips the O(d^3) pair scan but keeps the shared invariants.
BallSet unchecked_ball_set(std::vector<Ball> balls, std::size_t d);

/// Tangency-mode selectors, one per ball, each +1 or -1. All-(+1) is the
/// symmetric mode used by the diagram solvers.
struct SignSet {
  std::vector<int> signs;

  static SignSet all_plus(std::size_t n) { return SignSet{std::vector<int>(n, 1)}; }
  std::size_t size() const { return signs.size(); }
  int operator[](std::size_t i) const { return signs[i]; }
};

struct RadiusShift {
  BallSet set;
  double shift = 0.0;  // amount added to every generator radius
};

/// Shifts all radii by -min(r) when some radius is negative, else by 0.
/// Solving the shifted set yields radii smaller by exactly `shift`; add
/// `shift` back to recover solution radii for the original set.
RadiusShift normalize_radii(const BallSet& set);

struct Preprocessed {
  BallSet set;                        // translated set; ball `pivot` is ((0,...,0), 0)
  std::size_t pivot = 0;              // index of the smallest-radius ball
  std::vector<double> center_offset;  // original center of the pivot ball
  double radius_offset = 0.0;         // original radius of the pivot ball
};

/// Translates so the smallest-radius ball (lowest index on ties) becomes a
/// point at the origin: x_i -= x_k, r_i -= r_k. Undo with
/// restore_center/restore_radius.
Preprocessed preprocess_translate(const BallSet& set);

std::vector<double> restore_center(const Preprocessed& pre, const std::vector<double>& x);
double restore_radius(const Preprocessed& pre, double r);

}  // namespace apollo
