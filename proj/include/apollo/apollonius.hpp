#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "apollo/power.hpp"
#include "apollo/types.hpp"

namespace apollo {

enum class RootLabel { Plus, Minus, Single };

enum class TangencyClass { Unclassified, Positive, SmallNegative, LargeNegative, ZeroRadius };

enum class SpecialCase { Generic, RpZero, PtildeUnit, PtildeZero, Imaginary };

enum class SolveStatus {
  Ok,
  Imaginary,        // negative discriminant: complex-conjugate pair, no balls
  NoSolutions,      // degenerate linear case (no roots at all)
  SubDimensional,   // det(V) = 0; route to the rank d-1 solver
  USingular,        // rank d-1 solver: singular reduced system (e.g. all radii equal)
  RankTooLow,       // rank(V) < d-1: out of scope
  DegenerateNormal  // lifted difference vectors dependent (normal-vector route)
};

const char* to_string(SolveStatus s);
const char* to_string(SpecialCase s);
const char* to_string(TangencyClass k);
const char* to_string(RootLabel r);

/// One tangent ball (x, r). Radius is signed: negative radii encode
/// enclosing/enclosed tangency modes.
struct ApolloniusSolution {
  std::vector<double> x;
  double r = 0.0;
  RootLabel root = RootLabel::Single;
  TangencyClass klass = TangencyClass::Unclassified;
  bool diagram_relevant = true;
  std::optional<std::uint32_t> twin_id;
};

/// Diagnostics for the rank d-1 solver: the solutions are
/// x_pm = x_base + c +- h * n_hat with one shared radius.
struct SubdimDetail {
  std::vector<double> c;      // in-subspace component
  std::vector<double> n_hat;  // unit normal to the center subspace
  double w = 0.0;             // shifted radius
  double h = 0.0;             // out-of-subspace magnitude
};

struct SolveOutcome {
  SolveStatus status = SolveStatus::Ok;
  SpecialCase special_case = SpecialCase::Generic;
  std::vector<ApolloniusSolution> solutions;  // 0..2, radius-descending
  double discriminant = 0.0;
  int rankV = -1;            // filled on SubDimensional/RankTooLow routes
  bool subdimensional = false;
  std::string pair_pattern;  // class pair ("positive/large-negative"), set by classify_roots
  std::optional<SubdimDetail> subdim;

  bool ok() const { return status == SolveStatus::Ok; }
};

/// Recipe 1: one factorization gives p and the power gradient; radii from
/// the gradient quadratic, centers x = p + r*ptilde.
SolveOutcome solve_recipe1(const BallSet& set, const Tolerances& tol = {});

/// Recipe 2: power vertices of the set and its unit-incremented copy span
/// the solution line; radii from the two-scalar quadratic.
SolveOutcome solve_recipe2(const BallSet& set, const Tolerances& tol = {});

/// Recipe 3: solutions as scalings of the unit normal to the lifted
/// difference vectors in R^{d+1}.
SolveOutcome solve_recipe3(const BallSet& set, const Tolerances& tol = {});

class ClassificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Labels each solution. Negative-radius balls with |r| above the largest
/// generator radius enclose the whole set and are never diagram vertices;
/// the rest are. Requires non-negative generator radii (normalize_radii
/// first); throws ClassificationError otherwise.
SolveOutcome classify_roots(SolveOutcome outcome, const BallSet& set);

/// Marks the two roots of one quadratic as a twin pair when both are
/// diagram relevant: such a pair bounds an entire cell by itself.
SolveOutcome detect_twin(SolveOutcome outcome);

/// Recipe 1 with radii r_i replaced by s_i*r_i in the gradient column and
/// the linear term. p and rp2 are sign-blind. All-(+1) reproduces
/// solve_recipe1 exactly.
SolveOutcome solve_signed(const BallSet& set, const SignSet& signs, const Tolerances& tol = {});

/// Solves every one of the 2^(d+1) sign sets with a single factorization
/// (one gradient column per sign set). Solutions deduplicated across sign
/// sets by (center, |r|): the {s}/{-s} mirror pairs coincide. Entries that
/// contribute no new solution are dropped. d <= 10.
std::vector<std::pair<SignSet, SolveOutcome>> solve_all_sign_sets(const BallSet& set,
                                                                  const Tolerances& tol = {});

}  // namespace apollo
