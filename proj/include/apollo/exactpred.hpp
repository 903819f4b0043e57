#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <vector>

#include "apollo/apollonius.hpp"

namespace apollo::exact {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// A ball with integer data; the only input the exact predicates accept.
/// The CLI scales decimal inputs by a declared power of ten.
struct IntBall {
  std::vector<BigInt> center;
  BigInt radius;
};

enum class ExactCode { SingularExact, NegativeRadicand, ImaginaryRoot, RankTooLow, NoSolutions };

class ExactError : public std::runtime_error {
 public:
  ExactError(ExactCode code, const char* what) : std::runtime_error(what), code_(code) {}
  ExactCode code() const { return code_; }

 private:
  ExactCode code_;
};

/// a + b*sqrt(c) with rational parts and a non-negative radicand; the form
/// every vertex predicate reduces to.
struct RadicalExpr {
  Rational a, b, c;
};

/// Exact determinant (Bareiss fraction-free elimination) and its sign.
BigInt det_exact(const std::vector<std::vector<BigInt>>& m);
int det_sign(const std::vector<std::vector<BigInt>>& m);

/// Exact i-th component of the solution of V p = t: |V_i| / |V| with the
/// i-th column replaced by t. Throws SingularExact when |V| = 0.
Rational cramer_component(const std::vector<std::vector<BigInt>>& v,
                          const std::vector<BigInt>& t, std::size_t i);

/// Exact sign of a + b*sqrt(c). The irrational part never needs to be
/// evaluated: opposing-sign cases reduce to comparing a^2 with b^2*c.
int radical_sign(const RadicalExpr& e);

/// Reduces the conflict test |x_q - x|^2 - (r_q + r)^2 for the selected
/// solution ball of `balls` to a single RadicalExpr. Dispatches on exact
/// |V| = 0 to the rank d-1 closed form. Root selection: Plus is the larger
/// radius for full-rank sets and the +n_hat mirror for rank d-1 sets,
/// matching the floating solvers.
RadicalExpr conflict_expression(const std::vector<IntBall>& balls, RootLabel root,
                                const IntBall& query);

/// True iff the query ball is in conflict with (strictly overlaps) the
/// selected solution ball.
bool incircle(const std::vector<IntBall>& balls, RootLabel root, const IntBall& query);

/// Exact sign of (r_q + r) for the selected solution; conflict filtering
/// needs it since the squared test is sign-blind.
int radius_sum_sign(const std::vector<IntBall>& balls, RootLabel root, const IntBall& query);

}  // namespace apollo::exact
