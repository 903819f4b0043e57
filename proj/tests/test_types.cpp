#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "apollo/oracle.hpp"
#include "apollo/subdim.hpp"
#include "apollo/types.hpp"

using namespace apollo;

namespace {

Ball b2(double x, double y, double r) { return Ball({x, y}, r); }

}  // namespace

TEST_CASE("validate accepts well-formed input") {
  const BallSet s = validate_ball_set({b2(0, 0, 1), b2(3, 0, 1), b2(0, 3, 1)}, 2);
  CHECK(s.dim() == 2);
  CHECK(s.size() == 3);
  CHECK(s.scale() == doctest::Approx(4.0));
}

TEST_CASE("validate rejects malformed input") {
  CHECK_THROWS_AS(validate_ball_set({b2(0, 0, 1), b2(1, 0, 1)}, 2), ValidationError);
  CHECK_THROWS_AS(validate_ball_set({b2(0, 0, 1), b2(0, 0, 2), b2(1, 1, 1)}, 2),
                  ValidationError);
  CHECK_THROWS_AS(validate_ball_set({Ball({0.0}, 1), b2(1, 0, 1), b2(0, 1, 1)}, 2),
                  ValidationError);
  CHECK_THROWS_AS(
      validate_ball_set({b2(0, 0, NAN), b2(1, 0, 1), b2(0, 1, 1)}, 2), ValidationError);

  try {
    validate_ball_set({b2(2, 2, 1), b2(2, 2, 2), b2(1, 1, 1)}, 2);
    CHECK(false);
  } catch (const ValidationError& e) {
    CHECK(e.code() == ValidationCode::ConcentricPair);
  }
}

TEST_CASE("validate keeps overlapping and contained balls") {
  CHECK_NOTHROW(validate_ball_set({b2(0, 0, 5), b2(1, 0, 1), b2(0, 1, 0.5)}, 2));
}

TEST_CASE("normalize_radii") {
  SUBCASE("already non-negative") {
    const BallSet s = validate_ball_set({b2(0, 0, 1), b2(3, 0, 2), b2(0, 3, 0.5)}, 2);
    const RadiusShift n = normalize_radii(s);
    CHECK(n.shift == 0.0);
    CHECK(n.set[0].radius == 1.0);
  }
  SUBCASE("negative minimum") {
    const BallSet s = validate_ball_set({b2(0, 0, -1), b2(3, 0, 0), b2(0, 3, 2)}, 2);
    const RadiusShift n = normalize_radii(s);
    CHECK(n.shift == 1.0);
    CHECK(n.set[0].radius == 0.0);
    CHECK(n.set[1].radius == 1.0);
    CHECK(n.set[2].radius == 3.0);
    CHECK(n.set[0].center == s[0].center);
  }
  SUBCASE("uniform negative") {
    const BallSet s = validate_ball_set({b2(0, 0, -0.5), b2(3, 0, -0.5), b2(0, 3, -0.5)}, 2);
    const RadiusShift n = normalize_radii(s);
    CHECK(n.shift == 0.5);
    for (std::size_t i = 0; i < 3; ++i) CHECK(n.set[i].radius == 0.0);
  }
}

TEST_CASE("preprocess_translate pivots the smallest-radius ball") {
  SUBCASE("smallest already a point at the origin") {
    const BallSet s = validate_ball_set({b2(-2, 0, 1), b2(2, 0, 1), b2(0, 0, 0)}, 2);
    const Preprocessed p = preprocess_translate(s);
    CHECK(p.pivot == 2);
    CHECK(p.radius_offset == 0.0);
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(p.set[i].center == s[i].center);
      CHECK(p.set[i].radius == s[i].radius);
    }
  }
  SUBCASE("pivot moves to the origin") {
    const BallSet s = validate_ball_set({b2(1, 1, 2), b2(3, 1, 1), b2(0, 4, 5)}, 2);
    const Preprocessed p = preprocess_translate(s);
    CHECK(p.pivot == 1);
    CHECK(p.set[1].center == std::vector<double>{0.0, 0.0});
    CHECK(p.set[1].radius == 0.0);
    CHECK(p.set[0].center == std::vector<double>{-2.0, 0.0});
    CHECK(p.set[0].radius == 1.0);
  }
  SUBCASE("round trip is exact on integer data") {
    const BallSet s = validate_ball_set({b2(1, 7, 2), b2(-3, 2, 4), b2(5, -1, 3)}, 2);
    const Preprocessed p = preprocess_translate(s);
    for (std::size_t i = 0; i < 3; ++i) {
      const std::vector<double> back = restore_center(p, p.set[i].center);
      CHECK(back == s[i].center);
      // restore_radius maps solution radii; generator radii invert the same shift
      CHECK(p.set[i].radius + p.radius_offset == s[i].radius);
    }
  }
  SUBCASE("radius ties break to the lowest index") {
    const BallSet s = validate_ball_set({b2(1, 0, 1), b2(2, 0, 1), b2(3, 1, 2)}, 2);
    CHECK(preprocess_translate(s).pivot == 0);
  }
}

TEST_CASE("radius-shift covariance against the solver") {
  // solve the shifted set, add the shift back, compare against solving the
  // original directly
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    BallSet base = oracle::random_ball_set(2, seed, oracle::Conditioning::WellSeparated);
    std::vector<Ball> shifted_down = base.balls();
    for (Ball& b : shifted_down) b.radius -= 2.0;  // force negative radii
    const BallSet negative = unchecked_ball_set(std::move(shifted_down), 2);

    double rmin = negative[0].radius;
    for (std::size_t i = 1; i < negative.size(); ++i)
      rmin = std::min(rmin, negative[i].radius);
    const RadiusShift n = normalize_radii(negative);
    REQUIRE(n.shift == -rmin);
    REQUIRE(n.shift > 0.0);
    const SolveOutcome direct = dispatch_solve(negative);
    const SolveOutcome renorm = dispatch_solve(n.set);
    REQUIRE(direct.solutions.size() == renorm.solutions.size());
    for (std::size_t i = 0; i < direct.solutions.size(); ++i) {
      const double recovered = renorm.solutions[i].r + n.shift;
      CHECK(recovered == doctest::Approx(direct.solutions[i].r).epsilon(1e-9));
      for (std::size_t j = 0; j < 2; ++j)
        CHECK(renorm.solutions[i].x[j] ==
              doctest::Approx(direct.solutions[i].x[j]).epsilon(1e-9));
      // the shifted problem's own radii differ from the original's by the shift
      CHECK(renorm.solutions[i].r ==
            doctest::Approx(direct.solutions[i].r - n.shift).epsilon(1e-9));
    }
  }
}
