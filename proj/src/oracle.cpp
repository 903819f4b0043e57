#include "apollo/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace apollo::oracle {

ResidualReport tangency_residual(const BallSet& set, const ApolloniusSolution& sol,
                                 const SignSet& signs) {
  ResidualReport rep;
  rep.per_ball.resize(set.size());
  for (std::size_t i = 0; i < set.size(); ++i) {
    double d2 = 0.0;
    for (std::size_t j = 0; j < set.dim(); ++j) {
      const double e = set[i].center[j] - sol.x[j];
      d2 += e * e;
    }
    const double res = std::sqrt(d2) - std::fabs(signs[i] * set[i].radius + sol.r);
    rep.per_ball[i] = res;
    rep.max_abs = std::max(rep.max_abs, std::fabs(res));
  }
  return rep;
}

ResidualReport tangency_residual(const BallSet& set, const ApolloniusSolution& sol) {
  return tangency_residual(set, sol, SignSet::all_plus(set.size()));
}

namespace {

// local elimination solver so the oracle shares no code with the kernel it
// checks
bool gauss_solve(std::vector<std::vector<double>> a, std::vector<double>& b) {
  const std::size_t n = b.size();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::fabs(a[i][k]) > std::fabs(a[piv][k])) piv = i;
    if (a[piv][k] == 0.0) return false;
    std::swap(a[piv], a[k]);
    std::swap(b[piv], b[k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = a[i][k] / a[k][k];
      if (f == 0.0) continue;
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
      b[i] -= f * b[k];
    }
  }
  for (std::size_t ii = n; ii-- > 0;) {
    double s = b[ii];
    for (std::size_t j = ii + 1; j < n; ++j) s -= a[ii][j] * b[j];
    b[ii] = s / a[ii][ii];
  }
  return true;
}

struct NewtonResult {
  std::vector<double> x;
  double r = 0.0;
  bool converged = false;
};

NewtonResult newton(const BallSet& set, const SignSet& signs, std::vector<double> x, double r,
                    double f_tol) {
  const std::size_t d = set.dim();
  const std::size_t n = d + 1;

  auto eval = [&](const std::vector<double>& xx, double rr, std::vector<double>& f) {
    for (std::size_t i = 0; i < n; ++i) {
      double d2 = 0.0;
      for (std::size_t j = 0; j < d; ++j) {
        const double e = set[i].center[j] - xx[j];
        d2 += e * e;
      }
      const double sum = signs[i] * set[i].radius + rr;
      f[i] = d2 - sum * sum;
    }
  };
  auto norm_inf = [](const std::vector<double>& f) {
    double m = 0.0;
    for (double v : f) m = std::max(m, std::fabs(v));
    return m;
  };

  std::vector<double> f(n), f_new(n);
  eval(x, r, f);
  double fn = norm_inf(f);

  for (int iter = 0; iter < 50; ++iter) {
    if (fn <= f_tol) return {x, r, true};
    std::vector<std::vector<double>> jac(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < d; ++j) jac[i][j] = -2.0 * (set[i].center[j] - x[j]);
      jac[i][d] = -2.0 * (signs[i] * set[i].radius + r);
    }
    std::vector<double> step(n);
    for (std::size_t i = 0; i < n; ++i) step[i] = -f[i];
    if (!gauss_solve(jac, step)) break;

    double lambda = 1.0;
    bool accepted = false;
    std::vector<double> x_try(d);
    for (int halve = 0; halve < 40; ++halve) {
      for (std::size_t j = 0; j < d; ++j) x_try[j] = x[j] + lambda * step[j];
      const double r_try = r + lambda * step[d];
      eval(x_try, r_try, f_new);
      const double fn_new = norm_inf(f_new);
      if (fn_new < fn) {
        x = x_try;
        r = r_try;
        f = f_new;
        fn = fn_new;
        accepted = true;
        break;
      }
      lambda *= 0.5;
    }
    if (!accepted) break;
  }
  return {x, r, fn <= f_tol};
}

}  // namespace

std::vector<std::pair<std::vector<double>, double>> brute_force_solutions(
    const BallSet& set, const SignSet& signs, int starts_per_axis, const Tolerances& tol) {
  const std::size_t d = set.dim();
  const double scale = set.scale();
  const double f_tol = 1e-12 * scale * scale;

  std::vector<double> lo(d, 0.0), hi(d, 0.0);
  double max_r = 0.0;
  for (std::size_t j = 0; j < d; ++j) {
    lo[j] = set[0].center[j];
    hi[j] = set[0].center[j];
  }
  for (std::size_t i = 0; i < set.size(); ++i) {
    max_r = std::max(max_r, std::fabs(set[i].radius));
    for (std::size_t j = 0; j < d; ++j) {
      lo[j] = std::min(lo[j], set[i].center[j]);
      hi[j] = std::max(hi[j], set[i].center[j]);
    }
  }
  double diag2 = 0.0;
  for (std::size_t j = 0; j < d; ++j) diag2 += (hi[j] - lo[j]) * (hi[j] - lo[j]);
  double span = std::sqrt(diag2) + 2.0 * max_r;
  if (span == 0.0) span = 1.0;
  const double margin = max_r + 0.25 * span;

  const int k = std::max(starts_per_axis, 2);
  std::vector<std::pair<std::vector<double>, double>> found;

  // grid over the padded bounding box crossed with radius seeds in
  // [-span, span]
  std::vector<int> idx(d + 1, 0);
  for (;;) {
    std::vector<double> x0(d);
    for (std::size_t j = 0; j < d; ++j) {
      const double a = lo[j] - margin, b = hi[j] + margin;
      x0[j] = a + (b - a) * idx[j] / double(k - 1);
    }
    const double r0 = -span + 2.0 * span * idx[d] / double(k - 1);

    NewtonResult res = newton(set, signs, x0, r0, f_tol);
    if (res.converged) {
      ApolloniusSolution cand;
      cand.x = res.x;
      cand.r = res.r;
      if (tangency_residual(set, cand, signs).max_abs <= tol.residual_rel * scale) {
        bool dup = false;
        const double tol_x = tol.dedupe_rel * scale;
        for (const auto& [fx, fr] : found) {
          if (std::fabs(fr - res.r) > tol_x) continue;
          double d2 = 0.0;
          for (std::size_t j = 0; j < d; ++j) d2 += (fx[j] - res.x[j]) * (fx[j] - res.x[j]);
          if (d2 <= tol_x * tol_x) {
            dup = true;
            break;
          }
        }
        if (!dup) found.emplace_back(res.x, res.r);
      }
    }

    std::size_t carry = 0;
    while (carry <= d) {
      if (++idx[carry] < k) break;
      idx[carry] = 0;
      ++carry;
    }
    if (carry > d) break;
  }

  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  return found;
}

namespace {

std::uint64_t mix_seed(std::size_t d, std::uint64_t seed, int mode, int attempt) {
  std::uint64_t h = seed * 0x9E3779B97F4A7C15ull;
  h ^= (std::uint64_t(d) << 24) ^ (std::uint64_t(mode) << 16) ^ std::uint64_t(attempt);
  h ^= h >> 29;
  h *= 0xBF58476D1CE4E5B9ull;
  h ^= h >> 32;
  return h;
}

// Rejects thin simplices: |det| must clear a fixed fraction of the row-norm
// product, so the difference matrix stays well conditioned for the solvers.
bool full_rank_enough(const std::vector<Ball>& balls, std::size_t d) {
  if (d > 8) return true;  // determinant magnitudes overflow doubles well before d=64
  Matrix v(d, d);
  double norm_prod = 1.0;
  for (std::size_t i = 0; i < d; ++i) {
    double n2 = 0.0;
    for (std::size_t j = 0; j < d; ++j) {
      v(i, j) = balls[i].center[j] - balls[d].center[j];
      n2 += v(i, j) * v(i, j);
    }
    norm_prod *= std::sqrt(n2);
  }
  if (norm_prod == 0.0) return false;
  double frac = 1.0;
  for (std::size_t j = 0; j < d; ++j) frac *= 0.3;
  return std::fabs(determinant(v)) > frac * norm_prod;
}

}  // namespace

BallSet random_ball_set(std::size_t d, std::uint64_t seed, Conditioning mode) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::mt19937_64 rng(mix_seed(d, seed, static_cast<int>(mode), attempt));
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<Ball> balls;

    if (mode == Conditioning::WellSeparated) {
      std::uniform_real_distribution<double> coord(0.0, 10.0);
      std::uniform_real_distribution<double> rad(0.2, 1.0);
      bool ok = true;
      for (std::size_t i = 0; i <= d && ok; ++i) {
        bool placed = false;
        for (int tries = 0; tries < 400 && !placed; ++tries) {
          Ball b;
          b.radius = rad(rng);
          b.center.resize(d);
          for (std::size_t j = 0; j < d; ++j) b.center[j] = coord(rng);
          placed = true;
          for (const Ball& other : balls) {
            double d2 = 0.0;
            for (std::size_t j = 0; j < d; ++j) {
              const double e = b.center[j] - other.center[j];
              d2 += e * e;
            }
            const double need = b.radius + other.radius + 0.2;
            if (d2 <= need * need) {
              placed = false;
              break;
            }
          }
          if (placed) balls.push_back(std::move(b));
        }
        if (!placed) ok = false;
      }
      if (!ok || !full_rank_enough(balls, d)) continue;
    } else if (mode == Conditioning::Overlapping) {
      std::uniform_real_distribution<double> coord(0.0, 4.0);
      std::uniform_real_distribution<double> rad(0.5, 1.5);
      bool ok = true;
      for (std::size_t i = 0; i <= d && ok; ++i) {
        bool placed = false;
        for (int tries = 0; tries < 400 && !placed; ++tries) {
          Ball b;
          b.radius = rad(rng);
          b.center.resize(d);
          for (std::size_t j = 0; j < d; ++j) b.center[j] = coord(rng);
          placed = true;
          for (const Ball& other : balls) {
            double d2 = 0.0;
            for (std::size_t j = 0; j < d; ++j) {
              const double e = b.center[j] - other.center[j];
              d2 += e * e;
            }
            // overlap is fine; contained (trivial) balls are not
            const double gap = std::fabs(b.radius - other.radius) + 0.05;
            if (d2 <= gap * gap) {
              placed = false;
              break;
            }
          }
          if (placed) balls.push_back(std::move(b));
        }
        if (!placed) ok = false;
      }
      if (!ok || !full_rank_enough(balls, d)) continue;
    } else {
      // NearDegenerate: centers within ~1e-8 of a random hyperplane
      std::normal_distribution<double> gauss(0.0, 1.0);
      std::vector<double> n(d);
      double nn = 0.0;
      for (std::size_t j = 0; j < d; ++j) {
        n[j] = gauss(rng);
        nn += n[j] * n[j];
      }
      nn = std::sqrt(nn);
      if (nn == 0.0) continue;
      for (double& v : n) v /= nn;
      std::uniform_real_distribution<double> coord(0.0, 5.0);
      std::uniform_real_distribution<double> rad(0.2, 1.0);
      for (std::size_t i = 0; i <= d; ++i) {
        Ball b;
        b.radius = rad(rng);
        b.center.resize(d);
        double along = 0.0;
        for (std::size_t j = 0; j < d; ++j) {
          b.center[j] = coord(rng);
          along += b.center[j] * n[j];
        }
        const double off = (2.0 * unit(rng) - 1.0) * 5e-8;
        for (std::size_t j = 0; j < d; ++j) b.center[j] += (off - along) * n[j];
        balls.push_back(std::move(b));
      }
    }

    bool concentric = false;
    for (std::size_t i = 0; i < balls.size() && !concentric; ++i)
      for (std::size_t j = i + 1; j < balls.size(); ++j)
        if (balls[i].center == balls[j].center) {
          concentric = true;
          break;
        }
    if (concentric || balls.size() != d + 1) continue;
    BallSet set = unchecked_ball_set(std::move(balls), d);

    if (mode != Conditioning::NearDegenerate && d <= 8) {
      // a gradient norm near 1 (all balls close to a common tangent
      // hyperplane) makes one root enormous and the problem itself
      // ill-conditioned; keep such draws out of the "well-conditioned" pool
      const PowerSolution ps = power_vertex(set);
      if (!ps.full_rank) continue;
      double pt2 = 0.0;
      for (double v : ps.ptilde) pt2 += v * v;
      if (std::fabs(pt2 - 1.0) < 0.1 * (1.0 + pt2)) continue;
    }
    return set;
  }
  throw std::runtime_error("random_ball_set: could not build a set for these parameters");
}

}  // namespace apollo::oracle
