#include "apollo/subdim.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>

#include "apollo/smallmat.hpp"

namespace apollo {

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Greedy pivoted selection of `want` rows spanning the largest volume:
// repeatedly take the row with the largest residual after projecting out
// the picks so far. Returns indices into `rows`; short when rank is lower.
std::vector<std::size_t> greedy_basis(const std::vector<std::vector<double>>& rows,
                                      std::size_t want, double cutoff) {
  std::vector<std::vector<double>> resid = rows;
  std::vector<std::size_t> picked;
  std::vector<char> used(rows.size(), 0);
  for (std::size_t step = 0; step < want; ++step) {
    std::size_t best = rows.size();
    double best_norm2 = cutoff * cutoff;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (used[i]) continue;
      const double n2 = dot(resid[i], resid[i]);
      if (n2 > best_norm2) {
        best_norm2 = n2;
        best = i;
      }
    }
    if (best == rows.size()) break;
    used[best] = 1;
    picked.push_back(best);
    const double inv = 1.0 / std::sqrt(best_norm2);
    std::vector<double> q = resid[best];
    for (double& v : q) v *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (used[i]) continue;
      const double proj = dot(resid[i], q);
      for (std::size_t j = 0; j < q.size(); ++j) resid[i][j] -= proj * q[j];
    }
  }
  return picked;
}

}  // namespace

SolveOutcome solve_subdimensional(const BallSet& set, const Tolerances& tol) {
  const std::size_t d = set.dim();
  const double scale = set.scale();

  // base ball: smallest radius (lowest index on ties), so every w_i >= 0
  std::size_t base = 0;
  for (std::size_t i = 1; i < set.size(); ++i)
    if (set[i].radius < set[base].radius) base = i;

  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < set.size(); ++i)
    if (i != base) order.push_back(i);

  std::vector<std::vector<double>> u(d, std::vector<double>(d));
  std::vector<double> w(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j)
      u[i][j] = set[order[i]].center[j] - set[base].center[j];
    w[i] = set[order[i]].radius - set[base].radius;
  }

  SolveOutcome out;
  out.subdimensional = true;
  out.rankV = static_cast<int>(d) - 1;

  const std::vector<std::size_t> basis = greedy_basis(u, d - 1, tol.singular_rel * scale);
  if (basis.size() < d - 1) {
    out.status = SolveStatus::RankTooLow;
    out.rankV = static_cast<int>(basis.size());
    return out;
  }

  std::vector<std::vector<double>> basis_rows(d - 1);
  for (std::size_t j = 0; j + 1 < d; ++j) basis_rows[j] = u[basis[j]];
  std::vector<double> n_hat = cofactor_normal_subspace(basis_rows);
  const double nn = std::sqrt(dot(n_hat, n_hat));
  if (nn == 0.0) {
    out.status = SolveStatus::RankTooLow;
    return out;
  }
  for (double& v : n_hat) v /= nn;
  // orient: first non-negligible component positive
  double nmax = 0.0;
  for (double v : n_hat) nmax = std::max(nmax, std::fabs(v));
  for (double v : n_hat) {
    if (std::fabs(v) > 1e-12 * nmax) {
      if (v < 0.0)
        for (double& q : n_hat) q = -q;
      break;
    }
  }

  bool any_w = false;
  for (double wi : w)
    if (wi != 0.0) any_w = true;
  if (!any_w) {
    out.status = SolveStatus::USingular;  // all radii equal: no solutions
    return out;
  }

  Matrix bigu(d, d);
  Matrix rhs(d, 1);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j + 1 < d; ++j) bigu(i, j) = dot(u[i], u[basis[j]]);
    bigu(i, d - 1) = w[i];
    rhs(i, 0) = 0.5 * (dot(u[i], u[i]) - w[i] * w[i]);
  }
  auto g = solve_linear(bigu, rhs, tol.singular_rel);
  if (!g) {
    out.status = SolveStatus::USingular;
    return out;
  }
  {
    // one refinement pass: the Gram-structured system squares the basis
    // conditioning and the shared radius is promised at machine precision
    Matrix resid(d, 1);
    for (std::size_t i = 0; i < d; ++i) {
      double s = rhs(i, 0);
      for (std::size_t j = 0; j < d; ++j) s -= bigu(i, j) * (*g)(j, 0);
      resid(i, 0) = s;
    }
    if (auto corr = solve_linear(bigu, resid, tol.singular_rel))
      for (std::size_t i = 0; i < d; ++i) (*g)(i, 0) += (*corr)(i, 0);
  }

  std::vector<double> c(d, 0.0);
  for (std::size_t j = 0; j + 1 < d; ++j)
    for (std::size_t k = 0; k < d; ++k) c[k] += (*g)(j, 0) * u[basis[j]][k];
  const double w_sol = (*g)(d - 1, 0);

  const double disc = w_sol * w_sol - dot(c, c);
  out.discriminant = disc;
  const double graze = 1e-12 * scale * scale;
  if (disc < -graze) {
    out.status = SolveStatus::Imaginary;
    out.special_case = SpecialCase::Imaginary;
    return out;
  }
  const double h = disc > 0.0 ? std::sqrt(disc) : 0.0;
  const double r = w_sol - set[base].radius;

  SubdimDetail detail;
  detail.c = c;
  detail.n_hat = n_hat;
  detail.w = w_sol;
  detail.h = h;
  out.subdim = detail;

  auto make = [&](double side, RootLabel label) {
    ApolloniusSolution s;
    s.r = r;  // one shared radius for the pair
    s.root = label;
    s.x.resize(d);
    for (std::size_t j = 0; j < d; ++j)
      s.x[j] = set[base].center[j] + c[j] + side * h * n_hat[j];
    out.solutions.push_back(std::move(s));
  };
  if (h == 0.0) {
    make(0.0, RootLabel::Single);  // doubled root in the center subspace
  } else {
    make(1.0, RootLabel::Plus);
    make(-1.0, RootLabel::Minus);
  }
  return out;
}

SolveOutcome dispatch_solve(const BallSet& set, const Tolerances& tol) {
  const PowerSolution ps = power_vertex(set, tol);
  if (ps.full_rank) return solve_recipe1(set, tol);
  if (ps.rankV == static_cast<int>(set.dim()) - 1) return solve_subdimensional(set, tol);
  SolveOutcome out;
  out.status = SolveStatus::RankTooLow;
  out.rankV = ps.rankV;
  return out;
}

}  // namespace apollo
