#include "apollo/exactpred.hpp"

#include <algorithm>
#include <cassert>

namespace apollo::exact {

namespace {

int sgn(const Rational& x) { return x.sign(); }

// boost::rational rejects negative denominators outright for unbounded
// integer types; normalize the sign before constructing
Rational make_rational(BigInt num, BigInt den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

}  // namespace

BigInt det_exact(const std::vector<std::vector<BigInt>>& m_in) {
  const std::size_t n = m_in.size();
  if (n == 0) return 1;
  auto m = m_in;
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = n;
      for (std::size_t i = k + 1; i < n; ++i)
        if (m[i][k] != 0) {
          swap_row = i;
          break;
        }
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;  // exact by Bareiss
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign < 0 ? BigInt(-m[n - 1][n - 1]) : m[n - 1][n - 1];
}

int det_sign(const std::vector<std::vector<BigInt>>& m) {
  const BigInt d = det_exact(m);
  return d.sign();
}

Rational cramer_component(const std::vector<std::vector<BigInt>>& v,
                          const std::vector<BigInt>& t, std::size_t i) {
  const BigInt den = det_exact(v);
  if (den == 0) throw ExactError(ExactCode::SingularExact, "Cramer on a singular matrix");
  auto vi = v;
  for (std::size_t row = 0; row < v.size(); ++row) vi[row][i] = t[row];
  return make_rational(det_exact(vi), den);
}

int radical_sign(const RadicalExpr& e) {
  if (sgn(e.c) < 0) throw ExactError(ExactCode::NegativeRadicand, "negative radicand");
  const int sa = sgn(e.a);
  if (e.b == 0 || e.c == 0) return sa;
  const int sb = sgn(e.b);
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  const Rational lhs = e.a * e.a;
  const Rational rhs = e.b * e.b * e.c;
  if (lhs == rhs) return 0;
  return lhs > rhs ? sa : sb;
}

namespace {

// Solution ball in radical form: x_j = xa_j + xb_j * sqrt(rad),
// r = ra + rb * sqrt(rad). Both the full-rank and the rank d-1 closed
// forms reduce to this shape, so the conflict expression is built once.
struct SolutionRadical {
  std::vector<Rational> xa, xb;
  Rational ra, rb;
  Rational rad;  // >= 0
};

Rational rat(const BigInt& v) { return Rational(v); }

std::size_t largest_radius(const std::vector<IntBall>& balls) {
  std::size_t ref = 0;
  for (std::size_t i = 1; i < balls.size(); ++i)
    if (balls[i].radius > balls[ref].radius) ref = i;
  return ref;
}

SolutionRadical full_rank_solution(const std::vector<IntBall>& balls, RootLabel root,
                                   const BigInt& det_v) {
  const std::size_t d = balls[0].center.size();
  const IntBall& last = balls[d];

  std::vector<std::vector<BigInt>> v(d, std::vector<BigInt>(d));
  std::vector<BigInt> t2(d), rcol(d);  // t2 = 2t keeps the column integral
  BigInt last_pow = -last.radius * last.radius;
  for (const BigInt& cj : last.center) last_pow += cj * cj;
  for (std::size_t i = 0; i < d; ++i) {
    BigInt norm2 = 0;
    for (std::size_t j = 0; j < d; ++j) {
      v[i][j] = balls[i].center[j] - last.center[j];
      norm2 += balls[i].center[j] * balls[i].center[j];
    }
    t2[i] = (norm2 - balls[i].radius * balls[i].radius) - last_pow;
    rcol[i] = -(balls[i].radius - last.radius);
  }

  std::vector<Rational> p(d), pt(d);
  for (std::size_t i = 0; i < d; ++i) {
    auto vi = v;
    for (std::size_t row = 0; row < d; ++row) vi[row][i] = t2[row];
    p[i] = make_rational(det_exact(vi), 2 * det_v);
    for (std::size_t row = 0; row < d; ++row) vi[row][i] = rcol[row];
    pt[i] = make_rational(det_exact(vi), det_v);
  }

  const std::size_t ref = largest_radius(balls);
  Rational rp2 = -rat(balls[ref].radius * balls[ref].radius);
  Rational vdotpt = 0, pt2 = 0;
  for (std::size_t j = 0; j < d; ++j) {
    const Rational vr = rat(balls[ref].center[j]) - p[j];
    rp2 += vr * vr;
    vdotpt += vr * pt[j];
    pt2 += pt[j] * pt[j];
  }
  const Rational a = pt2 - 1;
  const Rational b = -2 * (rat(balls[ref].radius) + vdotpt);
  const Rational c = rp2;

  SolutionRadical sol;
  sol.xa.assign(d, Rational(0));
  sol.xb.assign(d, Rational(0));
  if (a == 0) {
    if (b == 0) throw ExactError(ExactCode::NoSolutions, "degenerate linear tangency equation");
    sol.ra = -c / b;
    sol.rb = 0;
    sol.rad = 0;
  } else {
    const Rational disc = b * b - 4 * a * c;
    if (sgn(disc) < 0) throw ExactError(ExactCode::ImaginaryRoot, "imaginary roots");
    const Rational e = -b / (2 * a);
    Rational g = Rational(1) / (2 * a);
    if (sgn(g) < 0) g = -g;  // larger root carries +sqrt
    if (root == RootLabel::Minus) g = -g;
    sol.ra = e;
    sol.rb = g;
    sol.rad = disc;
  }
  for (std::size_t j = 0; j < d; ++j) {
    sol.xa[j] = p[j] + sol.ra * pt[j];
    sol.xb[j] = sol.rb * pt[j];
  }
  return sol;
}

SolutionRadical subdim_solution(const std::vector<IntBall>& balls, RootLabel root) {
  const std::size_t d = balls[0].center.size();

  std::size_t base = 0;
  for (std::size_t i = 1; i < balls.size(); ++i)
    if (balls[i].radius < balls[base].radius) base = i;

  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < balls.size(); ++i)
    if (i != base) order.push_back(i);

  std::vector<std::vector<BigInt>> u(d, std::vector<BigInt>(d));
  std::vector<BigInt> w(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j)
      u[i][j] = balls[order[i]].center[j] - balls[base].center[j];
    w[i] = balls[order[i]].radius - balls[base].radius;
  }

  // first d-1 linearly independent difference vectors, exactly
  std::vector<std::size_t> basis;
  {
    std::vector<std::pair<std::size_t, std::vector<Rational>>> pivots;  // (pivot col, reduced row)
    for (std::size_t i = 0; i < d && basis.size() < d - 1; ++i) {
      std::vector<Rational> row(d);
      for (std::size_t j = 0; j < d; ++j) row[j] = rat(u[i][j]);
      for (const auto& [pc, pr] : pivots) {
        if (row[pc] == 0) continue;
        const Rational f = row[pc] / pr[pc];
        for (std::size_t j = 0; j < d; ++j) row[j] -= f * pr[j];
      }
      std::size_t pc = 0;
      while (pc < d && row[pc] == 0) ++pc;
      if (pc == d) continue;  // dependent on earlier rows
      pivots.emplace_back(pc, row);
      basis.push_back(i);
    }
  }
  if (basis.size() != d - 1)
    throw ExactError(ExactCode::RankTooLow, "centers span less than d-1 dimensions");

  std::vector<std::vector<BigInt>> basis_rows(d - 1);
  for (std::size_t j = 0; j + 1 < d; ++j) basis_rows[j] = u[basis[j]];

  // integer normal: top-row cofactor expansion, matching the float kernel
  std::vector<BigInt> n(d);
  {
    for (std::size_t j = 0; j < d; ++j) {
      std::vector<std::vector<BigInt>> minor(d - 1, std::vector<BigInt>(d - 1));
      for (std::size_t i = 0; i + 1 < d; ++i) {
        std::size_t jj = 0;
        for (std::size_t k = 0; k < d; ++k) {
          if (k == j) continue;
          minor[i][jj++] = basis_rows[i][k];
        }
      }
      const BigInt md = det_exact(minor);
      n[j] = (j % 2 == 0) ? md : BigInt(-md);
    }
    for (std::size_t j = 0; j < d; ++j) {
      if (n[j] != 0) {
        if (n[j] < 0)
          for (BigInt& q : n) q = -q;
        break;
      }
    }
  }
  BigInt n2i = 0;
  for (const BigInt& q : n) n2i += q * q;
  if (n2i == 0) throw ExactError(ExactCode::RankTooLow, "zero normal vector");

  // reduced system over rationals
  std::vector<std::vector<Rational>> bigu(d, std::vector<Rational>(d));
  std::vector<Rational> rhs(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j + 1 < d; ++j) {
      BigInt s = 0;
      for (std::size_t k2 = 0; k2 < d; ++k2) s += u[i][k2] * u[basis[j]][k2];
      bigu[i][j] = rat(s);
    }
    bigu[i][d - 1] = rat(w[i]);
    BigInt un = 0;
    for (std::size_t k2 = 0; k2 < d; ++k2) un += u[i][k2] * u[i][k2];
    rhs[i] = make_rational(un - w[i] * w[i], BigInt(2));
  }
  // plain rational elimination
  {
    for (std::size_t k = 0; k < d; ++k) {
      std::size_t piv = k;
      while (piv < d && bigu[piv][k] == 0) ++piv;
      if (piv == d)
        throw ExactError(ExactCode::NoSolutions, "singular reduced system (equal radii)");
      if (piv != k) {
        std::swap(bigu[piv], bigu[k]);
        std::swap(rhs[piv], rhs[k]);
      }
      for (std::size_t i = k + 1; i < d; ++i) {
        if (bigu[i][k] == 0) continue;
        const Rational f = bigu[i][k] / bigu[k][k];
        for (std::size_t j = k; j < d; ++j) bigu[i][j] -= f * bigu[k][j];
        rhs[i] -= f * rhs[k];
      }
    }
    for (std::size_t ii = d; ii-- > 0;) {
      for (std::size_t j = ii + 1; j < d; ++j) rhs[ii] -= bigu[ii][j] * rhs[j];
      rhs[ii] /= bigu[ii][ii];
    }
  }

  std::vector<Rational> c(d, Rational(0));
  for (std::size_t j = 0; j + 1 < d; ++j)
    for (std::size_t k2 = 0; k2 < d; ++k2) c[k2] += rhs[j] * rat(u[basis[j]][k2]);
  const Rational w_sol = rhs[d - 1];

  Rational c2 = 0;
  for (const Rational& q : c) c2 += q * q;
  const Rational disc2 = w_sol * w_sol - c2;
  if (sgn(disc2) < 0) throw ExactError(ExactCode::ImaginaryRoot, "imaginary mirror pair");

  SolutionRadical sol;
  sol.rad = disc2 / rat(n2i);
  sol.ra = w_sol - rat(balls[base].radius);
  sol.rb = 0;
  sol.xa.resize(d);
  sol.xb.resize(d);
  const int side = root == RootLabel::Minus ? -1 : 1;
  for (std::size_t j = 0; j < d; ++j) {
    sol.xa[j] = rat(balls[base].center[j]) + c[j];
    sol.xb[j] = side * rat(n[j]);
  }
  return sol;
}

SolutionRadical closed_solution(const std::vector<IntBall>& balls, RootLabel root) {
  const std::size_t d = balls[0].center.size();
  assert(balls.size() == d + 1);
  std::vector<std::vector<BigInt>> v(d, std::vector<BigInt>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) v[i][j] = balls[i].center[j] - balls[d].center[j];
  const BigInt det_v = det_exact(v);
  if (det_v == 0) return subdim_solution(balls, root);
  return full_rank_solution(balls, root, det_v);
}

}  // namespace

RadicalExpr conflict_expression(const std::vector<IntBall>& balls, RootLabel root,
                                const IntBall& query) {
  const SolutionRadical sol = closed_solution(balls, root);
  const std::size_t d = sol.xa.size();

  Rational plain = 0, radical = 0;
  for (std::size_t j = 0; j < d; ++j) {
    const Rational aj = rat(query.center[j]) - sol.xa[j];
    const Rational bj = sol.xb[j];
    plain += aj * aj + bj * bj * sol.rad;
    radical += -2 * aj * bj;
  }
  const Rational rsum = rat(query.radius) + sol.ra;
  plain -= rsum * rsum + sol.rb * sol.rb * sol.rad;
  radical -= 2 * rsum * sol.rb;
  return RadicalExpr{plain, radical, sol.rad};
}

bool incircle(const std::vector<IntBall>& balls, RootLabel root, const IntBall& query) {
  return radical_sign(conflict_expression(balls, root, query)) < 0;
}

int radius_sum_sign(const std::vector<IntBall>& balls, RootLabel root, const IntBall& query) {
  const SolutionRadical sol = closed_solution(balls, root);
  return radical_sign(RadicalExpr{rat(query.radius) + sol.ra, sol.rb, sol.rad});
}

}  // namespace apollo::exact
