#include "apollo/smallmat.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace apollo {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

double matrix_scale(const Matrix& m) {
  double s = 0.0;
  for (double v : m.a) s = std::max(s, std::fabs(v));
  return s;
}

namespace {

double det2(const Matrix& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

double det3(const Matrix& m) {
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

// Partial-pivot LU on a working copy; eliminates rhs alongside. Returns
// false when a pivot drops below the cutoff.
bool eliminate(Matrix& m, Matrix& x, double cutoff) {
  const std::size_t n = m.rows;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::fabs(m(i, k)) > std::fabs(m(piv, k))) piv = i;
    if (std::fabs(m(piv, k)) <= cutoff) return false;
    if (piv != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(m(k, j), m(piv, j));
      for (std::size_t j = 0; j < x.cols; ++j) std::swap(x(k, j), x(piv, j));
    }
    const double inv = 1.0 / m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = m(i, k) * inv;
      if (f == 0.0) continue;
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) -= f * m(k, j);
      for (std::size_t j = 0; j < x.cols; ++j) x(i, j) -= f * x(k, j);
      m(i, k) = 0.0;
    }
  }
  // back substitution
  for (std::size_t col = 0; col < x.cols; ++col) {
    for (std::size_t ii = n; ii-- > 0;) {
      double s = x(ii, col);
      for (std::size_t j = ii + 1; j < n; ++j) s -= m(ii, j) * x(j, col);
      x(ii, col) = s / m(ii, ii);
    }
  }
  return true;
}

}  // namespace

std::optional<Matrix> solve_linear(const Matrix& m, const Matrix& rhs, double singular_rel) {
  assert(m.rows == m.cols && rhs.rows == m.rows);
  const std::size_t n = m.rows;
  const double scale = matrix_scale(m);
  if (scale == 0.0) return std::nullopt;

  if (n == 1) {
    if (std::fabs(m(0, 0)) <= singular_rel * scale) return std::nullopt;
    Matrix x = rhs;
    for (double& v : x.a) v /= m(0, 0);
    return x;
  }
  if (n == 2) {
    const double det = det2(m);
    if (std::fabs(det) <= singular_rel * scale * scale) return std::nullopt;
    Matrix x(2, rhs.cols);
    for (std::size_t j = 0; j < rhs.cols; ++j) {
      x(0, j) = (m(1, 1) * rhs(0, j) - m(0, 1) * rhs(1, j)) / det;
      x(1, j) = (m(0, 0) * rhs(1, j) - m(1, 0) * rhs(0, j)) / det;
    }
    return x;
  }
  if (n == 3) {
    const double det = det3(m);
    if (std::fabs(det) <= singular_rel * scale * scale * scale) return std::nullopt;
    // adjugate columns (cofactors of rows)
    const double c00 = m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
    const double c01 = -(m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0));
    const double c02 = m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0);
    const double c10 = -(m(0, 1) * m(2, 2) - m(0, 2) * m(2, 1));
    const double c11 = m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0);
    const double c12 = -(m(0, 0) * m(2, 1) - m(0, 1) * m(2, 0));
    const double c20 = m(0, 1) * m(1, 2) - m(0, 2) * m(1, 1);
    const double c21 = -(m(0, 0) * m(1, 2) - m(0, 2) * m(1, 0));
    const double c22 = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    Matrix x(3, rhs.cols);
    for (std::size_t j = 0; j < rhs.cols; ++j) {
      x(0, j) = (c00 * rhs(0, j) + c10 * rhs(1, j) + c20 * rhs(2, j)) / det;
      x(1, j) = (c01 * rhs(0, j) + c11 * rhs(1, j) + c21 * rhs(2, j)) / det;
      x(2, j) = (c02 * rhs(0, j) + c12 * rhs(1, j) + c22 * rhs(2, j)) / det;
    }
    return x;
  }

  Matrix work = m;
  Matrix x = rhs;
  if (!eliminate(work, x, singular_rel * scale)) return std::nullopt;
  return x;
}

double determinant(const Matrix& m) {
  assert(m.rows == m.cols);
  const std::size_t n = m.rows;
  if (n == 1) return m(0, 0);
  if (n == 2) return det2(m);
  if (n == 3) return det3(m);

  Matrix work = m;
  double det = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::fabs(work(i, k)) > std::fabs(work(piv, k))) piv = i;
    if (work(piv, k) == 0.0) return 0.0;
    if (piv != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(work(k, j), work(piv, j));
      det = -det;
    }
    det *= work(k, k);
    const double inv = 1.0 / work(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = work(i, k) * inv;
      if (f == 0.0) continue;
      for (std::size_t j = k + 1; j < n; ++j) work(i, j) -= f * work(k, j);
    }
  }
  return det;
}

int rank(const Matrix& m, double singular_rel) {
  Matrix work = m;
  const double cutoff = singular_rel * matrix_scale(m);
  const std::size_t nr = work.rows, nc = work.cols;
  std::size_t row = 0;
  int r = 0;
  for (std::size_t col_start = 0; row < nr && col_start < nc;) {
    // full pivot over the remaining block
    std::size_t pi = row, pj = col_start;
    double best = 0.0;
    for (std::size_t i = row; i < nr; ++i)
      for (std::size_t j = col_start; j < nc; ++j)
        if (std::fabs(work(i, j)) > best) {
          best = std::fabs(work(i, j));
          pi = i;
          pj = j;
        }
    if (best <= cutoff) break;
    if (pi != row)
      for (std::size_t j = 0; j < nc; ++j) std::swap(work(row, j), work(pi, j));
    if (pj != col_start)
      for (std::size_t i = 0; i < nr; ++i) std::swap(work(i, col_start), work(i, pj));
    const double inv = 1.0 / work(row, col_start);
    for (std::size_t i = row + 1; i < nr; ++i) {
      const double f = work(i, col_start) * inv;
      if (f == 0.0) continue;
      for (std::size_t j = col_start; j < nc; ++j) work(i, j) -= f * work(row, j);
    }
    ++r;
    ++row;
    ++col_start;
  }
  return r;
}

namespace {

// In-place determinant; clobbers its argument. Lets the cofactor loops run
// allocation-free after the first minor.
double det_destructive(Matrix& m) {
  const std::size_t n = m.rows;
  if (n == 0) return 1.0;
  if (n == 1) return m(0, 0);
  if (n == 2) return det2(m);
  if (n == 3) return det3(m);
  double det = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::fabs(m(i, k)) > std::fabs(m(piv, k))) piv = i;
    if (m(piv, k) == 0.0) return 0.0;
    if (piv != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(m(k, j), m(piv, j));
      det = -det;
    }
    det *= m(k, k);
    const double inv = 1.0 / m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = m(i, k) * inv;
      if (f == 0.0) continue;
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return det;
}

// Fills `minor` with `rows` minus column `skip` and returns its determinant.
double minor_det(const std::vector<std::vector<double>>& rows, std::size_t skip, Matrix& minor) {
  const std::size_t n = rows.size();
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t jj = 0;
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (j == skip) continue;
      minor(i, jj++) = rows[i][j];
    }
  }
  return det_destructive(minor);
}

}  // namespace

std::vector<double> cofactor_normal(const std::vector<std::vector<double>>& rows) {
  const std::size_t d = rows.size();
  std::vector<double> out(d + 1, 0.0);
  Matrix minor(d, d);
  for (std::size_t j = 0; j <= d; ++j) {
    const double mdet = minor_det(rows, j, minor);
    // cofactor of entry (d+1, j+1): sign (-1)^{(d+1)+(j+1)}
    out[j] = ((d + j) % 2 == 0) ? mdet : -mdet;
  }
  return out;
}

std::vector<double> cofactor_normal_subspace(const std::vector<std::vector<double>>& rows) {
  const std::size_t d = rows.size() + 1;
  std::vector<double> out(d, 0.0);
  Matrix minor(d - 1, d - 1);
  for (std::size_t j = 0; j < d; ++j) {
    const double mdet = minor_det(rows, j, minor);
    // top-row expansion sign (-1)^{1+(j+1)}; gives (u2, -u1) in 2-d and
    // the cross product in 3-d
    out[j] = (j % 2 == 0) ? mdet : -mdet;
  }
  return out;
}

QuadraticRoots stable_quadratic(double a, double b, double c) {
  QuadraticRoots out;
  const double ref = std::max({std::fabs(b), std::fabs(c), 1.0});
  if (std::fabs(a) <= 1e-14 * ref) {
    if (b == 0.0) {
      out.kind = RootKind::Degenerate;  // c != 0 by precondition
      return out;
    }
    out.kind = RootKind::Linear;
    out.r0 = -c / b;
    out.count = 1;
    return out;
  }
  const double disc = b * b - 4.0 * a * c;
  out.discriminant = disc;
  if (disc < 0.0) {
    out.kind = RootKind::ComplexPair;
    return out;
  }
  if (disc == 0.0) {
    out.kind = RootKind::DoubleReal;
    out.r0 = out.r1 = -b / (2.0 * a);
    out.count = 1;
    return out;
  }
  const double sb = b >= 0.0 ? 1.0 : -1.0;
  const double q = -0.5 * (b + sb * std::sqrt(disc));
  double x1 = q / a;
  double x2 = c / q;
  if (x1 < x2) std::swap(x1, x2);
  out.kind = RootKind::TwoReal;
  out.r0 = x1;
  out.r1 = x2;
  out.count = 2;
  return out;
}

}  // namespace apollo
