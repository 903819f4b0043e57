#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace apollo {

/// Small dense row-major matrix. Sized for vertex problems (d up to a few
/// dozen); no sparse or decomposition caching machinery.
struct Matrix {
  std::size_t rows = 0, cols = 0;
  std::vector<double> a;  // row-major, rows*cols entries

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0.0) {}

  double& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  double operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  static Matrix identity(std::size_t n);
};

/// Largest |entry|; the reference scale for pivot cutoffs.
double matrix_scale(const Matrix& m);

/// Solves M*X = rhs with one factorization shared by every right-hand-side
/// column. Closed-form paths for 1x1/2x2/3x3, partial-pivot elimination
/// beyond. Returns nullopt when a pivot (or the small-d determinant) falls
/// below singular_rel * matrix scale, which is the det(V)=0 signal.
std::optional<Matrix> solve_linear(const Matrix& m, const Matrix& rhs,
                                   double singular_rel = 1e-12);

double determinant(const Matrix& m);

/// Numerical rank by full-pivot elimination with threshold
/// singular_rel * matrix scale.
int rank(const Matrix& m, double singular_rel = 1e-12);

/// Normal to d vectors in R^{d+1}: components are the cofactors of the
/// bottom row of the (d+1)x(d+1) matrix whose first d rows are the inputs.
/// The zero vector signals linearly dependent inputs.
std::vector<double> cofactor_normal(const std::vector<std::vector<double>>& rows);

/// Normal to d-1 vectors in R^d, one dimension down from cofactor_normal.
/// Matches (u2, -u1) in 2-d and the cross product in 3-d. Zero vector
/// signals rank below d-1.
std::vector<double> cofactor_normal_subspace(const std::vector<std::vector<double>>& rows);

enum class RootKind { TwoReal, DoubleReal, ComplexPair, Linear, Degenerate };

struct QuadraticRoots {
  RootKind kind = RootKind::Degenerate;
  double r0 = 0.0, r1 = 0.0;  // r0 >= r1 when two roots; r0 for one root
  int count = 0;              // number of real roots returned (0, 1, or 2)
  double discriminant = 0.0;
};

/// Roots of a*x^2 + b*x + c = 0 via the cancellation-free q form
/// q = -(b + sign(b)*sqrt(b^2-4ac))/2, roots q/a and c/q. sign(0) is +1.
/// |a| <= 1e-14 * max(|b|,|c|,1) routes to the Linear case; a = b = 0
/// gives Degenerate.
QuadraticRoots stable_quadratic(double a, double b, double c);

}  // namespace apollo
