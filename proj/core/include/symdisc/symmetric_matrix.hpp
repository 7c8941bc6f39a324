#pragma once

#include <span>
#include <vector>

#include "symdisc/polynomial.hpp"
#include "symdisc/random.hpp"

namespace symdisc {

/// Dense real symmetric n x n matrix.  Only the upper triangle is stored
/// (row-packed, i <= j), so the symmetry invariant holds by construction.
class SymmetricMatrix {
 public:
  /// Zero matrix of dimension n >= 1.
  explicit SymmetricMatrix(int n);

  static SymmetricMatrix identity(int n);
  static SymmetricMatrix diagonal(const std::vector<double>& d);

  /// Builds from full rows; requires |rows[i][j] - rows[j][i]| <= sym_tol
  /// for all i, j, otherwise throws ParseError.
  static SymmetricMatrix from_rows(const std::vector<std::vector<double>>& rows,
                                   double sym_tol = 1e-12);

  int dim() const { return n_; }

  double operator()(int i, int j) const { return u_[idx(i, j)]; }
  void set(int i, int j, double v) { u_[idx(i, j)] = v; }

  /// a += s * b (entrywise on the packed triangle).
  void add_scaled(const SymmetricMatrix& b, double s);
  void scale(double s);
  void fill_zero();

  bool all_finite() const;
  std::vector<std::vector<double>> to_rows() const;

 private:
  size_t idx(int i, int j) const {
    if (i > j) std::swap(i, j);
    // row-packed upper triangle: row i starts at i*n - i(i-1)/2
    return static_cast<size_t>(i) * n_ - static_cast<size_t>(i) * (i - 1) / 2 +
           (j - i);
  }
  int n_;
  std::vector<double> u_;
};

/// Result of eigendecomposition A = C^T diag(lambda) C.  Eigenvalues are
/// sorted in descending order; row i of the orthogonal matrix C (stored
/// row-major in `rotation`) is the unit eigenvector for eigenvalues[i], with
/// sign fixed so its first nonzero entry is positive.
struct SpectralDecomposition {
  std::vector<double> eigenvalues;
  std::vector<double> rotation;  // n*n, row-major; row i = eigenvector i
  int dim = 0;

  double vec(int i, int k) const { return rotation[static_cast<size_t>(i) * dim + k]; }
};

double frobenius_norm(const SymmetricMatrix& a);

/// Frobenius inner product tr(a b).
double frobenius_dot(const SymmetricMatrix& a, const SymmetricMatrix& b);

/// Cyclic Jacobi eigensolver.  Sweeps until the off-diagonal Frobenius norm
/// drops below 1e-14 * ||A||_F, with a cap of 30 sweeps (NoConvergenceError
/// beyond that, which no finite input is known to trigger).
SpectralDecomposition eigendecompose(const SymmetricMatrix& a);

/// Assembles C^T diag(values) C from a decomposition's rotation.
SymmetricMatrix assemble_from_frame(const SpectralDecomposition& frame,
                                    const std::vector<double>& values);

/// Characteristic polynomial det(x I - A) with exact rational coefficients;
/// matrix entries are converted exactly (doubles are dyadic rationals) and
/// expanded by the Faddeev-LeVerrier recurrence.
RatPolynomial char_poly(const SymmetricMatrix& a);

/// Product of (lambda_i - lambda_j)^2 over pairs i < j of eigenvalues.
double discriminant(const SymmetricMatrix& a);

/// Minimal gap min_{i<j} |lambda_i - lambda_j|; +infinity for n = 1.
double min_gap(const SymmetricMatrix& a);

/// GOE(n) draw: diagonal entries N(0,1), off-diagonal N(0,1/2), density
/// proportional to exp(-||A||_F^2 / 2).
SymmetricMatrix goe_sample(int n, RandomStream& rng);

}  // namespace symdisc
