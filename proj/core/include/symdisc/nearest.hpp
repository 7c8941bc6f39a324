#pragma once

#include <vector>

#include "symdisc/strata.hpp"
#include "symdisc/symmetric_matrix.hpp"

namespace symdisc {

/// Tolerances for the nearest-point routines.  Entries marked "scaled" are
/// multiplied by (1 + ||A||_F) before use.
struct NearestOptions {
  /// Input counts as degenerate when its minimal eigenvalue gap is below
  /// this (scaled).
  double degeneracy_tol = 1e-6;
  /// Two candidate distances within this of each other make the minimizer
  /// ill-defined (absolute).
  double tie_tol = 1e-9;
  /// Distinct projected eigenvalue groups closer than this (scaled) mean the
  /// critical point fell onto a finer stratum; the point is flagged.
  double merge_tol = 1e-8;
};

/// A critical point of the distance function from a fixed matrix A to a
/// spectral stratum.  `partition` groups the eigenvalue indices of A (in
/// descending order) that were averaged; `matrix` is the critical point
/// itself; `distance` is Frobenius for the flat routines and arc length for
/// the spherical one.
struct CriticalPoint {
  SetPartition partition;
  SymmetricMatrix matrix;
  double distance;
  bool global_min;
  bool degenerate;
};

/// Replaces each eigenvalue by the mean of its block.  Input must be sorted
/// descending; output preserves positions.
std::vector<double> project_eigenvalues(const std::vector<double>& values,
                                        const SetPartition& partition);

/// All critical points of B -> ||A - B||_F^2 restricted to the stratum of
/// multiplicity pattern w, one per set partition of type w.  The minimum is
/// flagged global_min.  Throws DegenerateInputError when A itself has a
/// near-repeated eigenvalue or when the two smallest distances tie.
std::vector<CriticalPoint> critical_points(const SymmetricMatrix& a,
                                           const MultiplicityVector& w,
                                           const NearestOptions& opts = {});

/// Nearest matrix with a repeated eigenvalue: the best of the C(n,2)
/// pair-averaging critical points, at Frobenius distance
/// min_{i<j} |lambda_i - lambda_j| / sqrt(2).
CriticalPoint nearest_in_discriminant(const SymmetricMatrix& a,
                                      const NearestOptions& opts = {});

/// Nearest unit-norm matrix with a repeated eigenvalue, for unit-norm input
/// (||A||_F = 1 within 1e-9); distance is the great-circle arc
/// arcsin(gap / sqrt(2)).  When a pair's projection collapses to zero the
/// representative with the pair set to 1/sqrt(2) and zeros elsewhere is
/// returned.
CriticalPoint spherical_nearest(const SymmetricMatrix& a,
                                const NearestOptions& opts = {});

/// Independent first-order optimality check: decomposes A - B in B's own
/// eigenframe and returns the norm of the component tangent to the stratum
/// at B.  Near zero (<= 1e-8 for well-scaled inputs) iff B is critical.
double verify_criticality(const SymmetricMatrix& a, const CriticalPoint& point);

}  // namespace symdisc
