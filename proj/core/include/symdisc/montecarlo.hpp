#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "symdisc/closed_form.hpp"
#include "symdisc/symmetric_matrix.hpp"

namespace symdisc {

/// Default seed used by the command-line driver when --seed is not given.
inline constexpr std::uint64_t kDefaultSeed = 1729;

/// Outcome of a randomized experiment.  For a fixed seed the report is
/// bit-identical regardless of the number of worker threads: work is split
/// into a fixed set of replicas with their own derived random streams, and
/// partial results are combined in replica order.
struct MonteCarloReport {
  std::string experiment;
  std::map<std::string, double> params;
  double estimate = 0.0;
  double std_error = 0.0;
  std::int64_t n_samples = 0;
  std::uint64_t seed = 0;
  std::map<std::string, double> extras;
  /// Per-trial values when the experiment tracks them (zero-count trials of
  /// the plane experiment; -1 marks an unresolved trial).
  std::vector<double> per_trial;
};

/// Monte Carlo estimate of E det(Q - u I)^2 over Q ~ GOE(k).  extras carry
/// the exact polynomial value and the z-score of the estimate against it.
MonteCarloReport mc_second_moment(int k, double u, std::int64_t n_samples,
                                  std::uint64_t seed, int threads = 1);

/// Exact evaluation of
///   2^(n-1) / (sqrt(pi) n!) * C(n,2) * int p_{n-2}(u) e^{-u^2} du,
/// which collapses to the integer C(n,2); n >= 2.
ClosedFormScalar volume_identity_check(int n);

/// P{ min eigenvalue gap of GOE(n) <= eps }.  extras carry the union bound
/// C(n,2) eps^2 / 4, and for n = 2 the exact law 1 - exp(-eps^2/4).
MonteCarloReport gap_probability(int n, double eps, std::int64_t n_samples,
                                 std::uint64_t seed, int threads = 1);

/// Tuning for the spherical zero finder of the plane experiment.
struct TwoPlaneOptions {
  /// Minimum number of spherical grid vertices (rounded up to the next
  /// icosphere refinement level).
  int grid_density = 2562;
  /// A refined candidate with final gap <= accept_gap counts as a zero.
  double accept_gap = 1e-7;
  /// Final gap in (accept_gap, reject_ceiling] means the candidate could not
  /// be classified; the whole trial is flagged unresolved.
  double reject_ceiling = 1e-4;
  /// Zeros within this distance (up to sign) are identified.
  double cluster_radius = 1e-3;
};

/// Draws a uniformly random 3-dimensional subspace of symmetric n x n
/// matrices per trial and counts the antipodal pairs of unit-norm matrices
/// in it with a repeated eigenvalue.  The mean count over resolved trials
/// estimates the relative volume of the repeated-eigenvalue locus, which is
/// exactly C(n,2); n >= 3.
MonteCarloReport two_plane_count(int n, std::int64_t trials,
                                 std::uint64_t seed,
                                 const TwoPlaneOptions& opts = {},
                                 int threads = 1);

/// Estimates the volume contribution of the spectral configuration in which
/// exactly config - 1 of the simple eigenvalues lie below the repeated one
/// (1 <= config <= n-1), by Gauss-Hermite quadrature in the repeated value
/// and Monte Carlo over GOE(n-2).  Summing over config recovers C(n,2).
MonteCarloReport restricted_volume_estimate(int n, int config,
                                            std::int64_t n_samples,
                                            int quadrature_points,
                                            std::uint64_t seed,
                                            int threads = 1);

}  // namespace symdisc
