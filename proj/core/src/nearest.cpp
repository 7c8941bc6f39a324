#include "symdisc/nearest.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "symdisc/errors.hpp"

namespace symdisc {

namespace {

constexpr double kInvSqrt2 = 0.7071067811865475244;

void check_not_degenerate(const SymmetricMatrix& a, double scale,
                          const NearestOptions& opts) {
  if (min_gap(a) <= opts.degeneracy_tol * scale) {
    throw DegenerateInputError(
        "input already has a (near-)repeated eigenvalue; the nearest point "
        "is not well-defined");
  }
}

void check_no_tie(std::vector<double> distances, const NearestOptions& opts) {
  if (distances.size() < 2) return;
  std::sort(distances.begin(), distances.end());
  if (distances[1] - distances[0] < opts.tie_tol) {
    throw DegenerateInputError(
        "two critical points are equally close (within tie tolerance); the "
        "minimizer is not well-defined");
  }
}

}  // namespace

std::vector<double> project_eigenvalues(const std::vector<double>& values,
                                        const SetPartition& partition) {
  if (static_cast<int>(values.size()) != partition.n()) {
    throw OutOfRangeError("project_eigenvalues: size mismatch");
  }
  std::vector<double> out(values.size());
  for (const auto& block : partition.blocks()) {
    double mean = 0.0;
    for (int e : block) mean += values[static_cast<size_t>(e)];
    mean /= static_cast<double>(block.size());
    for (int e : block) out[static_cast<size_t>(e)] = mean;
  }
  return out;
}

std::vector<CriticalPoint> critical_points(const SymmetricMatrix& a,
                                           const MultiplicityVector& w,
                                           const NearestOptions& opts) {
  if (a.dim() != w.n()) {
    throw OutOfRangeError("critical_points: dimension mismatch");
  }
  const double scale = 1.0 + frobenius_norm(a);
  check_not_degenerate(a, scale, opts);
  const auto dec = eigendecompose(a);

  std::vector<CriticalPoint> out;
  for (const auto& partition : enumerate_partitions_of_type(w)) {
    const auto proj = project_eigenvalues(dec.eigenvalues, partition);
    double dist2 = 0.0;
    for (size_t i = 0; i < proj.size(); ++i) {
      const double d = dec.eigenvalues[i] - proj[i];
      dist2 += d * d;
    }
    // merged groups that land on a common value put the point on a finer
    // stratum than requested
    bool fine = false;
    std::vector<double> means;
    for (const auto& block : partition.blocks()) {
      means.push_back(proj[static_cast<size_t>(block.front())]);
    }
    std::sort(means.begin(), means.end());
    for (size_t i = 0; i + 1 < means.size(); ++i) {
      if (means[i + 1] - means[i] <= opts.merge_tol * scale) fine = true;
    }
    out.push_back(CriticalPoint{partition, assemble_from_frame(dec, proj),
                                std::sqrt(dist2), false, fine});
  }

  std::vector<double> distances;
  distances.reserve(out.size());
  for (const auto& cp : out) distances.push_back(cp.distance);
  check_no_tie(distances, opts);
  if (!out.empty()) {
    auto best = std::min_element(
        out.begin(), out.end(),
        [](const auto& x, const auto& y) { return x.distance < y.distance; });
    best->global_min = true;
  }
  return out;
}

CriticalPoint nearest_in_discriminant(const SymmetricMatrix& a,
                                      const NearestOptions& opts) {
  if (a.dim() < 2) {
    throw OutOfRangeError("nearest_in_discriminant: need dimension >= 2");
  }
  auto points = critical_points(a, MultiplicityVector::one_pair(a.dim()), opts);
  for (auto& cp : points) {
    if (cp.global_min) return cp;
  }
  throw NoConvergenceError("nearest_in_discriminant: no candidate");  // unreachable
}

CriticalPoint spherical_nearest(const SymmetricMatrix& a,
                                const NearestOptions& opts) {
  const int n = a.dim();
  if (n < 2) throw OutOfRangeError("spherical_nearest: need dimension >= 2");
  const double norm = frobenius_norm(a);
  if (std::fabs(norm - 1.0) > 1e-9) {
    throw OutOfRangeError("spherical_nearest: input must have unit Frobenius "
                          "norm (got " + std::to_string(norm) + ")");
  }
  const double scale = 1.0 + norm;
  check_not_degenerate(a, scale, opts);
  const auto dec = eigendecompose(a);

  struct Candidate {
    int i, j;
    double arc;
  };
  std::vector<Candidate> cands;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double gap = dec.eigenvalues[static_cast<size_t>(i)] -
                         dec.eigenvalues[static_cast<size_t>(j)];
      // the gap of a unit-norm spectrum never exceeds sqrt(2)
      const double s = std::min(gap * kInvSqrt2, 1.0);
      cands.push_back({i, j, std::asin(s)});
    }
  }
  std::vector<double> distances;
  distances.reserve(cands.size());
  for (const auto& c : cands) distances.push_back(c.arc);
  check_no_tie(distances, opts);
  const auto best = *std::min_element(
      cands.begin(), cands.end(),
      [](const auto& x, const auto& y) { return x.arc < y.arc; });

  std::vector<std::vector<int>> blocks;
  blocks.push_back({best.i, best.j});
  for (int e = 0; e < n; ++e) {
    if (e != best.i && e != best.j) blocks.push_back({e});
  }
  SetPartition partition(n, std::move(blocks));

  auto proj = project_eigenvalues(dec.eigenvalues, partition);
  double pnorm2 = 0.0;
  for (double x : proj) pnorm2 += x * x;
  bool degenerate = false;
  std::vector<double> values;
  if (pnorm2 > 1e-18) {
    const double f = 1.0 / std::sqrt(pnorm2);
    values = proj;
    for (double& x : values) x *= f;
  } else {
    // projection collapsed to the origin; the nearest stratum point is the
    // normalized pair indicator
    values.assign(static_cast<size_t>(n), 0.0);
    values[static_cast<size_t>(best.i)] = kInvSqrt2;
    values[static_cast<size_t>(best.j)] = kInvSqrt2;
    degenerate = true;
  }
  return CriticalPoint{partition, assemble_from_frame(dec, values), best.arc,
                       true, degenerate};
}

double verify_criticality(const SymmetricMatrix& a, const CriticalPoint& point) {
  const SymmetricMatrix& b = point.matrix;
  if (a.dim() != b.dim()) {
    throw OutOfRangeError("verify_criticality: dimension mismatch");
  }
  const int n = a.dim();
  const auto dec = eigendecompose(b);
  const auto groups = detect_multiplicities(dec.eigenvalues);

  // residual R = A - B expressed in B's eigenframe
  SymmetricMatrix r(a);
  r.add_scaled(b, -1.0);
  std::vector<double> rt(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double s = 0.0;
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
          s += dec.vec(i, k) * r(k, l) * dec.vec(j, l);
        }
      }
      rt[static_cast<size_t>(i) * n + j] = s;
    }
  }

  // tangent of the stratum at B: block-constant diagonal plus every
  // off-diagonal direction joining distinct groups
  double resid2 = 0.0;
  for (const auto& block : groups.blocks()) {
    double s = 0.0;
    for (int e : block) s += rt[static_cast<size_t>(e) * n + e];
    resid2 += s * s / static_cast<double>(block.size());
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (groups.block_of(i) != groups.block_of(j)) {
        const double x = rt[static_cast<size_t>(i) * n + j];
        resid2 += 2.0 * x * x;
      }
    }
  }
  return std::sqrt(resid2);
}

}  // namespace symdisc
