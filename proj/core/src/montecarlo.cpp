#include "symdisc/montecarlo.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <thread>
#include <utility>

#include "symdisc/errors.hpp"
#include "symdisc/hermite.hpp"
#include "symdisc/quadrature.hpp"
#include "symdisc/random.hpp"

namespace symdisc {

namespace {

constexpr int kReplicas = 256;

// Runs fn(i) for i in [0, n) on the given number of worker threads.  Which
// thread runs which item is arbitrary; callers store results by index and
// combine them in index order, so outputs do not depend on the schedule.
void run_indexed(std::int64_t n, int threads,
                 const std::function<void(std::int64_t)>& fn) {
  if (threads <= 1 || n <= 1) {
    for (std::int64_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::int64_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::int64_t i = next.fetch_add(1);
      if (i >= n) return;
      fn(i);
    }
  };
  std::vector<std::thread> pool;
  const int t = static_cast<int>(std::min<std::int64_t>(threads, n));
  pool.reserve(static_cast<size_t>(t));
  for (int i = 0; i < t; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

struct MeanAccumulator {
  double sum = 0.0;
  double sum_sq = 0.0;
  std::int64_t count = 0;

  void add(double y) {
    sum += y;
    sum_sq += y * y;
    ++count;
  }
  void merge(const MeanAccumulator& o) {
    sum += o.sum;
    sum_sq += o.sum_sq;
    count += o.count;
  }
  double mean() const { return count > 0 ? sum / static_cast<double>(count) : 0.0; }
  double std_error() const {
    if (count < 2) return 0.0;
    const double m = mean();
    double var = (sum_sq - static_cast<double>(count) * m * m) /
                 static_cast<double>(count - 1);
    var = std::max(var, 0.0);
    return std::sqrt(var / static_cast<double>(count));
  }
};

// Splits n_samples across the fixed replica set and evaluates sample_fn for
// each, with a per-replica random stream.  Combination is in replica order,
// independent of the thread schedule.
MeanAccumulator replicated_mean(
    std::int64_t n_samples, std::uint64_t seed, int threads,
    const std::function<double(RandomStream&)>& sample_fn) {
  if (n_samples < 1) throw OutOfRangeError("sample count must be >= 1");
  const RandomStream master(seed);
  const int replicas =
      static_cast<int>(std::min<std::int64_t>(kReplicas, n_samples));
  std::vector<MeanAccumulator> parts(static_cast<size_t>(replicas));
  run_indexed(replicas, threads, [&](std::int64_t r) {
    const std::int64_t lo = n_samples * r / replicas;
    const std::int64_t hi = n_samples * (r + 1) / replicas;
    RandomStream rng = master.split(static_cast<std::uint64_t>(r));
    auto& acc = parts[static_cast<size_t>(r)];
    for (std::int64_t s = lo; s < hi; ++s) acc.add(sample_fn(rng));
  });
  MeanAccumulator total;
  for (const auto& p : parts) total.merge(p);
  return total;
}

}  // namespace

MonteCarloReport mc_second_moment(int k, double u, std::int64_t n_samples,
                                  std::uint64_t seed, int threads) {
  if (k < 1) throw OutOfRangeError("mc_second_moment: k must be >= 1");
  const auto total = replicated_mean(
      n_samples, seed, threads, [k, u](RandomStream& rng) {
        const SymmetricMatrix q = goe_sample(k, rng);
        const auto dec = eigendecompose(q);
        double det = 1.0;
        for (double lam : dec.eigenvalues) det *= lam - u;
        return det * det;
      });

  MonteCarloReport rep;
  rep.experiment = "second_moment";
  rep.params = {{"k", static_cast<double>(k)}, {"u", u}};
  rep.estimate = total.mean();
  rep.std_error = total.std_error();
  rep.n_samples = n_samples;
  rep.seed = seed;
  const double exact = second_moment_poly(k).evaluate(u);
  rep.extras["exact"] = exact;
  if (rep.std_error > 0.0) {
    rep.extras["z_score"] = (rep.estimate - exact) / rep.std_error;
  }
  return rep;
}

ClosedFormScalar volume_identity_check(int n) {
  if (n < 2) throw OutOfRangeError("volume_identity_check: n must be >= 2");
  mpz_class two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(n - 1));
  const ClosedFormScalar prefactor = ClosedFormScalar::make(
      mpq_class(two_pow * binomial(n, 2), factorial(n)), 0, -1);
  return prefactor * second_moment_integral(n - 2);
}

MonteCarloReport gap_probability(int n, double eps, std::int64_t n_samples,
                                 std::uint64_t seed, int threads) {
  if (n < 2) throw OutOfRangeError("gap_probability: n must be >= 2");
  if (eps < 0.0) throw OutOfRangeError("gap_probability: eps must be >= 0");
  const auto total = replicated_mean(
      n_samples, seed, threads, [n, eps](RandomStream& rng) {
        const SymmetricMatrix a = goe_sample(n, rng);
        return min_gap(a) <= eps ? 1.0 : 0.0;
      });

  MonteCarloReport rep;
  rep.experiment = "gap_probability";
  rep.params = {{"n", static_cast<double>(n)}, {"eps", eps}};
  rep.estimate = total.mean();
  rep.std_error = total.std_error();
  rep.n_samples = n_samples;
  rep.seed = seed;
  const double pairs = 0.5 * n * (n - 1);
  rep.extras["bound"] = 0.25 * pairs * eps * eps;
  if (n == 2) {
    rep.extras["exact"] = -std::expm1(-0.25 * eps * eps);
  }
  return rep;
}

namespace {

// --- spherical grid --------------------------------------------------------

struct Icosphere {
  std::vector<std::array<double, 3>> verts;
  std::vector<std::vector<int>> nbrs;
};

void normalize3(std::array<double, 3>& v) {
  const double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
  v[0] /= n;
  v[1] /= n;
  v[2] /= n;
}

Icosphere build_icosphere(int level) {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<std::array<double, 3>> verts = {
      {-1, phi, 0}, {1, phi, 0},  {-1, -phi, 0}, {1, -phi, 0},
      {0, -1, phi}, {0, 1, phi},  {0, -1, -phi}, {0, 1, -phi},
      {phi, 0, -1}, {phi, 0, 1},  {-phi, 0, -1}, {-phi, 0, 1}};
  for (auto& v : verts) normalize3(v);
  std::vector<std::array<int, 3>> faces = {
      {0, 11, 5}, {0, 5, 1},   {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
      {1, 5, 9},  {5, 11, 4},  {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
      {3, 9, 4},  {3, 4, 2},   {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
      {4, 9, 5},  {2, 4, 11},  {6, 2, 10},  {8, 6, 7},  {9, 8, 1}};

  for (int l = 0; l < level; ++l) {
    std::map<std::pair<int, int>, int> midpoint;
    auto mid = [&](int a, int b) {
      const std::pair<int, int> key = std::minmax(a, b);
      auto it = midpoint.find(key);
      if (it != midpoint.end()) return it->second;
      std::array<double, 3> m = {(verts[a][0] + verts[b][0]) / 2,
                                 (verts[a][1] + verts[b][1]) / 2,
                                 (verts[a][2] + verts[b][2]) / 2};
      normalize3(m);
      verts.push_back(m);
      const int idx = static_cast<int>(verts.size()) - 1;
      midpoint.emplace(key, idx);
      return idx;
    };
    std::vector<std::array<int, 3>> next;
    next.reserve(faces.size() * 4);
    for (const auto& f : faces) {
      const int ab = mid(f[0], f[1]);
      const int bc = mid(f[1], f[2]);
      const int ca = mid(f[2], f[0]);
      next.push_back({f[0], ab, ca});
      next.push_back({f[1], bc, ab});
      next.push_back({f[2], ca, bc});
      next.push_back({ab, bc, ca});
    }
    faces = std::move(next);
  }

  Icosphere s;
  s.verts = std::move(verts);
  s.nbrs.assign(s.verts.size(), {});
  auto link = [&s](int a, int b) {
    auto& va = s.nbrs[static_cast<size_t>(a)];
    if (std::find(va.begin(), va.end(), b) == va.end()) va.push_back(b);
  };
  for (const auto& f : faces) {
    link(f[0], f[1]);
    link(f[1], f[0]);
    link(f[1], f[2]);
    link(f[2], f[1]);
    link(f[2], f[0]);
    link(f[0], f[2]);
  }
  return s;
}

const Icosphere& icosphere_for_density(int min_verts) {
  static std::map<int, Icosphere> cache;
  int level = 0;
  while (level < 6 && 10 * (1 << (2 * level)) + 2 < min_verts) ++level;
  auto it = cache.find(level);
  if (it == cache.end()) it = cache.emplace(level, build_icosphere(level)).first;
  return it->second;
}

// --- per-trial zero finder -------------------------------------------------

// Orthonormal 3-frame of symmetric matrices spanning a random subspace.
struct PlaneBasis {
  std::vector<SymmetricMatrix> a;  // three matrices

  SymmetricMatrix combine(const std::array<double, 3>& x) const {
    SymmetricMatrix m(a[0].dim());
    for (int k = 0; k < 3; ++k) m.add_scaled(a[static_cast<size_t>(k)], x[static_cast<size_t>(k)]);
    return m;
  }
};

PlaneBasis random_plane(int n, RandomStream& rng) {
  PlaneBasis basis;
  for (int k = 0; k < 3; ++k) {
    for (int attempt = 0; attempt < 100; ++attempt) {
      SymmetricMatrix g = goe_sample(n, rng);
      for (const auto& prev : basis.a) {
        g.add_scaled(prev, -frobenius_dot(g, prev));
      }
      const double nrm = frobenius_norm(g);
      if (nrm > 1e-8) {
        g.scale(1.0 / nrm);
        basis.a.push_back(std::move(g));
        break;
      }
    }
  }
  if (basis.a.size() != 3) {
    throw NoConvergenceError("two_plane_count: could not draw a 3-frame");
  }
  return basis;
}

struct GapInfo {
  double gap = 0.0;
  int p = 0, q = 0;  // adjacent pair attaining it (descending order)
  SpectralDecomposition dec;
};

GapInfo eval_gap(const PlaneBasis& basis, const std::array<double, 3>& x) {
  GapInfo info;
  info.dec = eigendecompose(basis.combine(x));
  const auto& ev = info.dec.eigenvalues;
  double best = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i + 1 < ev.size(); ++i) {
    const double g = ev[i] - ev[i + 1];
    if (g < best) {
      best = g;
      info.p = static_cast<int>(i);
      info.q = static_cast<int>(i) + 1;
    }
  }
  info.gap = best;
  return info;
}

// v_i^T M v_j for rows i, j of the eigenframe.
double frame_bilinear(const SpectralDecomposition& dec, int i, int j,
                      const SymmetricMatrix& m) {
  const int n = dec.dim;
  double s = 0.0;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      s += dec.vec(i, a) * m(a, b) * dec.vec(j, b);
    }
  }
  return s;
}

void renormalize(std::array<double, 3>& x) { normalize3(x); }

// Projected gradient descent on the squared gap, then a frozen-frame
// Gauss-Newton polish on the pair (gap, off-diagonal coupling), which is
// linear in the sphere tangent and converges quadratically at simple zeros.
double refine_candidate(const PlaneBasis& basis, std::array<double, 3>& x) {
  GapInfo info = eval_gap(basis, x);
  for (int it = 0; it < 60 && info.gap > 1e-9; ++it) {
    std::array<double, 3> grad{};
    for (int k = 0; k < 3; ++k) {
      const auto& ak = basis.a[static_cast<size_t>(k)];
      const double d = frame_bilinear(info.dec, info.p, info.p, ak) -
                       frame_bilinear(info.dec, info.q, info.q, ak);
      grad[static_cast<size_t>(k)] = 2.0 * info.gap * d;
    }
    const double radial = grad[0] * x[0] + grad[1] * x[1] + grad[2] * x[2];
    for (int k = 0; k < 3; ++k) grad[static_cast<size_t>(k)] -= radial * x[static_cast<size_t>(k)];
    const double gnorm2 = grad[0] * grad[0] + grad[1] * grad[1] + grad[2] * grad[2];
    if (gnorm2 < 1e-28) break;
    const double f = info.gap * info.gap;
    double t = f / gnorm2;
    bool moved = false;
    for (int bt = 0; bt < 30; ++bt) {
      std::array<double, 3> y = {x[0] - t * grad[0], x[1] - t * grad[1],
                                 x[2] - t * grad[2]};
      renormalize(y);
      GapInfo trial = eval_gap(basis, y);
      if (trial.gap < info.gap) {
        x = y;
        info = std::move(trial);
        moved = true;
        break;
      }
      t *= 0.5;
    }
    if (!moved) break;
  }

  // tangent frame at x
  for (int it = 0; it < 25 && info.gap > 1e-13; ++it) {
    int axis = 0;
    for (int k = 1; k < 3; ++k) {
      if (std::fabs(x[static_cast<size_t>(k)]) < std::fabs(x[static_cast<size_t>(axis)])) axis = k;
    }
    std::array<double, 3> e1 = {0, 0, 0};
    e1[static_cast<size_t>(axis)] = 1.0;
    const double pr = e1[0] * x[0] + e1[1] * x[1] + e1[2] * x[2];
    for (int k = 0; k < 3; ++k) e1[static_cast<size_t>(k)] -= pr * x[static_cast<size_t>(k)];
    renormalize(e1);
    std::array<double, 3> e2 = {x[1] * e1[2] - x[2] * e1[1],
                                x[2] * e1[0] - x[0] * e1[2],
                                x[0] * e1[1] - x[1] * e1[0]};

    double j00 = 0, j01 = 0, j10 = 0, j11 = 0;
    {
      SymmetricMatrix m1 = basis.combine(e1);
      SymmetricMatrix m2 = basis.combine(e2);
      j00 = frame_bilinear(info.dec, info.p, info.p, m1) -
            frame_bilinear(info.dec, info.q, info.q, m1);
      j10 = 2.0 * frame_bilinear(info.dec, info.p, info.q, m1);
      j01 = frame_bilinear(info.dec, info.p, info.p, m2) -
            frame_bilinear(info.dec, info.q, info.q, m2);
      j11 = 2.0 * frame_bilinear(info.dec, info.p, info.q, m2);
    }
    const double det = j00 * j11 - j01 * j10;
    if (std::fabs(det) < 1e-14) break;
    // F = (gap, 0) in the frame's own basis; solve J delta = -F
    const double d1 = -info.gap * j11 / det;
    const double d2 = info.gap * j10 / det;
    if (d1 * d1 + d2 * d2 > 0.25) break;  // diverging: not a zero
    for (int k = 0; k < 3; ++k) {
      x[static_cast<size_t>(k)] += d1 * e1[static_cast<size_t>(k)] + d2 * e2[static_cast<size_t>(k)];
    }
    renormalize(x);
    info = eval_gap(basis, x);
  }
  return info.gap;
}

struct TrialResult {
  int count = 0;
  bool unresolved = false;
};

TrialResult run_plane_trial(int n, const Icosphere& grid,
                            const TwoPlaneOptions& opts, RandomStream& rng) {
  const PlaneBasis basis = random_plane(n, rng);

  const size_t nverts = grid.verts.size();
  std::vector<double> f(nverts);
  for (size_t v = 0; v < nverts; ++v) {
    f[v] = eval_gap(basis, grid.verts[v]).gap;
  }

  std::vector<size_t> seeds;
  for (size_t v = 0; v < nverts; ++v) {
    bool is_min = true;
    for (int u : grid.nbrs[v]) {
      if (f[static_cast<size_t>(u)] < f[v]) {
        is_min = false;
        break;
      }
    }
    if (is_min) seeds.push_back(v);
  }
  // a few globally best vertices as insurance against shallow basins
  std::vector<size_t> order(nverts);
  for (size_t v = 0; v < nverts; ++v) order[v] = v;
  std::partial_sort(order.begin(), order.begin() + std::min<size_t>(12, nverts),
                    order.end(),
                    [&f](size_t a, size_t b) { return f[a] < f[b]; });
  for (size_t i = 0; i < std::min<size_t>(12, nverts); ++i) {
    seeds.push_back(order[i]);
  }

  TrialResult result;
  std::vector<std::array<double, 3>> zeros;
  for (size_t seed_vertex : seeds) {
    std::array<double, 3> x = grid.verts[seed_vertex];
    const double gap = refine_candidate(basis, x);
    if (gap <= opts.accept_gap) {
      bool fresh = true;
      for (const auto& z : zeros) {
        const double dm = std::min(
            std::hypot(x[0] - z[0], x[1] - z[1], x[2] - z[2]),
            std::hypot(x[0] + z[0], x[1] + z[1], x[2] + z[2]));
        if (dm <= opts.cluster_radius) {
          fresh = false;
          break;
        }
      }
      if (fresh) zeros.push_back(x);
    } else if (gap <= opts.reject_ceiling) {
      result.unresolved = true;
    }
  }
  result.count = static_cast<int>(zeros.size());
  return result;
}

}  // namespace

MonteCarloReport two_plane_count(int n, std::int64_t trials,
                                 std::uint64_t seed,
                                 const TwoPlaneOptions& opts, int threads) {
  if (n < 3) throw OutOfRangeError("two_plane_count: n must be >= 3");
  if (trials < 1) throw OutOfRangeError("two_plane_count: trials must be >= 1");
  const Icosphere& grid = icosphere_for_density(opts.grid_density);
  const RandomStream master(seed);

  std::vector<TrialResult> results(static_cast<size_t>(trials));
  run_indexed(trials, threads, [&](std::int64_t t) {
    RandomStream rng = master.split(static_cast<std::uint64_t>(t));
    results[static_cast<size_t>(t)] = run_plane_trial(n, grid, opts, rng);
  });

  MonteCarloReport rep;
  rep.experiment = "two_plane_count";
  rep.params = {{"n", static_cast<double>(n)},
                {"grid_density", static_cast<double>(grid.verts.size())}};
  rep.n_samples = trials;
  rep.seed = seed;
  rep.per_trial.reserve(static_cast<size_t>(trials));

  MeanAccumulator acc;
  double max_count = 0.0;
  std::int64_t unresolved = 0, over_bound = 0;
  const double bound = static_cast<double>(binomial(n + 1, 3).get_si());
  for (const auto& r : results) {
    if (r.unresolved) {
      ++unresolved;
      rep.per_trial.push_back(-1.0);
      continue;
    }
    acc.add(static_cast<double>(r.count));
    rep.per_trial.push_back(static_cast<double>(r.count));
    max_count = std::max(max_count, static_cast<double>(r.count));
    if (static_cast<double>(r.count) > bound) ++over_bound;
  }
  rep.estimate = acc.mean();
  rep.std_error = acc.std_error();
  rep.extras["resolved_trials"] = static_cast<double>(acc.count);
  rep.extras["unresolved_trials"] = static_cast<double>(unresolved);
  rep.extras["max_count"] = max_count;
  rep.extras["count_bound"] = bound;
  rep.extras["trials_over_bound"] = static_cast<double>(over_bound);
  rep.extras["expected"] = 0.5 * n * (n - 1);
  return rep;
}

MonteCarloReport restricted_volume_estimate(int n, int config,
                                            std::int64_t n_samples,
                                            int quadrature_points,
                                            std::uint64_t seed, int threads) {
  if (n < 2) throw OutOfRangeError("restricted_volume_estimate: n must be >= 2");
  if (config < 1 || config > n - 1) {
    throw OutOfRangeError(
        "restricted_volume_estimate: config must be in [1, n-1]");
  }
  const QuadratureRule rule = gauss_hermite(quadrature_points);
  mpz_class two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(n - 1));
  const double prefactor =
      ClosedFormScalar::make(mpq_class(two_pow * binomial(n, 2), factorial(n)),
                             0, -1)
          .to_double();
  const int k = n - 2;
  const int below_target = config - 1;

  const auto total = replicated_mean(
      n_samples, seed, threads, [&](RandomStream& rng) {
        std::vector<double> ev;
        if (k >= 1) {
          const SymmetricMatrix q = goe_sample(k, rng);
          ev = eigendecompose(q).eigenvalues;
        }
        double y = 0.0;
        for (size_t i = 0; i < rule.nodes.size(); ++i) {
          const double u = rule.nodes[i];
          int below = 0;
          double det = 1.0;
          for (double lam : ev) {
            if (lam < u) ++below;
            const double d = lam - u;
            det *= d * d;
          }
          if (below == below_target) y += rule.weights[i] * det;
        }
        return prefactor * y;
      });

  MonteCarloReport rep;
  rep.experiment = "restricted_volume";
  rep.params = {{"n", static_cast<double>(n)},
                {"config", static_cast<double>(config)},
                {"quadrature_points", static_cast<double>(quadrature_points)}};
  rep.estimate = total.mean();
  rep.std_error = total.std_error();
  rep.n_samples = n_samples;
  rep.seed = seed;
  rep.extras["total_expected"] = 0.5 * n * (n - 1);
  return rep;
}

}  // namespace symdisc
