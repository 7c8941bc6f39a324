#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "support/oracles.hpp"
#include "symdisc/errors.hpp"
#include "symdisc/nearest.hpp"
#include "symdisc/random.hpp"
#include "symdisc/strata.hpp"
#include "symdisc/symmetric_matrix.hpp"

using namespace symdisc;

namespace {

SymmetricMatrix rotate(const SymmetricMatrix& a, const SpectralDecomposition& q) {
  const int n = a.dim();
  std::vector<std::vector<double>> rows(static_cast<size_t>(n),
                                        std::vector<double>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double s = 0.0;
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
          s += q.vec(i, k) * a(k, l) * q.vec(j, l);
        }
      }
      rows[static_cast<size_t>(i)][static_cast<size_t>(j)] = s;
    }
  }
  return SymmetricMatrix::from_rows(rows, 1e-9);
}

}  // namespace

TEST_CASE("eigenvalue projection onto block means") {
  const SetPartition p(3, {{1, 2}, {0}});
  const auto out = project_eigenvalues({5, 1, 0}, p);
  CHECK(out == std::vector<double>{5, 0.5, 0.5});
  CHECK_THROWS_AS(project_eigenvalues({1, 2}, p), OutOfRangeError);
}

TEST_CASE("nearest repeated-eigenvalue matrix for a diagonal input") {
  const auto cp = nearest_in_discriminant(SymmetricMatrix::diagonal({1, 3}));
  CHECK(cp.distance == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  CHECK(cp.matrix(0, 0) == doctest::Approx(2.0));
  CHECK(cp.matrix(1, 1) == doctest::Approx(2.0));
  CHECK(cp.matrix(0, 1) == doctest::Approx(0.0));
  CHECK(cp.global_min);
  CHECK(!cp.degenerate);
  CHECK(cp.partition.to_string() == "{1,2}");
}

TEST_CASE("critical points on the pair stratum of a three-dimensional input") {
  const auto a = SymmetricMatrix::diagonal({0, 1, 5});
  const auto points = critical_points(a, MultiplicityVector::one_pair(3));
  REQUIRE(points.size() == 3);

  std::vector<double> dists;
  for (const auto& cp : points) dists.push_back(cp.distance);
  std::sort(dists.begin(), dists.end());
  CHECK(dists[0] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
  CHECK(dists[1] == doctest::Approx(4.0 / std::sqrt(2.0)).epsilon(1e-14));
  CHECK(dists[2] == doctest::Approx(5.0 / std::sqrt(2.0)).epsilon(1e-14));

  int mins = 0;
  for (const auto& cp : points) {
    if (!cp.global_min) continue;
    ++mins;
    // eigenvalues descend, so merging the two smallest means {1, 0}
    CHECK(cp.partition.to_string() == "{1}{2,3}");
    CHECK(cp.matrix(0, 0) == doctest::Approx(0.5));
    CHECK(cp.matrix(1, 1) == doctest::Approx(0.5));
    CHECK(cp.matrix(2, 2) == doctest::Approx(5.0));
    CHECK(cp.matrix(0, 1) == doctest::Approx(0.0));
  }
  CHECK(mins == 1);

  const auto full = critical_points(a, MultiplicityVector({0, 0, 1}));
  REQUIRE(full.size() == 1);
  CHECK(full[0].distance == doctest::Approx(std::sqrt(14.0)).epsilon(1e-14));
  CHECK(full[0].matrix(0, 0) == doctest::Approx(2.0));
}

TEST_CASE("degenerate and tied inputs are rejected") {
  CHECK_THROWS_AS(nearest_in_discriminant(SymmetricMatrix::identity(3)),
                  DegenerateInputError);
  // equally spaced spectrum: two pair-candidates at the same distance
  CHECK_THROWS_AS(nearest_in_discriminant(SymmetricMatrix::diagonal({0, 1, 2})),
                  DegenerateInputError);
  CHECK_THROWS_AS(
      critical_points(SymmetricMatrix::diagonal({0, 1e-9, 1}),
                      MultiplicityVector::one_pair(2 + 1)),
      DegenerateInputError);
}

TEST_CASE("spherical nearest point") {
  const auto cp = spherical_nearest(SymmetricMatrix::diagonal({1, 0}));
  CHECK(cp.distance == doctest::Approx(std::numbers::pi / 4).epsilon(1e-14));
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(cp.matrix(0, 0) == doctest::Approx(s));
  CHECK(cp.matrix(1, 1) == doctest::Approx(s));
  CHECK(!cp.degenerate);
  CHECK(frobenius_norm(cp.matrix) == doctest::Approx(1.0).epsilon(1e-14));

  // traceless input: the projection collapses, the antipodal-free fallback
  // representative is the normalized pair indicator
  const auto tr0 = spherical_nearest(SymmetricMatrix::diagonal({s, -s}));
  CHECK(tr0.distance == doctest::Approx(std::numbers::pi / 2).epsilon(1e-14));
  CHECK(tr0.degenerate);
  CHECK(tr0.matrix(0, 0) == doctest::Approx(s));
  CHECK(tr0.matrix(1, 1) == doctest::Approx(s));
  CHECK(frobenius_norm(tr0.matrix) == doctest::Approx(1.0).epsilon(1e-14));

  CHECK_THROWS_AS(spherical_nearest(SymmetricMatrix::diagonal({1, 1})),
                  OutOfRangeError);  // norm sqrt(2)
  CHECK_THROWS_AS(spherical_nearest(SymmetricMatrix::diagonal({2, 0, 0}) ),
                  OutOfRangeError);
}

TEST_CASE("criticality certificate") {
  const auto a = SymmetricMatrix::diagonal({0, 1, 5});
  for (const auto& cp : critical_points(a, MultiplicityVector::one_pair(3))) {
    CHECK(verify_criticality(a, cp) <= 1e-8);
  }

  auto cp = nearest_in_discriminant(a);
  SymmetricMatrix nudged = cp.matrix;
  nudged.set(0, 0, nudged(0, 0) + 0.05);
  nudged.set(1, 1, nudged(1, 1) - 0.05);
  CHECK(verify_criticality(a, CriticalPoint{cp.partition, nudged, cp.distance,
                                            false, false}) > 1e-4);
}

TEST_CASE("nearest distance is invariant under orthogonal conjugation") {
  RandomStream rng(314);
  for (int rep = 0; rep < 10; ++rep) {
    const auto a = goe_sample(4, rng);
    if (min_gap(a) < 1e-3) continue;
    const auto q = eigendecompose(goe_sample(4, rng));
    const auto rotated = rotate(a, q);
    const double d0 = nearest_in_discriminant(a).distance;
    const double d1 = nearest_in_discriminant(rotated).distance;
    CHECK(d0 == doctest::Approx(d1).epsilon(1e-9));
    CHECK(d0 ==
          doctest::Approx(min_gap(a) / std::sqrt(2.0)).epsilon(1e-12));
  }
}

TEST_CASE("independent descent search does not beat the closed form") {
  RandomStream rng(2718);
  for (int rep = 0; rep < 3; ++rep) {
    const auto a = goe_sample(3, rng);
    if (min_gap(a) < 1e-2) continue;
    const double closed = nearest_in_discriminant(a).distance;
    auto probe_rng = rng.split(static_cast<std::uint64_t>(rep));
    const double probed = testing::descent_probe_distance(a, probe_rng, 40);
    CHECK(probed >= closed - 1e-6);
    CHECK(probed <= closed + 1e-4);  // the search should also find it
  }
}
