#pragma once

// Reference implementations used only by the test suite.  Each one computes
// a quantity the library also computes, but by an unrelated algorithm, so
// agreement is meaningful evidence rather than a tautology.

#include <functional>
#include <vector>

#include "symdisc/polynomial.hpp"
#include "symdisc/random.hpp"
#include "symdisc/strata.hpp"
#include "symdisc/symmetric_matrix.hpp"

namespace symdisc::testing {

/// Resultant of p and q via the Sylvester matrix determinant (exact rational
/// Gaussian elimination).
mpq_class sylvester_resultant(const RatPolynomial& p, const RatPolynomial& q);

/// Discriminant of a monic polynomial through the resultant with its
/// derivative: disc(p) = (-1)^(m(m-1)/2) Res(p, p').
mpq_class discriminant_via_resultant(const RatPolynomial& p);

/// Hermite polynomial from the Rodrigues formula: with P_0 = 1 and
/// P_{i+1} = P_i' - 2x P_i (so that P_i = e^{x^2} (d/dx)^i e^{-x^2}),
/// H_i = (-1)^i P_i.
IntPolynomial rodrigues_hermite(int i);

/// Every set partition of {0..n-1}, by restricted growth strings.
std::vector<SetPartition> all_set_partitions(int n);

/// Composite Simpson rule on [a, b] with n subintervals (n even).
double simpson(const std::function<double(double)>& f, double a, double b,
               int n);

/// Multistart local search for the distance from A to the set of symmetric
/// matrices with a repeated eigenvalue: random restarts, alternating
/// projection onto the set with tangent steps toward A.  Returns the best
/// distance found; knows nothing about the closed-form answer.
double descent_probe_distance(const SymmetricMatrix& a, RandomStream& rng,
                              int starts);

}  // namespace symdisc::testing
