#pragma once

#include <vector>

namespace symdisc {

/// Nodes and weights for integration against exp(-u^2) on the real line.
/// Nodes are sorted ascending and exactly symmetric about zero; weights are
/// positive and sum to sqrt(pi).
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss-Hermite rule with m points (1 <= m <= 64); exact for polynomials of
/// degree <= 2m - 1.  Nodes are the roots of the m-th Hermite polynomial,
/// found by Newton iteration on the orthonormal recurrence.
QuadratureRule gauss_hermite(int m);

}  // namespace symdisc
