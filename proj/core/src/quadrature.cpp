#include "symdisc/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "symdisc/errors.hpp"

namespace symdisc {

namespace {

// Value of the orthonormal Hermite functions (htilde_m, htilde_{m-1}) at x,
// htilde_0 = pi^{-1/4}, htilde_{k+1} = x sqrt(2/(k+1)) htilde_k
//                                      - sqrt(k/(k+1)) htilde_{k-1}.
void eval_orthonormal(int m, double x, double& hm, double& hm1) {
  double p0 = std::pow(std::numbers::pi, -0.25);
  double p1 = 0.0;  // htilde_{-1}
  for (int k = 0; k < m; ++k) {
    const double dk = static_cast<double>(k);
    const double next = x * std::sqrt(2.0 / (dk + 1.0)) * p0 -
                        std::sqrt(dk / (dk + 1.0)) * p1;
    p1 = p0;
    p0 = next;
  }
  hm = p0;
  hm1 = p1;
}

}  // namespace

QuadratureRule gauss_hermite(int m) {
  if (m < 1 || m > 64) {
    throw OutOfRangeError("gauss_hermite: m must be in [1, 64]");
  }
  const int half = (m + 1) / 2;
  std::vector<double> roots(static_cast<size_t>(half));
  std::vector<double> wts(static_cast<size_t>(half));

  double z = 0.0;
  for (int i = 0; i < half; ++i) {
    // initial guesses track the previously converged roots (descending)
    if (i == 0) {
      z = std::sqrt(2.0 * m + 1.0) -
          1.85575 * std::pow(2.0 * m + 1.0, -1.0 / 6.0);
    } else if (i == 1) {
      z -= 1.14 * std::pow(static_cast<double>(m), 0.426) / z;
    } else if (i == 2) {
      z = 1.86 * z - 0.86 * roots[0];
    } else if (i == 3) {
      z = 1.91 * z - 0.91 * roots[1];
    } else {
      z = 2.0 * z - roots[static_cast<size_t>(i) - 2];
    }

    bool done = false;
    for (int it = 0; it < 100; ++it) {
      double hm, hm1;
      eval_orthonormal(m, z, hm, hm1);
      // htilde_m'(x) = sqrt(2m) htilde_{m-1}(x)
      const double dz = hm / (std::sqrt(2.0 * m) * hm1);
      z -= dz;
      if (std::fabs(dz) <= 1e-14 * (1.0 + std::fabs(z))) {
        done = true;
        break;
      }
    }
    if (!done) {
      throw NoConvergenceError("gauss_hermite: Newton iteration stalled");
    }
    double hm, hm1;
    eval_orthonormal(m, z, hm, hm1);
    roots[static_cast<size_t>(i)] = z;
    wts[static_cast<size_t>(i)] = 1.0 / (static_cast<double>(m) * hm1 * hm1);
  }

  // mirror to the full rule; odd m pins the middle node at exactly zero
  QuadratureRule rule;
  rule.nodes.assign(static_cast<size_t>(m), 0.0);
  rule.weights.assign(static_cast<size_t>(m), 0.0);
  for (int i = 0; i < half; ++i) {
    double x = roots[static_cast<size_t>(i)];
    if (m % 2 == 1 && i == half - 1) x = 0.0;
    rule.nodes[static_cast<size_t>(m - 1 - i)] = x;
    rule.nodes[static_cast<size_t>(i)] = -x;
    rule.weights[static_cast<size_t>(m - 1 - i)] = wts[static_cast<size_t>(i)];
    rule.weights[static_cast<size_t>(i)] = wts[static_cast<size_t>(i)];
  }
  return rule;
}

}  // namespace symdisc
