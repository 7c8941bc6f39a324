#include "support/oracles.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "symdisc/nearest.hpp"

namespace symdisc::testing {

mpq_class sylvester_resultant(const RatPolynomial& p, const RatPolynomial& q) {
  const int m = p.degree();
  const int n = q.degree();
  if (m < 0 || n < 0) return 0;
  const int size = m + n;
  if (size == 0) return 1;
  std::vector<std::vector<mpq_class>> s(
      static_cast<size_t>(size), std::vector<mpq_class>(static_cast<size_t>(size)));
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k <= m; ++k) {
      s[static_cast<size_t>(i)][static_cast<size_t>(i + k)] = p.coeff(m - k);
    }
  }
  for (int i = 0; i < m; ++i) {
    for (int k = 0; k <= n; ++k) {
      s[static_cast<size_t>(n + i)][static_cast<size_t>(i + k)] = q.coeff(n - k);
    }
  }

  // exact determinant by Gaussian elimination with row pivoting
  mpq_class det = 1;
  for (int col = 0; col < size; ++col) {
    int pivot = -1;
    for (int r = col; r < size; ++r) {
      if (s[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return 0;
    if (pivot != col) {
      std::swap(s[static_cast<size_t>(pivot)], s[static_cast<size_t>(col)]);
      det = -det;
    }
    const mpq_class& pv = s[static_cast<size_t>(col)][static_cast<size_t>(col)];
    det *= pv;
    for (int r = col + 1; r < size; ++r) {
      const mpq_class factor =
          s[static_cast<size_t>(r)][static_cast<size_t>(col)] / pv;
      if (factor == 0) continue;
      for (int c = col; c < size; ++c) {
        s[static_cast<size_t>(r)][static_cast<size_t>(c)] -=
            factor * s[static_cast<size_t>(col)][static_cast<size_t>(c)];
      }
    }
  }
  return det;
}

mpq_class discriminant_via_resultant(const RatPolynomial& p) {
  if (!p.is_monic()) {
    throw std::invalid_argument("discriminant oracle expects a monic input");
  }
  const int m = p.degree();
  mpq_class r = sylvester_resultant(p, p.derivative());
  if ((m * (m - 1) / 2) % 2 == 1) r = -r;
  return r;
}

IntPolynomial rodrigues_hermite(int i) {
  IntPolynomial p = IntPolynomial::constant(1);
  const IntPolynomial minus_two_x = IntPolynomial::monomial(-2, 1);
  for (int k = 0; k < i; ++k) {
    p = p.derivative() + minus_two_x * p;
  }
  return (i % 2 == 1) ? -p : p;
}

std::vector<SetPartition> all_set_partitions(int n) {
  std::vector<SetPartition> out;
  std::vector<int> a(static_cast<size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int i, int maxv) {
    if (i == n) {
      std::vector<std::vector<int>> blocks(static_cast<size_t>(maxv) + 1);
      for (int e = 0; e < n; ++e) {
        blocks[static_cast<size_t>(a[static_cast<size_t>(e)])].push_back(e);
      }
      out.emplace_back(n, std::move(blocks));
      return;
    }
    for (int v = 0; v <= maxv + 1; ++v) {
      a[static_cast<size_t>(i)] = v;
      rec(i + 1, std::max(maxv, v));
    }
  };
  rec(1, 0);
  return out;
}

double simpson(const std::function<double(double)>& f, double a, double b,
               int n) {
  if (n % 2 != 0 || n < 2) throw std::invalid_argument("simpson: n must be even");
  const double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int i = 1; i < n; ++i) {
    s += f(a + h * i) * (i % 2 == 1 ? 4.0 : 2.0);
  }
  return s * h / 3.0;
}

namespace {

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

// v_p v_q^T + v_q v_p^T (p != q) or v_p v_p^T (p == q) for rows of the frame.
SymmetricMatrix sym_outer(const SpectralDecomposition& dec, int p, int q) {
  const int n = dec.dim;
  SymmetricMatrix m(n);
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      double v = dec.vec(p, a) * dec.vec(q, b) + dec.vec(q, a) * dec.vec(p, b);
      if (p == q) v *= 0.5;
      m.set(a, b, v);
    }
  }
  return m;
}

struct Restored {
  SymmetricMatrix b;
  SpectralDecomposition dec;
  int p = 0;  // the collapsed adjacent pair (p, p+1) in descending order
};

// Local projection onto the repeated-eigenvalue set: collapse the closest
// adjacent eigenvalue pair to its mean (repeated for safety).
Restored restore(SymmetricMatrix b) {
  for (int it = 0; it < 4; ++it) {
    auto dec = eigendecompose(b);
    int p = 0;
    double best = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i + 1 < dec.eigenvalues.size(); ++i) {
      const double g = dec.eigenvalues[i] - dec.eigenvalues[i + 1];
      if (g < best) {
        best = g;
        p = static_cast<int>(i);
      }
    }
    if (best <= 1e-13) {
      return Restored{std::move(b), std::move(dec), p};
    }
    auto values = dec.eigenvalues;
    const double mean = 0.5 * (values[static_cast<size_t>(p)] +
                               values[static_cast<size_t>(p) + 1]);
    values[static_cast<size_t>(p)] = mean;
    values[static_cast<size_t>(p) + 1] = mean;
    b = assemble_from_frame(dec, values);
  }
  auto dec = eigendecompose(b);
  int p = 0;
  double best = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i + 1 < dec.eigenvalues.size(); ++i) {
    const double g = dec.eigenvalues[i] - dec.eigenvalues[i + 1];
    if (g < best) {
      best = g;
      p = static_cast<int>(i);
    }
  }
  return Restored{std::move(b), std::move(dec), p};
}

double dist(const SymmetricMatrix& a, const SymmetricMatrix& b) {
  SymmetricMatrix r(a);
  r.add_scaled(b, -1.0);
  return frobenius_norm(r);
}

}  // namespace

double descent_probe_distance(const SymmetricMatrix& a, RandomStream& rng,
                              int starts) {
  const int n = a.dim();
  const double scale = frobenius_norm(a) + 1e-2;
  constexpr double kInvSqrt2 = 0.7071067811865475244;
  double best = std::numeric_limits<double>::infinity();

  for (int s = 0; s < starts; ++s) {
    SymmetricMatrix b(a);
    SymmetricMatrix g = goe_sample(n, rng);
    const double amp = (0.05 + 1.5 * rng.next_uniform()) * scale;
    b.add_scaled(g, amp / frobenius_norm(g));
    Restored cur = restore(std::move(b));
    double d = dist(a, cur.b);

    for (int it = 0; it < 60; ++it) {
      SymmetricMatrix r(a);
      r.add_scaled(cur.b, -1.0);
      const int p = cur.p, q = cur.p + 1;
      // orthonormal normal directions of the stratum at the current point
      SymmetricMatrix n1 = sym_outer(cur.dec, p, p);
      n1.add_scaled(sym_outer(cur.dec, q, q), -1.0);
      n1.scale(kInvSqrt2);
      SymmetricMatrix n2 = sym_outer(cur.dec, p, q);
      n2.scale(kInvSqrt2);
      SymmetricMatrix tangent(r);
      tangent.add_scaled(n1, -frobenius_dot(r, n1));
      tangent.add_scaled(n2, -frobenius_dot(r, n2));
      const double tnorm = frobenius_norm(tangent);
      if (tnorm <= 1e-10 * (1.0 + scale)) break;

      double alpha = 1.0;
      bool moved = false;
      for (int bt = 0; bt < 12; ++bt) {
        SymmetricMatrix trial(cur.b);
        trial.add_scaled(tangent, alpha);
        Restored r2 = restore(std::move(trial));
        const double d2 = dist(a, r2.b);
        if (d2 < d - 1e-15) {
          cur = std::move(r2);
          d = d2;
          moved = true;
          break;
        }
        alpha *= 0.5;
      }
      if (!moved) break;
    }
    best = std::min(best, d);
  }
  return best;
}

}  // namespace symdisc::testing
