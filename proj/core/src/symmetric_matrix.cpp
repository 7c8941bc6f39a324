#include "symdisc/symmetric_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "symdisc/errors.hpp"

namespace symdisc {

SymmetricMatrix::SymmetricMatrix(int n) : n_(n) {
  if (n < 1) throw OutOfRangeError("SymmetricMatrix: dimension must be >= 1");
  u_.assign(static_cast<size_t>(n) * (n + 1) / 2, 0.0);
}

SymmetricMatrix SymmetricMatrix::identity(int n) {
  SymmetricMatrix a(n);
  for (int i = 0; i < n; ++i) a.set(i, i, 1.0);
  return a;
}

SymmetricMatrix SymmetricMatrix::diagonal(const std::vector<double>& d) {
  SymmetricMatrix a(static_cast<int>(d.size()));
  for (int i = 0; i < a.dim(); ++i) a.set(i, i, d[static_cast<size_t>(i)]);
  return a;
}

SymmetricMatrix SymmetricMatrix::from_rows(
    const std::vector<std::vector<double>>& rows, double sym_tol) {
  const int n = static_cast<int>(rows.size());
  if (n < 1) throw ParseError("matrix: no rows");
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != n) {
      throw ParseError("matrix: not square");
    }
  }
  SymmetricMatrix a(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const double x = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
      const double y = rows[static_cast<size_t>(j)][static_cast<size_t>(i)];
      if (!(std::fabs(x - y) <= sym_tol)) {
        throw ParseError("matrix: entries (" + std::to_string(i) + "," +
                         std::to_string(j) + ") and transpose differ by more than " +
                         std::to_string(sym_tol));
      }
      a.set(i, j, 0.5 * (x + y));
    }
  }
  if (!a.all_finite()) throw ParseError("matrix: non-finite entry");
  return a;
}

void SymmetricMatrix::add_scaled(const SymmetricMatrix& b, double s) {
  for (size_t k = 0; k < u_.size(); ++k) u_[k] += s * b.u_[k];
}

void SymmetricMatrix::scale(double s) {
  for (auto& x : u_) x *= s;
}

void SymmetricMatrix::fill_zero() { std::fill(u_.begin(), u_.end(), 0.0); }

bool SymmetricMatrix::all_finite() const {
  return std::all_of(u_.begin(), u_.end(),
                     [](double x) { return std::isfinite(x); });
}

std::vector<std::vector<double>> SymmetricMatrix::to_rows() const {
  std::vector<std::vector<double>> rows(
      static_cast<size_t>(n_), std::vector<double>(static_cast<size_t>(n_)));
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      rows[static_cast<size_t>(i)][static_cast<size_t>(j)] = (*this)(i, j);
    }
  }
  return rows;
}

double frobenius_norm(const SymmetricMatrix& a) {
  return std::sqrt(frobenius_dot(a, a));
}

double frobenius_dot(const SymmetricMatrix& a, const SymmetricMatrix& b) {
  const int n = a.dim();
  double s = 0.0;
  for (int i = 0; i < n; ++i) {
    s += a(i, i) * b(i, i);
    for (int j = i + 1; j < n; ++j) s += 2.0 * a(i, j) * b(i, j);
  }
  return s;
}

SpectralDecomposition eigendecompose(const SymmetricMatrix& in) {
  if (!in.all_finite()) {
    throw OutOfRangeError("eigendecompose: non-finite entry");
  }
  const int n = in.dim();
  std::vector<double> a(static_cast<size_t>(n) * n);
  std::vector<double> v(static_cast<size_t>(n) * n, 0.0);
  auto A = [&](int i, int j) -> double& { return a[static_cast<size_t>(i) * n + j]; };
  auto V = [&](int i, int j) -> double& { return v[static_cast<size_t>(i) * n + j]; };
  for (int i = 0; i < n; ++i) {
    V(i, i) = 1.0;
    for (int j = 0; j < n; ++j) A(i, j) = in(i, j);
  }

  const double norm = frobenius_norm(in);
  const double thresh = 1e-14 * std::max(norm, 1e-300);

  bool converged = false;
  for (int sweep = 0; sweep < 30; ++sweep) {
    double off2 = 0.0;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) off2 += 2.0 * A(p, q) * A(p, q);
    }
    if (std::sqrt(off2) <= thresh) {
      converged = true;
      break;
    }
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = A(p, q);
        if (apq == 0.0) continue;
        const double theta = 0.5 * (A(q, q) - A(p, p)) / apq;
        double t;
        if (std::fabs(theta) > 1e150) {
          t = 0.5 / theta;  // avoid overflow in theta^2
        } else {
          t = 1.0 / (std::fabs(theta) + std::sqrt(1.0 + theta * theta));
          if (theta < 0.0) t = -t;
        }
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const double tau = s / (1.0 + c);
        const double app = A(p, p), aqq = A(q, q);
        A(p, p) = app - t * apq;
        A(q, q) = aqq + t * apq;
        A(p, q) = 0.0;
        A(q, p) = 0.0;
        for (int r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = A(r, p), arq = A(r, q);
          A(r, p) = arp - s * (arq + tau * arp);
          A(p, r) = A(r, p);
          A(r, q) = arq + s * (arp - tau * arq);
          A(q, r) = A(r, q);
        }
        for (int r = 0; r < n; ++r) {
          const double vrp = V(r, p), vrq = V(r, q);
          V(r, p) = vrp - s * (vrq + tau * vrp);
          V(r, q) = vrq + s * (vrp - tau * vrq);
        }
      }
    }
  }
  if (!converged) {
    throw NoConvergenceError("eigendecompose: Jacobi sweep cap exceeded");
  }

  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return A(x, x) > A(y, y); });

  SpectralDecomposition dec;
  dec.dim = n;
  dec.eigenvalues.resize(static_cast<size_t>(n));
  dec.rotation.resize(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    const int col = order[static_cast<size_t>(i)];
    dec.eigenvalues[static_cast<size_t>(i)] = A(col, col);
    double sign = 1.0;
    for (int k = 0; k < n; ++k) {
      const double x = V(k, col);
      if (x != 0.0) {
        sign = (x > 0.0) ? 1.0 : -1.0;
        break;
      }
    }
    for (int k = 0; k < n; ++k) {
      dec.rotation[static_cast<size_t>(i) * n + k] = sign * V(k, col);
    }
  }
  return dec;
}

SymmetricMatrix assemble_from_frame(const SpectralDecomposition& frame,
                                    const std::vector<double>& values) {
  const int n = frame.dim;
  SymmetricMatrix b(n);
  for (int j = 0; j < n; ++j) {
    for (int k = j; k < n; ++k) {
      double s = 0.0;
      for (int i = 0; i < n; ++i) {
        s += values[static_cast<size_t>(i)] * frame.vec(i, j) * frame.vec(i, k);
      }
      b.set(j, k, s);
    }
  }
  return b;
}

RatPolynomial char_poly(const SymmetricMatrix& a) {
  if (!a.all_finite()) throw OutOfRangeError("char_poly: non-finite entry");
  const int n = a.dim();
  std::vector<mpq_class> m(static_cast<size_t>(n) * n);
  auto at = [n](std::vector<mpq_class>& v, int i, int j) -> mpq_class& {
    return v[static_cast<size_t>(i) * n + j];
  };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) at(m, i, j) = mpq_class(a(i, j));
  }

  // Faddeev-LeVerrier: M_1 = A, c_{n-k} = -tr(M_k)/k, M_{k+1} = A(M_k + c_{n-k} I)
  std::vector<mpq_class> coeff(static_cast<size_t>(n) + 1);
  coeff[static_cast<size_t>(n)] = 1;
  std::vector<mpq_class> mk = m;
  for (int k = 1; k <= n; ++k) {
    mpq_class tr = 0;
    for (int i = 0; i < n; ++i) tr += at(mk, i, i);
    coeff[static_cast<size_t>(n - k)] = -tr / k;
    if (k == n) break;
    for (int i = 0; i < n; ++i) at(mk, i, i) += coeff[static_cast<size_t>(n - k)];
    std::vector<mpq_class> next(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        mpq_class s = 0;
        for (int l = 0; l < n; ++l) s += at(m, i, l) * at(mk, l, j);
        at(next, i, j) = s;
      }
    }
    mk = std::move(next);
  }
  return RatPolynomial(std::move(coeff));
}

double discriminant(const SymmetricMatrix& a) {
  const auto dec = eigendecompose(a);
  const int n = a.dim();
  double prod = 1.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double d = dec.eigenvalues[static_cast<size_t>(i)] -
                       dec.eigenvalues[static_cast<size_t>(j)];
      prod *= d * d;
    }
  }
  return prod;
}

double min_gap(const SymmetricMatrix& a) {
  if (a.dim() == 1) return std::numeric_limits<double>::infinity();
  const auto dec = eigendecompose(a);
  double g = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i + 1 < dec.eigenvalues.size(); ++i) {
    g = std::min(g, dec.eigenvalues[i] - dec.eigenvalues[i + 1]);
  }
  return g;
}

SymmetricMatrix goe_sample(int n, RandomStream& rng) {
  if (n < 1) throw OutOfRangeError("goe_sample: n must be >= 1");
  constexpr double kInvSqrt2 = 0.7071067811865475244;
  SymmetricMatrix a(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const double g = rng.next_gaussian();
      a.set(i, j, i == j ? g : g * kInvSqrt2);
    }
  }
  return a;
}

}  // namespace symdisc
