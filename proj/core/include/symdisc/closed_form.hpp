#pragma once

#include <gmpxx.h>

#include <string>

#include "symdisc/errors.hpp"

namespace symdisc {

/// Exact scalar of the form q * sqrt(2)^a * sqrt(pi)^b with q rational.
///
/// The set is closed under multiplication and division.  Addition and
/// subtraction are only defined when both operands carry the same irrational
/// factor (or one of them is zero); otherwise IncompatibleBasisError is
/// thrown, since the sum would leave the representable set.
///
/// Canonical form: even powers of sqrt(2) are folded into q, so a is always
/// 0 or 1.  Powers of sqrt(pi) cannot be folded into a rational, so b is an
/// unrestricted integer (pi^2, 1/sqrt(pi), ... are all representable).
/// Zero is stored as (0, 0, 0).
class ClosedFormScalar {
 public:
  /// Zero.
  ClosedFormScalar() : q_(0) {}

  static ClosedFormScalar integer(long v);
  static ClosedFormScalar rational(const mpq_class& q);
  static ClosedFormScalar rational(long num, long den);
  static ClosedFormScalar sqrt2();
  static ClosedFormScalar sqrt_pi();

  /// q * sqrt(2)^sqrt2_exp * sqrt(pi)^sqrtpi_exp, canonicalized.
  static ClosedFormScalar make(const mpq_class& q, long sqrt2_exp,
                               long sqrtpi_exp);

  const mpq_class& rational_part() const { return q_; }
  int sqrt2_exp() const { return a_; }
  long sqrtpi_exp() const { return b_; }

  bool is_zero() const { return q_ == 0; }
  bool is_rational() const { return a_ == 0 && b_ == 0; }

  ClosedFormScalar operator-() const;
  ClosedFormScalar inverse() const;

  friend ClosedFormScalar operator*(const ClosedFormScalar& x,
                                    const ClosedFormScalar& y);
  friend ClosedFormScalar operator/(const ClosedFormScalar& x,
                                    const ClosedFormScalar& y);
  /// Throws IncompatibleBasisError unless both operands share one canonical
  /// (a, b) or at least one of them is zero.
  friend ClosedFormScalar operator+(const ClosedFormScalar& x,
                                    const ClosedFormScalar& y);
  friend ClosedFormScalar operator-(const ClosedFormScalar& x,
                                    const ClosedFormScalar& y);

  friend bool operator==(const ClosedFormScalar& x, const ClosedFormScalar& y);
  friend bool operator!=(const ClosedFormScalar& x, const ClosedFormScalar& y);

  ClosedFormScalar& operator*=(const ClosedFormScalar& y);
  ClosedFormScalar& operator+=(const ClosedFormScalar& y);

  double to_double() const;

  /// Human-readable form, e.g. "3/2*sqrt(pi)", "16*pi^2", "-1".
  std::string to_string() const;

 private:
  ClosedFormScalar(mpq_class q, long a, long b);
  void canonicalize();

  mpq_class q_;
  int a_ = 0;  // exponent of sqrt(2), canonically 0 or 1
  long b_ = 0; // exponent of sqrt(pi)
};

/// n! as an exact integer, n >= 0.
mpz_class factorial(long n);

/// Binomial coefficient C(n, k); zero when k < 0 or k > n.
mpz_class binomial(long n, long k);

/// Gamma(k/2) for integer k >= 1.  Gamma(1/2) = sqrt(pi), Gamma(1) = 1, and
/// the half-integer recurrence fills in the rest.
ClosedFormScalar gamma_half(long k);

/// Normalizing constant sqrt(2 pi)^n * prod_{i=1..n} Gamma(1 + i/2) / Gamma(3/2)
/// of the n-dimensional Gaussian orthogonal ensemble, n >= 0.
ClosedFormScalar z_const(long n);

/// The constant 2^(1 - m^2) * sqrt(pi)^m * prod_{i=0..m} (2i)!, m >= 0.
ClosedFormScalar p_const(long m);

/// Riemannian volume of the orthogonal group O(n) under the metric induced by
/// the embedding into n x n matrices: 2^n * pi^(n(n+1)/4) / prod_{i=1..n} Gamma(i/2).
ClosedFormScalar volume_orthogonal_group(long n);

/// Surface volume of the unit d-sphere: 2 * pi^((d+1)/2) / Gamma((d+1)/2).
ClosedFormScalar volume_sphere(long d);

}  // namespace symdisc
