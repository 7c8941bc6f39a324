#include "symdisc/closed_form.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace symdisc {

namespace {

// q * 2^e for possibly negative e.
void scale_pow2(mpq_class& q, long e) {
  if (e >= 0) {
    mpz_class f;
    mpz_ui_pow_ui(f.get_mpz_t(), 2, static_cast<unsigned long>(e));
    q *= f;
  } else {
    mpz_class f;
    mpz_ui_pow_ui(f.get_mpz_t(), 2, static_cast<unsigned long>(-e));
    q /= f;
  }
}

long floor_div2(long a) { return (a >= 0) ? a / 2 : -((-a + 1) / 2); }

}  // namespace

ClosedFormScalar::ClosedFormScalar(mpq_class q, long a, long b)
    : q_(std::move(q)), a_(0), b_(b) {
  // fold even powers of sqrt(2) into q
  long fa = floor_div2(a);
  scale_pow2(q_, fa);
  a_ = static_cast<int>(a - 2 * fa);
  canonicalize();
}

void ClosedFormScalar::canonicalize() {
  q_.canonicalize();
  if (q_ == 0) {
    a_ = 0;
    b_ = 0;
  }
}

ClosedFormScalar ClosedFormScalar::integer(long v) {
  return ClosedFormScalar(mpq_class(v), 0, 0);
}

ClosedFormScalar ClosedFormScalar::rational(const mpq_class& q) {
  return ClosedFormScalar(q, 0, 0);
}

ClosedFormScalar ClosedFormScalar::rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return ClosedFormScalar(q, 0, 0);
}

ClosedFormScalar ClosedFormScalar::sqrt2() {
  return ClosedFormScalar(mpq_class(1), 1, 0);
}

ClosedFormScalar ClosedFormScalar::sqrt_pi() {
  return ClosedFormScalar(mpq_class(1), 0, 1);
}

ClosedFormScalar ClosedFormScalar::make(const mpq_class& q, long sqrt2_exp,
                                        long sqrtpi_exp) {
  return ClosedFormScalar(q, sqrt2_exp, sqrtpi_exp);
}

ClosedFormScalar ClosedFormScalar::operator-() const {
  ClosedFormScalar r(*this);
  r.q_ = -r.q_;
  return r;
}

ClosedFormScalar ClosedFormScalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  ClosedFormScalar r(*this);
  r.q_ = 1 / q_;
  r.b_ = -b_;
  if (a_ == 1) {
    // 1/sqrt(2) = sqrt(2)/2
    r.q_ /= 2;
    r.a_ = 1;
  }
  return r;
}

ClosedFormScalar operator*(const ClosedFormScalar& x,
                           const ClosedFormScalar& y) {
  return ClosedFormScalar(x.q_ * y.q_, x.a_ + y.a_, x.b_ + y.b_);
}

ClosedFormScalar operator/(const ClosedFormScalar& x,
                           const ClosedFormScalar& y) {
  return x * y.inverse();
}

ClosedFormScalar operator+(const ClosedFormScalar& x,
                           const ClosedFormScalar& y) {
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  if (x.a_ != y.a_ || x.b_ != y.b_) {
    throw IncompatibleBasisError("cannot add " + x.to_string() + " and " +
                                 y.to_string() +
                                 ": different irrational parts");
  }
  ClosedFormScalar r(x);
  r.q_ += y.q_;
  r.canonicalize();
  return r;
}

ClosedFormScalar operator-(const ClosedFormScalar& x,
                           const ClosedFormScalar& y) {
  return x + (-y);
}

bool operator==(const ClosedFormScalar& x, const ClosedFormScalar& y) {
  return x.q_ == y.q_ && x.a_ == y.a_ && x.b_ == y.b_;
}

bool operator!=(const ClosedFormScalar& x, const ClosedFormScalar& y) {
  return !(x == y);
}

ClosedFormScalar& ClosedFormScalar::operator*=(const ClosedFormScalar& y) {
  *this = *this * y;
  return *this;
}

ClosedFormScalar& ClosedFormScalar::operator+=(const ClosedFormScalar& y) {
  *this = *this + y;
  return *this;
}

double ClosedFormScalar::to_double() const {
  double v = q_.get_d();
  if (a_ != 0) v *= std::numbers::sqrt2;
  if (b_ != 0) v *= std::pow(std::numbers::pi, 0.5 * static_cast<double>(b_));
  return v;
}

std::string ClosedFormScalar::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  const bool unit_q = (q_ == 1);
  const bool neg_unit_q = (q_ == -1);
  const bool has_irr = (a_ != 0 || b_ != 0);
  if (!has_irr || (!unit_q && !neg_unit_q)) {
    out = q_.get_str();
  } else if (neg_unit_q) {
    out = "-";
  }
  auto append_factor = [&out](const std::string& f) {
    if (!out.empty() && out != "-") out += "*";
    out += f;
  };
  if (a_ == 1) append_factor("sqrt(2)");
  if (b_ != 0) {
    long whole = floor_div2(b_);
    long rem = b_ - 2 * whole;  // 0 or 1
    if (whole != 0) {
      append_factor(whole == 1 ? "pi" : "pi^" + std::to_string(whole));
    }
    if (rem == 1) append_factor("sqrt(pi)");
  }
  return out;
}

mpz_class factorial(long n) {
  if (n < 0) throw OutOfRangeError("factorial: negative argument");
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

mpz_class binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

ClosedFormScalar gamma_half(long k) {
  if (k < 1) throw OutOfRangeError("gamma_half: k must be >= 1");
  if (k == 1) return ClosedFormScalar::sqrt_pi();
  if (k == 2) return ClosedFormScalar::integer(1);
  // Gamma(k/2) = (k/2 - 1) * Gamma((k-2)/2)
  return ClosedFormScalar::rational(k - 2, 2) * gamma_half(k - 2);
}

ClosedFormScalar z_const(long n) {
  if (n < 0) throw OutOfRangeError("z_const: n must be >= 0");
  ClosedFormScalar z = ClosedFormScalar::make(1, n, n);  // sqrt(2 pi)^n
  for (long i = 1; i <= n; ++i) {
    z = z * gamma_half(i + 2) / gamma_half(3);
  }
  return z;
}

ClosedFormScalar p_const(long m) {
  if (m < 0) throw OutOfRangeError("p_const: m must be >= 0");
  mpq_class q(1);
  scale_pow2(q, 1 - m * m);
  for (long i = 0; i <= m; ++i) q *= factorial(2 * i);
  return ClosedFormScalar::make(q, 0, m);
}

ClosedFormScalar volume_orthogonal_group(long n) {
  if (n < 1) throw OutOfRangeError("volume_orthogonal_group: n must be >= 1");
  mpz_class two_n;
  mpz_ui_pow_ui(two_n.get_mpz_t(), 2, static_cast<unsigned long>(n));
  ClosedFormScalar num =
      ClosedFormScalar::make(mpq_class(two_n), 0, n * (n + 1) / 2);
  ClosedFormScalar den = ClosedFormScalar::integer(1);
  for (long i = 1; i <= n; ++i) den *= gamma_half(i);
  return num / den;
}

ClosedFormScalar volume_sphere(long d) {
  if (d < 0) throw OutOfRangeError("volume_sphere: d must be >= 0");
  return ClosedFormScalar::make(2, 0, d + 1) / gamma_half(d + 1);
}

}  // namespace symdisc
