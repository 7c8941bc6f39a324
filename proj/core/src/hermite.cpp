#include "symdisc/hermite.hpp"

#include <cassert>

#include "symdisc/errors.hpp"

namespace symdisc {

IntPolynomial hermite(int i) {
  if (i < 0) throw OutOfRangeError("hermite: index must be >= 0");
  IntPolynomial prev = IntPolynomial::constant(1);
  if (i == 0) return prev;
  IntPolynomial cur = IntPolynomial::monomial(2, 1);
  const IntPolynomial two_x = cur;
  for (int k = 1; k < i; ++k) {
    IntPolynomial next = two_x * cur - mpz_class(2 * k) * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

ClosedFormScalar gaussian_integral(const RatPolynomial& p) {
  // int u^{2k} e^{-u^2} du = (2k)!/(4^k k!) sqrt(pi)
  mpq_class sum = 0;
  for (int k = 0; 2 * k <= p.degree(); ++k) {
    const mpq_class c = p.coeff(2 * k);
    if (c == 0) continue;
    mpz_class four_k;
    mpz_ui_pow_ui(four_k.get_mpz_t(), 4, static_cast<unsigned long>(k));
    sum += c * factorial(2 * k) / (four_k * factorial(k));
  }
  return ClosedFormScalar::make(sum, 0, 1);
}

ClosedFormScalar gaussian_integral(const IntPolynomial& p) {
  return gaussian_integral(p.to_rational());
}

RatPolynomial x_matrix_det(int j) {
  if (j < 0) throw OutOfRangeError("x_matrix_det: j must be >= 0");
  const IntPolynomial a = hermite(2 * j);
  const IntPolynomial b = a.derivative();
  const IntPolynomial h = hermite(2 * j + 1);
  const IntPolynomial c = h - b;
  const IntPolynomial d = h.derivative() - b.derivative();
  return (a * d - b * c).to_rational();
}

RatPolynomial y_matrix_det(int j, int m) {
  if (j < 0 || m < j) throw OutOfRangeError("y_matrix_det: need 0 <= j <= m");
  const IntPolynomial a = hermite(2 * j);
  const IntPolynomial b = a.derivative();
  const IntPolynomial h = hermite(2 * j + 1);
  const IntPolynomial c = h - b;
  const IntPolynomial d = h.derivative() - b.derivative();
  const IntPolynomial e = hermite(2 * m + 2);
  const IntPolynomial f = e.derivative();
  const mpz_class alpha = factorial(2 * j) / factorial(j);
  const mpz_class beta = factorial(2 * m + 2) / factorial(m + 1);
  // expansion along the first column; the middle entry is zero
  return (alpha * (c * f - d * e) + beta * (a * d - b * c)).to_rational();
}

RatPolynomial second_moment_poly(int k) {
  if (k < 0) throw OutOfRangeError("second_moment_poly: k must be >= 0");
  if (k == 0) return RatPolynomial::constant(1);
  RatPolynomial sum;
  if (k % 2 == 0) {
    const int m = k / 2;
    for (int j = 0; j <= m; ++j) {
      mpz_class sc;  // 2^(2j+1) * (2j)!
      mpz_ui_pow_ui(sc.get_mpz_t(), 2, static_cast<unsigned long>(2 * j + 1));
      sc *= factorial(2 * j);
      sum = sum + mpq_class(mpz_class(1), sc) * x_matrix_det(j);
    }
    mpz_class pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), 2, static_cast<unsigned long>(2 * m));
    return mpq_class(factorial(2 * m), pw) * sum;
  }
  const int m = (k - 1) / 2;
  for (int j = 0; j <= m; ++j) {
    mpz_class sc;  // 2^(2j+2) * (2j)!
    mpz_ui_pow_ui(sc.get_mpz_t(), 2, static_cast<unsigned long>(2 * j + 2));
    sc *= factorial(2 * j);
    sum = sum + mpq_class(mpz_class(1), sc) * y_matrix_det(j, m);
  }
  // sqrt(pi) (2m+1)! / (2^(4m+2) Gamma(m + 3/2)); the sqrt(pi) factors cancel
  // exactly, leaving a rational prefactor.
  const ClosedFormScalar g = gamma_half(2 * m + 3);
  assert(g.sqrt2_exp() == 0 && g.sqrtpi_exp() == 1);
  mpz_class pw;
  mpz_ui_pow_ui(pw.get_mpz_t(), 2, static_cast<unsigned long>(4 * m + 2));
  const mpq_class pref = mpq_class(factorial(2 * m + 1), pw) / g.rational_part();
  return pref * sum;
}

ClosedFormScalar second_moment_integral(int k) {
  return gaussian_integral(second_moment_poly(k));
}

}  // namespace symdisc
