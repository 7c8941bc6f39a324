#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace symdisc {

class RatPolynomial;

/// Dense univariate polynomial with exact integer coefficients, stored lowest
/// degree first.  The zero polynomial has an empty coefficient vector and
/// degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<mpz_class> coeffs);
  static IntPolynomial constant(const mpz_class& c);
  /// The monomial c * x^k.
  static IntPolynomial monomial(const mpz_class& c, int k);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  /// Coefficient of x^i; zero outside the stored range.
  mpz_class coeff(int i) const;
  const std::vector<mpz_class>& coeffs() const { return c_; }
  mpz_class leading_coeff() const;

  mpz_class evaluate(const mpz_class& x) const;
  mpq_class evaluate(const mpq_class& x) const;
  double evaluate(double x) const;

  IntPolynomial derivative() const;
  RatPolynomial to_rational() const;

  IntPolynomial operator-() const;
  friend IntPolynomial operator+(const IntPolynomial& p, const IntPolynomial& q);
  friend IntPolynomial operator-(const IntPolynomial& p, const IntPolynomial& q);
  friend IntPolynomial operator*(const IntPolynomial& p, const IntPolynomial& q);
  friend IntPolynomial operator*(const mpz_class& s, const IntPolynomial& p);
  friend bool operator==(const IntPolynomial& p, const IntPolynomial& q);
  friend bool operator!=(const IntPolynomial& p, const IntPolynomial& q);

  std::string to_string() const;

 private:
  void trim();
  std::vector<mpz_class> c_;
};

/// Dense univariate polynomial with exact rational coefficients, lowest
/// degree first.  Same conventions as IntPolynomial.
class RatPolynomial {
 public:
  RatPolynomial() = default;
  explicit RatPolynomial(std::vector<mpq_class> coeffs);
  static RatPolynomial constant(const mpq_class& c);
  static RatPolynomial monomial(const mpq_class& c, int k);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  mpq_class coeff(int i) const;
  const std::vector<mpq_class>& coeffs() const { return c_; }
  mpq_class leading_coeff() const;
  bool is_monic() const;

  mpq_class evaluate(const mpq_class& x) const;
  double evaluate(double x) const;

  RatPolynomial derivative() const;

  RatPolynomial operator-() const;
  friend RatPolynomial operator+(const RatPolynomial& p, const RatPolynomial& q);
  friend RatPolynomial operator-(const RatPolynomial& p, const RatPolynomial& q);
  friend RatPolynomial operator*(const RatPolynomial& p, const RatPolynomial& q);
  friend RatPolynomial operator*(const mpq_class& s, const RatPolynomial& p);
  friend bool operator==(const RatPolynomial& p, const RatPolynomial& q);
  friend bool operator!=(const RatPolynomial& p, const RatPolynomial& q);

  std::string to_string() const;

 private:
  void trim();
  std::vector<mpq_class> c_;
};

}  // namespace symdisc
