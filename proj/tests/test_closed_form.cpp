#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "support/oracles.hpp"
#include "symdisc/closed_form.hpp"
#include "symdisc/errors.hpp"

using namespace symdisc;
using CFS = ClosedFormScalar;

namespace {

mpq_class pow2q(long e) {
  mpq_class q(1);
  mpz_class f;
  mpz_ui_pow_ui(f.get_mpz_t(), 2, static_cast<unsigned long>(e >= 0 ? e : -e));
  if (e >= 0) {
    q *= f;
  } else {
    q /= f;
  }
  return q;
}

}  // namespace

TEST_CASE("canonical form folds even sqrt(2) powers") {
  CHECK(CFS::make(3, 2, 0) == CFS::integer(6));
  CHECK(CFS::make(1, -2, 0) == CFS::rational(1, 2));
  CHECK(CFS::make(5, 3, 1) == CFS::make(10, 1, 1));
  CHECK(CFS::make(7, 0, 0).sqrt2_exp() == 0);
  CHECK(CFS::make(7, 5, 0).sqrt2_exp() == 1);
  CHECK(CFS::make(7, 5, 0).rational_part() == 28);

  CHECK(CFS::make(0, 1, 5).is_zero());
  CHECK(CFS::make(0, 1, 5) == CFS());
  CHECK(CFS::make(0, 1, 5).sqrtpi_exp() == 0);
}

TEST_CASE("multiplication and inverse") {
  CHECK(CFS::sqrt2() * CFS::sqrt2() == CFS::integer(2));
  CHECK(CFS::sqrt_pi() * CFS::sqrt_pi() == CFS::make(1, 0, 2));
  CHECK(CFS::sqrt2().inverse() == CFS::make(mpq_class(1, 2), 1, 0));
  CHECK(CFS::make(3, 1, 2).inverse() == CFS::make(mpq_class(1, 6), 1, -2));

  const std::vector<CFS> samples = {
      CFS::integer(5),           CFS::rational(-7, 3),
      CFS::sqrt2(),              CFS::sqrt_pi(),
      CFS::make(3, 1, 2),        CFS::make(mpq_class(-9, 4), 1, -3),
      CFS::make(1, 0, 7)};
  for (const auto& x : samples) {
    CHECK(x * x.inverse() == CFS::integer(1));
    CHECK(x / x == CFS::integer(1));
  }
  CHECK_THROWS(CFS().inverse());
}

TEST_CASE("addition requires a common irrational part") {
  CHECK(CFS::sqrt_pi() + CFS::sqrt_pi() == CFS::make(2, 0, 1));
  CHECK(CFS::make(3, 1, 1) - CFS::make(3, 1, 1) == CFS());
  CHECK(CFS() + CFS::sqrt2() == CFS::sqrt2());
  CHECK(CFS::sqrt2() + CFS() == CFS::sqrt2());

  CHECK_THROWS_AS(CFS::integer(1) + CFS::sqrt2(), IncompatibleBasisError);
  CHECK_THROWS_AS(CFS::sqrt2() + CFS::sqrt_pi(), IncompatibleBasisError);
  CHECK_THROWS_AS(CFS::make(1, 0, 1) - CFS::make(1, 0, 2),
                  IncompatibleBasisError);
}

TEST_CASE("numeric value and display form") {
  CHECK(CFS::sqrt2().to_double() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(CFS::make(3, 1, 2).to_double() ==
        doctest::Approx(3.0 * std::sqrt(2.0) * std::numbers::pi).epsilon(1e-15));
  CHECK(CFS::make(mpq_class(1, 2), 0, -1).to_double() ==
        doctest::Approx(0.5 / std::sqrt(std::numbers::pi)).epsilon(1e-15));

  CHECK(CFS::integer(-1).to_string() == "-1");
  CHECK(CFS::rational(3, 2).to_string() == "3/2");
  CHECK((CFS::rational(3, 2) * CFS::sqrt_pi()).to_string() == "3/2*sqrt(pi)");
  CHECK(CFS::make(16, 0, 4).to_string() == "16*pi^2");
  CHECK(CFS::make(1, 1, 1).to_string() == "sqrt(2)*sqrt(pi)");
  CHECK((-CFS::sqrt2()).to_string() == "-sqrt(2)");
  CHECK(CFS().to_string() == "0");
  CHECK(CFS::make(6, 1, 2).to_string() == "6*sqrt(2)*pi");
}

TEST_CASE("factorial and binomial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(20) == mpz_class("2432902008176640000"));
  CHECK_THROWS_AS(factorial(-1), OutOfRangeError);

  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(30, 2) == 435);
  CHECK(binomial(4, 7) == 0);
  CHECK(binomial(4, -1) == 0);
}

TEST_CASE("half-integer gamma table") {
  CHECK(gamma_half(1) == CFS::sqrt_pi());
  CHECK(gamma_half(2) == CFS::integer(1));
  CHECK(gamma_half(3) == CFS::make(mpq_class(1, 2), 0, 1));
  CHECK(gamma_half(4) == CFS::integer(1));
  CHECK(gamma_half(5) == CFS::make(mpq_class(3, 4), 0, 1));
  CHECK(gamma_half(6) == CFS::integer(2));
  CHECK(gamma_half(7) == CFS::make(mpq_class(15, 8), 0, 1));
  CHECK(gamma_half(8) == CFS::integer(6));
  CHECK(gamma_half(9) == CFS::make(mpq_class(105, 16), 0, 1));
  CHECK_THROWS_AS(gamma_half(0), OutOfRangeError);

  for (long n = 2; n <= 20; ++n) {
    // Legendre duplication collapsed to half-integers:
    // Gamma(n/2) Gamma((n-1)/2) = 2^(2-n) sqrt(pi) (n-2)!
    const CFS expect =
        CFS::make(mpq_class(factorial(n - 2)) * pow2q(2 - n), 0, 1);
    CHECK(gamma_half(n) * gamma_half(n - 1) == expect);
  }
}

TEST_CASE("ensemble normalization constants") {
  CHECK(z_const(0) == CFS::integer(1));
  CHECK(z_const(1) == CFS::make(1, 1, 1));
  CHECK(z_const(2) == CFS::make(4, 0, 1));
  CHECK(z_const(3) == CFS::make(6, 1, 2));
  CHECK(z_const(4) == CFS::make(48, 0, 2));
  CHECK(z_const(5) == CFS::make(180, 1, 3));
  CHECK_THROWS_AS(z_const(-1), OutOfRangeError);

  for (long m = 0; m <= 20; ++m) {
    // odd/even ladder: Z_{2m+1} = 2 sqrt(2) Gamma(m + 3/2) Z_{2m}
    CHECK(z_const(2 * m + 1) ==
          CFS::make(2, 1, 0) * gamma_half(2 * m + 3) * z_const(2 * m));
  }
}

TEST_CASE("normalization constants match direct numeric integration") {
  using symdisc::testing::simpson;
  const double lim = 9.0;

  // Z_n = integral over R^n of prod_{i<j} |x_i - x_j| exp(-|x|^2/2).
  // Restricting to the ordered region x_1 > ... > x_n (and multiplying by n!)
  // keeps the integrand smooth, so the composite rule converges at full order.
  const double z1 =
      simpson([](double x) { return std::exp(-0.5 * x * x); }, -lim, lim, 800);
  CHECK(z1 == doctest::Approx(z_const(1).to_double()).epsilon(1e-12));

  const double z2 =
      2.0 * simpson(
                [&](double x) {
                  return simpson(
                      [&](double y) {
                        return (x - y) * std::exp(-0.5 * (x * x + y * y));
                      },
                      -lim, x, 400);
                },
                -lim, lim, 400);
  CHECK(z2 == doctest::Approx(z_const(2).to_double()).epsilon(1e-8));

  const double z3 =
      6.0 * simpson(
                [&](double x) {
                  return simpson(
                      [&](double y) {
                        return simpson(
                            [&](double z) {
                              const double v = (x - y) * (x - z) * (y - z);
                              return v * std::exp(-0.5 * (x * x + y * y + z * z));
                            },
                            -lim, y, 120);
                      },
                      -lim, x, 120);
                },
                -lim, lim, 120);
  CHECK(z3 == doctest::Approx(z_const(3).to_double()).epsilon(1e-6));
}

TEST_CASE("companion constant ladder") {
  CHECK(p_const(0) == CFS::integer(2));
  CHECK(p_const(1) == CFS::make(2, 0, 1));
  CHECK(p_const(2) == CFS::make(6, 0, 2));
  for (long m = 0; m <= 10; ++m) {
    CHECK(p_const(m) == CFS::make(pow2q(1 - 2 * m), 0, 0) * z_const(2 * m));
  }
}

TEST_CASE("orthogonal group and sphere volumes") {
  CHECK(volume_orthogonal_group(1) == CFS::integer(2));
  CHECK(volume_orthogonal_group(2) == CFS::make(4, 0, 2));
  CHECK(volume_orthogonal_group(3) == CFS::make(16, 0, 4));

  CHECK(volume_sphere(0) == CFS::integer(2));
  CHECK(volume_sphere(1) == CFS::make(2, 0, 2));
  CHECK(volume_sphere(2) == CFS::make(4, 0, 2));
  CHECK(volume_sphere(3) == CFS::make(2, 0, 4));

  // S^{d} bounds a ball whose volume is vol(S^d)/(d+1); spot-check d = 2
  // against 4 pi / 3 and the dimension recursion vol(S^d) = 2 pi vol(S^{d-2})/(d-1).
  for (long d = 2; d <= 12; ++d) {
    CHECK(volume_sphere(d) ==
          CFS::make(mpq_class(2, d - 1), 0, 2) * volume_sphere(d - 2));
  }
  CHECK_THROWS_AS(volume_sphere(-1), OutOfRangeError);
  CHECK_THROWS_AS(volume_orthogonal_group(0), OutOfRangeError);
}
