#pragma once

#include "symdisc/closed_form.hpp"
#include "symdisc/polynomial.hpp"

namespace symdisc {

/// Physicists' Hermite polynomial H_i, from the recurrence
/// H_{i+1}(x) = 2x H_i(x) - 2i H_{i-1}(x) with H_0 = 1, H_1 = 2x.
IntPolynomial hermite(int i);

/// Exact value of the integral of p(u) * exp(-u^2) over the real line.
/// Odd-degree terms vanish; the even term c_{2k} u^{2k} contributes
/// c_{2k} * (2k)!/(4^k k!) * sqrt(pi).
ClosedFormScalar gaussian_integral(const RatPolynomial& p);
ClosedFormScalar gaussian_integral(const IntPolynomial& p);

/// Determinant of the 2x2 matrix
///   [ H_2j            H'_2j           ]
///   [ H_{2j+1}-H'_2j  H'_{2j+1}-H''_2j ]
/// as a polynomial in u, j >= 0.
RatPolynomial x_matrix_det(int j);

/// Determinant of the 3x3 matrix with rows
///   ( (2j)!/j!,        H_2j,      H'_2j      )
///   ( 0,               H_{2j+1}-H'_2j,  H'_{2j+1}-H''_2j )
///   ( (2m+2)!/(m+1)!,  H_{2m+2},  H'_{2m+2}  )
/// as a polynomial in u, 0 <= j <= m.
RatPolynomial y_matrix_det(int j, int m);

/// p_k(u) = E det(Q - u I)^2 over Q ~ GOE(k), as an exact polynomial of
/// degree 2k in u.  k = 0 gives the constant 1.
RatPolynomial second_moment_poly(int k);

/// Exact value of the integral of p_k(u) * exp(-u^2) du, equal to
/// sqrt(pi) * (k+2)! / 2^(k+1).
ClosedFormScalar second_moment_integral(int k);

}  // namespace symdisc
