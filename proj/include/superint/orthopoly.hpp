#pragma once

#include "superint/poly.hpp"

namespace superint {

/// Generalized binomial coefficient x(x-1)...(x-k+1)/k! for rational x.
Rational gbinomial(const Rational& x, int k);

/// Generalized Laguerre polynomial L_m^C(y) with the standard normalization
/// L_m^C(0) = binomial(m + C, m). Solves y F'' + (C + 1 - y) F' + m F = 0.
Poly laguerre(int m, const Rational& C);

/// Jacobi polynomial P_n^{(a,b)}(z) = sum_k binom(n+a, n-k) binom(n+b, k)
/// ((z-1)/2)^k ((z+1)/2)^(n-k), so that P_n^{(a,b)}(1) = binom(n+a, n).
/// Valid for all rational a, b (including negative integers).
Poly jacobi(int n, const Rational& a, const Rational& b);

/// y F'' + (C + 1 - y) F' + m F.
Poly laguerre_residual(const Poly& f, int m, const Rational& C);

/// (1 - z^2) F'' + (b - a - (a + b + 2) z) F' + n (n + a + b + 1) F.
Poly jacobi_residual(const Poly& f, int n, const Rational& a, const Rational& b);

}  // namespace superint
