#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace superint {

/// Arbitrary-precision rational. mpq_class keeps numerator/denominator
/// canonical (reduced, positive denominator, zero as 0/1) after every
/// arithmetic operation.
using Rational = mpq_class;
using BigInt = mpz_class;

/// Parses "p/q" or an integer. Throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

double to_double(const Rational& q);

Rational abs(const Rational& q);

/// q^e for integer e (negative e requires q != 0).
Rational pow(const Rational& q, int e);

/// n choose k as an exact integer.
BigInt binomial(int n, int k);

}  // namespace superint
