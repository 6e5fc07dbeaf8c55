#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "superint/op2d.hpp"

namespace superint {

/// Gauged polynomial in (r, x):
///
///   r^C exp(-a r^2) (1-x)^p (1+x)^q (x-b)^k s^sigma  sum_j r^j P_j(x)
///
/// with x = -cos 2phi and s = sin 2phi. In canonical form the smallest
/// r-power in the body is 0 and no P_j shares a common factor (1-x), (1+x)
/// or (x-b) with all the others.
struct QuasiPoly {
  Rational C;       // radial power
  Rational gauss;   // a in exp(-a r^2)
  Rational p, q;    // exponents of (1-x), (1+x)
  Rational b;       // root of the (x-b) factor
  int k = 0;        // exponent of (x-b)
  int s_parity = 0; // 0 or 1
  std::map<int, Poly> body;

  bool is_zero() const { return body.empty(); }
  QuasiPoly scaled(const Rational& c) const;
  /// Numeric value at (r, phi), phi in (0, pi/2).
  double eval(double r, double phi) const;
  std::string to_string() const;
};

/// Result of applying an operator that leaves the gauged family.
class NonClosureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Brings a QuasiPoly to canonical form (see QuasiPoly).
QuasiPoly canonicalize(QuasiPoly f);

/// Exact application of A to f, re-expressed in canonical QuasiPoly form.
/// Throws NonClosureError when the result has a denominator other than
/// powers of (1-x), (1+x), (x-b), or mixes even and odd s-parity.
QuasiPoly op_apply(const Op2D& A, const QuasiPoly& f);

/// Canonical equality (two zero functions are equal whatever their gauge).
bool quasi_equal(const QuasiPoly& a, const QuasiPoly& b);

/// a + b when both share the gauge up to integer shifts; throws
/// NonClosureError otherwise.
QuasiPoly quasi_add(const QuasiPoly& a, const QuasiPoly& b);

}  // namespace superint
