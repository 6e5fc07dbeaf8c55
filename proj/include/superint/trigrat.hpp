#pragma once

#include <string>

#include "superint/ratfn.hpp"

namespace superint {

/// Element a(x) + b(x) s of Q(x)[s]/(s^2 - (1 - x^2)).
///
/// Trig functions of the polar angle are encoded through x = -cos 2phi and
/// s = sin 2phi, restricted to the wedge 0 < phi < pi/2 where s > 0.
class TrigRat {
 public:
  TrigRat() = default;
  TrigRat(const Rational& c) : even_(c) {}  // NOLINT(google-explicit-constructor)
  TrigRat(const RatFn& even) : even_(even) {}  // NOLINT(google-explicit-constructor)
  TrigRat(RatFn even, RatFn odd) : even_(std::move(even)), odd_(std::move(odd)) {}

  static TrigRat x();
  static TrigRat s();
  static TrigRat cos2phi();      // -x
  static TrigRat sin2phi();      // s
  static TrigRat cos_sq();       // cos^2 phi = (1 - x)/2
  static TrigRat sin_sq();       // sin^2 phi = (1 + x)/2
  static TrigRat sin_cos();      // sin phi cos phi = s/2
  static TrigRat tan_phi();      // s/(1 - x)
  static TrigRat cot_phi();      // s/(1 + x)
  static TrigRat tan_2phi();     // -s/x

  const RatFn& even() const { return even_; }
  const RatFn& odd() const { return odd_; }
  bool is_zero() const { return even_.is_zero() && odd_.is_zero(); }

  TrigRat& operator+=(const TrigRat& o);
  TrigRat& operator-=(const TrigRat& o);
  TrigRat& operator*=(const Rational& c);
  friend TrigRat operator+(TrigRat a, const TrigRat& b) { return a += b; }
  friend TrigRat operator-(TrigRat a, const TrigRat& b) { return a -= b; }
  friend TrigRat operator*(const TrigRat& a, const TrigRat& b);
  friend TrigRat operator*(TrigRat a, const Rational& c) { return a *= c; }
  friend TrigRat operator*(const Rational& c, TrigRat a) { return a *= c; }
  friend TrigRat operator/(const TrigRat& a, const TrigRat& b) { return a * b.inverse(); }
  TrigRat operator-() const { return TrigRat(-even_, -odd_); }
  friend bool operator==(const TrigRat& a, const TrigRat& b) { return (a - b).is_zero(); }

  /// (a + b s)^{-1} = (a - b s)/(a^2 - b^2 (1 - x^2)).
  TrigRat inverse() const;
  TrigRat pow(int e) const;

  /// d/dphi under x = -cos 2phi, s = sin 2phi:
  /// (a + b s)' = (2(1 - x^2) b' - 2 x b) + 2 a' s.
  TrigRat dphi() const;

  double eval(double x, double s) const;
  /// Evaluates at angle phi in (0, pi/2).
  double eval_phi(double phi) const;

  std::string to_string() const;

 private:
  RatFn even_;
  RatFn odd_;
};

TrigRat trig_mul(const TrigRat& a, const TrigRat& b);
TrigRat trig_dphi(const TrigRat& f);

}  // namespace superint
