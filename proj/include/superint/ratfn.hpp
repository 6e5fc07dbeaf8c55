#pragma once

#include <string>
#include <vector>

#include "superint/poly.hpp"

namespace superint {

/// Reduced rational function num/den over Q.
///
/// The denominator is kept factored over a gcd-free basis: a list of monic,
/// square-free, pairwise coprime bases with multiplicities. Arithmetic then
/// never needs a full-size polynomial gcd; cancellation only tests the
/// numerator against each (usually linear) base. The expanded denominator is
/// monic and gcd(num, den) = 1.
class RatFn {
 public:
  struct Factor {
    Poly base;
    int mult = 0;
  };

  RatFn() = default;
  RatFn(const Rational& c);  // NOLINT(google-explicit-constructor)
  RatFn(const Poly& p);      // NOLINT(google-explicit-constructor)

  /// Reduced form of num/den. Throws std::invalid_argument if den is zero.
  static RatFn normalize(const Poly& num, const Poly& den);
  static RatFn x();

  const Poly& num() const { return num_; }
  const std::vector<Factor>& den_factors() const { return den_; }
  /// Expanded (monic) denominator.
  Poly den() const;

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.empty(); }
  /// True when this is a constant; `value` receives it.
  bool is_constant(Rational* value = nullptr) const;

  RatFn& operator+=(const RatFn& o);
  RatFn& operator-=(const RatFn& o);
  RatFn& operator*=(const RatFn& o);
  RatFn& operator*=(const Rational& c);
  friend RatFn operator+(RatFn a, const RatFn& b) { return a += b; }
  friend RatFn operator-(RatFn a, const RatFn& b) { return a -= b; }
  friend RatFn operator*(RatFn a, const RatFn& b) { return a *= b; }
  friend RatFn operator*(RatFn a, const Rational& c) { return a *= c; }
  friend RatFn operator*(const Rational& c, RatFn a) { return a *= c; }
  friend RatFn operator/(const RatFn& a, const RatFn& b) { return a * b.inverse(); }
  RatFn operator-() const;
  /// Value equality (independent of how the denominator basis was split).
  friend bool operator==(const RatFn& a, const RatFn& b) { return (a - b).is_zero(); }

  RatFn inverse() const;
  RatFn derivative() const;
  RatFn pow(int e) const;
  /// f(inner(x)) for polynomial inner.
  RatFn compose(const Poly& inner) const;

  /// Throws std::domain_error at a pole.
  Rational eval(const Rational& at) const;
  double eval(double at) const;

  /// Largest total degree of numerator and expanded denominator.
  int degree_bound() const;

  std::string to_string(const std::string& var = "x") const;

 private:
  void cancel();
  Poly num_;
  std::vector<Factor> den_;
};

}  // namespace superint
