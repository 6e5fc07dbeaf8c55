#pragma once

#include <map>
#include <string>

#include "superint/trigrat.hpp"

namespace superint {

/// Finite Laurent polynomial in r with TrigRat coefficients: sum_k c_k r^k.
/// Zero coefficients are never stored.
class LaurentR {
 public:
  using Terms = std::map<int, TrigRat>;

  LaurentR() = default;
  LaurentR(const TrigRat& c, int power = 0);  // NOLINT(google-explicit-constructor)
  LaurentR(const Rational& c) : LaurentR(TrigRat(c)) {}  // NOLINT(google-explicit-constructor)

  static LaurentR monomial(const TrigRat& c, int power) { return LaurentR(c, power); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Coefficient of r^k (zero if absent).
  TrigRat coeff(int k) const;
  int min_power() const;
  int max_power() const;

  void add_term(int power, const TrigRat& c);

  LaurentR& operator+=(const LaurentR& o);
  LaurentR& operator-=(const LaurentR& o);
  LaurentR& operator*=(const Rational& c);
  friend LaurentR operator+(LaurentR a, const LaurentR& b) { return a += b; }
  friend LaurentR operator-(LaurentR a, const LaurentR& b) { return a -= b; }
  friend LaurentR operator*(const LaurentR& a, const LaurentR& b);
  friend LaurentR operator*(LaurentR a, const Rational& c) { return a *= c; }
  friend LaurentR operator*(const Rational& c, LaurentR a) { return a *= c; }
  LaurentR operator-() const;
  friend bool operator==(const LaurentR& a, const LaurentR& b) { return (a - b).is_zero(); }

  /// Multiplication by r^k.
  LaurentR shifted(int k) const;
  LaurentR dr() const;
  LaurentR dphi() const;

  double eval(double r, double phi) const;
  std::string to_string() const;

 private:
  Terms terms_;
};

LaurentR laurent_scale_shift(const LaurentR& f, int k);

}  // namespace superint
