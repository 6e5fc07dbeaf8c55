#pragma once

#include <string>
#include <utility>
#include <vector>

#include "superint/rational.hpp"

namespace superint {

/// Dense univariate polynomial over Q. coeffs_[k] is the coefficient of x^k;
/// the leading stored coefficient is never zero.
class Poly {
 public:
  static constexpr int kZeroDegree = -1;

  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  Poly(std::initializer_list<Rational> coeffs);

  static Poly constant(const Rational& c);
  static Poly monomial(const Rational& c, int degree);
  /// The polynomial x.
  static Poly x();
  /// x - root.
  static Poly linear_root(const Rational& root);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// Coefficient of x^k; zero outside the stored range.
  Rational coeff(int k) const;
  const Rational& leading() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  Poly operator-() const;
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  Poly derivative() const;
  /// p(q(x)).
  Poly compose(const Poly& inner) const;
  Poly pow(int e) const;
  Rational eval(const Rational& at) const;
  double eval(double at) const;
  Poly monic() const;

  /// Quotient and remainder; divisor must be nonzero.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  /// Exact division by (x - root); requires eval(root) == 0.
  Poly divide_linear(const Rational& root) const;
  /// Monic greatest common divisor; gcd(0, 0) = 0.
  static Poly gcd(const Poly& a, const Poly& b);

  /// Yun square-free decomposition of a monic polynomial: returns s_1, s_2, ...
  /// with p = prod s_i^i (trailing constant factors are returned as 1).
  std::vector<Poly> square_free_decomposition() const;

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

}  // namespace superint
