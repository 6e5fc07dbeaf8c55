#pragma once

#include <map>
#include <string>
#include <utility>

#include "superint/laurent.hpp"

namespace superint {

/// Index of a normal-ordered monomial dr^i dphi^j.
struct DerivIndex {
  int dr = 0;
  int dphi = 0;
  int order() const { return dr + dphi; }
  friend auto operator<=>(const DerivIndex&, const DerivIndex&) = default;
};

/// Differential operator in (r, phi) in normal form:
///   sum_{i,j} c_{ij}(r, x, s) dr^i dphi^j
/// with every coefficient to the left of the derivatives. Zero coefficients
/// are not stored, so the empty map is the zero operator.
class Op2D {
 public:
  using Terms = std::map<DerivIndex, LaurentR>;

  Op2D() = default;
  /// Multiplication operator by c.
  Op2D(const LaurentR& c);  // NOLINT(google-explicit-constructor)
  Op2D(const Rational& c) : Op2D(LaurentR(c)) {}  // NOLINT(google-explicit-constructor)

  static Op2D identity() { return Op2D(Rational(1)); }
  static Op2D dr(int n = 1);
  static Op2D dphi(int n = 1);
  /// c(r, x, s) dr^i dphi^j.
  static Op2D term(const LaurentR& c, int i, int j);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Highest i + j present; -1 for the zero operator.
  int order() const;
  LaurentR coeff(int i, int j) const;
  void add_term(DerivIndex idx, const LaurentR& c);

  Op2D& operator+=(const Op2D& o);
  Op2D& operator-=(const Op2D& o);
  Op2D& operator*=(const Rational& c);
  friend Op2D operator+(Op2D a, const Op2D& b) { return a += b; }
  friend Op2D operator-(Op2D a, const Op2D& b) { return a -= b; }
  friend Op2D operator*(Op2D a, const Rational& c) { return a *= c; }
  friend Op2D operator*(const Rational& c, Op2D a) { return a *= c; }
  /// Composition (a then b means a * b acting as a(b(f))).
  friend Op2D operator*(const Op2D& a, const Op2D& b);
  Op2D operator-() const;

  /// Left multiplication by a coefficient: c * A.
  Op2D left_multiply(const LaurentR& c) const;

  /// Applies the operator to the test function exp(kr r + kphi phi) at (r, phi).
  double apply_exponential(double kr, double kphi, double r, double phi) const;

  /// Plain-text normal form, one term per line:
  ///   r^k * (even | odd s) * dr^i dphi^j
  std::string dump() const;

 private:
  Terms terms_;
};

Op2D op_compose(const Op2D& a, const Op2D& b);
Op2D op_commutator(const Op2D& a, const Op2D& b);
Op2D op_anticommutator(const Op2D& a, const Op2D& b);
bool op_equal(const Op2D& a, const Op2D& b);

}  // namespace superint
