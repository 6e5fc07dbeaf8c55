#include "superint/trigrat.hpp"

#include <cmath>
#include <stdexcept>

namespace superint {

namespace {

const Poly& one_minus_x_sq() {
  static const Poly p{1, 0, -1};
  return p;
}

}  // namespace

TrigRat TrigRat::x() { return TrigRat(RatFn::x()); }
TrigRat TrigRat::s() { return TrigRat(RatFn{}, RatFn(Rational(1))); }
TrigRat TrigRat::cos2phi() { return TrigRat(-RatFn::x()); }
TrigRat TrigRat::sin2phi() { return s(); }
TrigRat TrigRat::cos_sq() { return TrigRat(RatFn(Poly{Rational(1, 2), Rational(-1, 2)})); }
TrigRat TrigRat::sin_sq() { return TrigRat(RatFn(Poly{Rational(1, 2), Rational(1, 2)})); }
TrigRat TrigRat::sin_cos() { return TrigRat(RatFn{}, RatFn(Rational(1, 2))); }
TrigRat TrigRat::tan_phi() { return TrigRat(RatFn{}, RatFn::normalize(Poly{1}, Poly{1, -1})); }
TrigRat TrigRat::cot_phi() { return TrigRat(RatFn{}, RatFn::normalize(Poly{1}, Poly{1, 1})); }
TrigRat TrigRat::tan_2phi() { return TrigRat(RatFn{}, RatFn::normalize(Poly{-1}, Poly{0, 1})); }

TrigRat& TrigRat::operator+=(const TrigRat& o) {
  even_ += o.even_;
  odd_ += o.odd_;
  return *this;
}

TrigRat& TrigRat::operator-=(const TrigRat& o) {
  even_ -= o.even_;
  odd_ -= o.odd_;
  return *this;
}

TrigRat& TrigRat::operator*=(const Rational& c) {
  even_ *= c;
  odd_ *= c;
  return *this;
}

TrigRat operator*(const TrigRat& a, const TrigRat& b) {
  RatFn even = a.even_ * b.even_;
  RatFn odd;
  if (!a.odd_.is_zero() && !b.odd_.is_zero()) even += a.odd_ * b.odd_ * RatFn(one_minus_x_sq());
  if (!a.odd_.is_zero()) odd += a.odd_ * b.even_;
  if (!b.odd_.is_zero()) odd += a.even_ * b.odd_;
  return TrigRat(std::move(even), std::move(odd));
}

TrigRat TrigRat::inverse() const {
  RatFn norm = even_ * even_ - odd_ * odd_ * RatFn(one_minus_x_sq());
  if (norm.is_zero()) throw std::domain_error("inverse of zero TrigRat");
  RatFn inv = norm.inverse();
  return TrigRat(even_ * inv, -odd_ * inv);
}

TrigRat TrigRat::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  TrigRat result(Rational(1));
  for (int k = 0; k < e; ++k) result = result * *this;
  return result;
}

TrigRat TrigRat::dphi() const {
  RatFn even;
  if (!odd_.is_zero()) {
    even = RatFn(Poly{2, 0, -2}) * odd_.derivative() - RatFn(Poly{0, 2}) * odd_;
  }
  RatFn odd = even_.derivative() * Rational(2);
  return TrigRat(std::move(even), std::move(odd));
}

double TrigRat::eval(double x, double s) const { return even_.eval(x) + odd_.eval(x) * s; }

double TrigRat::eval_phi(double phi) const { return eval(-std::cos(2 * phi), std::sin(2 * phi)); }

std::string TrigRat::to_string() const {
  if (odd_.is_zero()) return even_.to_string();
  if (even_.is_zero()) return "(" + odd_.to_string() + ")*s";
  return even_.to_string() + " + (" + odd_.to_string() + ")*s";
}

TrigRat trig_mul(const TrigRat& a, const TrigRat& b) { return a * b; }

TrigRat trig_dphi(const TrigRat& f) { return f.dphi(); }

}  // namespace superint
