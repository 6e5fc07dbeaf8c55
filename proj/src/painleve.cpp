#include "superint/painleve.hpp"

#include <utility>

#include "superint/model.hpp"
#include "superint/opfit.hpp"
#include "superint/orthopoly.hpp"

namespace superint {

namespace {

Rational sq(const Rational& a) { return a * a; }

// d/dy log P_1^{-a-1, b-1}(1 - 2y).
RatFn seed_log_derivative_y(const SystemParams& p) {
  const Poly seed = jacobi(1, -p.alpha() - 1, p.beta() - 1).compose(Poly{1, -2});
  return RatFn::normalize(seed.derivative(), seed);
}

RatFn w_closed_form(const SystemParams& p, const Rational& const_sign, const Rational& log_coeff) {
  const Rational& a = p.alpha();
  const Rational& b = p.beta();
  const Rational d = a - b;
  RatFn w(Poly{sq(d) / 8, -sq(d) / 4});
  w += RatFn(const_sign * (a + b) * (d + 2) * (d - 2) / (8 * d));
  w += seed_log_derivative_y(p) * log_coeff;
  return w;
}

}  // namespace

QConstants q_constants(const SystemParams& p) {
  const Rational& a = p.alpha();
  const Rational& b = p.beta();
  const Rational d = a - b;
  QConstants q;
  q.q7 = -(a * a - a * b + b * b + 2) / 4;
  q.q8 = (a + b) * d * (d + 2) * (d - 2) / 16;
  q.q9 = ((2 * a * a + b * b) * sq(d) / 4 - a * b - b * b - 1) / 4;
  q.q10 = (-(a * a + a * b + b * b - 2) * sq(d) / 16 - (a * a + b * b) / 2) / 4;
  return q;
}

QConstants q_constants_derived(const SystemParams& p) {
  const Rational& a = p.alpha();
  const Rational& b = p.beta();
  const Rational d = a - b;
  QConstants q;
  q.q7 = -(a * a - a * b + b * b + 2) / 4;
  q.q8 = (-(2 * a * a + b * b) * sq(d) / 4 - a * b - b * b - 1) / 4;
  q.q9 = (a + b) * d * (d + 2) * (d - 2) / 16;
  q.q10 = (-(a * a + a * b + b * b - 2) * sq(sq(d)) / 16 - (a * a + b * b) / 2) / 4;
  return q;
}

RatFn w_explicit(const SystemParams& p) {
  const Rational d = p.alpha() - p.beta();
  return w_closed_form(p, Rational(1), 1 / sq(d));
}

RatFn w_corrected(const SystemParams& p) {
  const Rational d = p.alpha() - p.beta();
  return w_closed_form(p, Rational(-1), p.alpha() * p.beta() / sq(d));
}

RatFn w_from_T(const SystemParams& p, const Rational& shift_constant) {
  // T = s t(x). With sin cos = s/2 and 1/tan 2phi = -x/s:
  //   W = -(s/4)(T + K/tan 2phi) = -((1 - x^2) t(x) - K x)/4.
  const TrigRat T = potential_T(p);
  const Rational K = p.alpha() * p.alpha() - p.alpha() * p.beta() + p.beta() * p.beta() +
                     shift_constant;
  const RatFn wx = (RatFn(Poly{1, 0, -1}) * T.odd() - RatFn(Poly{0, K})) * Rational(-1, 4);
  // x = 1 - 2y.
  return wx.compose(Poly{1, -2});
}

RatFn sd1_residual(const RatFn& W, const QConstants& q) {
  const RatFn y = RatFn::x();
  const RatFn w1 = W.derivative();
  const RatFn w2 = w1.derivative();
  const RatFn u = y * w1 - W;
  const RatFn y1 = RatFn(Poly{0, 1, -1});  // y(1 - y)
  RatFn r = y1 * y1 * w2 * w2 + RatFn(Rational(4)) * w1 * u * u - RatFn(Rational(4)) * w1 * w1 * u;
  r += w1 * w1 * (4 * q.q7) + w1 * (4 * q.q8) + u * (4 * q.q9) + RatFn(4 * q.q10);
  return r;
}

bool sd1_fit_constants(const RatFn& W, QConstants* out) {
  QConstants zero;
  zero.q7 = zero.q8 = zero.q9 = zero.q10 = 0;
  const RatFn base = sd1_residual(W, zero);
  const RatFn y = RatFn::x();
  const RatFn w1 = W.derivative();
  const std::array<RatFn, 4> cols = {w1 * w1 * Rational(4), w1 * Rational(4),
                                     (y * w1 - W) * Rational(4), RatFn(Rational(4))};
  // Sample at rational points away from the poles.
  std::vector<std::vector<Rational>> m;
  std::vector<Rational> v;
  for (int k = 0; k < 12; ++k) {
    const Rational at(2 * k + 1, 29);
    try {
      std::vector<Rational> row;
      for (const auto& c : cols) row.push_back(c.eval(at));
      v.push_back(-base.eval(at));
      m.push_back(std::move(row));
    } catch (const std::domain_error&) {
    }
  }
  auto sol = solve_linear(m, v);
  if (!sol) return false;
  QConstants q;
  q.q7 = (*sol)[0];
  q.q8 = (*sol)[1];
  q.q9 = (*sol)[2];
  q.q10 = (*sol)[3];
  if (!sd1_residual(W, q).is_zero()) return false;
  if (out) *out = q;
  return true;
}

TrigRat t_w_difference(const SystemParams& p, const RatFn& W, const Rational& shift_constant) {
  const Rational K = p.alpha() * p.alpha() - p.alpha() * p.beta() + p.beta() * p.beta() +
                     shift_constant;
  // y = (1 - x)/2.
  const RatFn wx = W.compose(Poly{Rational(1, 2), Rational(-1, 2)});
  // 1/(sin cos) = 2/s = 2 s/(1 - x^2); 1/tan 2phi = -x s/(1 - x^2).
  const RatFn inv = RatFn::normalize(Poly{1}, Poly{1, 0, -1});
  const TrigRat rhs(RatFn{}, wx * inv * Rational(-4) + RatFn(Poly{0, K}) * inv);
  return potential_T(p) - rhs;
}

GammaSet gamma_set(const SystemParams& p, int sign) {
  const Rational& a = p.alpha();
  const Rational& b = p.beta();
  GammaSet g;
  g.sign = sign;
  const Rational root = a - b + sign;
  g.gamma1 = root * root / 2;
  g.gamma2 = -a * a / 2;
  g.gamma3 = b * b / 2;
  g.gamma4 = Rational(-3, 2);
  g.sqrt_2gamma1 = superint::abs(root);
  return g;
}

std::array<Rational, 4> pvi_relation_residuals(const QConstants& q, const GammaSet& g) {
  const Rational& g1 = g.gamma1;
  const Rational& g2 = g.gamma2;
  const Rational& g3 = g.gamma3;
  const Rational& g4 = g.gamma4;
  const Rational& t = g.sqrt_2gamma1;
  std::array<Rational, 4> r;
  r[0] = -4 * q.q7 - (-g1 - g2 + g3 - g4 - t + 1);
  r[1] = -4 * q.q8 - (g2 + g3) * (g1 + g4 - t);
  r[2] = -4 * q.q9 - ((g3 - g2) * (g1 - g4 - t + 1) + sq(g1 - g2 - g3 + g4 - t) / 4);
  r[3] = -4 * q.q10 - ((g3 - g2) * sq(g1 + g4 - t) / 4 + sq(g2 + g3) * (g1 - g4 - t + 1) / 4);
  return r;
}

QConstants swap_q8_q9(const QConstants& q) {
  QConstants out = q;
  std::swap(out.q8, out.q9);
  return out;
}

PviCheck pvi_parameter_check(const SystemParams& p, const QConstants& q) {
  PviCheck out;
  out.plus_residuals = pvi_relation_residuals(q, gamma_set(p, 1));
  out.minus_residuals = pvi_relation_residuals(q, gamma_set(p, -1));
  auto all_zero = [](const std::array<Rational, 4>& r) {
    for (const auto& v : r) {
      if (v != 0) return false;
    }
    return true;
  };
  out.plus_branch = all_zero(out.plus_residuals);
  out.minus_branch = all_zero(out.minus_residuals);
  return out;
}

}  // namespace superint
