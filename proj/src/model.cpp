#include "superint/model.hpp"

#include <stdexcept>

namespace superint {

namespace {

LaurentR L(const TrigRat& c, int power = 0) { return LaurentR(c, power); }

// Successive phi-derivatives T, T', ..., T^(n).
std::vector<TrigRat> derivatives(const TrigRat& f, int n) {
  std::vector<TrigRat> out{f};
  for (int k = 1; k <= n; ++k) out.push_back(out.back().dphi());
  return out;
}

}  // namespace

TrigRat angular_potential(const SystemParams& p) {
  const Rational quarter(1, 4);
  const Rational& a = p.alpha();
  const Rational& b = p.beta();
  // 1/cos^2 phi = 2/(1 - x), 1/sin^2 phi = 2/(1 + x), b + cos 2phi = b - x.
  RatFn v = RatFn::normalize(Poly{2 * (a * a - quarter)}, Poly{1, -1});
  v += RatFn::normalize(Poly{2 * (b * b - quarter)}, Poly{1, 1});
  v += RatFn::normalize(Poly{8, -8 * p.b()}, Poly{p.b(), -1}.pow(2));
  return TrigRat(v);
}

TrigRat potential_T(const SystemParams& p) {
  const Rational quarter(1, 4);
  const Rational& a = p.alpha();
  const Rational& b = p.beta();
  TrigRat t = TrigRat::tan_phi() * ((a * a - quarter) / 2);
  t -= TrigRat::cot_phi() * ((b * b - quarter) / 2);
  t += TrigRat(RatFn{}, RatFn::normalize(Poly{2}, Poly{p.b(), -1}));
  return t;
}

Op2D laplacian() {
  Op2D lap = Op2D::dr(2);
  lap += Op2D::term(L(Rational(1), -1), 1, 0);
  lap += Op2D::term(L(Rational(1), -2), 0, 2);
  return lap;
}

Op2D build_hamiltonian(const SystemParams& p) {
  Op2D h = -laplacian();
  h += Op2D(L(TrigRat(p.harmonic()), 2));
  h += Op2D(L(angular_potential(p), -2));
  return h;
}

Op2D build_L1(const SystemParams& p) {
  Op2D l1 = -Op2D::dphi(2);
  l1 += Op2D(L(angular_potential(p)));
  return l1;
}

CConstants integral_constants(const SystemParams& p) {
  const Rational& a = p.alpha();
  const Rational& b = p.beta();
  CConstants c;
  c.c12 = 8 * (a * a - a * b + b * b) + 18;
  return c;
}

GFunctions g_functions(const SystemParams& p, const CConstants& c) {
  const auto T = derivatives(potential_T(p), 1);
  const TrigRat c2 = TrigRat::cos2phi();
  const TrigRat s2 = TrigRat::sin2phi();
  GFunctions g;
  g.G1 = L(c2 * T[1] * Rational(2) - s2 * T[0] * Rational(2) - c2 * (c.c12 / 4) +
           s2 * (c.c11 / 4) + TrigRat(c.c10));
  g.G2 = L((s2 * T[1] * Rational(12) + c2 * T[0] * Rational(8) - s2 * c.c12 - c2 * c.c11) *
               Rational(-1, 2),
           -1);
  g.G3 = L((c2 * T[1] * Rational(16) - s2 * T[0] * Rational(8) - c2 * c.c12 + s2 * c.c11 -
            TrigRat(4 * c.c10)) *
               Rational(-1, 4),
           -2);
  g.G3 += L(c2 * p.harmonic(), 2);
  g.G3 += L(TrigRat(c.c30 / 2));
  return g;
}

std::vector<LaurentR> first_order_residuals(const SystemParams& p, const GFunctions& g,
                                            const CConstants& c) {
  (void)c;
  const auto T = derivatives(potential_T(p), 2);
  const TrigRat c2 = TrigRat::cos2phi();
  const TrigRat s2 = TrigRat::sin2phi();
  const Rational& k = p.harmonic();
  std::vector<LaurentR> res;
  res.push_back(g.G1.dr());
  res.push_back(g.G2.dr().shifted(2) + g.G1.dphi() - L(c2 * T[2] * Rational(2)));
  res.push_back(g.G3.dr().shifted(3) + g.G2.dphi().shifted(1) + g.G1 * Rational(2) -
                L(s2 * T[2] * Rational(-6) - c2 * T[1] * Rational(4)) -
                L(c2 * (2 * k), 4));
  res.push_back(g.G3.dphi().shifted(2) + g.G2.shifted(1) -
                L(c2 * T[2] * Rational(-4) + s2 * T[1] * Rational(4)) + L(s2 * (2 * k), 4));
  return res;
}

LaurentR g0_radial_rhs(const SystemParams& p, const CConstants& c) {
  const auto T = derivatives(potential_T(p), 4);
  const TrigRat c2 = TrigRat::cos2phi();
  const TrigRat s2 = TrigRat::sin2phi();
  const Rational& c12 = c.c12;
  TrigRat r0 = s2 * T[4] + c2 * T[3] * Rational(8);
  r0 += T[2] * (c2 * T[0] * Rational(-8) - s2 * T[1] * Rational(12) + s2 * (c12 - 20));
  r0 += T[1] * (c2 * T[1] * Rational(-16) + c2 * (2 * c12 - 16) + s2 * T[0] * Rational(16));
  TrigRat r4 = (c2 * T[1] * Rational(8) - c2 * (c12 + 8) - s2 * T[0] * Rational(8)) * p.harmonic();
  return L(r0) + L(r4, 4);
}

LaurentR g0_angular_rhs(const SystemParams& p, const CConstants& c) {
  const auto T = derivatives(potential_T(p), 3);
  const TrigRat c2 = TrigRat::cos2phi();
  const TrigRat s2 = TrigRat::sin2phi();
  const Rational& c12 = c.c12;
  TrigRat r0 = s2 * T[3] * Rational(-2);
  r0 += T[2] * (c2 * T[1] * Rational(-16) + c2 * (c12 - 12) + s2 * T[0] * Rational(8));
  r0 += T[1] * (c2 * T[0] * Rational(16) + s2 * (16 - 2 * c12));
  r0 += s2 * T[1] * T[1] * Rational(24);
  TrigRat r2 = T[2] * (2 * c.c30);
  TrigRat r4 = (c2 * T[0] * Rational(-8) + c2 * T[2] * Rational(4) - s2 * T[1] * Rational(12) +
                s2 * (c12 + 8)) *
               p.harmonic();
  return L(r0) + L(r2, 2) + L(r4, 4);
}

TrigRat nonlinear_T_residual(const TrigRat& Tf, const CConstants& c) {
  const auto T = derivatives(Tf, 5);
  const TrigRat t = TrigRat::tan_2phi();
  const Rational& c11 = c.c11;
  const Rational& c12 = c.c12;
  TrigRat res = t * T[5] + T[4] * Rational(10);
  res += (T[0] * Rational(-8) - t * T[1] * Rational(12) + t * (c12 - 40) + TrigRat(c11)) * T[3];
  res += (TrigRat(6 * c12 - 80) + t * T[0] * Rational(48) - T[1] * Rational(96) - t * (6 * c11)) *
         T[2];
  res -= t * T[2] * T[2] * Rational(12);
  res += t * T[1] * T[1] * Rational(96);
  res += (T[0] * Rational(64) + t * (64 - 8 * c12) - TrigRat(8 * c11)) * T[1];
  return res;
}

std::pair<LaurentR, LaurentR> g0_equation_residuals(const SystemParams& p, const CConstants& c,
                                                    const LaurentR& G0) {
  return {G0.dr().shifted(3) - g0_radial_rhs(p, c), G0.dphi().shifted(2) - g0_angular_rhs(p, c)};
}

LaurentR g0_cross_derivative(const SystemParams& p, const CConstants& c) {
  return g0_radial_rhs(p, c).shifted(-3).dphi() - g0_angular_rhs(p, c).shifted(-2).dr();
}

LaurentR integrate_G0(const SystemParams& p, const CConstants& c, bool strict) {
  if (c.c10 != 0 || c.c11 != 0 || c.c21 != 0 || c.c22 != 0) {
    throw std::invalid_argument("G0 integration supports c10 = c11 = c21 = c22 = 0 only");
  }
  const LaurentR radial = g0_radial_rhs(p, c);
  LaurentR g0;
  for (const auto& [k, coeff] : radial.terms()) {
    // dG0/dr = coeff r^(k-3)
    if (k == 2) {
      throw IntegrationError("r^-1 term in dG0/dr: logarithmic antiderivative",
                             LaurentR(coeff, k - 3));
    }
    g0.add_term(k - 2, coeff * (Rational(1) / (k - 2)));
  }
  LaurentR residual = g0_angular_rhs(p, c) - g0.dphi().shifted(2);
  TrigRat h_prime = residual.coeff(2);
  residual -= LaurentR(h_prime, 2);
  if (!residual.is_zero()) {
    if (strict) throw IntegrationError("G0 equations are not compatible", residual);
    return g0;
  }
  if (!h_prime.is_zero()) {
    // The only angular remainder produced by the equations is 2 c30 T''.
    TrigRat h = potential_T(p).dphi() * (2 * c.c30);
    if (h.dphi() != h_prime) {
      if (strict) throw IntegrationError("angular remainder is not 2 c30 T''", LaurentR(h_prime, 2));
      return g0;
    }
    g0 += LaurentR(h);
  }
  return g0;
}

Op2D cartesian_dxx() {
  const TrigRat cc = TrigRat::cos_sq();
  const TrigRat ss = TrigRat::sin_sq();
  const TrigRat cs = TrigRat::sin_cos();
  Op2D op = Op2D::term(L(cc), 2, 0);
  op += Op2D::term(L(ss, -1), 1, 0);
  op += Op2D::term(L(ss, -2), 0, 2);
  op += Op2D::term(L(cs * Rational(-2), -1), 1, 1);
  op += Op2D::term(L(cs * Rational(2), -2), 0, 1);
  return op;
}

Op2D cartesian_dyy() {
  const TrigRat cc = TrigRat::cos_sq();
  const TrigRat ss = TrigRat::sin_sq();
  const TrigRat cs = TrigRat::sin_cos();
  Op2D op = Op2D::term(L(ss), 2, 0);
  op += Op2D::term(L(cc, -1), 1, 0);
  op += Op2D::term(L(cc, -2), 0, 2);
  op += Op2D::term(L(cs * Rational(2), -1), 1, 1);
  op += Op2D::term(L(cs * Rational(-2), -2), 0, 1);
  return op;
}

Op2D cartesian_dxy() {
  const TrigRat cs = TrigRat::sin_cos();
  const TrigRat c2 = TrigRat::cos2phi();
  Op2D op = Op2D::term(L(cs), 2, 0);
  op += Op2D::term(L(-cs, -1), 1, 0);
  op += Op2D::term(L(-cs, -2), 0, 2);
  op += Op2D::term(L(c2, -1), 1, 1);
  op += Op2D::term(L(-c2, -2), 0, 1);
  return op;
}

IntegralBundle build_L2(const SystemParams& p, const BuildOptions& opts) {
  IntegralBundle out;
  out.c = integral_constants(p);
  if (opts.c12_override) out.c.c12 = *opts.c12_override;
  out.H = build_hamiltonian(p);
  out.L1 = build_L1(p);
  out.G = g_functions(p, out.c);
  out.G0 = integrate_G0(p, out.c, opts.strict);
  out.G0 += LaurentR(TrigRat(opts.g0_constant.value_or(Rational(0))));

  // Rotate the polar quadratic form (G1, r G2, r^2 G3) back to Cartesian
  // coefficients g1 dxx + g2 dxdy + g3 dyy.
  const LaurentR A = out.G.G1;
  const LaurentR B = out.G.G2.shifted(1);
  const LaurentR C = out.G.G3.shifted(2);
  const LaurentR cc = L(TrigRat::cos_sq());
  const LaurentR ss = L(TrigRat::sin_sq());
  const LaurentR cs = L(TrigRat::sin_cos());
  const LaurentR c2 = L(TrigRat::cos2phi());
  const LaurentR g1 = cc * A - cs * B + ss * C;
  const LaurentR g3 = ss * A + cs * B + cc * C;
  const LaurentR g2 = cs * A * Rational(2) + c2 * B - cs * C * Rational(2);

  const Op2D dxx = cartesian_dxx();
  const Op2D dyy = cartesian_dyy();
  const Op2D dxy = cartesian_dxy();
  const Op2D lead = dxx - dyy;
  const Op2D dphi2 = Op2D::dphi(2);
  Op2D l2 = lead * dphi2 + dphi2 * lead;
  l2 -= op_anticommutator(Op2D(g1), dxx);
  l2 -= op_anticommutator(Op2D(g2), dxy);
  l2 -= op_anticommutator(Op2D(g3), dyy);
  l2 += Op2D(out.G0);
  out.L2 = std::move(l2);
  return out;
}

Rational energy(int m, int n, const SystemParams& p) {
  return p.omega() * (2 + 2 * m + 2 * n + p.alpha() + p.beta());
}

}  // namespace superint
