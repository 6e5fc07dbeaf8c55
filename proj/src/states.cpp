#include "superint/states.hpp"

#include <iomanip>
#include <ostream>

namespace superint {

namespace {

QuasiPoly empty_gauge(const SystemParams& p) {
  QuasiPoly f;
  f.b = p.b();
  return f;
}

}  // namespace

Rational separation_constant(int n, const SystemParams& p) {
  return 2 * n + p.alpha() + p.beta() + 1;
}

QuasiPoly radial_state(int m, const Rational& C, const SystemParams& p) {
  const Rational rate = p.radial_rate();
  QuasiPoly f = empty_gauge(p);
  f.C = C;
  f.gauss = rate / 2;
  const Poly lag = laguerre(m, C);
  Rational rk(1);
  for (int k = 0; k <= lag.degree(); ++k) {
    if (lag.coeff(k) != 0) f.body[2 * k] = Poly{lag.coeff(k) * rk};
    rk *= rate;
  }
  return canonicalize(f);
}

QuasiPoly angular_psi(int n, const SystemParams& p) {
  QuasiPoly f = empty_gauge(p);
  f.p = (2 * p.alpha() + 3) / 4;
  f.q = (2 * p.beta() - 1) / 4;
  f.body[0] = jacobi(n, p.alpha() + 1, p.beta() - 1);
  return canonicalize(f);
}

TrigRat seed_log_derivative(const SystemParams& p) {
  // d/dphi log cos = -tan, d/dphi log sin = cot, d/dphi log(b - x) = -2s/(b - x).
  TrigRat w = TrigRat::tan_phi() * (p.alpha() + Rational(1, 2));
  w += TrigRat::cot_phi() * (p.beta() - Rational(1, 2));
  w += TrigRat(RatFn{}, RatFn::normalize(Poly{-2}, Poly{p.b(), -1}));
  return w;
}

Op2D factor_A(const SystemParams& p) {
  return Op2D::dphi(1) - Op2D(LaurentR(seed_log_derivative(p)));
}

QuasiPoly angular_phi(int n, const SystemParams& p) {
  return op_apply(factor_A(p), angular_psi(n, p));
}

QuasiPoly product_state(int m, int n, const SystemParams& p) {
  const QuasiPoly rad = radial_state(m, separation_constant(n, p), p);
  const QuasiPoly ang = angular_phi(n, p);
  QuasiPoly f = ang;
  f.C = rad.C;
  f.gauss = rad.gauss;
  f.body.clear();
  const Poly& angular = ang.body.at(0);
  for (const auto& [j, poly] : rad.body) f.body[j] = angular * poly.coeff(0);
  return canonicalize(f);
}

Poly xjacobi(int n, const SystemParams& p) {
  QuasiPoly phi = angular_phi(n, p);
  if (phi.body.size() != 1) throw NonClosureError("angular state depends on r");
  if (phi.s_parity == 1) {
    // s = (1-x)^{1/2} (1+x)^{1/2} on the wedge.
    phi.p += Rational(1, 2);
    phi.q += Rational(1, 2);
    phi.s_parity = 0;
  }
  const Rational dp = phi.p - (2 * p.alpha() + 1) / 4;
  const Rational dq = phi.q - (2 * p.beta() + 1) / 4;
  const int dk = phi.k + 1;
  if (dp.get_den() != 1 || dq.get_den() != 1 || dp < 0 || dq < 0 || dk < 0) {
    throw NonClosureError("Phi_n / G_x is not a polynomial: " + phi.to_string());
  }
  Poly out = phi.body.at(0);
  out = out * Poly{1, -1}.pow(static_cast<int>(dp.get_num().get_si()));
  out = out * Poly{1, 1}.pow(static_cast<int>(dq.get_num().get_si()));
  out = out * Poly{-p.b(), 1}.pow(dk);
  return out;
}

RatFn t_operator_apply(const Poly& f, const SystemParams& p) {
  const Rational& a = p.alpha();
  const Rational& be = p.beta();
  const Rational& b = p.b();
  const Poly d1 = f.derivative();
  RatFn out = RatFn(Poly{-4, 0, 4} * d1.derivative());
  const RatFn w = RatFn::normalize(Poly{4 * (be - a), -4 * (be - a) * b}, Poly{b, -1});
  out += w * RatFn(Poly{-b + 2 / (a - be), 1} * d1 - f);
  const Rational c = a + be + 1;
  out += RatFn(f * (c * c));
  return out;
}

Rational hamiltonian_eigenvalue(int m, int n, const SystemParams& p) {
  return 2 * p.radial_rate() * (2 + 2 * m + 2 * n + p.alpha() + p.beta());
}

void write_wavefunction_csv(std::ostream& os, const QuasiPoly& f, const std::vector<double>& rs,
                            const std::vector<double>& phis) {
  os << "r,phi,psi\n";
  os << std::setprecision(17);
  for (double r : rs) {
    for (double phi : phis) os << r << ',' << phi << ',' << f.eval(r, phi) << '\n';
  }
}

}  // namespace superint
