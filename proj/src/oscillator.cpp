#include "superint/oscillator.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace superint {

namespace {

const Rational& two_pow_39() {
  static const Rational v = pow(Rational(2), 39);
  return v;
}

// Values of n+u at which the eight E-independent factors vanish.
std::vector<Rational> master_roots(const SystemParams& p) {
  const Rational& a = p.alpha();
  const Rational& b = p.beta();
  const Rational h(1, 2);
  return {h * (1 - a - b), h * (-1 + a - b), h * (3 + a - b), h * (1 + a - b),
          h * (-1 - a + b), h * (1 - a + b), h * (1 + a + b), h * (3 - a + b)};
}

Rational half(const Rational& v) { return v / 2; }

}  // namespace

Rational StructureFn::eval(const Rational& n) const {
  Rational acc = prefactor * energy_part.eval(n);
  for (const auto& f : factors) acc *= f.eval(n);
  return acc;
}

Poly StructureFn::expand() const {
  Poly acc = energy_part * prefactor;
  for (const auto& f : factors) acc = acc * Poly{f.constant, f.coeff_n};
  return acc;
}

StructureFn structure_fn(const Rational& u, const Rational& E, const SystemParams& p,
                         EnergyPair pair) {
  const Rational& w = p.omega();
  if (w <= 0) throw std::invalid_argument("structure function needs omega > 0");
  StructureFn s;
  s.prefactor = -3 * two_pow_39() * w * w;
  for (const auto& root : master_roots(p)) s.factors.push_back({Rational(1), u - root});
  // (n + u - 1/2)^2 - E^2 / (c w^2), c = 4 (corrected) or 8 (printed).
  const Rational c = pair == EnergyPair::kCorrected ? Rational(4) : Rational(8);
  const Rational shift = u - Rational(1, 2);
  s.energy_part = Poly{shift * shift - E * E / (c * w * w), 2 * shift, 1};
  return s;
}

Rational phi_eval(const Rational& u, const Rational& E, int n, const SystemParams& p,
                  EnergyPair pair) {
  return structure_fn(u, E, p, pair).eval(n);
}

Rational phi_first_form(const Rational& u, const Rational& H, int n, const SystemParams& p) {
  const Rational& a = p.alpha();
  const Rational& b = p.beta();
  const Rational& w = p.omega();
  const Rational t = 2 * (n + u);  // 2N + 2u
  const Rational d = a - b;
  Rational acc = 3 * two_pow_39();
  acc *= (d - t - 1) * (d - t + 1) * (d - t + 3);
  acc *= (d + t - 3) * (d + t - 1) * (d + t + 1);
  acc *= (a + b - t + 1) * (a + b + t - 1);
  acc *= H * H - 2 * (1 - t) * (1 - t) * w * w;
  return acc;
}

std::vector<RepresentationSolution> u_roots(const SystemParams& p) {
  const Rational d = p.alpha() - p.beta();
  const Rational s = p.alpha() + p.beta();
  std::vector<RepresentationSolution> out;
  for (int e1 : {1, -1}) {
    for (int e2 : {1, -1}) {
      RepresentationSolution r;
      r.family = 1;
      r.eps1 = e1;
      r.eps2 = e2;
      r.u = half(Rational(e1) + e2 * d);
      out.push_back(r);
    }
  }
  for (int fam : {2, 3}) {
    for (int e1 : {1, -1}) {
      RepresentationSolution r;
      r.family = fam;
      r.eps1 = e1;
      r.eps2 = 1;
      r.u = fam == 2 ? half(3 + e1 * d) : half(1 + e1 * s);
      out.push_back(r);
    }
  }
  return out;
}

Rational spectrum_from_phi(int family, int eps1, int eps2, int p, const SystemParams& params) {
  const Rational d = params.alpha() - params.beta();
  const Rational s = params.alpha() + params.beta();
  const Rational& w = params.omega();
  switch (family) {
    case 1:
      return w * (1 + 2 * p + eps1 + eps2 * d);
    case 2:
      return w * (4 + 2 * p + eps1 * d);
    case 3:
      return w * (2 + 2 * p + eps1 * s);
    default:
      throw std::invalid_argument("family must be 1, 2 or 3");
  }
}

PositivityResult positivity_scan(const Rational& u, const Rational& E, int p,
                                 const SystemParams& params, EnergyPair pair) {
  const StructureFn s = structure_fn(u, E, params, pair);
  PositivityResult r;
  for (int n = 1; n <= p; ++n) {
    if (s.eval(n) <= 0) {
      r.admissible = false;
      r.failures.push_back(n);
    }
  }
  return r;
}

std::vector<RepresentationSolution> enumerate_representations(const SystemParams& params,
                                                              int max_p, EnergyPair pair) {
  std::vector<RepresentationSolution> out;
  for (const auto& seed : u_roots(params)) {
    for (int p = 0; p <= max_p; ++p) {
      RepresentationSolution r = seed;
      r.p = p;
      r.energy = spectrum_from_phi(r.family, r.eps1, r.eps2, p, params);
      const StructureFn s = structure_fn(r.u, r.energy, params, pair);
      r.closes = s.eval(0) == 0 && s.eval(p + 1) == 0;
      r.admissible = r.closes && positivity_scan(r.u, r.energy, p, params, pair).admissible;
      out.push_back(r);
    }
  }
  return out;
}

Rational appendix_phi(int family, int eps1, int eps2, int p, int N, const SystemParams& params) {
  const Rational& a = params.alpha();
  const Rational& b = params.beta();
  const Rational& w = params.omega();
  const Rational e1(eps1);
  const Rational e2(eps2);
  const Rational n(N);
  Rational acc = 3 * two_pow_39() * w * w * (p + 1 - n);
  switch (family) {
    case 1:
      acc *= w * w;
      acc *= n + p + e1 + a * e2 - b * e2;
      acc *= half(a * e2 + a - b * e2 + b + 2 * n + e1 - 1);
      acc *= half(a * (e2 - 1) - b * e2 + b + 2 * n + e1 + 1);
      acc *= half(a * (e2 - 1) - b * e2 + b + 2 * n + e1 - 3);
      acc *= half(a * (e2 - 1) - b * e2 + b + 2 * n + e1 - 1);
      acc *= half(a * (e2 + 1) - b * (e2 + 1) + 2 * n + e1 + 1);
      acc *= half(a * (e2 + 1) - b * (e2 + 1) + 2 * n + e1 - 1);
      acc *= half(a * (e2 - 1) - b * (e2 + 1) + 2 * n + e1 - 1);
      acc *= half(a * (e2 + 1) - b * (e2 + 1) + 2 * n + e1 - 3);
      break;
    case 2:
      acc *= a * e1 - b * e1 + n + p + 3;
      acc *= half(a * e1 + a - b * e1 + b + 2 * n + 2);
      acc *= half(a * (e1 - 1) - b * e1 + b + 2 * n + 4);
      acc *= half((e1 - 1) * (a - b)) + n;
      acc *= half(a * (e1 - 1) - b * e1 + b + 2 * n + 2);
      acc *= half(a * (e1 + 1) - b * (e1 + 1) + 4) + n;
      acc *= half(a * (e1 + 1) - b * (e1 + 1) + 2) + n;
      acc *= half(a * (e1 - 1) - b * (e1 + 1) + 2) + n;
      acc *= half((e1 + 1) * (a - b)) + n;
      break;
    case 3:
      acc *= e1 * (a + b) + n + p + 1;
      acc *= half((e1 + 1) * (a + b)) + n;
      acc *= half(a * (e1 - 1) + b * e1 + b + 2 * n + 2);
      acc *= half(a * (e1 - 1) + b * e1 + b + 2 * n - 2);
      acc *= half(e1 * (a + b) - a + b + 2 * n);
      acc *= half(e1 * (a + b) + a - b + 2 * n + 2);
      acc *= half(e1 * (a + b) + a - b + 2 * n);
      acc *= half((e1 - 1) * (a + b)) + n;
      acc *= half(e1 * (a + b) + a - b + 2 * n - 2);
      break;
    default:
      throw std::invalid_argument("family must be 1, 2 or 3");
  }
  return acc;
}

AppendixComparison appendix_phi_crosscheck(int family, int eps1, int eps2, int p, int N,
                                           const SystemParams& params, EnergyPair pair) {
  Rational u;
  for (const auto& r : u_roots(params)) {
    if (r.family == family && r.eps1 == eps1 && (family != 1 || r.eps2 == eps2)) u = r.u;
  }
  AppendixComparison c;
  c.appendix = appendix_phi(family, eps1, eps2, p, N, params);
  c.master = phi_eval(u, spectrum_from_phi(family, eps1, eps2, p, params), N, params, pair);
  c.diff = c.appendix - c.master;
  return c;
}

std::string appendix_diff_report(const SystemParams& params, int max_p) {
  std::ostringstream os;
  os << "family eps1 eps2 p N appendix master match ratio\n";
  for (int family = 1; family <= 3; ++family) {
    for (int e1 : {1, -1}) {
      for (int e2 : {1, -1}) {
        if (family != 1 && e2 == -1) continue;
        for (int p = 0; p <= max_p; ++p) {
          for (int N = 0; N <= p + 1; ++N) {
            const auto c = appendix_phi_crosscheck(family, e1, e2, p, N, params);
            os << family << ' ' << e1 << ' ' << (family == 1 ? e2 : 0) << ' ' << p << ' ' << N
               << ' ' << c.appendix << ' ' << c.master << ' ' << (c.matches() ? "yes" : "no")
               << ' ';
            if (c.master != 0 && c.appendix != 0) {
              os << c.appendix / c.master;
            } else {
              os << '-';
            }
            os << '\n';
          }
        }
      }
    }
  }
  return os.str();
}

Rational x_of_n(const Rational& u, int n) { return 4 * (n + u) * (n + u) - 1; }

Rational y0_of_n(const Rational& u, const Rational& H, int n, const SystemParams& p) {
  const Rational& a = p.alpha();
  const Rational& b = p.beta();
  const Rational nu = n + u;
  return H * (2 - a + b) * (a - b) * (2 + a - b) * (a + b) / (nu * nu - Rational(1, 4));
}

double rho_of_n(const Rational& u, int n, const SystemParams& p) {
  const double nu = to_double(n + u);
  const double beta = to_double(p.beta());
  const double inner = 6 * nu * (nu + 1) * std::pow(1 + 2 * nu, 2) * std::pow(beta, 9);
  return 1.0 / (2048.0 * std::sqrt(inner));
}

}  // namespace superint
