#include "superint/numeric.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "superint/states.hpp"

namespace superint::numeric {

Grid1D uniform_interior_grid(double lo, double hi, int n) {
  Grid1D g;
  g.lo = lo;
  g.hi = hi;
  g.spacing = (hi - lo) / (n + 1);
  g.nodes.resize(n);
  for (int i = 0; i < n; ++i) g.nodes[i] = lo + (i + 1) * g.spacing;
  return g;
}

namespace {

// Number of eigenvalues strictly below x.
int sturm_count(const Tridiagonal& m, double x) {
  int count = 0;
  double q = 1.0;
  for (int i = 0; i < m.size(); ++i) {
    const double off2 = i == 0 ? 0.0 : m.off[i - 1] * m.off[i - 1];
    q = m.diag[i] - x - (i == 0 ? 0.0 : off2 / q);
    if (q == 0.0) q = -1e-300;
    if (q < 0) ++count;
  }
  return count;
}

Tridiagonal from_potential(const Grid1D& g, const std::vector<double>& v) {
  const double inv_h2 = 1.0 / (g.spacing * g.spacing);
  Tridiagonal m;
  m.diag.resize(g.nodes.size());
  m.off.assign(g.nodes.size() - 1, -inv_h2);
  for (size_t i = 0; i < g.nodes.size(); ++i) m.diag[i] = 2 * inv_h2 + v[i];
  return m;
}

template <class Build>
EigResult three_levels(int k, int base_n, Build build) {
  EigResult r;
  for (int level = 0; level < 3; ++level) {
    const int n = base_n << level;
    r.mesh_sizes.push_back(n);
    r.levels.push_back(eig_tridiagonal(build(n), k));
  }
  r.eigenvalues = r.levels.back();
  for (int i = 0; i < k; ++i) {
    r.extrapolated.push_back(richardson3(r.levels[0][i], r.levels[1][i], r.levels[2][i]));
  }
  return r;
}

}  // namespace

std::vector<double> eig_tridiagonal(const Tridiagonal& m, int k, double tol) {
  if (k < 1 || k > m.size()) throw std::invalid_argument("eig_tridiagonal: k out of range");
  // Gershgorin bounds.
  double lo = m.diag[0], hi = m.diag[0];
  for (int i = 0; i < m.size(); ++i) {
    const double r = (i > 0 ? std::abs(m.off[i - 1]) : 0.0) +
                     (i + 1 < m.size() ? std::abs(m.off[i]) : 0.0);
    lo = std::min(lo, m.diag[i] - r);
    hi = std::max(hi, m.diag[i] + r);
  }
  std::vector<double> out;
  for (int j = 0; j < k; ++j) {
    double a = lo, b = hi;
    while (b - a > tol) {
      const double mid = 0.5 * (a + b);
      if (mid <= a || mid >= b) break;
      if (sturm_count(m, mid) > j) {
        b = mid;
      } else {
        a = mid;
      }
    }
    out.push_back(0.5 * (a + b));
  }
  return out;
}

Tridiagonal discretize_angular(const SystemParams& p, int n) {
  if (n < 64) throw std::invalid_argument("discretize_angular: need at least 64 nodes");
  if (!p.numeric_boundary_ok()) {
    throw std::invalid_argument(
        "numeric angular solve needs alpha, beta > 1/2; use the exact checks instead");
  }
  const Grid1D g = uniform_interior_grid(0.0, std::numbers::pi / 2, n);
  const double a2 = to_double(p.alpha() * p.alpha()) - 0.25;
  const double b2 = to_double(p.beta() * p.beta()) - 0.25;
  const double b = to_double(p.b());
  std::vector<double> v(g.nodes.size());
  for (size_t i = 0; i < g.nodes.size(); ++i) {
    const double phi = g.nodes[i];
    const double c = std::cos(phi), s = std::sin(phi);
    const double x = -std::cos(2 * phi);
    v[i] = a2 / (c * c) + b2 / (s * s) + (8 - 8 * b * x) / ((b - x) * (b - x));
  }
  return from_potential(g, v);
}

Tridiagonal discretize_radial(double C, double kappa, int n, double rmax) {
  if (n < 64) throw std::invalid_argument("discretize_radial: need at least 64 nodes");
  const Grid1D g = uniform_interior_grid(0.0, rmax, n);
  std::vector<double> v(g.nodes.size());
  for (size_t i = 0; i < g.nodes.size(); ++i) {
    const double r = g.nodes[i];
    v[i] = (C * C - 0.25) / (r * r) + kappa * r * r;
  }
  return from_potential(g, v);
}

double richardson3(double coarse, double mid, double fine) {
  const double r1 = (4 * mid - coarse) / 3;
  const double r2 = (4 * fine - mid) / 3;
  return (16 * r2 - r1) / 15;
}

EigResult angular_spectrum(const SystemParams& p, int k, int base_n) {
  return three_levels(k, base_n, [&](int n) { return discretize_angular(p, n); });
}

double default_rmax(double C, double kappa, int k) {
  const double top = 2 * std::sqrt(kappa) * (2 * (k - 1) + C + 1);
  // Past the turning point the solution decays like exp(-sqrt(kappa) r^2 / 2);
  // 16 / kappa^(1/4) takes it well below 1e-14.
  return std::sqrt(top / kappa) + 16 / std::pow(kappa, 0.25);
}

EigResult radial_spectrum(double C, double kappa, int k, int base_n) {
  const double rmax = default_rmax(C, kappa, k);
  EigResult r = three_levels(k, base_n, [&](int n) { return discretize_radial(C, kappa, n, rmax); });
  const auto wide = eig_tridiagonal(discretize_radial(C, kappa, 2 * base_n, 1.25 * rmax), k);
  for (int i = 0; i < k; ++i) {
    // Same spacing in both is not required; compare against the mid level.
    if (std::abs(wide[i] - r.levels[1][i]) > 1e-3 * std::abs(r.levels[1][i]) + 1e-2) {
      r.warning = "radial cutoff may be too small";
    }
  }
  return r;
}

SpectrumReport compare_spectrum(const SystemParams& p, int levels) {
  const auto start = std::chrono::steady_clock::now();
  SpectrumReport rep;
  const double a = to_double(p.alpha());
  const double b = to_double(p.beta());
  const double kappa = to_double(p.harmonic());
  const double rate = 2 * std::sqrt(kappa);
  const EigResult ang = angular_spectrum(p, levels);
  for (int n = 0; n < levels; ++n) {
    const double exact = std::pow(2 * n + a + b + 1, 2);
    rep.angular_exact.push_back(exact);
    rep.angular_numeric.push_back(ang.extrapolated[n]);
    rep.max_angular_rel = std::max(rep.max_angular_rel, std::abs(ang.extrapolated[n] - exact) / exact);
  }
  const double c0 = a + b + 1;
  const EigResult rad0 = radial_spectrum(c0, kappa, levels);
  for (int m = 0; m < levels; ++m) {
    const double exact = rate * (2 * m + c0 + 1);
    rep.radial_exact.push_back(exact);
    rep.radial_numeric.push_back(rad0.extrapolated[m]);
    rep.max_radial_rel = std::max(rep.max_radial_rel, std::abs(rad0.extrapolated[m] - exact) / exact);
  }
  for (int n = 0; n < levels; ++n) {
    const double cn = std::sqrt(ang.extrapolated[n]);
    const EigResult rad = radial_spectrum(cn, kappa, levels - n);
    for (int m = 0; m + n < levels; ++m) {
      SpectrumRow row;
      row.m = m;
      row.n = n;
      row.exact = to_double(hamiltonian_eigenvalue(m, n, p));
      row.numeric = rad.extrapolated[m];
      row.rel_error = std::abs(row.numeric - row.exact) / std::abs(row.exact);
      row.mesh_levels = 3;
      rep.max_combined_rel = std::max(rep.max_combined_rel, row.rel_error);
      rep.rows.push_back(row);
    }
  }
  std::sort(rep.rows.begin(), rep.rows.end(), [](const SpectrumRow& x, const SpectrumRow& y) {
    return std::tie(x.m, x.n) < std::tie(y.m, y.n);
  });
  rep.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

std::string spectrum_csv(const SpectrumReport& r) {
  std::ostringstream os;
  os.precision(12);
  os << "m,n,E_exact,E_numeric,rel_error,mesh_levels\n";
  for (const auto& row : r.rows) {
    os << row.m << ',' << row.n << ',' << row.exact << ',' << row.numeric << ','
       << row.rel_error << ',' << row.mesh_levels << '\n';
  }
  return os.str();
}

}  // namespace superint::numeric
