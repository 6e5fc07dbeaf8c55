#pragma once

#include <string>
#include <vector>

#include "superint/params.hpp"

namespace superint::numeric {

struct Grid1D {
  std::vector<double> nodes;  // interior nodes only
  double spacing = 0;
  double lo = 0, hi = 0;
};

Grid1D uniform_interior_grid(double lo, double hi, int n);

struct Tridiagonal {
  std::vector<double> diag;
  std::vector<double> off;  // off[i] couples i and i+1
  int size() const { return static_cast<int>(diag.size()); }
};

struct EigResult {
  std::vector<double> eigenvalues;   // finest mesh
  std::vector<std::vector<double>> levels;  // per mesh level, coarse to fine
  std::vector<int> mesh_sizes;
  std::vector<double> extrapolated;
  std::string warning;
};

/// k smallest eigenvalues by Sturm-count bisection, bracket width <= tol.
std::vector<double> eig_tridiagonal(const Tridiagonal& m, int k, double tol = 1e-12);

/// -d^2/dphi^2 + V(phi) on (0, pi/2), Dirichlet. Requires alpha, beta > 1/2.
Tridiagonal discretize_angular(const SystemParams& p, int n);

/// -u'' + ((C^2 - 1/4)/r^2 + kappa r^2) u on (0, rmax), from R = u / sqrt(r).
Tridiagonal discretize_radial(double C, double kappa, int n, double rmax);

/// Three-level extrapolation assuming error c1 h^2 + c2 h^4.
double richardson3(double coarse, double mid, double fine);

/// Angular eigenvalues approximating (2n + a + b + 1)^2, n < k.
EigResult angular_spectrum(const SystemParams& p, int k, int base_n = 400);

/// Radial eigenvalues approximating 2 sqrt(kappa) (2m + C + 1), m < k.
EigResult radial_spectrum(double C, double kappa, int k, int base_n = 400);

/// Default cutoff: turning point of the highest level plus a Gaussian tail margin.
double default_rmax(double C, double kappa, int k);

struct SpectrumRow {
  int m = 0, n = 0;
  double exact = 0;
  double numeric = 0;
  double rel_error = 0;
  int mesh_levels = 0;
};

struct SpectrumReport {
  std::vector<double> angular_exact, angular_numeric;
  std::vector<double> radial_exact, radial_numeric;  // at C = C_0
  std::vector<SpectrumRow> rows;                     // m + n < levels
  double max_angular_rel = 0, max_radial_rel = 0, max_combined_rel = 0;
  double seconds = 0;
};

/// Combines the numeric angular C_n with radial solves at those C_n and
/// tabulates against omega(2 + 2m + 2n + a + b).
SpectrumReport compare_spectrum(const SystemParams& p, int levels);

std::string spectrum_csv(const SpectrumReport& r);

}  // namespace superint::numeric
