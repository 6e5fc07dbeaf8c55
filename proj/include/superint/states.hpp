#pragma once

#include <iosfwd>
#include <vector>

#include "superint/orthopoly.hpp"
#include "superint/params.hpp"
#include "superint/quasipoly.hpp"

namespace superint {

/// C_n = 2n + alpha + beta + 1; L1 has eigenvalue C_n^2 on Phi_n.
Rational separation_constant(int n, const SystemParams& p);

/// R_m^C = y^{C/2} e^{-y/2} L_m^C(y) with y = rate r^2, rate = sqrt(kappa).
/// The constant rate^{C/2} is dropped.
QuasiPoly radial_state(int m, const Rational& C, const SystemParams& p);

/// Psi_n = cos^{alpha+3/2} sin^{beta-1/2} P_n^{alpha+1, beta-1}(x), with
/// cos^2 = (1-x)/2 and sin^2 = (1+x)/2 (constant factors dropped).
QuasiPoly angular_psi(int n, const SystemParams& p);

/// xi'/xi for xi = cos^{-alpha-1/2} sin^{beta-1/2} (b + cos 2phi).
TrigRat seed_log_derivative(const SystemParams& p);

/// A = d/dphi - xi'/xi.
Op2D factor_A(const SystemParams& p);

/// Phi_n = A Psi_n.
QuasiPoly angular_phi(int n, const SystemParams& p);

/// R_m^{C_n} (r) Phi_n (phi).
QuasiPoly product_state(int m, int n, const SystemParams& p);

/// X_n = Phi_n / G_x with G_x = (1-x)^{alpha/2+1/4} (1+x)^{beta/2+1/4} / (x-b).
/// Throws NonClosureError if the quotient is not a polynomial.
Poly xjacobi(int n, const SystemParams& p);

/// T^{alpha,beta} f = 4(x^2-1) f'' + 4(beta-alpha)(1-bx)/(b-x) ((x-b+2/(alpha-beta)) f' - f)
///                    + (alpha+beta+1)^2 f.
RatFn t_operator_apply(const Poly& f, const SystemParams& p);

/// Eigenvalue of build_hamiltonian on product_state(m, n): 2 sqrt(kappa)(2+2m+2n+alpha+beta).
Rational hamiltonian_eigenvalue(int m, int n, const SystemParams& p);

/// Writes "r,phi,psi" rows for every grid pair.
void write_wavefunction_csv(std::ostream& os, const QuasiPoly& f, const std::vector<double>& rs,
                            const std::vector<double>& phis);

}  // namespace superint
