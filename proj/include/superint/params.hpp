#pragma once

#include <string>

#include "superint/rational.hpp"

namespace superint {

/// How omega enters the Hamiltonian.
///
/// kSpectral: H = -Lap + (omega^2/4) r^2 + ..., so that the spectrum is
///   omega (2 + 2m + 2n + alpha + beta) and radial levels are omega (2m + C + 1).
/// kLiteral: H = -Lap + omega^2 r^2 + ..., whose levels are twice those values.
enum class OmegaConvention { kSpectral, kLiteral };

/// Model parameters (alpha, beta, omega) with b = (alpha + beta)/(beta - alpha).
///
/// Validated at construction: alpha, beta > -1/2, alpha != beta, |b| > 1 and
/// omega > 0. Throws std::invalid_argument otherwise.
class SystemParams {
 public:
  SystemParams(Rational alpha, Rational beta, Rational omega,
               OmegaConvention convention = OmegaConvention::kSpectral);

  const Rational& alpha() const { return alpha_; }
  const Rational& beta() const { return beta_; }
  const Rational& omega() const { return omega_; }
  const Rational& b() const { return b_; }
  OmegaConvention convention() const { return convention_; }

  /// Coefficient of r^2 in the Hamiltonian.
  Rational harmonic() const;
  /// sqrt(harmonic()), the Gaussian rate: radial states carry exp(-rate r^2 / 2).
  Rational radial_rate() const;

  /// True when the numeric finite-difference layer applies (alpha, beta > 1/2).
  bool numeric_boundary_ok() const;

  std::string to_string() const;

 private:
  Rational alpha_;
  Rational beta_;
  Rational omega_;
  Rational b_;
  OmegaConvention convention_;
};

std::string to_string(OmegaConvention c);
/// Parses "spectral" or "literal"; throws std::invalid_argument otherwise.
OmegaConvention parse_convention(const std::string& s);

}  // namespace superint
