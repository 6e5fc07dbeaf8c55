#include "superint/params.hpp"

#include <stdexcept>

namespace superint {

SystemParams::SystemParams(Rational alpha, Rational beta, Rational omega,
                           OmegaConvention convention)
    : alpha_(std::move(alpha)),
      beta_(std::move(beta)),
      omega_(std::move(omega)),
      convention_(convention) {
  const Rational minus_half(-1, 2);
  if (alpha_ <= minus_half || beta_ <= minus_half) {
    throw std::invalid_argument("alpha and beta must exceed -1/2");
  }
  if (alpha_ == beta_) throw std::invalid_argument("alpha == beta leaves b undefined");
  if (omega_ <= 0) throw std::invalid_argument("omega must be positive");
  b_ = (alpha_ + beta_) / (beta_ - alpha_);
  if (superint::abs(b_) <= 1) {
    throw std::invalid_argument("|b| <= 1: b + cos 2phi vanishes inside the wedge (b = " +
                                b_.get_str() + ")");
  }
}

Rational SystemParams::harmonic() const {
  const Rational r = radial_rate();
  return r * r;
}

Rational SystemParams::radial_rate() const {
  return convention_ == OmegaConvention::kSpectral ? omega_ / 2 : omega_;
}

bool SystemParams::numeric_boundary_ok() const {
  return alpha_ > Rational(1, 2) && beta_ > Rational(1, 2);
}

std::string SystemParams::to_string() const {
  return "alpha=" + alpha_.get_str() + " beta=" + beta_.get_str() + " omega=" + omega_.get_str() +
         " convention=" + superint::to_string(convention_);
}

std::string to_string(OmegaConvention c) {
  return c == OmegaConvention::kSpectral ? "spectral" : "literal";
}

OmegaConvention parse_convention(const std::string& s) {
  if (s == "spectral") return OmegaConvention::kSpectral;
  if (s == "literal") return OmegaConvention::kLiteral;
  throw std::invalid_argument("unknown omega convention: " + s);
}

}  // namespace superint
