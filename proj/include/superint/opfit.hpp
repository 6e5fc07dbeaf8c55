#pragma once

#include <optional>
#include <vector>

#include "superint/op2d.hpp"

namespace superint {

/// Finds rationals c_k with target = sum_k c_k basis_k exactly, or nullopt.
///
/// Coefficients are sampled at a handful of rational x to build a linear
/// system; a candidate solution is then confirmed by exact operator
/// comparison, so a returned value is always a certificate.
std::optional<std::vector<Rational>> fit_operator(const Op2D& target,
                                                  const std::vector<Op2D>& basis);

/// Solves M c = v by Gaussian elimination over Q. Returns nullopt when the
/// system is inconsistent; free variables are set to zero.
std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> m,
                                                  std::vector<Rational> v);

}  // namespace superint
