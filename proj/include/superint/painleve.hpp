#pragma once

#include <array>
#include <string>
#include <vector>

#include "superint/params.hpp"
#include "superint/ratfn.hpp"
#include "superint/trigrat.hpp"

namespace superint {

/// Constants of the SD-I.a equation
///   y^2(1-y)^2 W''^2 + 4W'(yW'-W)^2 - 4W'^2(yW'-W)
///     + 4 q7 W'^2 + 4 q8 W' + 4 q9 (yW'-W) + 4 q10 = 0.
/// q1 = q4 = q5 = q6 = 0, q2 = 1, q3 = -1 throughout.
struct QConstants {
  Rational q1 = 0, q2 = 1, q3 = -1, q4 = 0, q5 = 0, q6 = 0;
  Rational q7, q8, q9, q10;
};

/// The four closed forms as printed.
QConstants q_constants(const SystemParams& p);

/// Constants for which the W obtained from T solves the equation above
/// (derived; see w_from_T). q8 and q9 trade places relative to the printed
/// list, the W'-coefficient flips the sign of its (2a^2+b^2)(a-b)^2 term and
/// q10 carries (a-b)^4 in place of (a-b)^2.
QConstants q_constants_derived(const SystemParams& p);

/// W(y) as printed:
///   (a-b)^2 (1-2y)/8 + (a+b)(a-b+2)(a-b-2)/(8(a-b)) + (a-b)^-2 d/dy log P_1^{-a-1,b-1}(1-2y).
RatFn w_explicit(const SystemParams& p);

/// W(y) obtained from T through T = -2W/(sin cos) - K/tan 2phi with
/// K = a^2 - ab + b^2 + 7/4 and y = (1 + cos 2phi)/2. Closed form:
///   (a-b)^2 (1-2y)/8 - (a+b)(a-b+2)(a-b-2)/(8(a-b)) + ab (a-b)^-2 d/dy log P_1(1-2y).
RatFn w_corrected(const SystemParams& p);

/// The same W computed directly from T (no closed form involved).
RatFn w_from_T(const SystemParams& p, const Rational& shift_constant = Rational(7, 4));

RatFn sd1_residual(const RatFn& W, const QConstants& q);

/// Solves for (q7, q8, q9, q10) making sd1_residual(W, q) vanish; false if
/// no such constants exist.
bool sd1_fit_constants(const RatFn& W, QConstants* out);

/// T - (-2W/(sin cos) - (a^2 - ab + b^2 + c)/tan 2phi) in the TrigRat ring,
/// with W evaluated at y = (1 - x)/2.
TrigRat t_w_difference(const SystemParams& p, const RatFn& W,
                       const Rational& shift_constant = Rational(7, 4));

struct GammaSet {
  Rational gamma1, gamma2, gamma3, gamma4;
  /// sqrt(2 gamma1) = |a - b + sign|.
  Rational sqrt_2gamma1;
  int sign = 1;
};

GammaSet gamma_set(const SystemParams& p, int sign);

/// Residuals (lhs - rhs) of the four parameter relations for -4q7 .. -4q10.
std::array<Rational, 4> pvi_relation_residuals(const QConstants& q, const GammaSet& g);

struct PviCheck {
  bool plus_branch = false;
  bool minus_branch = false;
  std::array<Rational, 4> plus_residuals;
  std::array<Rational, 4> minus_residuals;
};

/// The parameter relations label the (yW' - W) coefficient q8 and the W'
/// coefficient q9, the reverse of the SD1 labels used by q_constants_derived.
QConstants swap_q8_q9(const QConstants& q);

PviCheck pvi_parameter_check(const SystemParams& p, const QConstants& q);

}  // namespace superint
