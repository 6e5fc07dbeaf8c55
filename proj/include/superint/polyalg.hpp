#pragma once

#include <optional>
#include <string>
#include <vector>

#include "superint/model.hpp"
#include "superint/quasipoly.hpp"

namespace superint {

/// Structure constants of
///   [X,Y] = Z, [X,Z] = b{X,Y} + f, [Y,Z] = -bY^2 + gX^3 + hX^2 + iX + j
/// with f, h, i, j polynomials in the central element H (stored as Poly in H).
struct AlgebraConstants {
  Rational b;
  Poly f;
  Rational g;
  Poly h, i, j;
};

/// The closed forms as printed (b = 16, g = -1024 omega^2, ...).
AlgebraConstants algebra_constants(const SystemParams& p);

/// Closed forms satisfied by this realization, with kappa the r^2
/// coefficient of H and A = a^2 - ab + b^2:
///   b = 4, f = (a+b)(a-b)(a-b+2)(a-b-2) H, g = -32 kappa,
///   h = 3H^2 + 16 kappa (3A - 4),
///   i = -4A H^2 - 24 kappa (a^2+b^2-4)(a-b)^2,
///   j = ((3/2)(a^2+b^2-4)(a-b)^2 + 4A) H^2 + 4 kappa (a-b+2)(a-b-2)(a-b)^2 (a^2+ab+b^2-4).
AlgebraConstants algebra_constants_derived(const SystemParams& p);

/// q-parameterized forms (f = 32 q8 H, ...) evaluated with the printed q's.
AlgebraConstants algebra_constants_qform(const SystemParams& p);

struct Generators {
  Op2D H, X, Y, Z;
};

/// X = (L1 - 1)/2, Y = L2/8, Z = [X, Y].
Generators make_generators(const IntegralBundle& bundle);

/// Same X, Z; Y multiplied by `factor` (negative control).
Generators scale_Y(const Generators& g, const Rational& factor);

/// sum_k c_k H^k as an operator.
Op2D central(const Poly& c, const Op2D& H);

struct RelationResidual {
  std::string name;
  Op2D residual;
  bool zero() const { return residual.is_zero(); }
  /// "order k: <leading term>" or "0".
  std::string summary() const;
};

/// [X,Y] - Z, [X,Z] - (b{X,Y} + f), [Y,Z] - (-bY^2 + gX^3 + hX^2 + iX + j).
std::vector<RelationResidual> verify_cubic_relations(const Generators& g,
                                                     const AlgebraConstants& c);

/// Fits b, f, g, h, i, j to the realization (H treated as the operator).
std::optional<AlgebraConstants> fit_algebra_constants(const Generators& g);

enum class CasimirForm {
  kPrinted,  // ... - f Y ...
  kDerived,  // ... - 2 f Y ...
};

/// K = Z^2 - b{X,Y^2} + b^2 Y^2 - (1 or 2) f Y + (g/2) X^4 + (2/3)(h + g b) X^3
///     + (-g b^2/6 + b h/3 + i) X^2 + 2 j X.
Op2D casimir_operator(const Generators& g, const AlgebraConstants& c, CasimirForm form);

struct CasimirResult {
  bool central = false;  // K = k0 + k1 H + k2 H^2 exactly
  Rational k0, k1, k2;
  Rational expected_k0, expected_k2;
  bool K2matches = false;
  bool K0matches = false;
  Op2D residual;  // K - (expected_k2 H^2 + expected_k0)
};

/// Printed K2 = 64((a^2+ab+b^2-2)(a-b)^4 + 8a^2 + 8b^2),
/// K0 = 2 omega^2 (a-b-2)^2 (a-b+2)^2 (a+b)^2 (a-b)^2.
Rational casimir_K2(const SystemParams& p);
Rational casimir_K0(const SystemParams& p);
/// Realization values: K2/64 and kappa (a-b-2)^2 (a-b+2)^2 (a+b)^2 (a-b)^2.
Rational casimir_K2_derived(const SystemParams& p);
Rational casimir_K0_derived(const SystemParams& p);

CasimirResult casimir_check(const Generators& g, const AlgebraConstants& c, CasimirForm form,
                            const Rational& expected_k2, const Rational& expected_k0);

struct QFormReport {
  bool f = false, h = false, i = false, j = false;
  bool all() const { return f && h && i && j; }
};

/// Compares the (alpha, beta) forms with the q forms, both as printed.
QFormReport q_form_crosscheck(const SystemParams& p);

/// Applies both sides of the two nontrivial relations to R_m (x) Phi_n and
/// compares the resulting QuasiPolys exactly. Returns the number of (m, n)
/// pairs checked; `failures` receives the mismatching pairs.
int matrix_element_shadow(const SystemParams& p, const Generators& g, const AlgebraConstants& c,
                          int max_index, std::vector<std::pair<int, int>>* failures);

/// Polynomial in H with coefficients listed by degree.
std::string central_to_string(const Poly& c);

}  // namespace superint
