// Acceptance run: one PASS/FAIL line per criterion, indented detail lines
// underneath. Criteria whose printed closed forms are known not to hold are
// listed in kExpectedFail with the reason; the exit status is 0 iff every
// outcome matches its expectation.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "superint/model.hpp"
#include "superint/numeric.hpp"
#include "superint/oscillator.hpp"
#include "superint/painleve.hpp"
#include "superint/polyalg.hpp"
#include "superint/states.hpp"
#include "superint/suites.hpp"

using namespace superint;

namespace {

constexpr std::uint64_t kSeed = 20240601;
constexpr double kAngularTol = 1e-3;
constexpr double kRadialTol = 1e-4;
constexpr double kCombinedTol = 2e-3;
constexpr double kNumericSeconds = 60;

const std::map<int, const char*> kExpectedFail = {
    {5, "printed W and q do not solve SD1 and the first PVI relation fails off d = -1"},
    {6, "printed b, f, g, h, i, j are not the constants of X = (L1-1)/2, Y = L2/8"},
    {7, "printed energy pair closes at E^2 = 2 w^2 (2n+2u-1)^2, not at E3"},
};

struct Outcome {
  bool pass = true;
  std::vector<std::string> details;
  void check(bool ok, const std::string& what) {
    pass = pass && ok;
    details.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
  }
  void note(bool ok, const std::string& what) {
    details.push_back(std::string(ok ? "ok   " : "no   ") + "[derived] " + what);
  }
};

SystemParams fixed() { return SystemParams(1, 2, 1); }

std::vector<SystemParams> with_random() {
  std::vector<SystemParams> out{fixed()};
  for (const auto& p : random_instances(kSeed, 5, OmegaConvention::kSpectral)) out.push_back(p);
  return out;
}

std::vector<SystemParams> random_only() {
  return random_instances(kSeed, 5, OmegaConvention::kSpectral);
}

Outcome criterion1() {
  Outcome o;
  for (const auto& p : with_random()) {
    const IntegralBundle B = build_L2(p);
    o.check(op_commutator(B.H, B.L1).is_zero() && op_commutator(B.H, B.L2).is_zero(),
            "[H,L1] = [H,L2] = 0 at " + p.to_string());
  }
  return o;
}

Outcome criterion2() {
  Outcome o;
  for (const auto& p : with_random()) {
    const CConstants c = integral_constants(p);
    bool first = true;
    for (const auto& r : first_order_residuals(p, g_functions(p, c), c)) first = first && r.is_zero();
    const LaurentR g0 = integrate_G0(p, c);
    const auto [gr, gt] = g0_equation_residuals(p, c, g0);
    o.check(first && gr.is_zero() && gt.is_zero() && g0_cross_derivative(p, c).is_zero(),
            "4 first-order equations, G0r, G0t, cross-derivative at " + p.to_string());
  }
  return o;
}

Outcome criterion3() {
  Outcome o;
  for (const auto& p : with_random()) {
    const CConstants c = integral_constants(p);
    const Rational A = p.alpha() * p.alpha() - p.alpha() * p.beta() + p.beta() * p.beta();
    o.check(c.c11 == 0 && c.c12 == 8 * A + 18 && nonlinear_T_residual(potential_T(p), c).is_zero(),
            "tan 2phi equation, c11 = 0, c12 = 8A + 18 at " + p.to_string());
  }
  return o;
}

Outcome criterion4() {
  Outcome o;
  const SystemParams p = fixed();
  const Op2D H = build_hamiltonian(p);
  const Op2D L1 = build_L1(p);
  for (int n = 0; n <= 3; ++n) {
    const Rational c = separation_constant(n, p);
    const QuasiPoly phi = angular_phi(n, p);
    o.check(quasi_equal(op_apply(L1, phi), phi.scaled(c * c)),
            "L1 Phi_" + std::to_string(n) + " = " + Rational(c * c).get_str() + " Phi_" + std::to_string(n));
    for (int m = 0; m <= 3; ++m) {
      const QuasiPoly psi = product_state(m, n, p);
      const Rational e = energy(m, n, p);
      o.check(hamiltonian_eigenvalue(m, n, p) == e && quasi_equal(op_apply(H, psi), psi.scaled(e)),
              "H psi_" + std::to_string(m) + std::to_string(n) + " = " + e.get_str() + " psi");
    }
  }
  return o;
}

Outcome criterion5() {
  Outcome o;
  for (const auto& p : with_random()) {
    const std::string at = " at " + p.to_string();
    o.check(sd1_residual(w_explicit(p), q_constants(p)).is_zero(), "SD1(printed W, printed q) = 0" + at);
    o.check(t_w_difference(p, w_explicit(p)).is_zero(), "T-W consistency, printed W" + at);
    const PviCheck pvi = pvi_parameter_check(p, q_constants(p));
    o.check(pvi.plus_branch || pvi.minus_branch, "a gamma1 branch closes all four relations, printed q" + at);
    o.note(sd1_residual(w_corrected(p), q_constants_derived(p)).is_zero(),
           "SD1(derived W, derived q) = 0" + at);
    o.note(t_w_difference(p, w_corrected(p)).is_zero(), "T-W consistency, derived W" + at);
    const PviCheck d = pvi_parameter_check(p, swap_q8_q9(q_constants_derived(p)));
    o.note(d.plus_branch || d.minus_branch, "a gamma1 branch closes all four relations, derived q" + at);
  }
  return o;
}

Outcome criterion6() {
  Outcome o;
  const SystemParams p = fixed();
  const Generators g = make_generators(build_L2(p));
  const auto printed = verify_cubic_relations(g, algebra_constants(p));
  for (const auto& r : printed) o.check(r.zero(), "printed constants: " + r.name + " = 0");
  const CasimirResult kp =
      casimir_check(g, algebra_constants(p), CasimirForm::kPrinted, casimir_K2(p), casimir_K0(p));
  o.check(kp.residual.is_zero(), "K - (K2 H^2 + K0) = 0 with the printed Casimir");
  o.check(casimir_K2(p) == 2880 && casimir_K0(p) == 162, "K2 = 2880, K0 = 162 from the closed forms");
  for (const auto& q : random_only()) {
    o.check(q_form_crosscheck(q).all(), "q-form constants agree at " + q.to_string());
  }
  const AlgebraConstants d = algebra_constants_derived(p);
  bool zero = true;
  for (const auto& r : verify_cubic_relations(g, d)) zero = zero && r.zero();
  o.note(zero, "derived constants (b=4, f=9H, g=-8, h=3H^2+20, i=-12H^2-6, j=27/2 H^2-9): all relations = 0");
  const CasimirResult kd = casimir_check(g, d, CasimirForm::kDerived, casimir_K2_derived(p),
                                         casimir_K0_derived(p));
  o.note(kd.residual.is_zero(), "K = " + kd.k2.get_str() + " H^2 + " + kd.k0.get_str() + " (-2fY form)");
  const auto fit = fit_algebra_constants(g);
  o.note(fit && fit->b == d.b && fit->f == d.f && fit->g == d.g && fit->h == d.h && fit->i == d.i &&
             fit->j == d.j,
         "exact fit reproduces the derived closed forms");
  std::vector<std::pair<int, int>> failures;
  matrix_element_shadow(p, g, d, 2, &failures);
  o.note(failures.empty(), "relations on R_m (x) Phi_n, m, n <= 2");
  return o;
}

Outcome criterion7() {
  Outcome o;
  const SystemParams p = fixed();
  const Rational u3 = (1 + p.alpha() + p.beta()) / 2;
  bool corrected = true;
  for (int pp = 0; pp <= 6; ++pp) {
    const Rational E = spectrum_from_phi(3, 1, 1, pp, p);
    const std::string at = " (p=" + std::to_string(pp) + ", E3=" + E.get_str() + ")";
    o.check(E == energy(0, pp, p), "E3 in the energy enumeration" + at);
    o.check(phi_eval(u3, E, 0, p, EnergyPair::kPrinted) == 0, "Phi(u3, E3, 0) = 0" + at);
    o.check(phi_eval(u3, E, pp + 1, p, EnergyPair::kPrinted) == 0, "Phi(u3, E3, p+1) = 0" + at);
    o.check(positivity_scan(u3, E, pp, p, EnergyPair::kPrinted).admissible, "Phi > 0 for n = 1..p" + at);
    corrected = corrected && phi_eval(u3, E, 0, p) == 0 && phi_eval(u3, E, pp + 1, p) == 0 &&
                positivity_scan(u3, E, pp, p).admissible;
  }
  o.note(corrected, "energy pair (E +- w)/(2w): closure and positivity for p = 0..6");
  const std::string report = appendix_diff_report(p, 6);
  o.check(!report.empty() && report == appendix_diff_report(p, 6),
          "appendix diff report generated and stable (" +
              std::to_string(std::count(report.begin(), report.end(), '\n') - 1) + " rows)");
  return o;
}

Outcome criterion8() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const numeric::SpectrumReport r = numeric::compare_spectrum(fixed(), 3);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  char buf[200];
  std::snprintf(buf, sizeof buf, "angular max rel %.2e <= %.0e", r.max_angular_rel, kAngularTol);
  o.check(r.max_angular_rel <= kAngularTol, buf);
  std::snprintf(buf, sizeof buf, "radial max rel %.2e <= %.0e", r.max_radial_rel, kRadialTol);
  o.check(r.max_radial_rel <= kRadialTol, buf);
  std::snprintf(buf, sizeof buf, "combined max rel %.2e <= %.0e (m+n <= 2)", r.max_combined_rel,
                kCombinedTol);
  o.check(r.max_combined_rel <= kCombinedTol, buf);
  std::snprintf(buf, sizeof buf, "runtime %.2f s <= %.0f s", secs, kNumericSeconds);
  o.check(secs <= kNumericSeconds, buf);
  return o;
}

Outcome criterion9() {
  Outcome o;
  const SystemParams p = fixed();
  BuildOptions opts;
  opts.c12_override = integral_constants(p).c12 + 1;
  bool broke = false;
  try {
    const IntegralBundle B = build_L2(p, opts);
    broke = !op_commutator(B.H, B.L2).is_zero();
  } catch (const IntegrationError& e) {
    broke = true;
    o.details.push_back(std::string("     c12 + 1: ") + e.what());
  }
  o.check(broke, "c12 + 1 breaks criterion 1");
  o.check(t_w_difference(p, w_corrected(p)).is_zero() &&
              !t_w_difference(p, w_corrected(p), Rational(3, 4)).is_zero(),
          "7/4 -> 3/4 breaks T-W consistency");
  const Generators g = make_generators(build_L2(p));
  const auto res = verify_cubic_relations(scale_Y(g, 2), algebra_constants_derived(p));
  o.check(!res[0].zero() && op_equal(res[0].residual, g.Z), "Y -> 2Y leaves residual Z in [X,Y] - Z");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"exact commutation", criterion1},     {"determining equations", criterion2},
      {"nonlinear T equation", criterion3},  {"eigen-identities", criterion4},
      {"Painleve block", criterion5},        {"cubic algebra", criterion6},
      {"oscillator block", criterion7},      {"numeric cross-check", criterion8},
      {"negative controls", criterion9},
  };
  int mismatches = 0;
  for (size_t k = 0; k < criteria.size(); ++k) {
    const int id = static_cast<int>(k) + 1;
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.details.push_back(std::string("FAIL exception: ") + e.what());
    }
    const auto expected = kExpectedFail.find(id);
    const bool expect_pass = expected == kExpectedFail.end();
    std::printf("criterion %d: %s  %s%s\n", id, o.pass ? "PASS" : "FAIL", criteria[k].first.c_str(),
                expect_pass ? "" : (o.pass ? "  (UNEXPECTED PASS)" : "  (expected)"));
    if (!expect_pass) std::printf("    reason: %s\n", expected->second);
    for (const auto& d : o.details) std::printf("    %s\n", d.c_str());
    if (o.pass != expect_pass) ++mismatches;
  }
  std::printf("summary: %d outcome(s) differ from expectations\n", mismatches);
  return mismatches == 0 ? 0 : 1;
}
