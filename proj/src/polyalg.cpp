#include "superint/polyalg.hpp"

#include <sstream>

#include "superint/opfit.hpp"
#include "superint/painleve.hpp"
#include "superint/states.hpp"

namespace superint {

namespace {

Rational sq(const Rational& a) { return a * a; }

struct Shorthand {
  Rational a, b, d, s, A, kappa, w2;
  explicit Shorthand(const SystemParams& p)
      : a(p.alpha()),
        b(p.beta()),
        d(p.alpha() - p.beta()),
        s(p.alpha() + p.beta()),
        A(a * a - a * b + b * b),
        kappa(p.harmonic()),
        w2(p.omega() * p.omega()) {}
};

}  // namespace

AlgebraConstants algebra_constants(const SystemParams& p) {
  const Shorthand v(p);
  AlgebraConstants c;
  c.b = 16;
  c.f = Poly{0, 2 * v.s * v.d * (v.d + 2) * (v.d - 2)};
  c.g = -1024 * v.w2;
  c.h = Poly{256 * v.w2 * (3 * v.A - 4), 0, 48};
  c.i = Poly{-192 * v.w2 * (v.a * v.a + v.b * v.b - 4) * sq(v.d), 0, -32 * v.A};
  c.j = Poly{16 * v.w2 * (v.d + 2) * (v.d - 2) * sq(v.d) * (v.a * v.a + v.a * v.b + v.b * v.b - 4),
             0, 6 * (v.a * v.a + v.b * v.b - 4) * sq(v.d) + 16 * v.A};
  return c;
}

AlgebraConstants algebra_constants_derived(const SystemParams& p) {
  const Shorthand v(p);
  AlgebraConstants c;
  c.b = 4;
  c.f = Poly{0, v.s * v.d * (v.d + 2) * (v.d - 2)};
  c.g = -32 * v.kappa;
  c.h = Poly{16 * v.kappa * (3 * v.A - 4), 0, 3};
  c.i = Poly{-24 * v.kappa * (v.a * v.a + v.b * v.b - 4) * sq(v.d), 0, -4 * v.A};
  c.j = Poly{4 * v.kappa * (v.d + 2) * (v.d - 2) * sq(v.d) * (v.a * v.a + v.a * v.b + v.b * v.b - 4),
             0, Rational(3, 2) * (v.a * v.a + v.b * v.b - 4) * sq(v.d) + 4 * v.A};
  return c;
}

AlgebraConstants algebra_constants_qform(const SystemParams& p) {
  const QConstants q = q_constants(p);
  const Rational w2 = p.omega() * p.omega();
  AlgebraConstants c;
  c.b = 16;
  c.f = Poly{0, 32 * q.q8};
  c.g = -1024 * w2;
  c.h = Poly{-512 * w2 * (6 * q.q7 + 5), 0, 48};
  c.i = Poly{-512 * w2 * (3 + 8 * q.q7 - 2 * q.q8 - 4 * q.q9), 0, 64 * (2 * q.q7 + 1)};
  const Rational t = 1 + 4 * q.q7 - 2 * q.q8 - 4 * q.q9;
  c.j = Poly{-256 * w2 * (t + 4 * q.q10), 0, 16 * t};
  return c;
}

Generators make_generators(const IntegralBundle& bundle) {
  Generators g;
  g.H = bundle.H;
  g.X = (bundle.L1 - Op2D::identity()) * Rational(1, 2);
  g.Y = bundle.L2 * Rational(1, 8);
  g.Z = op_commutator(g.X, g.Y);
  return g;
}

Generators scale_Y(const Generators& g, const Rational& factor) {
  Generators out = g;
  out.Y = g.Y * factor;
  return out;
}

Op2D central(const Poly& c, const Op2D& H) {
  Op2D out;
  Op2D power = Op2D::identity();
  for (int k = 0; k <= c.degree(); ++k) {
    if (k > 0) power = power * H;
    if (c.coeff(k) != 0) out += power * c.coeff(k);
  }
  return out;
}

std::string RelationResidual::summary() const {
  if (residual.is_zero()) return "0";
  const int ord = residual.order();
  for (const auto& [idx, c] : residual.terms()) {
    if (idx.order() != ord) continue;
    std::ostringstream os;
    os << "order " << ord << ": (" << c.to_string() << ") dr^" << idx.dr << " dphi^" << idx.dphi;
    std::string s = os.str();
    if (s.size() > 240) s = s.substr(0, 240) + "...";
    return s;
  }
  return "nonzero";
}

std::vector<RelationResidual> verify_cubic_relations(const Generators& g,
                                                     const AlgebraConstants& c) {
  std::vector<RelationResidual> out;
  const Op2D XY = op_commutator(g.X, g.Y);
  out.push_back({"[X,Y] - Z", XY - g.Z});
  const Op2D XZ = op_commutator(g.X, g.Z);
  out.push_back({"[X,Z] - (b{X,Y} + f)",
                 XZ - op_anticommutator(g.X, g.Y) * c.b - central(c.f, g.H)});
  const Op2D YZ = op_commutator(g.Y, g.Z);
  if (YZ.order() > 8) {
    throw std::runtime_error("[Y,Z] exceeds the order bound 8 (order " +
                             std::to_string(YZ.order()) + ")");
  }
  const Op2D X2 = g.X * g.X;
  Op2D rhs = g.Y * g.Y * (-c.b) + X2 * g.X * c.g + central(c.h, g.H) * X2 +
             central(c.i, g.H) * g.X + central(c.j, g.H);
  out.push_back({"[Y,Z] - (-bY^2 + gX^3 + hX^2 + iX + j)", YZ - rhs});
  return out;
}

std::optional<AlgebraConstants> fit_algebra_constants(const Generators& g) {
  const Op2D I = Op2D::identity();
  const Op2D H2 = g.H * g.H;
  const Op2D X2 = g.X * g.X;
  const Op2D XZ = op_commutator(g.X, g.Z);
  auto s1 = fit_operator(XZ, {op_anticommutator(g.X, g.Y), I, g.H, H2});
  if (!s1) return std::nullopt;
  const Op2D YZ = op_commutator(g.Y, g.Z);
  auto s2 = fit_operator(YZ, {g.Y * g.Y, X2 * g.X, X2, H2 * X2, g.H * X2, g.X, g.H * g.X,
                              H2 * g.X, I, g.H, H2});
  if (!s2) return std::nullopt;
  const auto& a = *s1;
  const auto& b = *s2;
  AlgebraConstants c;
  c.b = a[0];
  c.f = Poly{a[1], a[2], a[3]};
  if (-b[0] != c.b) return std::nullopt;
  c.g = b[1];
  c.h = Poly{b[2], b[4], b[3]};
  c.i = Poly{b[5], b[6], b[7]};
  c.j = Poly{b[8], b[9], b[10]};
  return c;
}

Op2D casimir_operator(const Generators& g, const AlgebraConstants& c, CasimirForm form) {
  const Op2D X2 = g.X * g.X;
  const Op2D Y2 = g.Y * g.Y;
  const Rational& b = c.b;
  const Op2D h = central(c.h, g.H);
  const Op2D i = central(c.i, g.H);
  const Op2D j = central(c.j, g.H);
  const Rational fy = form == CasimirForm::kPrinted ? Rational(-1) : Rational(-2);
  Op2D K = g.Z * g.Z - op_anticommutator(g.X, Y2) * b + Y2 * (b * b);
  K += central(c.f, g.H) * g.Y * fy;
  K += X2 * X2 * (c.g / 2);
  K += (h + Op2D(c.g * b)) * X2 * g.X * Rational(2, 3);
  K += (Op2D(-c.g * b * b / 6) + h * (b / 3) + i) * X2;
  K += j * g.X * Rational(2);
  return K;
}

Rational casimir_K2(const SystemParams& p) {
  const Shorthand v(p);
  return 64 * ((v.a * v.a + v.a * v.b + v.b * v.b - 2) * sq(sq(v.d)) + 8 * v.a * v.a +
               8 * v.b * v.b);
}

Rational casimir_K0(const SystemParams& p) {
  const Shorthand v(p);
  return 2 * v.w2 * sq(v.d - 2) * sq(v.d + 2) * sq(v.s) * sq(v.d);
}

Rational casimir_K2_derived(const SystemParams& p) { return casimir_K2(p) / 64; }

Rational casimir_K0_derived(const SystemParams& p) {
  const Shorthand v(p);
  return v.kappa * sq(v.d - 2) * sq(v.d + 2) * sq(v.s) * sq(v.d);
}

CasimirResult casimir_check(const Generators& g, const AlgebraConstants& c, CasimirForm form,
                            const Rational& expected_k2, const Rational& expected_k0) {
  CasimirResult r;
  r.expected_k2 = expected_k2;
  r.expected_k0 = expected_k0;
  const Op2D K = casimir_operator(g, c, form);
  const Op2D H2 = g.H * g.H;
  auto fit = fit_operator(K, {Op2D::identity(), g.H, H2});
  if (fit) {
    r.central = true;
    r.k0 = (*fit)[0];
    r.k1 = (*fit)[1];
    r.k2 = (*fit)[2];
  }
  r.residual = K - H2 * expected_k2 - Op2D(expected_k0);
  r.K2matches = r.central && r.k1 == 0 && r.k2 == expected_k2;
  r.K0matches = r.central && r.k1 == 0 && r.k0 == expected_k0;
  return r;
}

QFormReport q_form_crosscheck(const SystemParams& p) {
  const AlgebraConstants a = algebra_constants(p);
  const AlgebraConstants q = algebra_constants_qform(p);
  QFormReport r;
  r.f = a.f == q.f;
  r.h = a.h == q.h;
  r.i = a.i == q.i;
  r.j = a.j == q.j;
  return r;
}

int matrix_element_shadow(const SystemParams& p, const Generators& g, const AlgebraConstants& c,
                          int max_index, std::vector<std::pair<int, int>>* failures) {
  auto apply_central = [&g](const Poly& poly, const QuasiPoly& f) {
    QuasiPoly acc = f.scaled(0);
    QuasiPoly power = f;
    for (int k = 0; k <= poly.degree(); ++k) {
      if (k > 0) power = op_apply(g.H, power);
      if (poly.coeff(k) != 0) acc = quasi_add(acc, power.scaled(poly.coeff(k)));
    }
    return acc;
  };
  auto sub = [](const QuasiPoly& a, const QuasiPoly& b) { return quasi_add(a, b.scaled(-1)); };
  int checked = 0;
  for (int m = 0; m <= max_index; ++m) {
    for (int n = 0; n <= max_index; ++n) {
      const QuasiPoly psi = product_state(m, n, p);
      const QuasiPoly Xp = op_apply(g.X, psi);
      const QuasiPoly Yp = op_apply(g.Y, psi);
      const QuasiPoly Zp = sub(op_apply(g.X, Yp), op_apply(g.Y, Xp));
      // [X,Z] psi vs b{X,Y} psi + f psi.
      const QuasiPoly lhs1 = sub(op_apply(g.X, Zp), op_apply(g.Z, Xp));
      const QuasiPoly rhs1 = quasi_add(
          quasi_add(op_apply(g.X, Yp), op_apply(g.Y, Xp)).scaled(c.b), apply_central(c.f, psi));
      // [Y,Z] psi vs (-bY^2 + gX^3 + hX^2 + iX + j) psi.
      const QuasiPoly lhs2 = sub(op_apply(g.Y, Zp), op_apply(g.Z, Yp));
      const QuasiPoly XXp = op_apply(g.X, Xp);
      QuasiPoly rhs2 = op_apply(g.Y, Yp).scaled(-c.b);
      rhs2 = quasi_add(rhs2, op_apply(g.X, XXp).scaled(c.g));
      rhs2 = quasi_add(rhs2, apply_central(c.h, XXp));
      rhs2 = quasi_add(rhs2, apply_central(c.i, Xp));
      rhs2 = quasi_add(rhs2, apply_central(c.j, psi));
      ++checked;
      if (!quasi_equal(lhs1, rhs1) || !quasi_equal(lhs2, rhs2)) {
        if (failures) failures->push_back({m, n});
      }
    }
  }
  return checked;
}

std::string central_to_string(const Poly& c) { return c.to_string("H"); }

}  // namespace superint
