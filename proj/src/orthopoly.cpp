#include "superint/orthopoly.hpp"

#include <stdexcept>

namespace superint {

Rational gbinomial(const Rational& x, int k) {
  if (k < 0) return 0;
  Rational r(1);
  for (int j = 0; j < k; ++j) r *= (x - j) / (j + 1);
  return r;
}

Poly laguerre(int m, const Rational& C) {
  if (m < 0) throw std::invalid_argument("laguerre: m must be >= 0");
  std::vector<Rational> c(m + 1);
  Rational fact(1);
  for (int k = 0; k <= m; ++k) {
    if (k > 0) fact *= k;
    c[k] = gbinomial(C + m, m - k) / fact;
    if (k % 2 == 1) c[k] = -c[k];
  }
  return Poly(std::move(c));
}

Poly jacobi(int n, const Rational& a, const Rational& b) {
  if (n < 0) throw std::invalid_argument("jacobi: n must be >= 0");
  const Poly zm = Poly{Rational(-1, 2), Rational(1, 2)};
  const Poly zp = Poly{Rational(1, 2), Rational(1, 2)};
  Poly out;
  for (int k = 0; k <= n; ++k) {
    out += zm.pow(k) * zp.pow(n - k) * (gbinomial(a + n, n - k) * gbinomial(b + n, k));
  }
  return out;
}

Poly laguerre_residual(const Poly& f, int m, const Rational& C) {
  const Poly d1 = f.derivative();
  return Poly::x() * d1.derivative() + Poly{C + 1, Rational(-1)} * d1 + f * Rational(m);
}

Poly jacobi_residual(const Poly& f, int n, const Rational& a, const Rational& b) {
  const Poly d1 = f.derivative();
  return Poly{1, 0, -1} * d1.derivative() + Poly{b - a, -(a + b + 2)} * d1 +
         f * (Rational(n) * (n + a + b + 1));
}

}  // namespace superint
