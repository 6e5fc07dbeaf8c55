#include "superint/quasipoly.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

namespace superint {

namespace {

bool is_integer(const Rational& r) { return r.get_den() == 1; }

int to_int(const Rational& r) { return static_cast<int>(r.get_num().get_si()); }

// Order of vanishing of a nonzero polynomial at root.
int valuation(Poly f, const Rational& root) {
  int v = 0;
  while (!f.is_zero() && f.eval(root) == 0) {
    f = f.divide_linear(root);
    ++v;
  }
  return v;
}

int valuation(const RatFn& f, const Rational& root) {
  return valuation(f.num(), root) - valuation(f.den(), root);
}

// Body as a Laurent polynomial in r over TrigRat.
LaurentR body_as_laurent(const QuasiPoly& f) {
  LaurentR out;
  for (const auto& [j, poly] : f.body) {
    out.add_term(j, f.s_parity == 0 ? TrigRat(RatFn(poly)) : TrigRat(RatFn{}, RatFn(poly)));
  }
  return out;
}

}  // namespace

QuasiPoly QuasiPoly::scaled(const Rational& c) const {
  QuasiPoly out = *this;
  if (c == 0) {
    out.body.clear();
    return out;
  }
  for (auto& [j, poly] : out.body) poly *= c;
  return out;
}

double QuasiPoly::eval(double r, double phi) const {
  const double x = -std::cos(2 * phi);
  const double s = std::sin(2 * phi);
  double sum = 0;
  for (const auto& [j, poly] : body) sum += std::pow(r, j) * poly.eval(x);
  double gaugev = std::pow(r, to_double(C)) * std::exp(-to_double(gauss) * r * r) *
                  std::pow(1 - x, to_double(p)) * std::pow(1 + x, to_double(q)) *
                  std::pow(x - to_double(b), k);
  if (s_parity == 1) gaugev *= s;
  return gaugev * sum;
}

std::string QuasiPoly::to_string() const {
  std::ostringstream os;
  os << "r^(" << C << ") exp(-(" << gauss << ") r^2) (1-x)^(" << p << ") (1+x)^(" << q
     << ") (x-" << b << ")^(" << k << ")" << (s_parity ? " s" : "") << " * [";
  bool first = true;
  for (const auto& [j, poly] : body) {
    os << (first ? "" : " + ") << "r^" << j << " (" << poly.to_string("x") << ")";
    first = false;
  }
  os << "]";
  return os.str();
}

namespace {

// Converts a Laurent body with TrigRat coefficients (relative to the gauge of
// `gauge`) into canonical form.
QuasiPoly from_laurent(const QuasiPoly& gauge, const LaurentR& body) {
  QuasiPoly out = gauge;
  out.body.clear();
  if (body.is_zero()) return out;

  bool has_even = false;
  bool has_odd = false;
  for (const auto& [j, c] : body.terms()) {
    has_even = has_even || !c.even().is_zero();
    has_odd = has_odd || !c.odd().is_zero();
  }
  if (has_even && has_odd) {
    throw NonClosureError("result mixes even and odd powers of s = sin 2phi");
  }
  // The gauge carries s^sigma; an odd body multiplies it by one more s,
  // and s^2 = (1-x)(1+x) is absorbed into p and q.
  const bool odd = has_odd;
  int parity = gauge.s_parity + (odd ? 1 : 0);
  if (parity == 2) {
    out.p += 1;
    out.q += 1;
    parity = 0;
  }
  out.s_parity = parity;

  const Rational roots[3] = {Rational(1), Rational(-1), gauge.b};
  int vmin[3] = {std::numeric_limits<int>::max(), std::numeric_limits<int>::max(),
                 std::numeric_limits<int>::max()};
  std::vector<std::pair<int, RatFn>> terms;
  for (const auto& [j, c] : body.terms()) {
    const RatFn& f = odd ? c.odd() : c.even();
    if (f.is_zero()) continue;
    for (int i = 0; i < 3; ++i) vmin[i] = std::min(vmin[i], valuation(f, roots[i]));
    terms.emplace_back(j, f);
  }
  // (1-x)^v = (-1)^v (x-1)^v; the sign is folded into the body.
  const RatFn shift = RatFn(Poly{-1, 1}).pow(-vmin[0]) * RatFn(Poly{1, 1}).pow(-vmin[1]) *
                      RatFn(Poly{-gauge.b, 1}).pow(-vmin[2]);
  const Rational sign = (vmin[0] % 2 == 0) ? Rational(1) : Rational(-1);
  out.p += vmin[0];
  out.q += vmin[1];
  out.k += vmin[2];
  const int jmin = terms.front().first;
  out.C += jmin;
  for (const auto& [j, f] : terms) {
    RatFn g = f * shift * sign;
    if (!g.is_polynomial()) {
      throw NonClosureError("coefficient of r^" + std::to_string(j) +
                            " has a denominator outside the gauge: " + g.to_string());
    }
    out.body[j - jmin] = g.num();
  }
  return out;
}

}  // namespace

QuasiPoly canonicalize(QuasiPoly f) {
  if (f.s_parity != 0 && f.s_parity != 1) throw std::invalid_argument("s parity must be 0 or 1");
  // An s in the gauge moves into the body so from_laurent sees one parity.
  const LaurentR body = body_as_laurent(f);
  f.body.clear();
  f.s_parity = 0;
  return from_laurent(f, body);
}

QuasiPoly op_apply(const Op2D& A, const QuasiPoly& f) {
  if (f.is_zero() || A.is_zero()) {
    QuasiPoly z = f;
    z.body.clear();
    return z;
  }
  // Logarithmic derivatives of the gauge (without the s^sigma factor, which
  // is kept inside the body).
  LaurentR lr;
  lr.add_term(-1, TrigRat(f.C));
  lr.add_term(1, TrigRat(-2 * f.gauss));
  const RatFn lphi_odd = RatFn::normalize(Poly{-2 * f.p}, Poly{1, -1}) +
                         RatFn::normalize(Poly{2 * f.q}, Poly{1, 1}) +
                         RatFn::normalize(Poly{Rational(2 * f.k)}, Poly{-f.b, 1});
  const LaurentR lphi(TrigRat(RatFn{}, lphi_odd));

  QuasiPoly gauge = f;
  gauge.body.clear();
  gauge.s_parity = 0;
  LaurentR body = body_as_laurent(f);

  int max_i = 0;
  int max_j = 0;
  for (const auto& [idx, c] : A.terms()) {
    max_i = std::max(max_i, idx.dr);
    max_j = std::max(max_j, idx.dphi);
  }
  // table[i][j] = D_r^i D_phi^j body with D_r = d/dr + lr, D_phi = d/dphi + lphi.
  std::vector<std::vector<LaurentR>> table(max_i + 1, std::vector<LaurentR>(max_j + 1));
  table[0][0] = body;
  for (int j = 1; j <= max_j; ++j) {
    table[0][j] = table[0][j - 1].dphi() + lphi * table[0][j - 1];
  }
  for (int i = 1; i <= max_i; ++i) {
    for (int j = 0; j <= max_j; ++j) table[i][j] = table[i - 1][j].dr() + lr * table[i - 1][j];
  }
  LaurentR result;
  for (const auto& [idx, c] : A.terms()) result += c * table[idx.dr][idx.dphi];
  return from_laurent(gauge, result);
}

bool quasi_equal(const QuasiPoly& a, const QuasiPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  const QuasiPoly ca = canonicalize(a);
  const QuasiPoly cb = canonicalize(b);
  if (ca.C != cb.C || ca.gauss != cb.gauss || ca.p != cb.p || ca.q != cb.q || ca.b != cb.b ||
      ca.k != cb.k || ca.s_parity != cb.s_parity || ca.body.size() != cb.body.size()) {
    return false;
  }
  for (const auto& [j, poly] : ca.body) {
    auto it = cb.body.find(j);
    if (it == cb.body.end() || !(it->second == poly)) return false;
  }
  return true;
}

QuasiPoly quasi_add(const QuasiPoly& a, const QuasiPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.gauss != b.gauss || a.b != b.b || !is_integer(a.C - b.C) || !is_integer(a.p - b.p) ||
      !is_integer(a.q - b.q)) {
    throw NonClosureError("quasi_add: gauges differ by non-integer shifts");
  }
  // Express b relative to a's gauge.
  QuasiPoly gauge = a;
  gauge.body.clear();
  gauge.s_parity = 0;
  const int dC = to_int(b.C - a.C);
  const int dp = to_int(b.p - a.p);
  const int dq = to_int(b.q - a.q);
  const int dk = b.k - a.k;
  const RatFn rel = RatFn(Poly{1, -1}).pow(dp) * RatFn(Poly{1, 1}).pow(dq) *
                    RatFn(Poly{-a.b, 1}).pow(dk);
  LaurentR sum;
  auto add = [&sum](const QuasiPoly& f, const RatFn& factor, int shift) {
    for (const auto& [j, poly] : f.body) {
      RatFn v = RatFn(poly) * factor;
      sum.add_term(j + shift, f.s_parity == 0 ? TrigRat(v) : TrigRat(RatFn{}, v));
    }
  };
  add(a, RatFn(Rational(1)), 0);
  add(b, rel, dC);
  return from_laurent(gauge, sum);
}

}  // namespace superint
