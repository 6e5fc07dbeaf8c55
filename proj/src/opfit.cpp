#include "superint/opfit.hpp"

#include <set>
#include <stdexcept>
#include <tuple>

namespace superint {

namespace {

// Sample points avoiding +-1 and the small integers where b - x may vanish.
const std::vector<Rational>& sample_points() {
  static const std::vector<Rational> pts = {Rational(1, 7), Rational(-2, 9), Rational(3, 11),
                                            Rational(-5, 13), Rational(4, 17)};
  return pts;
}

std::optional<Rational> sample(const Op2D& op, DerivIndex idx, int power, bool odd,
                               const Rational& x) {
  const TrigRat c = op.coeff(idx.dr, idx.dphi).coeff(power);
  try {
    return odd ? c.odd().eval(x) : c.even().eval(x);
  } catch (const std::domain_error&) {
    return std::nullopt;
  }
}

}  // namespace

std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> m,
                                                  std::vector<Rational> v) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    std::swap(v[piv], v[r]);
    const Rational inv = 1 / m[r][c];
    for (auto& e : m[r]) e *= inv;
    v[r] *= inv;
    for (std::size_t k = 0; k < rows; ++k) {
      if (k == r || m[k][c] == 0) continue;
      const Rational f = m[k][c];
      for (std::size_t j = c; j < cols; ++j) m[k][j] -= f * m[r][j];
      v[k] -= f * v[r];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  for (std::size_t k = r; k < rows; ++k) {
    if (v[k] != 0) return std::nullopt;
  }
  std::vector<Rational> sol(cols, Rational(0));
  for (std::size_t k = 0; k < pivot_col.size(); ++k) sol[pivot_col[k]] = v[k];
  return sol;
}

std::optional<std::vector<Rational>> fit_operator(const Op2D& target,
                                                  const std::vector<Op2D>& basis) {
  std::set<std::tuple<DerivIndex, int, bool>> keys;
  auto collect = [&keys](const Op2D& op) {
    for (const auto& [idx, lr] : op.terms()) {
      for (const auto& [k, c] : lr.terms()) {
        if (!c.even().is_zero()) keys.insert({idx, k, false});
        if (!c.odd().is_zero()) keys.insert({idx, k, true});
      }
    }
  };
  collect(target);
  for (const auto& b : basis) collect(b);

  std::vector<std::vector<Rational>> m;
  std::vector<Rational> v;
  for (const auto& [idx, k, odd] : keys) {
    for (const auto& x : sample_points()) {
      std::vector<Rational> row;
      bool ok = true;
      for (const auto& b : basis) {
        auto val = sample(b, idx, k, odd, x);
        if (!val) {
          ok = false;
          break;
        }
        row.push_back(*val);
      }
      auto rhs = sample(target, idx, k, odd, x);
      if (!ok || !rhs) continue;
      m.push_back(std::move(row));
      v.push_back(*rhs);
    }
  }
  if (m.empty()) return basis.empty() && target.is_zero() ? std::optional(std::vector<Rational>{})
                                                          : std::nullopt;
  auto sol = solve_linear(std::move(m), std::move(v));
  if (!sol) return std::nullopt;
  Op2D combo;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if ((*sol)[k] != 0) combo += basis[k] * (*sol)[k];
  }
  if (!op_equal(combo, target)) return std::nullopt;
  return sol;
}

}  // namespace superint
