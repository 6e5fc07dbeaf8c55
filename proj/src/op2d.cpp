#include "superint/op2d.hpp"

#include <cmath>
#include <sstream>
#include <vector>

namespace superint {

Op2D::Op2D(const LaurentR& c) {
  if (!c.is_zero()) terms_.emplace(DerivIndex{0, 0}, c);
}

Op2D Op2D::dr(int n) { return term(LaurentR(Rational(1)), n, 0); }

Op2D Op2D::dphi(int n) { return term(LaurentR(Rational(1)), 0, n); }

Op2D Op2D::term(const LaurentR& c, int i, int j) {
  Op2D op;
  op.add_term({i, j}, c);
  return op;
}

int Op2D::order() const {
  int ord = -1;
  for (const auto& [idx, c] : terms_) ord = std::max(ord, idx.order());
  return ord;
}

LaurentR Op2D::coeff(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? LaurentR{} : it->second;
}

void Op2D::add_term(DerivIndex idx, const LaurentR& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(idx, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Op2D& Op2D::operator+=(const Op2D& o) {
  for (const auto& [idx, c] : o.terms_) add_term(idx, c);
  return *this;
}

Op2D& Op2D::operator-=(const Op2D& o) {
  for (const auto& [idx, c] : o.terms_) add_term(idx, -c);
  return *this;
}

Op2D& Op2D::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [idx, v] : terms_) v *= c;
  return *this;
}

Op2D Op2D::operator-() const {
  Op2D r = *this;
  for (auto& [idx, v] : r.terms_) v = -v;
  return r;
}

Op2D Op2D::left_multiply(const LaurentR& c) const {
  Op2D out;
  for (const auto& [idx, v] : terms_) out.add_term(idx, c * v);
  return out;
}

Op2D operator*(const Op2D& a, const Op2D& b) {
  int max_i = 0;
  int max_j = 0;
  for (const auto& [idx, c] : a.terms_) {
    max_i = std::max(max_i, idx.dr);
    max_j = std::max(max_j, idx.dphi);
  }
  // derivs[term][q][p] = dr^p dphi^q of b's coefficient.
  std::vector<std::vector<std::vector<LaurentR>>> derivs;
  derivs.reserve(b.terms_.size());
  for (const auto& [idx, c] : b.terms_) {
    std::vector<std::vector<LaurentR>> table(static_cast<std::size_t>(max_j) + 1);
    LaurentR phi_level = c;
    for (int q = 0; q <= max_j; ++q) {
      if (q > 0) phi_level = phi_level.dphi();
      auto& row = table[static_cast<std::size_t>(q)];
      row.reserve(static_cast<std::size_t>(max_i) + 1);
      row.push_back(phi_level);
      for (int p = 1; p <= max_i; ++p) row.push_back(row.back().dr());
    }
    derivs.push_back(std::move(table));
  }

  Op2D out;
  for (const auto& [ia, ca] : a.terms_) {
    std::size_t bi = 0;
    for (const auto& [ib, cb] : b.terms_) {
      const auto& table = derivs[bi++];
      for (int p = 0; p <= ia.dr; ++p) {
        for (int q = 0; q <= ia.dphi; ++q) {
          const LaurentR& d = table[static_cast<std::size_t>(q)][static_cast<std::size_t>(p)];
          if (d.is_zero()) continue;
          const Rational weight(binomial(ia.dr, p) * binomial(ia.dphi, q));
          out.add_term({ia.dr - p + ib.dr, ia.dphi - q + ib.dphi}, (ca * d) * weight);
        }
      }
    }
  }
  return out;
}

double Op2D::apply_exponential(double kr, double kphi, double r, double phi) const {
  double acc = 0.0;
  for (const auto& [idx, c] : terms_) {
    acc += c.eval(r, phi) * std::pow(kr, idx.dr) * std::pow(kphi, idx.dphi);
  }
  return acc * std::exp(kr * r + kphi * phi);
}

std::string Op2D::dump() const {
  std::ostringstream os;
  for (const auto& [idx, c] : terms_) {
    for (const auto& [k, t] : c.terms()) {
      os << "r^" << k << " * (" << t.even().to_string() << " | " << t.odd().to_string()
         << " s) * dr^" << idx.dr << " dphi^" << idx.dphi << "\n";
    }
  }
  return os.str();
}

Op2D op_compose(const Op2D& a, const Op2D& b) { return a * b; }

Op2D op_commutator(const Op2D& a, const Op2D& b) { return a * b - b * a; }

Op2D op_anticommutator(const Op2D& a, const Op2D& b) { return a * b + b * a; }

bool op_equal(const Op2D& a, const Op2D& b) { return (a - b).is_zero(); }

}  // namespace superint
