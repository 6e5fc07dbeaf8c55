#include "superint/laurent.hpp"

#include <cmath>
#include <sstream>

namespace superint {

LaurentR::LaurentR(const TrigRat& c, int power) {
  if (!c.is_zero()) terms_.emplace(power, c);
}

TrigRat LaurentR::coeff(int k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? TrigRat{} : it->second;
}

int LaurentR::min_power() const { return terms_.empty() ? 0 : terms_.begin()->first; }

int LaurentR::max_power() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

void LaurentR::add_term(int power, const TrigRat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(power, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

LaurentR& LaurentR::operator+=(const LaurentR& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

LaurentR& LaurentR::operator-=(const LaurentR& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

LaurentR& LaurentR::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

LaurentR operator*(const LaurentR& a, const LaurentR& b) {
  LaurentR out;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) out.add_term(ka + kb, ca * cb);
  }
  return out;
}

LaurentR LaurentR::operator-() const {
  LaurentR r = *this;
  for (auto& [k, v] : r.terms_) v = -v;
  return r;
}

LaurentR LaurentR::shifted(int k) const {
  LaurentR r;
  for (const auto& [p, c] : terms_) r.terms_.emplace(p + k, c);
  return r;
}

LaurentR LaurentR::dr() const {
  LaurentR r;
  for (const auto& [p, c] : terms_) {
    if (p != 0) r.terms_.emplace(p - 1, c * Rational(p));
  }
  return r;
}

LaurentR LaurentR::dphi() const {
  LaurentR r;
  for (const auto& [p, c] : terms_) r.add_term(p, c.dphi());
  return r;
}

double LaurentR::eval(double r, double phi) const {
  double acc = 0.0;
  for (const auto& [p, c] : terms_) acc += c.eval_phi(phi) * std::pow(r, p);
  return acc;
}

std::string LaurentR::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "r^" << p << " * [" << c.to_string() << "]";
  }
  return os.str();
}

LaurentR laurent_scale_shift(const LaurentR& f, int k) { return f.shifted(k); }

}  // namespace superint
