#include "superint/ratfn.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace superint {

namespace {

// Root of a monic linear base x - r.
Rational linear_root(const Poly& base) { return -base.coeff(0); }

struct Entry {
  Poly base;
  int ea = 0;
  int eb = 0;
};

// Splits a pair of square-free bases into a pairwise-coprime family.
std::vector<Entry> refine(const std::vector<RatFn::Factor>& a, const std::vector<RatFn::Factor>& b) {
  std::vector<Entry> out;
  out.reserve(a.size() + b.size());
  for (const auto& f : a) out.push_back({f.base, f.mult, 0});
  for (const auto& f : b) {
    std::vector<Entry> pending{{f.base, 0, f.mult}};
    while (!pending.empty()) {
      Entry cur = std::move(pending.back());
      pending.pop_back();
      bool placed = false;
      for (std::size_t i = 0; i < out.size() && !placed; ++i) {
        Entry& e = out[i];
        if (e.base == cur.base) {
          e.ea += cur.ea;
          e.eb += cur.eb;
          placed = true;
          break;
        }
        if (e.base.degree() == 1 && cur.base.degree() == 1) continue;
        Poly g = Poly::gcd(e.base, cur.base);
        if (g.degree() < 1) continue;
        Entry left{Poly::divmod(e.base, g).first, e.ea, e.eb};
        Entry right{Poly::divmod(cur.base, g).first, cur.ea, cur.eb};
        Entry common{g, e.ea + cur.ea, e.eb + cur.eb};
        out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
        if (left.base.degree() >= 1) out.push_back(std::move(left));
        out.push_back(std::move(common));
        if (right.base.degree() >= 1) pending.push_back(std::move(right));
        placed = true;
      }
      if (!placed) out.push_back(std::move(cur));
    }
  }
  return out;
}

}  // namespace

RatFn::RatFn(const Rational& c) : num_(Poly::constant(c)) {}

RatFn::RatFn(const Poly& p) : num_(p) {}

RatFn RatFn::x() { return RatFn(Poly::x()); }

RatFn RatFn::normalize(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw std::invalid_argument("invalid rational function: zero denominator");
  RatFn r;
  r.num_ = num * (Rational(1) / den.leading());
  if (r.num_.is_zero()) return r;
  const auto parts = den.monic().square_free_decomposition();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].degree() >= 1) r.den_.push_back({parts[i], static_cast<int>(i) + 1});
  }
  r.cancel();
  return r;
}

void RatFn::cancel() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  for (std::size_t i = 0; i < den_.size(); ++i) {
    while (den_[i].mult > 0) {
      const Poly& base = den_[i].base;
      if (base.degree() == 1) {
        const Rational root = linear_root(base);
        if (num_.eval(root) != 0) break;
        num_ = num_.divide_linear(root);
        --den_[i].mult;
        continue;
      }
      Poly g = Poly::gcd(num_, base);
      if (g.degree() < 1) break;
      if (g.degree() == base.degree()) {
        num_ = Poly::divmod(num_, base).first;
        --den_[i].mult;
        continue;
      }
      Factor rest{Poly::divmod(base, g).first, den_[i].mult};
      den_[i].base = g;
      den_.push_back(std::move(rest));
    }
  }
  den_.erase(std::remove_if(den_.begin(), den_.end(), [](const Factor& f) { return f.mult == 0; }),
             den_.end());
  std::sort(den_.begin(), den_.end(), [](const Factor& l, const Factor& r) {
    if (l.base.degree() != r.base.degree()) return l.base.degree() < r.base.degree();
    return std::lexicographical_compare(l.base.coeffs().rbegin(), l.base.coeffs().rend(),
                                        r.base.coeffs().rbegin(), r.base.coeffs().rend());
  });
}

Poly RatFn::den() const {
  Poly d = Poly::constant(1);
  for (const auto& f : den_) d = d * f.base.pow(f.mult);
  return d;
}

bool RatFn::is_constant(Rational* value) const {
  if (!den_.empty() || num_.degree() > 0) return false;
  if (value) *value = num_.coeff(0);
  return true;
}

RatFn& RatFn::operator+=(const RatFn& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_.empty() && o.den_.empty()) {
    num_ += o.num_;
    return *this;
  }
  auto entries = refine(den_, o.den_);
  Poly a = num_;
  Poly b = o.num_;
  den_.clear();
  for (auto& e : entries) {
    const int m = std::max(e.ea, e.eb);
    if (m > e.ea) a = a * e.base.pow(m - e.ea);
    if (m > e.eb) b = b * e.base.pow(m - e.eb);
    den_.push_back({std::move(e.base), m});
  }
  num_ = a + b;
  cancel();
  return *this;
}

RatFn& RatFn::operator-=(const RatFn& o) { return *this += -o; }

RatFn& RatFn::operator*=(const RatFn& o) {
  if (is_zero() || o.is_zero()) {
    num_ = Poly{};
    den_.clear();
    return *this;
  }
  if (o.den_.empty() && den_.empty()) {
    num_ = num_ * o.num_;
    return *this;
  }
  auto entries = refine(den_, o.den_);
  num_ = num_ * o.num_;
  den_.clear();
  for (auto& e : entries) den_.push_back({std::move(e.base), e.ea + e.eb});
  cancel();
  return *this;
}

RatFn& RatFn::operator*=(const Rational& c) {
  num_ *= c;
  if (num_.is_zero()) den_.clear();
  return *this;
}

RatFn RatFn::operator-() const {
  RatFn r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFn RatFn::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero rational function");
  return normalize(den(), num_);
}

RatFn RatFn::derivative() const {
  if (den_.empty()) return RatFn(num_.derivative());
  // (N / prod F_i^m_i)' = (N' prod F_i - N sum_i m_i F_i' prod_{j!=i} F_j) / prod F_i^(m_i+1)
  Poly prod_all = Poly::constant(1);
  for (const auto& f : den_) prod_all = prod_all * f.base;
  Poly numer = num_.derivative() * prod_all;
  for (std::size_t i = 0; i < den_.size(); ++i) {
    Poly others = Poly::constant(den_[i].mult);
    for (std::size_t j = 0; j < den_.size(); ++j) {
      if (j != i) others = others * den_[j].base;
    }
    numer -= num_ * den_[i].base.derivative() * others;
  }
  RatFn r;
  r.num_ = std::move(numer);
  for (const auto& f : den_) r.den_.push_back({f.base, f.mult + 1});
  r.cancel();
  return r;
}

RatFn RatFn::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  RatFn result(Rational(1));
  for (int k = 0; k < e; ++k) result *= *this;
  return result;
}

RatFn RatFn::compose(const Poly& inner) const {
  return normalize(num_.compose(inner), den().compose(inner));
}

Rational RatFn::eval(const Rational& at) const {
  Rational d(1);
  for (const auto& f : den_) d *= superint::pow(f.base.eval(at), f.mult);
  if (d == 0) throw std::domain_error("rational function evaluated at a pole");
  return num_.eval(at) / d;
}

double RatFn::eval(double at) const {
  double d = 1.0;
  for (const auto& f : den_) {
    const double v = f.base.eval(at);
    for (int k = 0; k < f.mult; ++k) d *= v;
  }
  return num_.eval(at) / d;
}

int RatFn::degree_bound() const {
  int dd = 0;
  for (const auto& f : den_) dd += f.base.degree() * f.mult;
  return std::max(num_.degree(), dd);
}

std::string RatFn::to_string(const std::string& var) const {
  if (den_.empty()) return num_.to_string(var);
  std::ostringstream os;
  os << "(" << num_.to_string(var) << ")/(";
  bool first = true;
  for (const auto& f : den_) {
    if (!first) os << "*";
    first = false;
    os << "(" << f.base.to_string(var) << ")";
    if (f.mult > 1) os << "^" << f.mult;
  }
  os << ")";
  return os.str();
}

}  // namespace superint
