#include "syzlab/monomial.hpp"

#include <algorithm>
#include <limits>

namespace syzlab {

namespace {

std::uint16_t checked_exponent(long e) {
  if (e < 0 || e > std::numeric_limits<std::uint16_t>::max()) throw Error("exponent out of range");
  return static_cast<std::uint16_t>(e);
}

}  // namespace

Monomial::Monomial(std::size_t nvars) : nvars_(static_cast<std::uint8_t>(nvars)) {
  if (nvars > kMaxVariables) throw Error("at most 8 variables are supported");
}

Monomial::Monomial(std::initializer_list<int> exponents)
    : Monomial(std::span<const int>(exponents.begin(), exponents.size())) {}

Monomial::Monomial(std::span<const int> exponents) : Monomial(exponents.size()) {
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    exps_[i] = checked_exponent(exponents[i]);
    degree_ += exps_[i];
  }
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, int power) {
  Monomial m(nvars);
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, int e) {
  degree_ -= exps_[i];
  exps_[i] = checked_exponent(e);
  degree_ += exps_[i];
}

bool Monomial::divides(const Monomial& other) const {
  check(other);
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < nvars_; ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  check(other);
  for (std::size_t i = 0; i < nvars_; ++i)
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  return true;
}

int Monomial::pure_power_variable() const {
  int found = -1;
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (exps_[i] == 0) continue;
    if (found >= 0) return -1;
    found = static_cast<int>(i);
  }
  return found;
}

Monomial Monomial::operator*(const Monomial& o) const {
  check(o);
  Monomial r(*this);
  for (std::size_t i = 0; i < nvars_; ++i) r.exps_[i] = checked_exponent(long(exps_[i]) + o.exps_[i]);
  r.degree_ = degree_ + o.degree_;
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  check(o);
  Monomial r(*this);
  for (std::size_t i = 0; i < nvars_; ++i) r.exps_[i] = checked_exponent(long(exps_[i]) - o.exps_[i]);
  r.degree_ = degree_ - o.degree_;
  return r;
}

Monomial Monomial::lcm(const Monomial& o) const {
  check(o);
  Monomial r(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) {
    r.exps_[i] = std::max(exps_[i], o.exps_[i]);
    r.degree_ += r.exps_[i];
  }
  return r;
}

std::size_t Monomial::hash() const {
  std::size_t h = nvars_;
  for (std::size_t i = 0; i < nvars_; ++i) h = h * 1000003u ^ exps_[i];
  return h;
}

std::vector<int> Monomial::exponents() const { return {exps_.begin(), exps_.begin() + nvars_}; }

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.nvars() != b.nvars()) throw VariableCountMismatch();
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  const std::size_t n = a.nvars();
  if (kind_ == OrderKind::DegLex) {
    for (std::size_t i = 0; i < n; ++i)
      if (a[i] != b[i]) return a[i] <=> b[i];
    return std::strong_ordering::equal;
  }
  for (std::size_t i = n; i-- > 0;)
    if (a[i] != b[i]) return b[i] <=> a[i];
  return std::strong_ordering::equal;
}

}  // namespace syzlab
