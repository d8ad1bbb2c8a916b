#include "syzlab/field.hpp"

#include <string>

namespace syzlab {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p < 3 || !is_prime(p) || p >= (1u << 31))
    throw Error("field characteristic must be an odd prime below 2^31, got " + std::to_string(p));
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  if (a == 0) throw Error("inverse of zero in F_" + std::to_string(p_));
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  return reduce(t);
}

namespace {

std::uint32_t reduce_mod(std::int64_t v, std::uint32_t p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

}  // namespace

PrimeFieldElement::PrimeFieldElement(std::int64_t value, std::uint32_t modulus)
    : value_(0), modulus_(modulus) {
  if (modulus < 2) throw Error("modulus must be at least 2");
  value_ = reduce_mod(value, modulus);
}

PrimeFieldElement PrimeFieldElement::operator+(const PrimeFieldElement& o) const {
  check(o);
  return {static_cast<std::int64_t>(value_) + o.value_, modulus_};
}

PrimeFieldElement PrimeFieldElement::operator-(const PrimeFieldElement& o) const {
  check(o);
  return {static_cast<std::int64_t>(value_) - o.value_, modulus_};
}

PrimeFieldElement PrimeFieldElement::operator*(const PrimeFieldElement& o) const {
  check(o);
  return {static_cast<std::int64_t>(static_cast<std::uint64_t>(value_) * o.value_ % modulus_), modulus_};
}

PrimeFieldElement PrimeFieldElement::operator-() const {
  return {-static_cast<std::int64_t>(value_), modulus_};
}

PrimeFieldElement PrimeFieldElement::inverse() const {
  // Fermat: the modulus is prime for every element produced by a ring.
  std::uint64_t result = 1, base = value_, e = modulus_ - 2;
  if (value_ == 0) throw Error("inverse of zero");
  while (e) {
    if (e & 1) result = result * base % modulus_;
    base = base * base % modulus_;
    e >>= 1;
  }
  return {static_cast<std::int64_t>(result), modulus_};
}

std::ostream& operator<<(std::ostream& os, const PrimeFieldElement& a) { return os << a.value(); }

}  // namespace syzlab
