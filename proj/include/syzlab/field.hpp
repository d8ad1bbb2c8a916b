#pragma once

#include <cstdint>
#include <ostream>

#include "syzlab/errors.hpp"

namespace syzlab {

inline constexpr std::uint32_t kDefaultModulus = 100003;

/// Arithmetic in Z/pZ on raw residues. Coefficient storage inside polynomials
/// uses bare residues and carries the modulus once per ring.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p = kDefaultModulus);

  std::uint32_t modulus() const { return p_; }

  std::uint32_t reduce(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return a >= b ? a - b : a + p_ - b; }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
  }
  /// Multiplicative inverse; `a` must be nonzero.
  std::uint32_t inv(std::uint32_t a) const;

  /// Symmetric representative in (-p/2, p/2], used by the printer.
  std::int64_t balanced(std::uint32_t a) const {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
  }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint32_t n);

/// A residue together with its modulus.
class PrimeFieldElement {
 public:
  PrimeFieldElement(std::int64_t value, std::uint32_t modulus);

  std::uint32_t value() const { return value_; }
  std::uint32_t modulus() const { return modulus_; }
  bool is_zero() const { return value_ == 0; }

  PrimeFieldElement operator+(const PrimeFieldElement& o) const;
  PrimeFieldElement operator-(const PrimeFieldElement& o) const;
  PrimeFieldElement operator*(const PrimeFieldElement& o) const;
  PrimeFieldElement operator-() const;
  PrimeFieldElement inverse() const;

  bool operator==(const PrimeFieldElement& o) const = default;

 private:
  void check(const PrimeFieldElement& o) const {
    if (modulus_ != o.modulus_) throw ModulusMismatch();
  }
  std::uint32_t value_;
  std::uint32_t modulus_;
};

std::ostream& operator<<(std::ostream& os, const PrimeFieldElement& a);

}  // namespace syzlab
