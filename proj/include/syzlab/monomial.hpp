#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

#include "syzlab/errors.hpp"

namespace syzlab {

inline constexpr std::size_t kMaxVariables = 8;

/// Dense exponent vector with a cached total degree.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::initializer_list<int> exponents);
  explicit Monomial(std::span<const int> exponents);

  static Monomial variable(std::size_t nvars, std::size_t index, int power = 1);

  std::size_t nvars() const { return nvars_; }
  int degree() const { return static_cast<int>(degree_); }
  int operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, int e);

  bool is_one() const { return degree_ == 0; }
  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  /// Index of the single variable when the monomial is a pure power, else -1.
  int pure_power_variable() const;

  Monomial operator*(const Monomial& o) const;
  /// Exact quotient; requires `o.divides(*this)`.
  Monomial operator/(const Monomial& o) const;
  Monomial lcm(const Monomial& o) const;

  bool operator==(const Monomial& o) const {
    return nvars_ == o.nvars_ && degree_ == o.degree_ && exps_ == o.exps_;
  }

  std::size_t hash() const;
  std::vector<int> exponents() const;

 private:
  void check(const Monomial& o) const {
    if (nvars_ != o.nvars_) throw VariableCountMismatch();
  }
  std::array<std::uint16_t, kMaxVariables> exps_{};
  std::uint8_t nvars_ = 0;
  std::uint32_t degree_ = 0;
};

enum class OrderKind { DegRevLex, DegLex };

/// A graded monomial order; both kinds refine total degree.
class MonomialOrder {
 public:
  constexpr MonomialOrder(OrderKind kind = OrderKind::DegRevLex) : kind_(kind) {}

  OrderKind kind() const { return kind_; }
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool operator==(const MonomialOrder&) const = default;

 private:
  OrderKind kind_;
};

}  // namespace syzlab

template <>
struct std::hash<syzlab::Monomial> {
  std::size_t operator()(const syzlab::Monomial& m) const { return m.hash(); }
};
