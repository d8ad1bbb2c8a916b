#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "syzlab/errors.hpp"

namespace syzlab {

using Rational = boost::rational<std::int64_t>;

/// Polynomial in one variable with rational coefficients, lowest degree first.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coefficients);

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Rational operator()(const Rational& x) const;
  Rational operator()(std::int64_t x) const { return (*this)(Rational(x)); }
  RationalPolynomial operator+(const RationalPolynomial& o) const;
  RationalPolynomial operator*(const RationalPolynomial& o) const;
  bool operator==(const RationalPolynomial& o) const { return coeffs_ == o.coeffs_; }
  /// "3/2*m^2 + m - 1" in the variable `var`.
  std::string to_string(const std::string& var = "m") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// f(2m) = even(m), f(2m+1) = odd(m) for all indices >= onset.
struct QuasiPolynomial {
  RationalPolynomial even;
  RationalPolynomial odd;
  std::size_t onset = 0;
  /// Per-branch first index (in branch coordinates m) of the exact fit.
  std::size_t even_start = 0;
  std::size_t odd_start = 0;

  /// max(deg even, deg odd); -1 when both vanish.
  int degree() const { return std::max(even.degree(), odd.degree()); }
  Rational operator()(std::int64_t n) const;
};

inline constexpr int kDefaultHoldout = 2;

/// Exact period-2 fit: each parity branch is fitted by finite differences on
/// all but its last `holdout` points, which must then be reproduced. The
/// lowest degree wins, then the earliest start. Raises FitInconclusive.
QuasiPolynomial quasi_fit(const std::vector<std::int64_t>& seq, int max_degree, int holdout = kDefaultHoldout);

/// Largest degree the fitter can test on a sequence of this length.
int max_fit_degree(std::size_t length, int holdout = kDefaultHoldout);

}  // namespace syzlab
