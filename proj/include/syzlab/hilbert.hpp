#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "syzlab/resolution.hpp"

namespace syzlab {

/// Vector-space dimension of the module, or nullopt when it is infinite.
std::optional<std::size_t> length(const PresentedModule& m);
/// Graded dimensions of a finite-length module.
std::map<int, std::size_t> graded_length(const PresentedModule& m);

/// l(M / I^{n+1} M) for n = 0..n_max. Raises NotPrimary.
std::vector<std::int64_t> hilbert_samuel_values(const PresentedModule& m, const Submodule& ideal, int n_max);
/// l(M / I^{power} M), a single value.
std::int64_t hilbert_samuel_value(const PresentedModule& m, const Submodule& ideal, int power);

/// Numerator h with sum_n values[n] z^n = h / (1-z)^exponent, checked to
/// vanish on at least three trailing positions. Raises NotStabilized.
std::vector<std::int64_t> series_numerator(const std::vector<std::int64_t>& values, int exponent);

/// h-polynomial of the Hilbert–Samuel table in dimension r.
std::vector<std::int64_t> h_polynomial(const std::vector<std::int64_t>& values, int r);
/// e_i = h^{(i)}(1) / i! for i = 0..i_max.
std::vector<std::int64_t> hilbert_coefficients(const std::vector<std::int64_t>& h, int i_max);
/// sum_i (-1)^i coeffs[i] binom(n + r - i, r - i), i = 0..r.
std::int64_t binomial_polynomial_value(const std::vector<std::int64_t>& coeffs, int r, std::int64_t n);

struct HilbertData {
  std::vector<std::int64_t> values;
  std::vector<std::int64_t> differences;
  int dimension = 0;
  std::vector<std::int64_t> h;
  /// e_0..e_max(dimension, 2).
  std::vector<std::int64_t> e;
  /// Smallest n from which the values agree with the polynomial.
  int postulation_index = 0;
  /// Largest n >= 0 where they disagree, -1 if none.
  int postulation_number = -1;
};

inline constexpr int kHilbertValueCap = 40;

/// Computes values until the numerator stabilizes, starting from n_start and
/// growing up to kHilbertValueCap. Checks that the declared dimension is right.
HilbertData hilbert_data(const PresentedModule& m, const Submodule& ideal, int r, int n_start = 6);
HilbertData hilbert_data_from_values(std::vector<std::int64_t> values, int r);

/// l(Hom_A(M, A/I^{n+1})) for n = 0..n_max. Requires a Gorenstein ring.
std::vector<std::int64_t> dual_hilbert_values(const PresentedModule& m, const Submodule& ideal, int n_max);
/// c_0..c_d from a dual value table in dimension d.
std::vector<std::int64_t> dual_coefficients(const std::vector<std::int64_t>& values, int d);

struct DualHilbertData {
  std::vector<std::int64_t> values;
  std::vector<std::int64_t> c;
  int postulation_index = 0;
};

DualHilbertData dual_hilbert_data(const PresentedModule& m, const Submodule& ideal, int d, int n_start = 6);

/// Adaptive numerator of n |-> values(n) for callers supplying their own value
/// generator; returns (values, numerator).
template <class F>
std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>> stabilized_numerator(F&& value_at, int exponent,
                                                                                     int n_start = 6);

namespace detail {
bool numerator_stable(const std::vector<std::int64_t>& values, int exponent);
}

template <class F>
std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>> stabilized_numerator(F&& value_at, int exponent,
                                                                                     int n_start) {
  std::vector<std::int64_t> values;
  int target = std::max(n_start, exponent + 4);
  while (true) {
    while (static_cast<int>(values.size()) <= target) values.push_back(value_at(static_cast<int>(values.size())));
    if (detail::numerator_stable(values, exponent)) return {values, series_numerator(values, exponent)};
    if (target >= kHilbertValueCap) return {values, series_numerator(values, exponent)};
    target = std::min(target + 4, kHilbertValueCap);
  }
}

}  // namespace syzlab
