#include "syzlab/hilbert.hpp"

#include <algorithm>

#include "syzlab/linalg.hpp"

namespace syzlab {

namespace {

std::int64_t binom(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::optional<StandardBasis> module_basis(const PresentedModule& m, const Submodule* ideal, int power) {
  Submodule rel = m.relations();
  if (ideal) rel = rel + module_scale(ideal_power(*ideal, power), whole_module(m.free_module()));
  return StandardBasis::build(ideal ? buchberger(rel) : m.relation_basis());
}

}  // namespace

std::optional<std::size_t> length(const PresentedModule& m) {
  if (m.rank() == 0) return 0;
  auto sb = module_basis(m, nullptr, 0);
  if (!sb) return std::nullopt;
  return sb->size();
}

std::map<int, std::size_t> graded_length(const PresentedModule& m) {
  if (m.rank() == 0) return {};
  auto sb = module_basis(m, nullptr, 0);
  if (!sb) throw NotPrimary("module has infinite length");
  return sb->graded_dimensions();
}

std::int64_t hilbert_samuel_value(const PresentedModule& m, const Submodule& ideal, int power) {
  if (m.rank() == 0) return 0;
  auto sb = module_basis(m, &ideal, power);
  if (!sb) throw NotPrimary("M/I^" + std::to_string(power) + "M has infinite length");
  return static_cast<std::int64_t>(sb->size());
}

std::vector<std::int64_t> hilbert_samuel_values(const PresentedModule& m, const Submodule& ideal, int n_max) {
  std::vector<std::int64_t> out;
  for (int n = 0; n <= n_max; ++n) out.push_back(hilbert_samuel_value(m, ideal, n + 1));
  return out;
}

namespace {

/// Coefficients 0..N-1 of (1-z)^exponent * sum values[n] z^n; exact since the
/// product is truncated at the table length.
std::vector<std::int64_t> raw_numerator(const std::vector<std::int64_t>& values, int exponent) {
  std::vector<std::int64_t> cur = values;
  for (int e = 0; e < exponent; ++e)
    for (std::size_t k = cur.size(); k-- > 1;) cur[k] -= cur[k - 1];
  return cur;
}

int trailing_zeros(const std::vector<std::int64_t>& c) {
  int z = 0;
  for (std::size_t k = c.size(); k-- > 0 && c[k] == 0;) ++z;
  return z;
}

}  // namespace

bool detail::numerator_stable(const std::vector<std::int64_t>& values, int exponent) {
  return trailing_zeros(raw_numerator(values, exponent)) >= 3;
}

std::vector<std::int64_t> series_numerator(const std::vector<std::int64_t>& values, int exponent) {
  auto c = raw_numerator(values, exponent);
  int z = trailing_zeros(c);
  if (z < 3)
    throw NotStabilized("series numerator has no vanishing tail within " + std::to_string(values.size()) +
                        " values");
  c.resize(c.size() - z);
  return c;
}

std::vector<std::int64_t> h_polynomial(const std::vector<std::int64_t>& values, int r) {
  return series_numerator(values, r + 1);
}

std::vector<std::int64_t> hilbert_coefficients(const std::vector<std::int64_t>& h, int i_max) {
  std::vector<std::int64_t> e;
  for (int i = 0; i <= i_max; ++i) {
    std::int64_t s = 0;
    for (std::size_t k = 0; k < h.size(); ++k) s += binom(static_cast<std::int64_t>(k), i) * h[k];
    e.push_back(s);
  }
  return e;
}

std::int64_t binomial_polynomial_value(const std::vector<std::int64_t>& coeffs, int r, std::int64_t n) {
  std::int64_t s = 0;
  for (int i = 0; i <= r && i < static_cast<int>(coeffs.size()); ++i) {
    std::int64_t term = coeffs[i] * binom(n + r - i, r - i);
    s += (i % 2 == 0) ? term : -term;
  }
  return s;
}

HilbertData hilbert_data_from_values(std::vector<std::int64_t> values, int r) {
  HilbertData d;
  d.dimension = r;
  d.h = h_polynomial(values, r);
  d.e = hilbert_coefficients(d.h, std::max(r, 2));
  bool zero = std::all_of(values.begin(), values.end(), [](std::int64_t v) { return v == 0; });
  if (!zero && d.e[0] == 0)
    throw NotStabilized("declared dimension " + std::to_string(r) + " exceeds the dimension of the module");
  if (!zero && d.e[0] < 0) throw NotStabilized("negative multiplicity; declared dimension is wrong");
  for (std::size_t n = 0; n < values.size(); ++n) {
    d.differences.push_back(n == 0 ? values[0] : values[n] - values[n - 1]);
    if (values[n] != binomial_polynomial_value(d.e, r, static_cast<std::int64_t>(n)))
      d.postulation_number = static_cast<int>(n);
  }
  d.postulation_index = d.postulation_number + 1;
  d.values = std::move(values);
  return d;
}

HilbertData hilbert_data(const PresentedModule& m, const Submodule& ideal, int r, int n_start) {
  auto [values, h] = stabilized_numerator([&](int n) { return hilbert_samuel_value(m, ideal, n + 1); }, r + 1, n_start);
  return hilbert_data_from_values(std::move(values), r);
}

namespace {

std::int64_t dual_value(const PresentedModule& m, const Submodule& ideal, int power) {
  if (!m.ring()->is_gorenstein()) throw NotGorenstein("dual Hilbert function needs a Gorenstein ring");
  if (m.rank() == 0) return 0;
  Submodule k = ideal_power(ideal, power) + m.ring()->relation_ideal();
  auto L = StandardBasis::build(buchberger(k));
  if (!L) throw NotPrimary("A/I^" + std::to_string(power) + " has infinite length");
  std::vector<int> src;
  for (int s : m.shifts()) src.push_back(-s);
  std::vector<std::vector<Polynomial>> images(m.rank());
  for (std::size_t j = 0; j < m.rank(); ++j)
    for (std::size_t c = 0; c < m.columns().size(); ++c) images[j].push_back(m.entry(j, c));
  std::size_t rank = 0;
  if (!m.columns().empty())
    for (const auto& [deg, r] : graded_map_rank(*L, src, images)) rank += r;
  return static_cast<std::int64_t>(m.rank() * L->size() - rank);
}

}  // namespace

std::vector<std::int64_t> dual_hilbert_values(const PresentedModule& m, const Submodule& ideal, int n_max) {
  std::vector<std::int64_t> out;
  for (int n = 0; n <= n_max; ++n) out.push_back(dual_value(m, ideal, n + 1));
  return out;
}

std::vector<std::int64_t> dual_coefficients(const std::vector<std::int64_t>& values, int d) {
  return hilbert_coefficients(series_numerator(values, d + 1), d);
}

DualHilbertData dual_hilbert_data(const PresentedModule& m, const Submodule& ideal, int d, int n_start) {
  auto [values, h] = stabilized_numerator([&](int n) { return dual_value(m, ideal, n + 1); }, d + 1, n_start);
  DualHilbertData out;
  out.c = hilbert_coefficients(h, d);
  int last_bad = -1;
  for (std::size_t n = 0; n < values.size(); ++n)
    if (values[n] != binomial_polynomial_value(out.c, d, static_cast<std::int64_t>(n))) last_bad = static_cast<int>(n);
  out.postulation_index = last_bad + 1;
  out.values = std::move(values);
  return out;
}

}  // namespace syzlab
