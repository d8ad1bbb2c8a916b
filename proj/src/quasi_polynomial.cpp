#include "syzlab/quasi_polynomial.hpp"

#include <optional>
#include <sstream>

#include "syzlab/errors.hpp"

namespace syzlab {

RationalPolynomial::RationalPolynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

void RationalPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == Rational(0)) coeffs_.pop_back();
}

Rational RationalPolynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RationalPolynomial RationalPolynomial::operator+(const RationalPolynomial& o) const {
  std::vector<Rational> c(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
  return RationalPolynomial(std::move(c));
}

RationalPolynomial RationalPolynomial::operator*(const RationalPolynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Rational> c(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
  return RationalPolynomial(std::move(c));
}

std::string RationalPolynomial::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream s;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    Rational c = coeffs_[k];
    if (c == Rational(0)) continue;
    bool neg = c < Rational(0);
    Rational mag = neg ? -c : c;
    if (first) {
      if (neg) s << '-';
    } else {
      s << (neg ? " - " : " + ");
    }
    first = false;
    bool unit = mag == Rational(1);
    if (!unit || k == 0) {
      s << mag.numerator();
      if (mag.denominator() != 1) s << '/' << mag.denominator();
    }
    if (k > 0) {
      if (!unit) s << '*';
      s << var;
      if (k > 1) s << '^' << k;
    }
  }
  return s.str();
}

Rational QuasiPolynomial::operator()(std::int64_t n) const {
  return n % 2 == 0 ? even(n / 2) : odd((n - 1) / 2);
}

namespace {

struct BranchFit {
  RationalPolynomial poly;
  std::size_t start;
};

/// Newton forward form through w[s..s+D], expanded in the monomial basis.
RationalPolynomial newton(const std::vector<std::int64_t>& w, std::size_t s, int degree) {
  std::vector<Rational> diff;
  for (int k = 0; k <= degree; ++k) diff.push_back(Rational(w[s + k]));
  std::vector<Rational> leading;
  for (int k = 0; k <= degree; ++k) {
    leading.push_back(diff[0]);
    for (std::size_t i = 0; i + 1 < diff.size(); ++i) diff[i] = diff[i + 1] - diff[i];
    diff.pop_back();
  }
  RationalPolynomial out;
  RationalPolynomial basis({Rational(1)});  // binom(m - s, k)
  for (int k = 0; k <= degree; ++k) {
    out = out + basis * RationalPolynomial({leading[k]});
    Rational shift = Rational(static_cast<std::int64_t>(s) + k);
    basis = basis * RationalPolynomial({-shift / (k + 1), Rational(1, k + 1)});
  }
  return out;
}

bool fits(const std::vector<std::int64_t>& w, std::size_t s, std::size_t end, int degree) {
  std::vector<Rational> d;
  for (std::size_t i = s; i < end; ++i) d.push_back(Rational(w[i]));
  for (int k = 0; k <= degree; ++k) {
    for (std::size_t i = 0; i + 1 < d.size(); ++i) d[i] = d[i + 1] - d[i];
    d.pop_back();
  }
  for (const auto& v : d)
    if (v != Rational(0)) return false;
  return true;
}

std::optional<BranchFit> fit_branch(const std::vector<std::int64_t>& w, int degree, int holdout) {
  if (w.size() < static_cast<std::size_t>(holdout)) return std::nullopt;
  const std::size_t end = w.size() - holdout;
  for (std::size_t s = 0; s + degree + 2 <= end; ++s) {
    if (!fits(w, s, end, degree)) continue;
    RationalPolynomial p = degree >= 0 ? newton(w, s, degree) : RationalPolynomial();
    bool ok = true;
    for (std::size_t i = end; i < w.size() && ok; ++i)
      ok = p(static_cast<std::int64_t>(i)) == Rational(w[i]);
    if (ok) return BranchFit{p, s};
  }
  return std::nullopt;
}

}  // namespace

int max_fit_degree(std::size_t length, int holdout) {
  return static_cast<int>((static_cast<std::int64_t>(length) - 2 * holdout) / 2) - 2;
}

QuasiPolynomial quasi_fit(const std::vector<std::int64_t>& seq, int max_degree, int holdout) {
  if (holdout < 1) throw FitInconclusive("holdout must be positive");
  std::vector<std::int64_t> branch[2];
  for (std::size_t i = 0; i < seq.size(); ++i) branch[i % 2].push_back(seq[i]);
  std::optional<BranchFit> best[2];
  for (int b = 0; b < 2; ++b) {
    for (int d = 0; d <= max_degree && !best[b]; ++d) best[b] = fit_branch(branch[b], d, holdout);
    if (!best[b])
      throw FitInconclusive("no fit of degree <= " + std::to_string(max_degree) + " on the " +
                            (b == 0 ? "even" : "odd") + " branch of a sequence of length " +
                            std::to_string(seq.size()));
  }
  QuasiPolynomial q;
  q.even = best[0]->poly;
  q.odd = best[1]->poly;
  q.even_start = best[0]->start;
  q.odd_start = best[1]->start;
  std::int64_t onset = std::max<std::int64_t>({2 * static_cast<std::int64_t>(q.even_start) - 1,
                                               2 * static_cast<std::int64_t>(q.odd_start), 0});
  q.onset = static_cast<std::size_t>(onset);
  return q;
}

}  // namespace syzlab
