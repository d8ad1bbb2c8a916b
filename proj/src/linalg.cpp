#include "syzlab/linalg.hpp"

#include <algorithm>

namespace syzlab {

std::size_t rank_mod_p(DenseMatrix rows, const PrimeField& field) {
  if (rows.empty()) return 0;
  const std::size_t ncols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    std::uint32_t inv = field.inv(rows[rank][col]);
    for (std::size_t c = col; c < ncols; ++c) rows[rank][c] = field.mul(rows[rank][c], inv);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      std::uint32_t f = rows[r][col];
      if (f == 0) continue;
      std::uint32_t nf = field.neg(f);
      for (std::size_t c = col; c < ncols; ++c)
        if (rows[rank][c]) rows[r][c] = field.add(rows[r][c], field.mul(nf, rows[rank][c]));
    }
    ++rank;
  }
  return rank;
}

bool infinite_quotient(const GroebnerBasis& gb) {
  const auto leads = gb.lead_monomials_by_position();
  const std::size_t nv = gb.ambient()->ring()->nvars();
  for (const auto& ls : leads) {
    bool killed = std::any_of(ls.begin(), ls.end(), [](const Monomial& m) { return m.is_one(); });
    if (killed) continue;
    for (std::size_t v = 0; v < nv; ++v) {
      bool found = std::any_of(ls.begin(), ls.end(),
                               [&](const Monomial& m) { return m.pure_power_variable() == static_cast<int>(v); });
      if (!found) return true;
    }
  }
  return false;
}

std::optional<StandardBasis> StandardBasis::build(const GroebnerBasis& gb) {
  if (infinite_quotient(gb)) return std::nullopt;
  StandardBasis sb(gb);
  const auto leads = gb.lead_monomials_by_position();
  const std::size_t nv = gb.ambient()->ring()->nvars();
  sb.lookup_.resize(leads.size());
  for (std::uint32_t pos = 0; pos < leads.size(); ++pos) {
    const auto& ls = leads[pos];
    if (std::any_of(ls.begin(), ls.end(), [](const Monomial& m) { return m.is_one(); })) continue;
    std::vector<int> bound(nv, 0);
    for (const auto& m : ls) {
      int v = m.pure_power_variable();
      if (v >= 0 && (bound[v] == 0 || m[v] < bound[v])) bound[v] = m[v];
    }
    std::vector<int> e(nv, 0);
    while (true) {
      Monomial m{std::span<const int>(e)};
      bool standard = std::none_of(ls.begin(), ls.end(), [&](const Monomial& l) { return l.divides(m); });
      if (standard) {
        sb.lookup_[pos].emplace(m, sb.terms_.size());
        sb.terms_.push_back({m, pos});
      }
      std::size_t v = 0;
      while (v < nv && ++e[v] >= bound[v]) e[v++] = 0;
      if (v == nv) break;
    }
  }
  return sb;
}

int StandardBasis::degree(std::size_t k) const {
  return terms_[k].first.degree() + gb_.ambient()->shift(terms_[k].second);
}

std::map<int, std::size_t> StandardBasis::graded_dimensions() const {
  std::map<int, std::size_t> out;
  for (std::size_t k = 0; k < terms_.size(); ++k) ++out[degree(k)];
  return out;
}

std::optional<std::size_t> StandardBasis::index(const Monomial& m, std::uint32_t position) const {
  if (position >= lookup_.size()) return std::nullopt;
  auto it = lookup_[position].find(m);
  if (it == lookup_[position].end()) return std::nullopt;
  return it->second;
}

std::vector<std::pair<std::size_t, std::uint32_t>> StandardBasis::coordinates(const FreeElement& f) const {
  std::vector<std::pair<std::size_t, std::uint32_t>> out;
  FreeElement nf = gb_.normal_form(f);
  for (const auto& t : nf.terms()) {
    auto idx = index(t.monomial, t.position);
    if (!idx) throw Error("normal form left the standard basis");
    out.push_back({*idx, t.coeff});
  }
  return out;
}

std::map<int, std::size_t> graded_map_rank(const StandardBasis& basis, const std::vector<int>& src_shift,
                                           const std::vector<std::vector<Polynomial>>& images) {
  const ModulePtr& amb = basis.groebner_basis().ambient();
  if (amb->rank() != 1) throw AmbientMismatch();
  const PrimeField& F = amb->ring()->field();
  const std::size_t lsize = basis.size();
  // Columns of the map grouped by source degree; each column is sparse over
  // target index j*lsize + standard index.
  std::map<int, std::vector<std::vector<std::pair<std::size_t, std::uint32_t>>>> columns;
  for (std::size_t k = 0; k < images.size(); ++k) {
    for (std::size_t b = 0; b < lsize; ++b) {
      const Monomial& m = basis.terms()[b].first;
      std::vector<std::pair<std::size_t, std::uint32_t>> col;
      for (std::size_t j = 0; j < images[k].size(); ++j) {
        const Polynomial& p = images[k][j];
        if (p.is_zero()) continue;
        FreeElement v = FreeElement::from_components(amb, {p.times_term(m, 1)});
        for (auto [idx, c] : basis.coordinates(v)) col.push_back({j * lsize + idx, c});
      }
      columns[m.degree() + src_shift[k]].push_back(std::move(col));
    }
  }
  std::map<int, std::size_t> out;
  for (auto& [deg, cols] : columns) {
    std::vector<std::size_t> used;
    for (const auto& c : cols)
      for (const auto& [r, v] : c) used.push_back(r);
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    if (used.empty()) {
      out[deg] = 0;
      continue;
    }
    DenseMatrix rows(cols.size(), std::vector<std::uint32_t>(used.size(), 0));
    for (std::size_t c = 0; c < cols.size(); ++c)
      for (const auto& [r, v] : cols[c]) {
        std::size_t at = std::lower_bound(used.begin(), used.end(), r) - used.begin();
        rows[c][at] = F.add(rows[c][at], v);
      }
    out[deg] = rank_mod_p(std::move(rows), F);
  }
  return out;
}

}  // namespace syzlab
