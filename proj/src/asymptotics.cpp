#include "syzlab/asymptotics.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace syzlab {

std::string VerdictReport::to_csv() const {
  std::ostringstream s;
  for (std::size_t i = 0; i < columns.size(); ++i) s << (i ? "," : "") << columns[i];
  s << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) s << (i ? "," : "") << row[i];
    s << '\n';
  }
  return s.str();
}

std::string VerdictReport::to_text() const {
  std::ostringstream s;
  s << "[" << claim << "]\n";
  s << "verdict: " << (passed ? "PASS" : "FAIL") << '\n';
  s << "table:\n" << to_csv();
  for (const auto& [name, q] : fits) {
    s << "fit " << name << ": even(m) = " << q.even.to_string() << "; odd(m) = " << q.odd.to_string()
      << "; onset = " << q.onset << "; degree = " << q.degree() << '\n';
  }
  if (degree_bound) s << "degree bound: " << *degree_bound << '\n';
  for (const auto& n : notes) s << "note: " << n << '\n';
  return s.str();
}

namespace {

std::vector<std::int64_t> column(const VerdictReport& v, std::size_t c) {
  std::vector<std::int64_t> out;
  for (const auto& r : v.rows) out.push_back(r[c]);
  return out;
}

void fit_column(VerdictReport& v, std::size_t c, int holdout) {
  auto seq = column(v, c);
  QuasiPolynomial q = quasi_fit(seq, max_fit_degree(seq.size(), holdout), holdout);
  v.fits.push_back({v.columns[c], q});
  v.notes.push_back("holdout: last " + std::to_string(holdout) + " points per parity of " + v.columns[c] +
                    " reproduced exactly");
}

int min_generator_degree(const Submodule& ideal) {
  int d = -1;
  for (const auto& g : ideal.generators())
    if (d < 0 || g.degree() < d) d = g.degree();
  return d;
}

PresentedModule ring_module(const PresentedModule& m) { return PresentedModule::free(m.ring(), {0}); }

std::string join(const std::vector<Polynomial>& ps) {
  std::string s;
  for (const auto& p : ps) s += (s.empty() ? "" : ", ") + p.to_string();
  return s;
}

}  // namespace

SyzygyFamily syzygy_family(const PresentedModule& m, int j_max) {
  int steps = std::max(j_max + 2, kDefaultResolutionSteps);
  SyzygyFamily fam{minimal_free_resolution(m, steps), {}, 0};
  for (int j = 0; j <= j_max + 1; ++j) fam.modules.push_back(syzygy(fam.resolution, j));
  fam.complexity = complexity_estimate(BettiTable{fam.resolution.betti()});
  return fam;
}

VerdictReport coefficient_growth_table(const PresentedModule& m, int i_coeff, const Submodule& ideal,
                                       const GrowthParams& params) {
  const int dim = params.dimension;
  if (i_coeff < 0 || i_coeff > dim) throw Error("coefficient index must lie in 0..dimension");
  SyzygyFamily fam = syzygy_family(m, params.j_max);
  std::vector<PresentedModule> mods(fam.modules.begin(), fam.modules.begin() + params.j_max + 1);
  VerdictReport v;
  v.claim = "coefficient-growth e" + std::to_string(i_coeff);
  v.columns = {"j", "e" + std::to_string(i_coeff)};
  std::vector<PresentedModule> cut = mods;
  if (i_coeff < dim) {
    SuperficialReport sup = pick_superficial(ideal, mods, dim, params.seed, params.tries);
    std::vector<Polynomial> used(sup.sequence.begin(), sup.sequence.begin() + (dim - i_coeff));
    for (auto& c : cut) c = c.modulo_ideal(make_ideal(m.ring()->base(), used));
    v.notes.push_back("cut by superficial sequence (" + join(used) + ") after " + std::to_string(sup.tries_used) +
                      " tries");
  }
  for (int j = 0; j <= params.j_max; ++j) {
    HilbertData hd = hilbert_data(cut[j], ideal, i_coeff);
    v.rows.push_back({j, hd.e[i_coeff]});
  }
  fit_column(v, 1, params.holdout);
  v.degree_bound = fam.complexity - 1;
  int deg = v.fits.back().second.degree();
  v.passed = deg <= *v.degree_bound;
  v.notes.push_back("complexity estimate " + std::to_string(fam.complexity));
  if (i_coeff == 0) {
    v.passed = v.passed && deg == *v.degree_bound;
    v.notes.push_back("e0 growth degree must equal cx - 1");
  }
  return v;
}

VerdictReport e0_recursion_check(const PresentedModule& m, const Submodule& ideal, int j_max, int dimension) {
  SyzygyFamily fam = syzygy_family(m, j_max);
  auto betti = fam.resolution.betti();
  std::int64_t e0a = hilbert_data(ring_module(m), ideal, dimension).e[0];
  std::vector<std::int64_t> e0;
  for (int j = 0; j <= j_max; ++j) e0.push_back(hilbert_data(fam.modules[j], ideal, dimension).e[0]);
  VerdictReport v;
  v.claim = "e0-recursion";
  v.columns = {"j", "beta_j", "e0_j", "e0_j+1", "lhs", "rhs"};
  v.passed = true;
  for (int j = 0; j < j_max; ++j) {
    std::int64_t lhs = e0[j] + e0[j + 1], rhs = static_cast<std::int64_t>(betti[j]) * e0a;
    v.rows.push_back({j, static_cast<std::int64_t>(betti[j]), e0[j], e0[j + 1], lhs, rhs});
    v.passed &= lhs == rhs;
  }
  v.notes.push_back("e0(A) = " + std::to_string(e0a));
  return v;
}

VerdictReport e1_recursion_check(const PresentedModule& m, const Submodule& ideal, int j_max, int n_lo, int n_hi) {
  SyzygyFamily fam = syzygy_family(m, j_max);
  auto betti = fam.resolution.betti();
  std::int64_t e1a = hilbert_data(ring_module(m), ideal, 1).e[1];
  std::vector<std::int64_t> e1;
  for (int j = 0; j <= j_max; ++j) e1.push_back(hilbert_data(fam.modules[j], ideal, 1).e[1]);
  VerdictReport v;
  v.claim = "e1-recursion";
  v.columns = {"j", "n", "tor_j+1", "beta_j", "e1_j", "e1_j+1", "rhs"};
  v.passed = true;
  for (int n = n_lo; n <= n_hi; ++n) {
    TorLengths tor = tor_lengths(fam.resolution, j_max, ideal, n + 1);
    for (int j = 0; j < j_max; ++j) {
      std::int64_t rhs = static_cast<std::int64_t>(betti[j]) * e1a - e1[j] - e1[j + 1];
      std::int64_t lhs = static_cast<std::int64_t>(tor.total[j + 1]);
      v.rows.push_back({j, n, lhs, static_cast<std::int64_t>(betti[j]), e1[j], e1[j + 1], rhs});
      v.passed &= lhs == rhs;
    }
  }
  v.notes.push_back("e1(A) = " + std::to_string(e1a));
  return v;
}

VerdictReport tor_rigidity_check(const PresentedModule& m, const Submodule& ideal, int r, int n_max, int i_max) {
  ResolutionData res = minimal_free_resolution(m, std::max(i_max + 1, 2));
  const int d = min_generator_degree(ideal);
  const int n0 = std::max(r, 1);
  std::vector<TorLengths> tor;
  for (int n = n0; n <= n_max + 1; ++n) tor.push_back(tor_lengths(res, i_max, ideal, n));
  VerdictReport v;
  v.claim = "tor-rigidity";
  v.columns = {"i", "n", "length"};
  v.passed = true;
  for (int i = 1; i <= i_max; ++i) {
    for (int n = n0; n <= n_max + 1; ++n) v.rows.push_back({i, n, static_cast<std::int64_t>(tor[n - n0].total[i])});
    for (int n = n0; n <= n_max; ++n) {
      const auto& a = tor[n - n0];
      const auto& b = tor[n - n0 + 1];
      std::map<int, std::size_t> shifted;
      for (const auto& [deg, dim] : a.graded[i]) shifted[deg + d] = dim;
      if (a.total[i] != b.total[i]) {
        v.passed = false;
        v.notes.push_back("length changes at i=" + std::to_string(i) + ", n=" + std::to_string(n));
      } else if (shifted != b.graded[i]) {
        v.passed = false;
        v.notes.push_back("graded dimensions differ at i=" + std::to_string(i) + ", n=" + std::to_string(n));
      }
    }
  }
  v.notes.push_back("graded vectors compared up to a twist by " + std::to_string(d) + " from n = " + std::to_string(n0));
  return v;
}

VerdictReport fixed_n_growth_check(const PresentedModule& m, const Submodule& ideal, int n_fixed,
                                   const GrowthParams& params) {
  SyzygyFamily fam = syzygy_family(m, params.j_max);
  VerdictReport v;
  v.claim = "fixed-n-growth n=" + std::to_string(n_fixed);
  v.columns = {"j", "length"};
  for (int j = 0; j <= params.j_max; ++j) {
    const auto& s = fam.modules[j];
    std::int64_t hi = hilbert_samuel_value(s, ideal, n_fixed + 1);
    std::int64_t lo = n_fixed == 0 ? 0 : hilbert_samuel_value(s, ideal, n_fixed);
    v.rows.push_back({j, hi - lo});
  }
  fit_column(v, 1, params.holdout);
  v.degree_bound = fam.complexity - 1;
  v.passed = v.fits.back().second.degree() <= *v.degree_bound;
  return v;
}

VerdictReport dual_growth_check(const PresentedModule& m, const Submodule& ideal, int i_coeff,
                                const GrowthParams& params) {
  const int d = params.dimension;
  if (i_coeff < 0 || i_coeff > d) throw Error("dual coefficient index must lie in 0..dimension");
  if (!m.ring()->is_gorenstein()) throw NotGorenstein("dual coefficients need a Gorenstein ring");
  SyzygyFamily fam = syzygy_family(m, params.j_max);
  auto betti = fam.resolution.betti();
  std::vector<std::int64_t> ea = hilbert_data(ring_module(m), ideal, d).e;
  std::vector<std::vector<std::int64_t>> c, e;
  for (int j = 0; j <= params.j_max; ++j) {
    c.push_back(dual_hilbert_data(fam.modules[j], ideal, d).c);
    e.push_back(hilbert_data(fam.modules[j], ideal, d).e);
  }
  // Ext^{j+1}(M, A/I^{n+1}) for j = 0..j_max-1, grown until every numerator stabilizes.
  std::vector<std::vector<std::int64_t>> ext(params.j_max);
  int target = std::max(6, d + 4);
  while (true) {
    for (int n = static_cast<int>(ext.empty() ? 0 : ext[0].size()); !ext.empty() && n <= target; ++n) {
      auto lens = ext_lengths(fam.resolution, params.j_max, ideal, n + 1);
      for (int j = 0; j < params.j_max; ++j) ext[j].push_back(static_cast<std::int64_t>(lens[j + 1]));
    }
    bool stable =
        std::all_of(ext.begin(), ext.end(), [&](const auto& vals) { return detail::numerator_stable(vals, d); });
    if (stable || target >= kHilbertValueCap) break;
    target = std::min(target + 4, kHilbertValueCap);
  }
  VerdictReport v;
  v.claim = "dual-growth c" + std::to_string(i_coeff);
  v.columns = {"j", "c" + std::to_string(i_coeff), "e0"};
  if (i_coeff != 0) v.columns.push_back("c0");
  for (int j = 0; j <= params.j_max; ++j) {
    v.rows.push_back({j, c[j][i_coeff], e[j][0]});
    if (i_coeff != 0) v.rows.back().push_back(c[j][0]);
  }
  v.passed = true;
  for (int j = 0; j <= params.j_max; ++j)
    if (c[j][0] != e[j][0]) {
      v.passed = false;
      v.notes.push_back("c0 != e0 at j=" + std::to_string(j));
    }
  int checked = 0;
  for (int j = 0; j < params.j_max; ++j) {
    std::vector<std::int64_t> vcoef = hilbert_coefficients(series_numerator(ext[j], d), std::max(d - 1, 0));
    for (int l = 0; l <= d; ++l) {
      std::int64_t lhs = static_cast<std::int64_t>(betti[j]) * ea[l] - c[j][l] - c[j + 1][l];
      std::int64_t rhs = l == 0 ? 0 : vcoef[l - 1];
      ++checked;
      if (lhs != rhs) {
        v.passed = false;
        v.notes.push_back("dual recursion fails at j=" + std::to_string(j) + ", l=" + std::to_string(l) + ": " +
                          std::to_string(lhs) + " != " + std::to_string(rhs));
      }
    }
  }
  v.notes.push_back("dual recursion checked at " + std::to_string(checked) + " (j, l) pairs");
  fit_column(v, 1, params.holdout);
  v.degree_bound = fam.complexity - 1;
  v.passed = v.passed && v.fits.back().second.degree() <= *v.degree_bound;
  return v;
}

VerdictReport depth_parity_check(const DepthTable& table) {
  VerdictReport v;
  v.claim = "depth-parity";
  v.columns = {"j", "depth"};
  for (std::size_t j = 0; j < table.depth.size(); ++j) v.rows.push_back({static_cast<std::int64_t>(j), table.depth[j]});
  if (table.depth.size() < 8) {
    v.passed = false;
    v.notes.push_back("table shorter than 8 entries");
    return v;
  }
  v.passed = true;
  for (std::size_t b = 0; b < 2; ++b) {
    std::vector<int> sub;
    for (std::size_t j = b; j < table.depth.size(); j += 2) sub.push_back(table.depth[j]);
    std::size_t k = sub.size();
    bool tail = sub[k - 1] == sub[k - 2] && sub[k - 2] == sub[k - 3];
    std::size_t onset = k - 1;
    while (onset > 0 && sub[onset - 1] == sub[k - 1]) --onset;
    v.notes.push_back(std::string(b == 0 ? "even" : "odd") + " branch constant " + std::to_string(sub[k - 1]) +
                      " from j=" + std::to_string(2 * onset + b));
    v.passed &= tail;
  }
  return v;
}

VerdictReport betti_report(const PresentedModule& m, int j_max, int holdout) {
  // The fit and complexity use at least the default resolution length even when fewer rows are shown.
  ResolutionData res = minimal_free_resolution(m, std::max(j_max, kDefaultResolutionSteps));
  auto betti = res.betti();
  VerdictReport v;
  v.claim = "betti";
  v.columns = {"j", "beta"};
  for (int j = 0; j <= j_max && j < static_cast<int>(betti.size()); ++j)
    v.rows.push_back({j, static_cast<std::int64_t>(betti[j])});
  int cx = complexity_estimate(BettiTable{betti}, holdout);
  if (!res.terminated) {
    std::vector<std::int64_t> seq(betti.begin(), betti.end());
    v.fits.push_back({"beta", quasi_fit(seq, max_fit_degree(seq.size(), holdout), holdout)});
  }
  v.notes.push_back("fit over j = 0.." + std::to_string(betti.size() - 1));
  v.notes.push_back("complexity estimate " + std::to_string(cx));
  v.passed = true;
  return v;
}

}  // namespace syzlab
