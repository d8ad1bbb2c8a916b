#include "syzlab/resolution.hpp"

#include <algorithm>

#include "syzlab/linalg.hpp"
#include "syzlab/quasi_polynomial.hpp"

namespace syzlab {

QuotientRing::QuotientRing(RingPtr base, std::vector<Polynomial> relations)
    : base_(std::move(base)), relations_(std::move(relations)) {
  for (const auto& f : relations_) {
    if (!f.ring()->compatible(*base_)) throw ModulusMismatch();
    if (f.is_zero()) throw NotRegularSequence("zero relation");
    if (!f.is_homogeneous()) throw NotHomogeneous("relation " + f.to_string() + " is not homogeneous");
    if (f.degree() < 2) throw NotRegularSequence("relation " + f.to_string() + " has degree below 2");
  }
  Submodule ideal = make_ideal(base_, relations_);
  relation_gb_ = std::make_shared<const GroebnerBasis>(buchberger(ideal));
  if (relations_.size() == 2) {
    Submodule first = make_ideal(base_, {relations_[0]});
    Submodule colon = colon_by_element(first, relations_[1], whole_module(first.ambient()));
    if (!equal(colon, first))
      throw NotRegularSequence("relations do not form a regular sequence: (f1):f2 != (f1)");
  }
}

QuotientPtr make_quotient(RingPtr base, std::vector<Polynomial> relations) {
  return std::make_shared<const QuotientRing>(std::move(base), std::move(relations));
}

Polynomial QuotientRing::reduce(const Polynomial& p) const {
  if (relations_.empty() || p.is_zero()) return p;
  return relation_gb_->normal_form(FreeElement::from_components(relation_gb_->ambient(), {p})).component(0);
}

Submodule QuotientRing::relation_ideal() const { return make_ideal(base_, relations_); }

namespace {

FreeElement normalize(const QuotientRing& A, const ModulePtr& F, const FreeElement& e) {
  if (A.relations().empty()) return FreeElement::rehome(F, e);
  auto comps = e.components();
  for (auto& c : comps) c = A.reduce(c);
  return FreeElement::from_components(F, comps);
}

std::vector<FreeElement> trivial_columns_of(const QuotientRing& A, const ModulePtr& F) {
  std::vector<FreeElement> out;
  for (std::size_t j = 0; j < F->rank(); ++j)
    for (const auto& f : A.relations()) out.push_back(FreeElement::unit(F, j).times(f));
  return out;
}

}  // namespace

PresentedModule::PresentedModule(QuotientPtr ring, std::vector<int> shifts, std::vector<FreeElement> columns,
                                 bool minimal)
    : ring_(std::move(ring)), free_(make_free_module(ring_->base(), std::move(shifts))), minimal_(minimal),
      lazy_(std::make_shared<Lazy>()) {
  for (const auto& c : columns) {
    if (c.module()->rank() != free_->rank() || c.module()->shifts() != free_->shifts()) throw AmbientMismatch();
    if (!c.is_homogeneous()) throw NotHomogeneous("presentation column " + c.to_string() + " is not homogeneous");
    FreeElement n = normalize(*ring_, free_, c);
    if (!n.is_zero()) columns_.push_back(std::move(n));
  }
}

PresentedModule PresentedModule::free(QuotientPtr ring, std::vector<int> shifts) {
  return PresentedModule(std::move(ring), std::move(shifts), {}, true);
}

PresentedModule PresentedModule::cyclic(QuotientPtr ring, const std::vector<Polynomial>& ideal) {
  ModulePtr F = make_free_module(ring->base(), {0});
  std::vector<FreeElement> cols;
  for (const auto& p : ideal) cols.push_back(FreeElement::from_components(F, {p}));
  return PresentedModule(std::move(ring), {0}, std::move(cols));
}

PresentedModule PresentedModule::residue_field(QuotientPtr ring) {
  std::vector<Polynomial> vars;
  for (std::size_t v = 0; v < ring->base()->nvars(); ++v) vars.push_back(Polynomial::variable(ring->base(), v));
  return cyclic(std::move(ring), vars);
}

std::vector<FreeElement> PresentedModule::trivial_columns() const { return trivial_columns_of(*ring_, free_); }

std::vector<FreeElement> PresentedModule::all_columns() const {
  auto out = columns_;
  auto t = trivial_columns();
  out.insert(out.end(), t.begin(), t.end());
  return out;
}

Submodule PresentedModule::relations() const { return Submodule(free_, all_columns()); }

const GroebnerBasis& PresentedModule::relation_basis() const {
  std::call_once(lazy_->once, [&] { lazy_->gb.emplace(buchberger(relations())); });
  return *lazy_->gb;
}

PresentedModule PresentedModule::modulo_ideal(const Submodule& ideal) const {
  auto cols = columns_;
  for (const auto& p : ideal_generators(ideal))
    for (std::size_t j = 0; j < rank(); ++j) cols.push_back(FreeElement::unit(free_, j).times(p));
  return PresentedModule(ring_, shifts(), std::move(cols));
}

PresentedModule minimal_presentation(const PresentedModule& m) {
  if (m.is_minimal()) return m;
  const QuotientRing& A = *m.ring();
  const PrimeField& F = A.base()->field();
  std::vector<int> shifts = m.shifts();
  std::vector<std::vector<Polynomial>> cols;
  for (const auto& c : m.columns()) cols.push_back(c.components());
  while (true) {
    std::size_t pc = 0, pr = 0;
    bool found = false;
    for (std::size_t c = 0; c < cols.size() && !found; ++c)
      for (std::size_t r = 0; r < shifts.size() && !found; ++r)
        if (cols[c][r].is_unit()) {
          pc = c;
          pr = r;
          found = true;
        }
    if (!found) break;
    const std::vector<Polynomial> pivot = cols[pc];
    std::uint32_t inv = F.inv(pivot[pr].lead_coeff());
    std::vector<std::vector<Polynomial>> next;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (c == pc) continue;
      std::vector<Polynomial> col = cols[c];
      Polynomial factor = col[pr].scaled(inv);
      if (!factor.is_zero())
        for (std::size_t r = 0; r < col.size(); ++r) col[r] = A.reduce(col[r] - pivot[r] * factor);
      col.erase(col.begin() + pr);
      next.push_back(std::move(col));
    }
    shifts.erase(shifts.begin() + pr);
    cols.swap(next);
  }
  ModulePtr Fm = make_free_module(A.base(), shifts);
  std::vector<FreeElement> elems;
  for (const auto& c : cols) {
    FreeElement e = normalize(A, Fm, FreeElement::from_components(Fm, c));
    if (!e.is_zero()) elems.push_back(std::move(e));
  }
  Submodule base(Fm, trivial_columns_of(A, Fm));
  auto kept = minimal_generators(elems, base);
  return PresentedModule(m.ring(), shifts, std::move(kept), true);
}

std::vector<std::size_t> ResolutionData::betti() const {
  std::vector<std::size_t> out;
  for (const auto& f : free_modules) out.push_back(f->rank());
  return out;
}

ResolutionData minimal_free_resolution(const PresentedModule& m, int steps) {
  if (steps < 1) throw Error("resolution needs at least one step");
  PresentedModule m0 = minimal_presentation(m);
  const QuotientRing& A = *m0.ring();
  ResolutionData res;
  res.ring = m0.ring();
  res.free_modules.push_back(m0.free_module());
  res.terminated = m0.rank() == 0;
  std::vector<FreeElement> cols = m0.columns();
  for (int i = 0; i < steps; ++i) {
    const ModulePtr Fi = res.free_modules[i];
    std::vector<int> next_shifts;
    for (const auto& c : cols) next_shifts.push_back(c.degree());
    ModulePtr Fn = make_free_module(A.base(), next_shifts);
    res.differentials.push_back(cols);
    res.free_modules.push_back(Fn);
    if (Fn->rank() == 0) res.terminated = true;
    if (i + 1 == steps) break;
    std::vector<FreeElement> gens = cols;
    std::vector<int> degs = next_shifts;
    for (auto& t : trivial_columns_of(A, Fi)) {
      degs.push_back(t.degree());
      gens.push_back(std::move(t));
    }
    Submodule syz = generator_syzygies(Fi, gens, degs);
    std::vector<FreeElement> proj;
    for (const auto& s : syz.generators()) {
      auto comps = s.components();
      comps.resize(Fn->rank(), Polynomial(A.base()));
      FreeElement e = normalize(A, Fn, FreeElement::from_components(Fn, comps));
      if (!e.is_zero()) proj.push_back(std::move(e));
    }
    cols = minimal_generators(proj, Submodule(Fn, trivial_columns_of(A, Fn)));
  }
  return res;
}

PresentedModule syzygy(const ResolutionData& res, int j) {
  if (j < 0 || static_cast<std::size_t>(j) >= res.differentials.size()) throw Error("resolution too short for syzygy");
  return PresentedModule(res.ring, res.shifts(j), res.differentials[j], true);
}

PresentedModule syzygy(const PresentedModule& m, int j) {
  if (j == 0) return minimal_presentation(m);
  return syzygy(minimal_free_resolution(m, j + 1), j);
}

namespace {

StandardBasis quotient_basis(const QuotientRing& A, const Submodule& ideal, int power) {
  Submodule k = ideal_power(ideal, power) + A.relation_ideal();
  auto sb = StandardBasis::build(buchberger(k));
  if (!sb) throw NotPrimary("A/I^" + std::to_string(power) + " has infinite length");
  return std::move(*sb);
}

/// images[k][j] = entry (j, k) of the differential, i.e. column k.
std::vector<std::vector<Polynomial>> column_images(const std::vector<FreeElement>& cols) {
  std::vector<std::vector<Polynomial>> out;
  for (const auto& c : cols) out.push_back(c.components());
  return out;
}

std::vector<std::vector<Polynomial>> row_images(const std::vector<FreeElement>& cols, std::size_t rows) {
  std::vector<std::vector<Polynomial>> out(rows);
  for (const auto& c : cols) {
    auto comps = c.components();
    for (std::size_t j = 0; j < rows; ++j) out[j].push_back(comps[j]);
  }
  return out;
}

const std::vector<FreeElement>* differential(const ResolutionData& res, std::size_t i) {
  if (i < res.differentials.size()) return &res.differentials[i];
  if (res.terminated) return nullptr;
  throw Error("resolution too short: need differential d_" + std::to_string(i + 1));
}

std::size_t rank_at(const ResolutionData& res, std::size_t i) {
  if (i < res.free_modules.size()) return res.free_modules[i]->rank();
  if (res.terminated) return 0;
  throw Error("resolution too short");
}

std::size_t sum_values(const std::map<int, std::size_t>& m) {
  std::size_t s = 0;
  for (const auto& [k, v] : m) s += v;
  return s;
}

}  // namespace

TorLengths tor_lengths(const ResolutionData& res, int i_max, const Submodule& ideal, int power) {
  StandardBasis L = quotient_basis(*res.ring, ideal, power);
  auto ldims = L.graded_dimensions();
  auto map_rank = [&](std::size_t i) -> std::map<int, std::size_t> {
    // d_i : F_i -> F_{i-1}, keyed by source degree.
    if (i == 0) return {};
    const auto* d = differential(res, i - 1);
    if (!d || d->empty()) return {};
    return graded_map_rank(L, res.shifts(i), column_images(*d));
  };
  TorLengths out;
  std::map<int, std::size_t> lower = map_rank(0);
  for (int i = 0; i <= i_max; ++i) {
    std::map<int, std::size_t> upper = map_rank(i + 1);
    std::map<int, std::size_t> g;
    if (rank_at(res, i) > 0) {
      for (int s : res.shifts(i))
        for (const auto& [d, n] : ldims) g[d + s] += n;
    }
    for (const auto& [d, r] : lower) g[d] -= r;
    for (const auto& [d, r] : upper) g[d] -= r;
    std::erase_if(g, [](const auto& kv) { return kv.second == 0; });
    out.total.push_back(sum_values(g));
    out.graded.push_back(std::move(g));
    lower = std::move(upper);
  }
  return out;
}

std::vector<std::size_t> ext_lengths(const ResolutionData& res, int i_max, const Submodule& ideal, int power) {
  StandardBasis L = quotient_basis(*res.ring, ideal, power);
  // delta^i : Hom(F_i, L) -> Hom(F_{i+1}, L).
  auto cochain_rank = [&](std::size_t i) -> std::size_t {
    const auto* d = differential(res, i);
    if (!d || d->empty() || rank_at(res, i) == 0) return 0;
    std::vector<int> src;
    for (int s : res.shifts(i)) src.push_back(-s);
    return sum_values(graded_map_rank(L, src, row_images(*d, rank_at(res, i))));
  };
  std::vector<std::size_t> out;
  std::size_t prev = 0;
  for (int i = 0; i <= i_max; ++i) {
    std::size_t cur = cochain_rank(i);
    out.push_back(rank_at(res, i) * L.size() - cur - prev);
    prev = cur;
  }
  return out;
}

PolyMatrix to_matrix(const std::vector<FreeElement>& columns, std::size_t rows) {
  PolyMatrix m(rows);
  for (const auto& c : columns) {
    auto comps = c.components();
    for (std::size_t r = 0; r < rows; ++r) m[r].push_back(comps[r]);
  }
  return m;
}

PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b, const RingPtr& ring) {
  const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  PolyMatrix out(n, std::vector<Polynomial>(m, Polynomial(ring)));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != k) throw Error("matrix size mismatch");
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t l = 0; l < k; ++l)
        if (!a[i][l].is_zero() && !b[l][j].is_zero()) out[i][j] = out[i][j] + a[i][l] * b[l][j];
  }
  return out;
}

MatrixFactorization matrix_factorization(const PresentedModule& m, int cap) {
  const QuotientRing& A = *m.ring();
  if (A.codimension() != 1) throw Error("matrix factorization needs a hypersurface");
  const Polynomial& f = A.relations()[0];
  ResolutionData res = minimal_free_resolution(m, cap);
  if (res.terminated) return {};
  const RingPtr& Q = A.base();
  for (std::size_t i = 0; i + 2 < res.free_modules.size(); ++i) {
    std::size_t b = res.free_modules[i]->rank();
    if (res.free_modules[i + 1]->rank() != b || res.free_modules[i + 2]->rank() != b) continue;
    std::vector<int> s0 = res.shifts(i), s2 = res.shifts(i + 2);
    for (int& s : s0) s += f.degree();
    std::sort(s0.begin(), s0.end());
    std::sort(s2.begin(), s2.end());
    if (s0 != s2) continue;
    const auto& cols = res.differentials[i];
    Lifter lifter(res.free_modules[i], cols, res.shifts(i + 1));
    PolyMatrix e(b, std::vector<Polynomial>(b, Polynomial(Q)));
    bool ok = true;
    for (std::size_t j = 0; j < b && ok; ++j) {
      auto c = lifter.lift(FreeElement::unit(res.free_modules[i], j).times(f));
      if (!c) {
        ok = false;
        break;
      }
      for (std::size_t r = 0; r < b; ++r) e[r][j] = (*c)[r];
    }
    if (!ok) continue;
    PolyMatrix d = to_matrix(cols, b);
    PolyMatrix de = multiply(d, e, Q), ed = multiply(e, d, Q);
    for (std::size_t r = 0; r < b; ++r)
      for (std::size_t c = 0; c < b; ++c) {
        Polynomial want = r == c ? f : Polynomial(Q);
        if (!(de[r][c] == want) || !(ed[r][c] == want)) ok = false;
      }
    if (!ok) continue;
    return MatrixFactorization{std::move(d), std::move(e), i};
  }
  throw NotPeriodicYet("no periodic stretch within " + std::to_string(cap) + " steps");
}

EisenbudOperators eisenbud_operators(const ResolutionData& res) {
  const QuotientRing& A = *res.ring;
  const RingPtr& Q = A.base();
  const std::size_t c = A.codimension();
  EisenbudOperators out;
  out.operators.resize(c);
  if (c == 0) return out;
  ModulePtr amb = ideal_ambient(Q);
  std::vector<FreeElement> fgens;
  std::vector<int> fdeg;
  for (const auto& f : A.relations()) {
    fgens.push_back(FreeElement::from_components(amb, {f}));
    fdeg.push_back(f.degree());
  }
  Lifter lifter(amb, fgens, fdeg);
  for (std::size_t i = 0; i + 1 < res.differentials.size(); ++i) {
    std::size_t bi = res.free_modules[i]->rank(), b1 = res.free_modules[i + 1]->rank(),
                b2 = res.free_modules[i + 2]->rank();
    PolyMatrix p = multiply(to_matrix(res.differentials[i], bi), to_matrix(res.differentials[i + 1], b1), Q);
    for (std::size_t k = 0; k < c; ++k)
      out.operators[k].emplace_back(bi, std::vector<Polynomial>(b2, Polynomial(Q)));
    for (std::size_t r = 0; r < bi; ++r)
      for (std::size_t col = 0; col < b2; ++col) {
        const Polynomial& entry = p[r][col];
        if (entry.is_zero()) continue;
        auto coeffs = lifter.lift(FreeElement::from_components(amb, {entry}));
        if (!coeffs) throw DivisionFailure("entry " + entry.to_string() + " of d*d is not in the relation ideal");
        for (std::size_t k = 0; k < c; ++k) out.operators[k][i][r][col] = A.reduce((*coeffs)[k]);
      }
  }
  return out;
}

namespace {

bool zero_mod_relations(const QuotientRing& A, const PolyMatrix& m) {
  for (const auto& row : m)
    for (const auto& e : row)
      if (!A.reduce(e).is_zero()) return false;
  return true;
}

PolyMatrix subtract(const PolyMatrix& a, const PolyMatrix& b) {
  PolyMatrix out = a;
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = 0; c < a[r].size(); ++c) out[r][c] = a[r][c] - b[r][c];
  return out;
}

}  // namespace

bool operators_commute_with_differential(const ResolutionData& res, const EisenbudOperators& ops) {
  const QuotientRing& A = *res.ring;
  const RingPtr& Q = A.base();
  for (const auto& t : ops.operators) {
    for (std::size_t i = 0; i + 1 < t.size() && i + 2 < res.differentials.size(); ++i) {
      PolyMatrix d_top = to_matrix(res.differentials[i], res.free_modules[i]->rank());
      PolyMatrix d_bottom = to_matrix(res.differentials[i + 2], res.free_modules[i + 2]->rank());
      PolyMatrix lhs = multiply(d_top, t[i + 1], Q);
      PolyMatrix rhs = multiply(t[i], d_bottom, Q);
      if (!zero_mod_relations(A, subtract(lhs, rhs))) return false;
    }
  }
  return true;
}

bool operators_commute_on_residue_field(const ResolutionData& res, const EisenbudOperators& ops) {
  const RingPtr& Q = res.ring->base();
  for (std::size_t a = 0; a < ops.operators.size(); ++a)
    for (std::size_t b = a + 1; b < ops.operators.size(); ++b) {
      const auto &s = ops.operators[a], &t = ops.operators[b];
      for (std::size_t i = 0; i + 2 < s.size() && i + 2 < t.size(); ++i) {
        PolyMatrix comm = subtract(multiply(s[i], t[i + 2], Q), multiply(t[i], s[i + 2], Q));
        for (const auto& row : comm)
          for (const auto& e : row)
            for (const auto& term : e.terms())
              if (term.monomial.is_one()) return false;
      }
    }
  return true;
}

int complexity_estimate(const BettiTable& table, int holdout) {
  std::vector<std::int64_t> seq(table.betti.begin(), table.betti.end());
  int max_degree = max_fit_degree(seq.size(), holdout);
  if (max_degree < 0) throw FitInconclusive("Betti sequence too short for a fit");
  QuasiPolynomial q = quasi_fit(seq, max_degree, holdout);
  return q.degree() < 0 ? 0 : q.degree() + 1;
}

}  // namespace syzlab
