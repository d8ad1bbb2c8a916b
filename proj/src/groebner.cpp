#include "syzlab/groebner.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <unordered_set>

namespace syzlab {

namespace {

/// Leads of a growing basis grouped by position, for divisor lookup.
class LeadIndex {
 public:
  explicit LeadIndex(std::size_t rank) : by_position_(rank) {}
  void add(std::size_t index, const FreeElement& g) { by_position_[g.lead().position].push_back({g.lead().monomial, index}); }
  /// Index of the first basis element whose lead divides m*e_pos, or npos.
  std::size_t find(const Monomial& m, std::uint32_t pos) const {
    for (const auto& [lm, idx] : by_position_[pos])
      if (lm.degree() <= m.degree() && lm.divides(m)) return idx;
    return static_cast<std::size_t>(-1);
  }

 private:
  std::vector<std::vector<std::pair<Monomial, std::size_t>>> by_position_;
};

/// dst = src[from..] - c*m*g, all term lists sorted decreasingly.
void subtract_multiple(const FreeModule& M, const PrimeField& F, const std::vector<ModuleTerm>& src,
                       std::size_t from, const std::vector<ModuleTerm>& g, const Monomial& m, std::uint32_t c,
                       std::vector<ModuleTerm>& dst) {
  dst.clear();
  dst.reserve(src.size() - from + g.size());
  std::uint32_t neg = F.neg(c);
  std::size_t i = from, j = 0;
  const std::size_t n = src.size(), k = g.size();
  while (i < n && j < k) {
    Monomial mj = g[j].monomial * m;
    auto cmp = M.compare(src[i].monomial, src[i].position, mj, g[j].position);
    if (cmp > 0) {
      dst.push_back(src[i++]);
    } else if (cmp < 0) {
      dst.push_back({mj, g[j].position, F.mul(g[j].coeff, neg)});
      ++j;
    } else {
      std::uint32_t v = F.add(src[i].coeff, F.mul(g[j].coeff, neg));
      if (v != 0) dst.push_back({mj, g[j].position, v});
      ++i;
      ++j;
    }
  }
  for (; i < n; ++i) dst.push_back(src[i]);
  for (; j < k; ++j) dst.push_back({g[j].monomial * m, g[j].position, F.mul(g[j].coeff, neg)});
}

/// Full reduction of f by a list of monic elements. When `quotients` is given,
/// quotient terms are accumulated per basis index.
FreeElement reduce_by(const FreeElement& f, const std::vector<FreeElement>& basis, const LeadIndex& index,
                      std::vector<std::vector<Term>>* quotients) {
  const ModulePtr& mod = f.module();
  const FreeModule& M = *mod;
  const PrimeField& F = mod->ring()->field();
  std::vector<ModuleTerm> work = f.terms(), next, rem;
  std::size_t start = 0;
  while (start < work.size()) {
    const ModuleTerm t = work[start];
    std::size_t k = index.find(t.monomial, t.position);
    if (k == static_cast<std::size_t>(-1)) {
      rem.push_back(t);
      ++start;
      continue;
    }
    const FreeElement& g = basis[k];
    Monomial q = t.monomial / g.lead().monomial;
    std::uint32_t c = F.mul(t.coeff, F.inv(g.lead().coeff));
    if (quotients) (*quotients)[k].push_back({q, c});
    subtract_multiple(M, F, work, start, g.terms(), q, c, next);
    work.swap(next);
    start = 0;
  }
  return FreeElement::from_terms(mod, std::move(rem));
}

std::mutex g_store_mutex;
std::shared_ptr<GroebnerStore> g_store;

std::string order_name(const ModuleOrder& o, const MonomialOrder& base) {
  std::ostringstream s;
  s << (base.kind() == OrderKind::DegRevLex ? "degrevlex" : "deglex") << ';';
  switch (o.kind) {
    case ModuleOrderKind::TermOverPosition: s << "top"; break;
    case ModuleOrderKind::PositionOverTerm: s << "pot"; break;
    case ModuleOrderKind::Schreyer: s << "schreyer"; break;
  }
  s << ";prefix=" << o.elimination_prefix;
  for (std::size_t i = 0; i < o.schreyer_monomials.size(); ++i) {
    s << ";" << o.schreyer_positions[i] << ':';
    for (int e : o.schreyer_monomials[i].exponents()) s << e << '.';
  }
  return s.str();
}

std::vector<std::string> split_components(std::string_view line) {
  if (line.size() < 2 || line.front() != '[' || line.back() != ']') throw Error("malformed basis element");
  line = line.substr(1, line.size() - 2);
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t c = line.find(',', pos);
    std::string_view part = line.substr(pos, c == std::string_view::npos ? std::string_view::npos : c - pos);
    while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
    out.emplace_back(part);
    if (c == std::string_view::npos) break;
    pos = c + 1;
  }
  return out;
}

void dedupe(std::vector<FreeElement>& gens) {
  std::unordered_set<std::string> seen;
  std::vector<FreeElement> out;
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    FreeElement m = g.monic();
    if (seen.insert(m.to_string()).second) out.push_back(std::move(m));
  }
  gens.swap(out);
}

void require_same(const ModulePtr& a, const ModulePtr& b) {
  if (a != b && !a->same_as(*b)) throw AmbientMismatch();
}

}  // namespace

Submodule::Submodule(ModulePtr ambient, std::vector<FreeElement> generators) : ambient_(std::move(ambient)) {
  for (auto& g : generators) {
    require_same(ambient_, g.module());
    if (!g.is_homogeneous()) throw NotHomogeneous("generator " + g.to_string() + " is not homogeneous");
    if (!g.is_zero()) generators_.push_back(std::move(g));
  }
}

Submodule Submodule::operator+(const Submodule& other) const {
  require_same(ambient_, other.ambient_);
  auto gens = generators_;
  gens.insert(gens.end(), other.generators_.begin(), other.generators_.end());
  return Submodule(ambient_, std::move(gens));
}

ModulePtr ideal_ambient(const RingPtr& ring) { return make_free_module(ring, {0}); }

Submodule make_ideal(const RingPtr& ring, const std::vector<Polynomial>& generators) {
  ModulePtr amb = ideal_ambient(ring);
  std::vector<FreeElement> gens;
  for (const auto& p : generators) gens.push_back(FreeElement::from_components(amb, {p}));
  return Submodule(amb, std::move(gens));
}

std::vector<Polynomial> ideal_generators(const Submodule& ideal) {
  if (!ideal.is_ideal()) throw AmbientMismatch();
  std::vector<Polynomial> out;
  for (const auto& g : ideal.generators()) out.push_back(g.component(0));
  return out;
}

GroebnerBasis::GroebnerBasis(ModulePtr ambient, std::vector<FreeElement> elements)
    : ambient_(std::move(ambient)), elements_(std::move(elements)), by_position_(ambient_->rank()) {
  for (std::size_t k = 0; k < elements_.size(); ++k) {
    require_same(ambient_, elements_[k].module());
    if (elements_[k].is_zero()) throw Error("zero element in Groebner basis");
    by_position_[elements_[k].lead().position].push_back(k);
  }
}

const FreeElement* GroebnerBasis::find_divisor(const Monomial& m, std::uint32_t pos) const {
  for (std::size_t k : by_position_[pos])
    if (elements_[k].lead().monomial.divides(m)) return &elements_[k];
  return nullptr;
}

FreeElement GroebnerBasis::normal_form(const FreeElement& f) const {
  FreeElement g = FreeElement::rehome(ambient_, f);
  LeadIndex idx(ambient_->rank());
  for (std::size_t k = 0; k < elements_.size(); ++k) idx.add(k, elements_[k]);
  return reduce_by(g, elements_, idx, nullptr);
}

DivisionResult GroebnerBasis::divide(const FreeElement& f) const {
  FreeElement g = FreeElement::rehome(ambient_, f);
  LeadIndex idx(ambient_->rank());
  for (std::size_t k = 0; k < elements_.size(); ++k) idx.add(k, elements_[k]);
  std::vector<std::vector<Term>> q(elements_.size());
  FreeElement r = reduce_by(g, elements_, idx, &q);
  DivisionResult out{{}, std::move(r)};
  for (auto& terms : q) out.quotients.push_back(Polynomial::from_terms(ambient_->ring(), std::move(terms)));
  return out;
}

std::vector<std::vector<Monomial>> GroebnerBasis::lead_monomials_by_position() const {
  std::vector<std::vector<Monomial>> out(ambient_->rank());
  for (const auto& g : elements_) out[g.lead().position].push_back(g.lead().monomial);
  return out;
}

void set_groebner_store(std::shared_ptr<GroebnerStore> store) {
  std::lock_guard lock(g_store_mutex);
  g_store = std::move(store);
}

std::shared_ptr<GroebnerStore> groebner_store() {
  std::lock_guard lock(g_store_mutex);
  return g_store;
}

std::string canonical_input(const Submodule& gens) {
  const FreeModule& M = *gens.ambient();
  const PolynomialRing& R = *M.ring();
  std::ostringstream s;
  s << "syzlab-gb-input v1\np=" << R.modulus() << "\nvars=";
  for (std::size_t i = 0; i < R.nvars(); ++i) s << (i ? "," : "") << R.variables()[i];
  s << "\norder=" << order_name(M.order(), R.order()) << "\nshifts=";
  for (std::size_t i = 0; i < M.rank(); ++i) s << (i ? "," : "") << M.shift(i);
  std::vector<std::string> lines;
  for (const auto& g : gens.generators()) lines.push_back(g.monic().to_string());
  std::sort(lines.begin(), lines.end());
  lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
  s << "\ngenerators=" << lines.size() << '\n';
  for (const auto& l : lines) s << l << '\n';
  return s.str();
}

std::string serialize_basis(const GroebnerBasis& gb) {
  std::ostringstream s;
  s << "syzlab-gb v1\n" << gb.size() << '\n';
  for (const auto& g : gb.elements()) s << g.to_string() << '\n';
  return s.str();
}

GroebnerBasis deserialize_basis(const Submodule& source, std::string_view payload) {
  const ModulePtr& amb = source.ambient();
  std::istringstream in{std::string(payload)};
  std::string line;
  if (!std::getline(in, line) || line != "syzlab-gb v1") throw Error("bad basis header");
  if (!std::getline(in, line)) throw Error("missing basis size");
  std::size_t count = 0;
  try {
    count = std::stoul(line);
  } catch (const std::exception&) {
    throw Error("bad basis size");
  }
  std::vector<FreeElement> elems;
  for (std::size_t k = 0; k < count; ++k) {
    if (!std::getline(in, line)) throw Error("truncated basis");
    auto parts = split_components(line);
    if (parts.size() != amb->rank()) throw Error("basis element has wrong rank");
    std::vector<Polynomial> comps;
    for (const auto& p : parts) comps.push_back(parse_polynomial(amb->ring(), p));
    elems.push_back(FreeElement::from_components(amb, comps));
  }
  if (std::getline(in, line) && !line.empty()) throw Error("trailing data after basis");
  for (std::size_t k = 0; k < elems.size(); ++k) {
    const auto& g = elems[k];
    if (g.is_zero() || g.lead().coeff != 1) throw Error("basis element is not monic");
    if (k > 0 && amb->compare(elems[k - 1].lead().monomial, elems[k - 1].lead().position, g.lead().monomial,
                              g.lead().position) >= 0)
      throw Error("basis is not sorted by lead term");
    for (std::size_t l = 0; l < elems.size(); ++l)
      if (l != k && elems[l].lead().position == g.lead().position &&
          elems[l].lead().monomial.divides(g.lead().monomial))
        throw Error("basis is not minimal");
  }
  GroebnerBasis gb(amb, std::move(elems));
  for (const auto& g : source.generators())
    if (!gb.contains(g)) throw Error("stored basis does not contain the input");
  return gb;
}

GroebnerBuilder::GroebnerBuilder(ModulePtr ambient) : ambient_(std::move(ambient)) {}

void GroebnerBuilder::push_item(Item item) {
  items_.push_back(std::move(item));
  auto& it = items_.back();
  queue_.insert({it.degree, it.seq, items_.size() - 1});
}

void GroebnerBuilder::add(const FreeElement& generator) {
  require_same(ambient_, generator.module());
  if (generator.is_zero()) return;
  if (!generator.is_homogeneous()) throw NotHomogeneous("generator " + generator.to_string() + " is not homogeneous");
  pending_.push_back(FreeElement::rehome(ambient_, generator));
  const auto& g = pending_.back();
  push_item({g.degree(), seq_++, npos, pending_.size() - 1, g.lead().monomial, g.lead().position, true});
}

void GroebnerBuilder::insert_basis_element(FreeElement h) {
  const std::size_t t = basis_.size();
  const Monomial lt = h.lead().monomial;
  const std::uint32_t pos = h.lead().position;
  const bool product_criterion = ambient_->rank() == 1;

  for (auto& it : items_) {
    if (!it.alive || it.i == npos || it.position != pos) continue;
    if (!lt.divides(it.lcm)) continue;
    const auto& mi = basis_[it.i].lead().monomial;
    const auto& mj = basis_[it.j].lead().monomial;
    if (!(mi.lcm(lt) == it.lcm) && !(mj.lcm(lt) == it.lcm)) it.alive = false;
  }

  struct Cand {
    std::size_t k;
    Monomial lcm;
    bool coprime;
  };
  std::vector<Cand> c;
  for (std::size_t k = 0; k < t; ++k) {
    const auto& lk = basis_[k].lead();
    if (lk.position != pos) continue;
    c.push_back({k, lk.monomial.lcm(lt), product_criterion && lk.monomial.coprime(lt)});
  }
  std::vector<Cand> d;
  std::vector<bool> in_c(c.size(), true);
  for (std::size_t a = 0; a < c.size(); ++a) {
    in_c[a] = false;
    bool keep = c[a].coprime;
    if (!keep) {
      keep = true;
      for (std::size_t b = 0; b < c.size() && keep; ++b)
        if (in_c[b] && c[b].lcm.divides(c[a].lcm)) keep = false;
      for (std::size_t b = 0; b < d.size() && keep; ++b)
        if (d[b].lcm.divides(c[a].lcm)) keep = false;
    }
    if (keep) d.push_back(c[a]);
  }
  basis_.push_back(std::move(h));
  for (const auto& e : d) {
    if (e.coprime) continue;
    push_item({e.lcm.degree() + ambient_->shift(pos), seq_++, e.k, t, e.lcm, pos, true});
  }
}

FreeElement GroebnerBuilder::reduce(const FreeElement& f) const {
  LeadIndex idx(ambient_->rank());
  for (std::size_t k = 0; k < basis_.size(); ++k) idx.add(k, basis_[k]);
  return reduce_by(FreeElement::rehome(ambient_, f), basis_, idx, nullptr);
}

void GroebnerBuilder::complete(int max_degree) {
  LeadIndex idx(ambient_->rank());
  for (std::size_t k = 0; k < basis_.size(); ++k) idx.add(k, basis_[k]);
  const PrimeField& F = ambient_->ring()->field();
  while (!queue_.empty()) {
    auto top = *queue_.begin();
    if (std::get<0>(top) > max_degree) break;
    queue_.erase(queue_.begin());
    Item it = items_[std::get<2>(top)];
    if (!it.alive) continue;
    FreeElement s(ambient_);
    if (it.i == npos) {
      s = pending_[it.j];
    } else {
      const auto& gi = basis_[it.i];
      const auto& gj = basis_[it.j];
      s = gi.times_term(it.lcm / gi.lead().monomial, F.inv(gi.lead().coeff))
              .add_multiple(gj, it.lcm / gj.lead().monomial, F.neg(F.inv(gj.lead().coeff)));
    }
    FreeElement r = reduce_by(s, basis_, idx, nullptr);
    if (r.is_zero()) continue;
    r = r.monic();
    idx.add(basis_.size(), r);
    insert_basis_element(std::move(r));
  }
}

GroebnerBasis GroebnerBuilder::finish() {
  complete();
  std::vector<FreeElement> minimal;
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const auto& lk = basis_[k].lead();
    bool redundant = false;
    for (std::size_t l = 0; l < basis_.size() && !redundant; ++l) {
      if (l == k) continue;
      const auto& ll = basis_[l].lead();
      if (ll.position != lk.position || !ll.monomial.divides(lk.monomial)) continue;
      if (!(ll.monomial == lk.monomial) || l < k) redundant = true;
    }
    if (!redundant) minimal.push_back(basis_[k]);
  }
  LeadIndex idx(ambient_->rank());
  for (std::size_t k = 0; k < minimal.size(); ++k) idx.add(k, minimal[k]);
  std::vector<FreeElement> reduced;
  for (const auto& g : minimal) {
    const auto& lead = g.lead();
    std::vector<ModuleTerm> tail(g.terms().begin() + 1, g.terms().end());
    FreeElement nf = reduce_by(FreeElement::from_terms(ambient_, std::move(tail)), minimal, idx, nullptr);
    std::vector<ModuleTerm> terms = nf.terms();
    terms.push_back(lead);
    reduced.push_back(FreeElement::from_terms(ambient_, std::move(terms)));
  }
  const FreeModule& M = *ambient_;
  std::sort(reduced.begin(), reduced.end(), [&](const FreeElement& a, const FreeElement& b) {
    return M.compare(a.lead().monomial, a.lead().position, b.lead().monomial, b.lead().position) < 0;
  });
  return GroebnerBasis(ambient_, std::move(reduced));
}

GroebnerBasis buchberger(const Submodule& gens) {
  auto store = groebner_store();
  std::string key;
  if (store) {
    key = canonical_input(gens);
    if (auto payload = store->load(key)) {
      try {
        return deserialize_basis(gens, *payload);
      } catch (const Error&) {
        store->report_corrupt(key);
      }
    }
  }
  GroebnerBuilder b(gens.ambient());
  for (const auto& g : gens.generators()) b.add(g);
  GroebnerBasis gb = b.finish();
  if (store) store->store(key, serialize_basis(gb));
  return gb;
}

GroebnerBasis buchberger(const Submodule& gens, const ModuleOrder& order) {
  const auto& amb = gens.ambient();
  ModulePtr target = make_free_module(amb->ring(), amb->shifts(), order);
  std::vector<FreeElement> moved;
  for (const auto& g : gens.generators()) moved.push_back(FreeElement::rehome(target, g));
  return buchberger(Submodule(target, std::move(moved)));
}

FreeElement normal_form(const FreeElement& f, const GroebnerBasis& gb) { return gb.normal_form(f); }

Submodule syzygy_module(const GroebnerBasis& gb) {
  const auto& els = gb.elements();
  const std::size_t s = els.size();
  const RingPtr& ring = gb.ambient()->ring();
  const PrimeField& F = ring->field();
  ModuleOrder order;
  order.kind = ModuleOrderKind::Schreyer;
  std::vector<int> shifts;
  for (const auto& g : els) {
    shifts.push_back(g.degree());
    order.schreyer_monomials.push_back(g.lead().monomial);
    order.schreyer_positions.push_back(g.lead().position);
  }
  if (s == 0) return Submodule(make_free_module(ring, {}));
  ModulePtr syz = make_free_module(ring, shifts, order);
  std::vector<FreeElement> out;
  auto lcm_of = [&](std::size_t a, std::size_t b) { return els[a].lead().monomial.lcm(els[b].lead().monomial); };
  for (std::size_t j = 0; j < s; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (els[i].lead().position != els[j].lead().position) continue;
      Monomial L = lcm_of(i, j);
      bool skip = false;
      for (std::size_t k = 0; k < s && !skip; ++k) {
        if (k == i || k == j || els[k].lead().position != els[i].lead().position) continue;
        if (!els[k].lead().monomial.divides(L)) continue;
        if (!(lcm_of(i, k) == L) && !(lcm_of(k, j) == L)) skip = true;
      }
      if (skip) continue;
      Monomial ui = L / els[i].lead().monomial, uj = L / els[j].lead().monomial;
      std::uint32_t ci = F.inv(els[i].lead().coeff), cj = F.neg(F.inv(els[j].lead().coeff));
      FreeElement sp = els[i].times_term(ui, ci).add_multiple(els[j], uj, cj);
      DivisionResult d = gb.divide(sp);
      if (!d.remainder.is_zero()) throw Error("syzygy_module: input is not a Groebner basis");
      std::vector<ModuleTerm> terms{{ui, static_cast<std::uint32_t>(i), ci}, {uj, static_cast<std::uint32_t>(j), cj}};
      for (std::size_t k = 0; k < s; ++k)
        for (const auto& t : d.quotients[k].terms())
          terms.push_back({t.monomial, static_cast<std::uint32_t>(k), F.neg(t.coeff)});
      FreeElement z = FreeElement::from_terms(syz, std::move(terms));
      FreeElement check(gb.ambient());
      for (std::size_t k = 0; k < s; ++k) check = check + els[k].times(z.component(k));
      if (!check.is_zero()) throw Error("syzygy_module: lifted syzygy does not vanish");
      out.push_back(std::move(z));
    }
  }
  return Submodule(syz, std::move(out));
}

namespace {

struct Augmented {
  ModulePtr module;
  std::vector<FreeElement> generators;
};

Augmented augment(const ModulePtr& ambient, const std::vector<FreeElement>& generators, const std::vector<int>& degrees) {
  if (generators.size() != degrees.size()) throw Error("one degree per generator required");
  const std::size_t r = ambient->rank();
  std::vector<int> shifts = ambient->shifts();
  shifts.insert(shifts.end(), degrees.begin(), degrees.end());
  ModuleOrder order;
  order.elimination_prefix = r;
  Augmented a{make_free_module(ambient->ring(), shifts, order), {}};
  for (std::size_t i = 0; i < generators.size(); ++i) {
    require_same(ambient, generators[i].module());
    if (!generators[i].is_homogeneous() || (!generators[i].is_zero() && generators[i].degree() != degrees[i]))
      throw NotHomogeneous("generator degree does not match its declared degree");
    std::vector<ModuleTerm> terms = generators[i].terms();
    terms.push_back({Monomial(ambient->ring()->nvars()), static_cast<std::uint32_t>(r + i), 1});
    a.generators.push_back(FreeElement::from_terms(a.module, std::move(terms)));
  }
  return a;
}

}  // namespace

Submodule generator_syzygies(const ModulePtr& ambient, const std::vector<FreeElement>& generators,
                             const std::vector<int>& degrees) {
  const std::size_t r = ambient->rank();
  ModulePtr target = make_free_module(ambient->ring(), degrees);
  if (generators.empty()) return Submodule(target);
  Augmented a = augment(ambient, generators, degrees);
  GroebnerBasis gb = buchberger(Submodule(a.module, a.generators));
  std::vector<FreeElement> out;
  for (const auto& g : gb.elements()) {
    if (g.lead().position < r) continue;
    std::vector<ModuleTerm> terms;
    for (const auto& t : g.terms()) {
      if (t.position < r) throw Error("elimination produced a mixed element");
      terms.push_back({t.monomial, static_cast<std::uint32_t>(t.position - r), t.coeff});
    }
    out.push_back(FreeElement::from_terms(target, std::move(terms)));
  }
  return Submodule(target, std::move(out));
}

Lifter::Lifter(const ModulePtr& ambient, const std::vector<FreeElement>& generators, const std::vector<int>& degrees)
    : ambient_(ambient), count_(generators.size()) {
  Augmented a = augment(ambient, generators, degrees);
  augmented_ = a.module;
  gb_.emplace(buchberger(Submodule(a.module, a.generators)));
}

std::optional<std::vector<Polynomial>> Lifter::lift(const FreeElement& f) const {
  require_same(ambient_, f.module());
  const std::size_t r = ambient_->rank();
  FreeElement nf = gb_->normal_form(FreeElement::from_terms(augmented_, f.terms()));
  std::vector<std::vector<Term>> parts(count_);
  const PrimeField& F = ambient_->ring()->field();
  for (const auto& t : nf.terms()) {
    if (t.position < r) return std::nullopt;
    parts[t.position - r].push_back({t.monomial, F.neg(t.coeff)});
  }
  std::vector<Polynomial> out;
  for (auto& p : parts) out.push_back(Polynomial::from_terms(ambient_->ring(), std::move(p)));
  return out;
}

bool membership(const FreeElement& f, const Submodule& n) {
  require_same(n.ambient(), f.module());
  if (f.is_zero()) return true;
  if (n.is_zero()) return false;
  return buchberger(n).contains(f);
}

bool contains(const Submodule& big, const Submodule& small) {
  require_same(big.ambient(), small.ambient());
  if (small.is_zero()) return true;
  if (big.is_zero()) return false;
  GroebnerBasis gb = buchberger(big);
  for (const auto& g : small.generators())
    if (!gb.contains(g)) return false;
  return true;
}

bool equal(const Submodule& a, const Submodule& b) { return contains(a, b) && contains(b, a); }

Submodule ideal_power(const Submodule& ideal, int n) {
  if (!ideal.is_ideal()) throw AmbientMismatch();
  if (n < 0) throw Error("negative ideal power");
  const auto& amb = ideal.ambient();
  std::vector<FreeElement> cur{FreeElement::unit(amb, 0)};
  for (int k = 0; k < n; ++k) {
    std::vector<FreeElement> next;
    for (const auto& a : cur)
      for (const auto& g : ideal.generators()) next.push_back(a.times(g.component(0)));
    dedupe(next);
    cur.swap(next);
  }
  return Submodule(amb, std::move(cur));
}

Submodule module_scale(const Submodule& ideal, const Submodule& module) {
  if (!ideal.is_ideal()) throw AmbientMismatch();
  std::vector<FreeElement> out;
  for (const auto& g : ideal.generators()) {
    Polynomial p = g.component(0);
    for (const auto& h : module.generators()) out.push_back(h.times(p));
  }
  dedupe(out);
  return Submodule(module.ambient(), std::move(out));
}

Submodule intersection(const Submodule& a, const Submodule& b) {
  require_same(a.ambient(), b.ambient());
  if (a.is_zero() || b.is_zero()) return Submodule(a.ambient());
  std::vector<FreeElement> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  std::vector<int> degs;
  for (const auto& g : gens) degs.push_back(g.degree());
  Submodule syz = generator_syzygies(a.ambient(), gens, degs);
  std::vector<FreeElement> out;
  for (const auto& s : syz.generators()) {
    FreeElement u(a.ambient());
    for (std::size_t i = 0; i < a.size(); ++i) u = u + a.generators()[i].times(s.component(i));
    out.push_back(std::move(u));
  }
  dedupe(out);
  return Submodule(a.ambient(), std::move(out));
}

Submodule colon_by_element(const Submodule& n, const Polynomial& x, const Submodule& m) {
  require_same(n.ambient(), m.ambient());
  if (x.is_zero()) return m;
  if (!x.is_homogeneous()) throw NotHomogeneous("colon element is not homogeneous");
  if (m.is_zero()) return m;
  std::vector<FreeElement> gens;
  std::vector<int> degs;
  for (const auto& g : m.generators()) {
    gens.push_back(g.times(x));
    degs.push_back(gens.back().degree());
  }
  for (const auto& g : n.generators()) {
    gens.push_back(g);
    degs.push_back(g.degree());
  }
  Submodule syz = generator_syzygies(m.ambient(), gens, degs);
  std::vector<FreeElement> out = n.generators();
  for (const auto& s : syz.generators()) {
    FreeElement u(m.ambient());
    for (std::size_t i = 0; i < m.size(); ++i) u = u + m.generators()[i].times(s.component(i));
    out.push_back(std::move(u));
  }
  dedupe(out);
  return Submodule(m.ambient(), std::move(out));
}

Submodule colon_by_ideal(const Submodule& n, const Submodule& ideal, const Submodule& m) {
  auto polys = ideal_generators(ideal);
  if (polys.empty()) return m;
  Submodule acc = colon_by_element(n, polys[0], m);
  for (std::size_t k = 1; k < polys.size(); ++k) acc = intersection(acc, colon_by_element(n, polys[k], m));
  return acc;
}

std::vector<FreeElement> minimal_generators(const std::vector<FreeElement>& gens, const Submodule& base) {
  std::vector<FreeElement> sorted;
  for (const auto& g : gens)
    if (!g.is_zero()) sorted.push_back(g);
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const FreeElement& a, const FreeElement& b) { return a.degree() < b.degree(); });
  GroebnerBuilder b(base.ambient());
  for (const auto& g : base.generators()) b.add(g);
  std::vector<FreeElement> kept;
  for (const auto& g : sorted) {
    require_same(base.ambient(), g.module());
    b.complete(g.degree());
    if (b.reduce(g).is_zero()) continue;
    kept.push_back(g);
    b.add(g);
  }
  return kept;
}

Submodule whole_module(const ModulePtr& ambient) {
  std::vector<FreeElement> gens;
  for (std::size_t i = 0; i < ambient->rank(); ++i) gens.push_back(FreeElement::unit(ambient, i));
  return Submodule(ambient, std::move(gens));
}

int reduction_number(const Submodule& i, const Submodule& j, const Submodule& m, const Submodule& relations, int cap) {
  Submodule ir = ideal_power(i, 0);
  for (int r = 0; r <= cap; ++r) {
    Submodule irm = module_scale(ir, m);
    Submodule lhs = module_scale(i, irm) + relations;
    Submodule rhs = module_scale(j, irm) + relations;
    if (equal(lhs, rhs)) return r;
    std::vector<FreeElement> next;
    for (const auto& a : ir.generators())
      for (const auto& g : i.generators()) next.push_back(a.times(g.component(0)));
    dedupe(next);
    ir = Submodule(i.ambient(), std::move(next));
  }
  throw NotAReduction("no reduction number up to " + std::to_string(cap));
}

int reduction_number(const Submodule& i, const Submodule& j, const Submodule& m, int cap) {
  return reduction_number(i, j, m, Submodule(m.ambient()), cap);
}

Submodule ratliff_rush(const Submodule& i, int n, const Submodule& m, const Submodule& relations, int cap) {
  if (n <= 0) return m + relations;
  auto stage = [&](int k) {
    Submodule acc = module_scale(ideal_power(i, n + k), m) + relations;
    for (int s = 0; s < k; ++s) acc = colon_by_ideal(acc, i, m + relations);
    return acc;
  };
  Submodule prev = stage(1);
  for (int k = 2; k <= cap; ++k) {
    Submodule cur = stage(k);
    if (equal(prev, cur)) return cur;
    prev = std::move(cur);
  }
  throw NoStabilization("Ratliff-Rush chain did not stabilize within " + std::to_string(cap) + " steps");
}

Submodule ratliff_rush(const Submodule& i, int n, const Submodule& m, int cap) {
  return ratliff_rush(i, n, m, Submodule(m.ambient()), cap);
}

}  // namespace syzlab
