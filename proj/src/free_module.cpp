#include "syzlab/free_module.hpp"

#include <algorithm>
#include <map>

namespace syzlab {

FreeModule::FreeModule(RingPtr ring, std::vector<int> shifts, ModuleOrder order)
    : ring_(std::move(ring)), shifts_(std::move(shifts)), order_(std::move(order)) {
  if (order_.kind == ModuleOrderKind::Schreyer) {
    if (order_.schreyer_monomials.size() != shifts_.size()) throw Error("Schreyer order needs one monomial per position");
    if (order_.schreyer_positions.empty()) order_.schreyer_positions.assign(shifts_.size(), 0);
    if (order_.schreyer_positions.size() != shifts_.size()) throw Error("Schreyer order needs one base position per position");
  }
}

ModulePtr make_free_module(RingPtr ring, std::vector<int> shifts, ModuleOrder order) {
  return std::make_shared<const FreeModule>(std::move(ring), std::move(shifts), std::move(order));
}

bool FreeModule::same_as(const FreeModule& o) const {
  return this == &o || (ring_->compatible(*o.ring_) && shifts_ == o.shifts_ && order_ == o.order_);
}

std::strong_ordering FreeModule::compare_top(const Monomial& a, std::uint32_t pa, const Monomial& b,
                                             std::uint32_t pb) const {
  int da = a.degree() + shifts_[pa], db = b.degree() + shifts_[pb];
  if (da != db) return da <=> db;
  auto c = ring_->order().compare(a, b);
  if (c != 0) return c;
  return pb <=> pa;
}

std::strong_ordering FreeModule::compare(const Monomial& a, std::uint32_t pa, const Monomial& b,
                                         std::uint32_t pb) const {
  if (order_.elimination_prefix > 0) {
    bool ea = pa < order_.elimination_prefix, eb = pb < order_.elimination_prefix;
    if (ea != eb) return ea ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  switch (order_.kind) {
    case ModuleOrderKind::TermOverPosition:
      return compare_top(a, pa, b, pb);
    case ModuleOrderKind::PositionOverTerm: {
      if (pa != pb) return pb <=> pa;
      int da = a.degree() + shifts_[pa], db = b.degree() + shifts_[pb];
      if (da != db) return da <=> db;
      return ring_->order().compare(a, b);
    }
    case ModuleOrderKind::Schreyer: {
      int da = a.degree() + shifts_[pa], db = b.degree() + shifts_[pb];
      if (da != db) return da <=> db;
      Monomial sa = a * order_.schreyer_monomials[pa], sb = b * order_.schreyer_monomials[pb];
      auto c = ring_->order().compare(sa, sb);
      if (c != 0) return c;
      std::uint32_t ba = order_.schreyer_positions[pa], bb = order_.schreyer_positions[pb];
      if (ba != bb) return bb <=> ba;
      return pb <=> pa;
    }
  }
  return std::strong_ordering::equal;
}

FreeElement::FreeElement(ModulePtr module) : module_(std::move(module)) {}

FreeElement FreeElement::unit(ModulePtr module, std::size_t position) {
  if (position >= module->rank()) throw AmbientMismatch();
  FreeElement e(module);
  e.terms_.push_back({Monomial(module->ring()->nvars()), static_cast<std::uint32_t>(position), 1});
  return e;
}

FreeElement FreeElement::from_terms(ModulePtr module, std::vector<ModuleTerm> terms) {
  const auto& F = module->ring()->field();
  const FreeModule& M = *module;
  std::sort(terms.begin(), terms.end(), [&](const ModuleTerm& a, const ModuleTerm& b) {
    return M.compare(a.monomial, a.position, b.monomial, b.position) > 0;
  });
  FreeElement e(module);
  for (auto& t : terms) {
    if (t.position >= M.rank()) throw AmbientMismatch();
    t.coeff %= F.modulus();
    if (!e.terms_.empty() && e.terms_.back().position == t.position && e.terms_.back().monomial == t.monomial) {
      e.terms_.back().coeff = F.add(e.terms_.back().coeff, t.coeff);
      if (e.terms_.back().coeff == 0) e.terms_.pop_back();
    } else if (t.coeff != 0) {
      e.terms_.push_back(t);
    }
  }
  return e;
}

FreeElement FreeElement::from_components(ModulePtr module, const std::vector<Polynomial>& components) {
  if (components.size() != module->rank()) throw AmbientMismatch();
  std::vector<ModuleTerm> terms;
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (!components[i].ring()->compatible(*module->ring())) throw ModulusMismatch();
    for (const auto& t : components[i].terms())
      terms.push_back({t.monomial, static_cast<std::uint32_t>(i), t.coeff});
  }
  return from_terms(std::move(module), std::move(terms));
}

FreeElement FreeElement::rehome(ModulePtr module, const FreeElement& e) {
  if (module->rank() != e.module_->rank()) throw AmbientMismatch();
  if (module.get() == e.module_.get()) return e;
  return from_terms(std::move(module), e.terms_);
}

void FreeElement::check(const FreeElement& o) const {
  if (module_ != o.module_ && !module_->same_as(*o.module_)) throw AmbientMismatch();
}

Polynomial FreeElement::component(std::size_t i) const {
  std::vector<Term> ts;
  for (const auto& t : terms_)
    if (t.position == i) ts.push_back({t.monomial, t.coeff});
  return Polynomial::from_terms(module_->ring(), std::move(ts));
}

std::vector<Polynomial> FreeElement::components() const {
  std::vector<std::vector<Term>> parts(module_->rank());
  for (const auto& t : terms_) parts[t.position].push_back({t.monomial, t.coeff});
  std::vector<Polynomial> out;
  out.reserve(parts.size());
  for (auto& p : parts) out.push_back(Polynomial::from_terms(module_->ring(), std::move(p)));
  return out;
}

bool FreeElement::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = term_degree(terms_.front());
  for (const auto& t : terms_)
    if (term_degree(t) != d) return false;
  return true;
}

int FreeElement::degree() const { return terms_.empty() ? -1 : term_degree(terms_.front()); }

FreeElement FreeElement::add_multiple(const FreeElement& o, const Monomial& m, std::uint32_t c) const {
  check(o);
  const auto& F = module_->ring()->field();
  const FreeModule& M = *module_;
  FreeElement r(module_);
  c %= F.modulus();
  if (c == 0 || o.is_zero()) {
    r.terms_ = terms_;
    return r;
  }
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  const std::size_t n = terms_.size(), k = o.terms_.size();
  while (i < n || j < k) {
    if (j == k) {
      r.terms_.push_back(terms_[i++]);
      continue;
    }
    const ModuleTerm& oj = o.terms_[j];
    Monomial mj = oj.monomial * m;
    if (i == n) {
      r.terms_.push_back({mj, oj.position, F.mul(oj.coeff, c)});
      ++j;
      continue;
    }
    auto cmp = M.compare(terms_[i].monomial, terms_[i].position, mj, oj.position);
    if (cmp > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (cmp < 0) {
      r.terms_.push_back({mj, oj.position, F.mul(oj.coeff, c)});
      ++j;
    } else {
      std::uint32_t v = F.add(terms_[i].coeff, F.mul(oj.coeff, c));
      if (v != 0) r.terms_.push_back({mj, oj.position, v});
      ++i;
      ++j;
    }
  }
  return r;
}

FreeElement FreeElement::operator+(const FreeElement& o) const {
  return add_multiple(o, Monomial(module_->ring()->nvars()), 1);
}

FreeElement FreeElement::operator-(const FreeElement& o) const {
  return add_multiple(o, Monomial(module_->ring()->nvars()), module_->ring()->modulus() - 1);
}

FreeElement FreeElement::operator-() const { return scaled(module_->ring()->modulus() - 1); }

FreeElement FreeElement::scaled(std::uint32_t c) const {
  const auto& F = module_->ring()->field();
  FreeElement r(module_);
  c %= F.modulus();
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coeff = F.mul(t.coeff, c);
  return r;
}

FreeElement FreeElement::times_term(const Monomial& m, std::uint32_t c) const {
  const auto& F = module_->ring()->field();
  FreeElement r(module_);
  c %= F.modulus();
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.monomial * m, t.position, F.mul(t.coeff, c)});
  return r;
}

FreeElement FreeElement::times(const Polynomial& p) const {
  if (!p.ring()->compatible(*module_->ring())) throw ModulusMismatch();
  if (p.size() == 1) return times_term(p.lead_monomial(), p.lead_coeff());
  FreeElement r(module_);
  for (const auto& t : p.terms()) r = r.add_multiple(*this, t.monomial, t.coeff);
  return r;
}

FreeElement FreeElement::monic() const {
  if (is_zero()) return *this;
  return scaled(module_->ring()->field().inv(terms_.front().coeff));
}

bool FreeElement::operator==(const FreeElement& o) const {
  check(o);
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto &a = terms_[i], &b = o.terms_[i];
    if (a.position != b.position || a.coeff != b.coeff || !(a.monomial == b.monomial)) return false;
  }
  return true;
}

std::string FreeElement::to_string() const {
  std::string s = "[";
  auto comps = components();
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (i) s += ", ";
    s += comps[i].to_string();
  }
  return s + "]";
}

}  // namespace syzlab
