#include "syzlab/filtration.hpp"

#include <algorithm>
#include <random>

#include "syzlab/linalg.hpp"

namespace syzlab {

std::int64_t colength(const Submodule& sub) {
  if (sub.ambient()->rank() == 0) return 0;
  auto sb = StandardBasis::build(buchberger(sub));
  if (!sb) throw NotPrimary("quotient has infinite length");
  return static_cast<std::int64_t>(sb->size());
}

namespace {

Submodule power_times_module(const Submodule& ideal, int n, const PresentedModule& m) {
  return module_scale(ideal_power(ideal, n), whole_module(m.free_module())) + m.relations();
}

bool all_zero_from(const std::vector<std::int64_t>& v, std::size_t from, std::size_t to) {
  for (std::size_t n = from; n <= to && n < v.size(); ++n)
    if (v[n] != 0) return false;
  return true;
}

std::string format_vector(const std::vector<std::int64_t>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

bool is_nonzerodivisor(const PresentedModule& m, const Polynomial& x) {
  if (m.rank() == 0) return true;
  Submodule n = m.relations();
  return equal(colon_by_element(n, x, whole_module(m.free_module())), n);
}

bool is_nonzerodivisor_on_ring(const QuotientRing& A, const Polynomial& x) {
  if (A.relations().empty()) return !x.is_zero();
  Submodule f = A.relation_ideal();
  return equal(colon_by_element(f, x, whole_module(f.ambient())), f);
}

/// Fills evidence for one module and one element; returns a rejection reason or "".
std::string examine(const PresentedModule& m, const Submodule& ideal, const Polynomial& x,
                    const std::vector<Polynomial>& reduction, int dim, SuperficialEvidence& ev) {
  if (m.rank() == 0) {
    ev = SuperficialEvidence{true, 0, {}, {}, {}, {}, {}, {}, true, true};
    return "";
  }
  ev.nonzerodivisor = is_nonzerodivisor(m, x);
  if (!ev.nonzerodivisor) return "not a nonzerodivisor on the module";
  Submodule j = make_ideal(m.ring()->base(), reduction);
  try {
    ev.reduction_number = reduction_number(ideal, j, whole_module(m.free_module()), m.relations());
  } catch (const NotAReduction&) {
    return "sequence does not generate a reduction";
  }
  const int r = ev.reduction_number;
  ev.b = b_vector(m, ideal, x, r + kBVectorWindow);
  if (!all_zero_from(ev.b, r, r + kBVectorWindow)) return "b-vector " + format_vector(ev.b) + " does not vanish from r";
  PresentedModule cut = m.modulo_ideal(make_ideal(m.ring()->base(), {x}));
  ev.h_module = hilbert_data(m, ideal, dim).h;
  ev.h_cut = hilbert_data(cut, ideal, dim - 1).h;
  // residual = h(M) - h(M/xM) + (1-z)^dim b(z)
  std::vector<std::int64_t> corr = ev.b;
  for (int e = 0; e < dim; ++e) {
    corr.push_back(0);
    for (std::size_t k = corr.size(); k-- > 1;) corr[k] -= corr[k - 1];
  }
  std::size_t len = std::max({ev.h_module.size(), ev.h_cut.size(), corr.size()});
  ev.residual.assign(len, 0);
  for (std::size_t k = 0; k < len; ++k) {
    if (k < ev.h_module.size()) ev.residual[k] += ev.h_module[k];
    if (k < ev.h_cut.size()) ev.residual[k] -= ev.h_cut[k];
    if (k < corr.size()) ev.residual[k] += corr[k];
  }
  ev.identity_holds = std::all_of(ev.residual.begin(), ev.residual.end(), [](std::int64_t v) { return v == 0; });
  ev.e_module = hilbert_coefficients(ev.h_module, dim);
  ev.e_cut = hilbert_coefficients(ev.h_cut, dim);
  std::int64_t b1 = 0;
  for (auto v : ev.b) b1 += v;
  ev.coefficients_agree = true;
  for (int i = 0; i < dim; ++i) ev.coefficients_agree &= ev.e_module[i] == ev.e_cut[i];
  std::int64_t sign = dim % 2 == 0 ? 1 : -1;
  ev.coefficients_agree &= ev.e_module[dim] == ev.e_cut[dim] - sign * b1;
  if (!ev.identity_holds) return "h-identity residual " + format_vector(ev.residual);
  if (!ev.coefficients_agree) return "coefficient agreement fails";
  return "";
}

}  // namespace

std::vector<std::int64_t> b_vector(const PresentedModule& m, const Submodule& ideal, const Polynomial& x, int n_max) {
  std::vector<std::int64_t> out;
  if (m.rank() == 0) return std::vector<std::int64_t>(n_max + 1, 0);
  Submodule whole = whole_module(m.free_module());
  for (int n = 0; n <= n_max; ++n) {
    if (n == 0) {
      out.push_back(0);
      continue;
    }
    Submodule lower = power_times_module(ideal, n, m);
    Submodule colon = colon_by_element(power_times_module(ideal, n + 1, m), x, whole);
    out.push_back(colength(lower) - colength(colon));
  }
  return out;
}

SuperficialReport check_superficial(const Submodule& ideal, const std::vector<PresentedModule>& modules,
                                    int dimension, const std::vector<Polynomial>& sequence) {
  if (dimension < 1 || dimension > 2) throw Error("superficial sequences are supported in dimension 1 or 2");
  if (static_cast<int>(sequence.size()) != dimension) throw Error("sequence length must equal the dimension");
  SuperficialReport rep;
  rep.sequence = sequence;
  rep.dimension = dimension;
  auto reject = [&](const std::string& why) {
    rep.rejections.push_back(why);
    rep.accepted = false;
    return rep;
  };
  if (modules.empty()) throw Error("no modules to check");
  const QuotientRing& A = *modules.front().ring();
  if (!is_nonzerodivisor_on_ring(A, sequence[0])) return reject("x is a zero divisor on the ring");
  rep.evidence.emplace_back(modules.size());
  for (std::size_t t = 0; t < modules.size(); ++t) {
    std::string why = examine(modules[t], ideal, sequence[0], sequence, dimension, rep.evidence[0][t]);
    if (!why.empty()) return reject("module " + std::to_string(t) + ": " + why);
  }
  if (dimension == 2) {
    rep.evidence.emplace_back(modules.size());
    Submodule xi = make_ideal(A.base(), {sequence[0]});
    for (std::size_t t = 0; t < modules.size(); ++t) {
      PresentedModule cut = modules[t].modulo_ideal(xi);
      std::string why = examine(cut, ideal, sequence[1], {sequence[1]}, 1, rep.evidence[1][t]);
      if (!why.empty()) return reject("module " + std::to_string(t) + " mod x: " + why);
    }
  }
  rep.accepted = true;
  return rep;
}

SuperficialReport pick_superficial(const Submodule& ideal, const std::vector<PresentedModule>& modules, int dimension,
                                   std::uint64_t seed, int tries) {
  auto gens = ideal_generators(ideal);
  if (gens.empty()) throw NoCandidateFound("ideal has no generators");
  int dmin = gens[0].degree();
  for (const auto& g : gens) dmin = std::min(dmin, g.degree());
  std::vector<Polynomial> low;
  for (const auto& g : gens)
    if (g.degree() == dmin) low.push_back(g);
  const RingPtr& R = gens[0].ring();
  const std::uint32_t p = R->modulus();
  std::mt19937_64 rng(seed);
  auto sample = [&] {
    Polynomial x(R);
    for (const auto& g : low) x = x + g.scaled(static_cast<std::uint32_t>(rng() % p));
    return x;
  };
  std::vector<std::string> log;
  for (int t = 1; t <= tries; ++t) {
    std::vector<Polynomial> seq;
    for (int k = 0; k < dimension; ++k) seq.push_back(sample());
    if (std::any_of(seq.begin(), seq.end(), [](const Polynomial& q) { return q.is_zero(); })) {
      log.push_back("try " + std::to_string(t) + ": zero combination");
      continue;
    }
    SuperficialReport rep = check_superficial(ideal, modules, dimension, seq);
    for (const auto& r : rep.rejections) log.push_back("try " + std::to_string(t) + ": " + r);
    if (rep.accepted) {
      rep.tries_used = t;
      rep.seed = seed;
      rep.rejections = std::move(log);
      return rep;
    }
  }
  std::string last = log.empty() ? "" : " (last: " + log.back() + ")";
  throw NoCandidateFound("no superficial candidate accepted after " + std::to_string(tries) + " tries" + last);
}

int assoc_graded_depth(const PresentedModule& m, const Submodule& ideal, const SuperficialReport& sup, int dimension) {
  if (dimension < 1 || dimension > 2) throw Error("associated graded depth is supported in dimension 1 or 2");
  if (static_cast<int>(sup.sequence.size()) < dimension) throw Error("superficial sequence too short");
  if (m.rank() == 0) return dimension;
  const RingPtr& R = m.ring()->base();
  const Polynomial& x = sup.sequence[0];
  Submodule whole = whole_module(m.free_module());
  if (dimension == 1) {
    int r = reduction_number(ideal, make_ideal(R, {x}), whole, m.relations());
    auto b = b_vector(m, ideal, x, r + kBVectorWindow);
    return all_zero_from(b, 0, b.size()) ? 1 : 0;
  }
  const Polynomial& y = sup.sequence[1];
  int r = reduction_number(ideal, make_ideal(R, {x, y}), whole, m.relations());
  auto b = b_vector(m, ideal, x, std::max(r, 1));
  if (!all_zero_from(b, 1, r)) return 0;
  PresentedModule cut = m.modulo_ideal(make_ideal(R, {x}));
  SuperficialReport inner;
  inner.sequence = {y};
  return 1 + assoc_graded_depth(cut, ideal, inner, 1);
}

std::vector<std::int64_t> rr_deviation_table(const PresentedModule& m, const Submodule& ideal, int n_max) {
  std::vector<std::int64_t> out;
  Submodule whole = whole_module(m.free_module());
  for (int n = 1; n <= n_max; ++n) {
    if (m.rank() == 0) {
      out.push_back(0);
      continue;
    }
    Submodule rr = ratliff_rush(ideal, n, whole, m.relations());
    out.push_back(colength(power_times_module(ideal, n, m)) - colength(rr + m.relations()));
  }
  return out;
}

DepthTable depth_table(const std::vector<PresentedModule>& modules, const Submodule& ideal, int dimension,
                       std::uint64_t seed, int tries) {
  SuperficialReport sup = pick_superficial(ideal, modules, dimension, seed, tries);
  DepthTable table;
  std::string seq;
  for (const auto& s : sup.sequence) seq += (seq.empty() ? "" : ",") + s.to_string();
  for (const auto& m : modules) {
    table.depth.push_back(assoc_graded_depth(m, ideal, sup, dimension));
    table.witnesses.push_back("sequence " + seq);
  }
  return table;
}

XiEstimate xi_estimate(const PresentedModule& m, const Submodule& ideal, int s_max, std::uint64_t seed, int tries) {
  if (s_max < 2) throw Error("xi estimate needs s_max >= 2");
  XiEstimate xi;
  for (int s = 1; s <= s_max; ++s) {
    Submodule is = ideal_power(ideal, s);
    SuperficialReport sup = pick_superficial(is, {m}, 2, seed + static_cast<std::uint64_t>(s), tries);
    xi.depths.push_back(assoc_graded_depth(m, is, sup, 2));
  }
  xi.value = xi.depths.back();
  int start = s_max;
  while (start > 1 && xi.depths[start - 2] == xi.value) --start;
  xi.stabilized_at = start;
  xi.stabilized = s_max - start + 1 >= 2;
  return xi;
}

}  // namespace syzlab
