#include "syzlab/harness.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

namespace syzlab {

namespace {

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t k = s.find(sep, start);
    out.push_back(trim(s.substr(start, k == std::string_view::npos ? std::string_view::npos : k - start)));
    if (k == std::string_view::npos) break;
    start = k + 1;
  }
  return out;
}

std::vector<std::string> split_list(std::string_view s) {
  if (trim(s).empty()) return {};
  return split(s, ',');
}

std::string join(const std::vector<std::string>& parts, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

int parse_int(const std::string& text, std::size_t line, const std::string& key) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(text, &used);
    if (used != text.size() || v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
      throw std::invalid_argument(text);
    return static_cast<int>(v);
  } catch (const std::logic_error&) {
    throw SpecError(key + " expects an integer, got '" + text + "'", line);
  }
}

bool valid_identifier(const std::string& v) {
  if (v.empty() || !std::isalpha(static_cast<unsigned char>(v[0]))) return false;
  return std::all_of(v.begin(), v.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

struct ModuleClause {
  enum class Kind { Quotient, Presentation, Residue, Ring } kind;
  std::vector<std::string> polys;  // Quotient
  std::vector<int> shifts;         // Presentation
  std::vector<std::vector<std::string>> columns;
};

ModuleClause parse_module_clause(const std::string& text, std::size_t line) {
  ModuleClause mc{ModuleClause::Kind::Ring, {}, {}, {}};
  if (text == "residue") {
    mc.kind = ModuleClause::Kind::Residue;
  } else if (text == "ring") {
    mc.kind = ModuleClause::Kind::Ring;
  } else if (text.rfind("quot:", 0) == 0) {
    mc.kind = ModuleClause::Kind::Quotient;
    mc.polys = split_list(text.substr(5));
  } else if (text.rfind("pres:", 0) == 0) {
    mc.kind = ModuleClause::Kind::Presentation;
    std::string body = text.substr(5);
    std::size_t semi = body.find(';');
    if (semi == std::string::npos) throw SpecError("pres: expects [shifts];[columns]", line);
    std::string a = trim(body.substr(0, semi)), b = trim(body.substr(semi + 1));
    auto bracketed = [&](const std::string& s) {
      if (s.size() < 2 || s.front() != '[' || s.back() != ']') throw SpecError("pres: parts must be bracketed", line);
      return s.substr(1, s.size() - 2);
    };
    for (const auto& s : split_list(bracketed(a))) mc.shifts.push_back(parse_int(s, line, "pres shift"));
    if (mc.shifts.empty()) throw SpecError("pres: needs at least one generator", line);
    std::string cols = trim(bracketed(b));
    if (!cols.empty())
      for (const auto& c : split(cols, '|')) {
        auto entries = split_list(c);
        if (entries.size() != mc.shifts.size())
          throw SpecError("pres: column '" + c + "' has " + std::to_string(entries.size()) + " entries, expected " +
                              std::to_string(mc.shifts.size()),
                          line);
        mc.columns.push_back(entries);
      }
  } else {
    throw SpecError("module must be quot:, pres:, residue or ring", line);
  }
  return mc;
}

Polynomial parse_checked(const RingPtr& ring, const std::string& text, std::size_t line, const std::string& what) {
  Polynomial p(ring);
  try {
    p = parse_polynomial(ring, text);
  } catch (const ParseError& e) {
    throw SpecError(what + " '" + text + "': " + e.what(), line);
  }
  if (!p.is_homogeneous()) throw SpecError(what + " '" + text + "' is not homogeneous", line);
  return p;
}

std::vector<Polynomial> parse_list(const RingPtr& ring, const std::vector<std::string>& texts, std::size_t line,
                                   const std::string& what) {
  std::vector<Polynomial> out;
  for (const auto& t : texts) out.push_back(parse_checked(ring, t, line, what));
  return out;
}

PresentedModule build_module(const QuotientPtr& ring, const ModuleClause& mc, std::size_t line) {
  const RingPtr& R = ring->base();
  switch (mc.kind) {
    case ModuleClause::Kind::Residue:
      return PresentedModule::residue_field(ring);
    case ModuleClause::Kind::Ring:
      return PresentedModule::free(ring, {0});
    case ModuleClause::Kind::Quotient:
      return PresentedModule::cyclic(ring, parse_list(R, mc.polys, line, "module generator"));
    case ModuleClause::Kind::Presentation: {
      ModulePtr F = make_free_module(R, mc.shifts);
      std::vector<FreeElement> cols;
      for (const auto& c : mc.columns) {
        std::vector<Polynomial> comps = parse_list(R, c, line, "presentation entry");
        std::optional<int> deg;
        for (std::size_t r = 0; r < comps.size(); ++r) {
          if (comps[r].is_zero()) continue;
          int d = comps[r].degree() + mc.shifts[r];
          if (deg && *deg != d) throw SpecError("presentation column [" + join(c) + "] is not homogeneous", line);
          deg = d;
        }
        cols.push_back(FreeElement::from_components(F, comps));
      }
      return minimal_presentation(PresentedModule(ring, mc.shifts, cols));
    }
  }
  throw Error("unreachable module kind");
}

const std::set<std::string> kSingleKeys = {"char", "vars", "module", "ideal", "dimA", "dimM", "base_syz"};

}  // namespace

int CommandSpec::get_int(const std::string& key, int fallback) const {
  auto it = params.find(key);
  if (it == params.end()) return fallback;
  return parse_int(it->second, line, name + " " + key);
}

std::string CommandSpec::to_text() const {
  std::string s = name;
  for (const auto& [k, v] : params) s += " " + k + "=" + v;
  return s;
}

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {
      "betti",        "coeffs",  "syz-coeffs", "depth-table", "rr-table", "dual-coeffs", "e0-check", "e1-check",
      "tor-rigidity", "fixed-n", "xi",         "superficial", "mf",       "eisenbud",    "verify-all"};
  return names;
}

std::string ExperimentSpec::to_text() const {
  std::ostringstream s;
  s << "char=" << characteristic << "\nvars=" << join(variables) << '\n';
  if (!relations.empty()) s << "rel=" << join(relations) << '\n';
  s << "module=" << module << '\n';
  if (base_syzygy) s << "base_syz=" << base_syzygy << '\n';
  s << "ideal=" << join(ideal) << "\ndimA=" << dim_ring << "\ndimM=" << dim_module << '\n';
  for (const auto& c : commands) s << "cmd=" << c.to_text() << '\n';
  return s.str();
}

bool CommandSpec::operator==(const CommandSpec& o) const { return name == o.name && params == o.params; }

ExperimentSpec parse_spec(const std::string& text) {
  ExperimentSpec spec;
  std::map<std::string, std::size_t> seen;
  std::size_t rel_line = 0;
  std::istringstream in(text);
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string l = trim(raw.substr(0, raw.find('#')));
    if (l.empty()) continue;
    std::size_t eq = l.find('=');
    if (eq == std::string::npos) throw SpecError("expected key=value, got '" + l + "'", line);
    std::string key = trim(l.substr(0, eq)), value = trim(l.substr(eq + 1));
    if (kSingleKeys.count(key)) {
      if (seen.count(key)) throw SpecError("duplicate key '" + key + "'", line);
      seen[key] = line;
    }
    if (key == "char") {
      int p = parse_int(value, line, key);
      if (p < 2 || !is_prime(static_cast<std::uint32_t>(p))) throw SpecError("char must be a prime", line);
      spec.characteristic = static_cast<std::uint32_t>(p);
    } else if (key == "vars") {
      spec.variables = split_list(value);
      if (spec.variables.empty()) throw SpecError("vars must list at least one variable", line);
      if (spec.variables.size() > kMaxVariables) throw SpecError("too many variables", line);
      std::set<std::string> uniq;
      for (const auto& v : spec.variables) {
        if (!valid_identifier(v)) throw SpecError("bad variable name '" + v + "'", line);
        if (!uniq.insert(v).second) throw SpecError("repeated variable '" + v + "'", line);
      }
    } else if (key == "rel") {
      for (auto& r : split_list(value)) spec.relations.push_back(r);
      if (!rel_line) rel_line = line;
    } else if (key == "module") {
      parse_module_clause(value, line);
      spec.module = value;
    } else if (key == "base_syz") {
      spec.base_syzygy = parse_int(value, line, key);
      if (spec.base_syzygy < 0) throw SpecError("base_syz must be nonnegative", line);
    } else if (key == "ideal") {
      spec.ideal = split_list(value);
    } else if (key == "dimA") {
      spec.dim_ring = parse_int(value, line, key);
    } else if (key == "dimM") {
      spec.dim_module = parse_int(value, line, key);
    } else if (key == "cmd") {
      std::istringstream words(value);
      CommandSpec c;
      c.line = line;
      words >> c.name;
      const auto& names = command_names();
      if (std::find(names.begin(), names.end(), c.name) == names.end())
        throw SpecError("unknown command '" + c.name + "'", line);
      std::string w;
      while (words >> w) {
        std::size_t k = w.find('=');
        if (k == std::string::npos || k == 0 || k + 1 == w.size())
          throw SpecError("command parameter '" + w + "' is not k=v", line);
        c.params[w.substr(0, k)] = w.substr(k + 1);
      }
      spec.commands.push_back(std::move(c));
    } else {
      throw SpecError("unknown key '" + key + "'", line);
    }
  }
  for (const char* required : {"char", "vars", "module", "ideal"})
    if (!seen.count(required)) throw SpecError(std::string("missing required key '") + required + "'", line);
  if (spec.ideal.empty()) throw SpecError("ideal must have generators", seen["ideal"]);

  RingPtr R = make_ring(spec.characteristic, spec.variables);
  parse_list(R, spec.relations, rel_line, "relation");
  for (const auto& p : parse_list(R, spec.ideal, seen["ideal"], "ideal generator"))
    if (p.is_zero() || p.degree() == 0) throw SpecError("ideal generators must be nonzero of positive degree", seen["ideal"]);
  ModuleClause mc = parse_module_clause(spec.module, seen["module"]);
  if (mc.kind == ModuleClause::Kind::Quotient) parse_list(R, mc.polys, seen["module"], "module generator");
  if (mc.kind == ModuleClause::Kind::Presentation)
    for (const auto& c : mc.columns) parse_list(R, c, seen["module"], "presentation entry");

  int cdim = static_cast<int>(spec.variables.size()) - static_cast<int>(spec.relations.size());
  if (!seen.count("dimA")) spec.dim_ring = cdim;
  if (!seen.count("dimM")) spec.dim_module = spec.dim_ring;
  if (spec.dim_ring < 0 || spec.dim_module < 0 || spec.dim_module > spec.dim_ring)
    throw SpecError("declared dimensions must satisfy 0 <= dimM <= dimA", seen.count("dimM") ? seen["dimM"] : line);
  if (spec.dim_ring != cdim)
    throw SpecError("dimA = " + std::to_string(spec.dim_ring) + " but a complete intersection here has dimension " +
                        std::to_string(cdim),
                    seen["dimA"]);
  return spec;
}

ExperimentSpec load_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read spec file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_spec(buf.str());
}

Instance build_instance(const ExperimentSpec& spec) {
  RingPtr R = make_ring(spec.characteristic, spec.variables);
  QuotientPtr A = make_quotient(R, parse_list(R, spec.relations, 0, "relation"));
  PresentedModule m = build_module(A, parse_module_clause(spec.module, 0), 0);
  if (spec.base_syzygy > 0) m = syzygy(m, spec.base_syzygy);
  return Instance{R, A, m, make_ideal(R, parse_list(R, spec.ideal, 0, "ideal generator"))};
}

// ---- cache ----

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr)) throw Error("SHA-256 failed");
  std::ostringstream s;
  for (unsigned int i = 0; i < len; ++i) s << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
  return s.str();
}

std::filesystem::path default_cache_dir(const std::filesystem::path& fallback) {
  if (const char* env = std::getenv("SYZLAB_CACHE"); env && *env) return env;
  return fallback;
}

FileCache::FileCache(std::filesystem::path dir) : dir_(std::move(dir)) { std::filesystem::create_directories(dir_); }

std::filesystem::path FileCache::entry_path(const std::string& canonical_input) const {
  std::string h = sha256_hex(canonical_input);
  return dir_ / h.substr(0, 2) / (h + ".gb");
}

namespace {
constexpr std::string_view kEntryMagic = "syzlab-cache v1\n";
}

std::optional<std::string> FileCache::load(const std::string& canonical_input) {
  auto path = entry_path(canonical_input);
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    ++misses_;
    return std::nullopt;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  std::string data = buf.str();
  auto bad = [&](const std::string& why) -> std::optional<std::string> {
    ++corrupt_;
    ++misses_;
    std::lock_guard lock(warn_mutex_);
    warnings_.push_back("cache entry " + path.string() + " " + why + "; recomputing");
    return std::nullopt;
  };
  if (data.rfind(kEntryMagic, 0) != 0) return bad("has a bad header");
  std::size_t nl = data.find('\n', kEntryMagic.size());
  if (nl == std::string::npos) return bad("is truncated");
  std::size_t n = 0;
  try {
    n = std::stoull(data.substr(kEntryMagic.size(), nl - kEntryMagic.size()));
  } catch (const std::logic_error&) {
    return bad("has a bad length field");
  }
  if (data.size() < nl + 1 + n) return bad("is truncated");
  if (data.compare(nl + 1, n, canonical_input) != 0) return bad("belongs to a different input");
  ++hits_;
  return data.substr(nl + 1 + n);
}

void FileCache::store(const std::string& canonical_input, const std::string& payload) {
  auto path = entry_path(canonical_input);
  std::filesystem::create_directories(path.parent_path());
  // Write then rename so concurrent readers never see a partial entry.
  auto tmp = path;
  tmp += ".tmp" + std::to_string(std::hash<std::string>{}(payload) ^ stores_.load());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << kEntryMagic << canonical_input.size() << '\n' << canonical_input << payload;
    if (!out) throw Error("cannot write cache entry " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
  ++stores_;
}

void FileCache::report_corrupt(const std::string& canonical_input) {
  ++corrupt_;
  std::lock_guard lock(warn_mutex_);
  warnings_.push_back("cache entry " + entry_path(canonical_input).string() + " failed verification; recomputing");
}

FileCache::Stats FileCache::stats() const { return Stats{hits_, misses_, stores_, corrupt_}; }

std::vector<std::string> FileCache::warnings() const {
  std::lock_guard lock(warn_mutex_);
  return warnings_;
}

// ---- run ----

namespace {

struct Context {
  const ExperimentSpec& spec;
  Instance inst;
  std::uint64_t seed;
  std::optional<SyzygyFamily> family;
  int family_j = -1;

  const SyzygyFamily& syz(int j_max) {
    if (!family || family_j < j_max) {
      family = syzygy_family(inst.module, j_max);
      family_j = j_max;
    }
    return *family;
  }
  std::vector<PresentedModule> syz_modules(int j_max) {
    const auto& f = syz(j_max);
    return {f.modules.begin(), f.modules.begin() + j_max + 1};
  }
  GrowthParams growth(const CommandSpec& c, int j_default = 11) const {
    GrowthParams g;
    g.j_max = c.get_int("j_max", j_default);
    g.holdout = c.get_int("holdout", kDefaultHoldout);
    g.dimension = spec.dim_module;
    g.seed = seed;
    g.tries = c.get_int("tries", kDefaultSuperficialTries);
    return g;
  }
  PresentedModule ring_module() const { return PresentedModule::free(inst.ring, {0}); }
};

std::string join_ints(const std::vector<std::int64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string poly_text(const std::vector<std::int64_t>& h) {
  std::vector<Rational> c(h.begin(), h.end());
  return RationalPolynomial(c).to_string("z");
}

std::string matrix_text(const PolyMatrix& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.size(); ++i) {
    s += i ? "; " : "";
    for (std::size_t j = 0; j < m[i].size(); ++j) s += (j ? ", " : "") + m[i][j].to_string();
  }
  return s + "]";
}

/// Reduction number of I with respect to an accepted superficial sequence,
/// taken over A (when dim A = dim M) and M together.
int reduction_number_of(Context& ctx, int tries) {
  if (ctx.spec.dim_module == 0) return 0;
  std::vector<PresentedModule> mods = {ctx.inst.module};
  if (ctx.spec.dim_ring == ctx.spec.dim_module) mods.push_back(ctx.ring_module());
  auto sup = pick_superficial(ctx.inst.ideal, mods, ctx.spec.dim_module, ctx.seed, tries);
  int r = 0;
  for (const auto& ev : sup.evidence[0]) r = std::max(r, ev.reduction_number);
  return r;
}

VerdictReport cmd_coeffs_values(const HilbertData& hd) {
  VerdictReport v;
  v.claim = "hilbert-function";
  v.columns = {"n", "length"};
  for (std::size_t n = 0; n < hd.values.size(); ++n) v.rows.push_back({static_cast<std::int64_t>(n), hd.values[n]});
  v.passed = true;
  return v;
}

std::vector<VerdictReport> cmd_coeffs(Context& ctx, const CommandSpec& c) {
  const int d = ctx.spec.dim_module;
  HilbertData hd = hilbert_data(ctx.inst.module, ctx.inst.ideal, d);
  VerdictReport v;
  v.claim = "hilbert-coefficients";
  v.columns = {"i", "h", "e"};
  std::size_t len = std::max(hd.h.size(), hd.e.size());
  for (std::size_t i = 0; i < len; ++i)
    v.rows.push_back({static_cast<std::int64_t>(i), i < hd.h.size() ? hd.h[i] : 0, i < hd.e.size() ? hd.e[i] : 0});
  v.notes.push_back("h = " + poly_text(hd.h));
  v.notes.push_back("postulation number " + std::to_string(hd.postulation_number));
  v.notes.push_back("reduction number " + std::to_string(reduction_number_of(ctx, c.get_int("tries", kDefaultSuperficialTries))));
  v.passed = true;
  return {cmd_coeffs_values(hd), v};
}

std::vector<VerdictReport> cmd_depth_table(Context& ctx, const CommandSpec& c) {
  int j_max = c.get_int("j_max", 7);
  DepthTable t = depth_table(ctx.syz_modules(j_max), ctx.inst.ideal, ctx.spec.dim_module, ctx.seed,
                             c.get_int("tries", kDefaultSuperficialTries));
  VerdictReport v = depth_parity_check(t);
  for (std::size_t j = 0; j < t.witnesses.size(); ++j)
    if (!t.witnesses[j].empty()) v.notes.push_back("witness j=" + std::to_string(j) + ": " + t.witnesses[j]);
  return {v};
}

std::vector<VerdictReport> cmd_rr_table(Context& ctx, const CommandSpec& c) {
  int n_max = c.get_int("n_max", 4);
  auto dev = rr_deviation_table(ctx.inst.module, ctx.inst.ideal, n_max);
  VerdictReport v;
  v.claim = "ratliff-rush";
  v.columns = {"n", "deviation"};
  for (std::size_t i = 0; i < dev.size(); ++i) v.rows.push_back({static_cast<std::int64_t>(i + 1), dev[i]});
  v.passed = true;
  const int d = ctx.spec.dim_module;
  if (d == 1 || d == 2) {
    auto sup = pick_superficial(ctx.inst.ideal, {ctx.inst.module}, d, ctx.seed, c.get_int("tries", kDefaultSuperficialTries));
    int depth = assoc_graded_depth(ctx.inst.module, ctx.inst.ideal, sup, d);
    v.notes.push_back("assoc_graded_depth = " + std::to_string(depth));
    bool deviates = std::any_of(dev.begin(), dev.end(), [](std::int64_t x) { return x != 0; });
    if (deviates && depth != 0) {
      v.passed = false;
      v.notes.push_back("nonzero deviation but positive depth");
    }
  }
  return {v};
}

std::vector<VerdictReport> cmd_xi(Context& ctx, const CommandSpec& c) {
  XiEstimate xi = xi_estimate(ctx.inst.module, ctx.inst.ideal, c.get_int("s_max", 3), ctx.seed,
                              c.get_int("tries", kDefaultSuperficialTries));
  VerdictReport v;
  v.claim = std::string("xi ") + XiEstimate::kFlag;
  v.columns = {"s", "depth"};
  for (std::size_t s = 0; s < xi.depths.size(); ++s) v.rows.push_back({static_cast<std::int64_t>(s + 1), xi.depths[s]});
  v.notes.push_back("estimate " + std::to_string(xi.value) + (xi.stabilized ? " stabilized at s=" + std::to_string(xi.stabilized_at) : " not stabilized"));
  v.passed = xi.stabilized;
  return {v};
}

std::vector<VerdictReport> cmd_superficial(Context& ctx, const CommandSpec& c) {
  int j_max = c.get_int("j_max", 4);
  std::vector<PresentedModule> mods;
  std::vector<std::string> names;
  if (ctx.spec.dim_ring == ctx.spec.dim_module) {
    mods.push_back(ctx.ring_module());
    names.push_back("A");
  }
  auto syz = ctx.syz_modules(j_max);
  for (int j = 0; j <= j_max; ++j) {
    mods.push_back(syz[j]);
    names.push_back("Syz_" + std::to_string(j));
  }
  VerdictReport v;
  v.claim = "superficial-identity";
  v.columns = {"level", "module", "nonzerodivisor", "reduction_number", "identity", "e_agree"};
  SuperficialReport sup = pick_superficial(ctx.inst.ideal, mods, ctx.spec.dim_module, ctx.seed,
                                           c.get_int("tries", kDefaultSuperficialTries));
  v.passed = sup.accepted;
  for (std::size_t level = 0; level < sup.evidence.size(); ++level)
    for (std::size_t k = 0; k < sup.evidence[level].size(); ++k) {
      const auto& ev = sup.evidence[level][k];
      v.rows.push_back({static_cast<std::int64_t>(level), static_cast<std::int64_t>(k), ev.nonzerodivisor,
                        ev.reduction_number, ev.identity_holds, ev.coefficients_agree});
      v.passed &= ev.identity_holds && ev.coefficients_agree;
      if (level == 0)
        v.notes.push_back(names[k] + ": h = " + poly_text(ev.h_module) + ", h_cut = " + poly_text(ev.h_cut) +
                          ", b = " + join_ints(ev.b) + ", residual = " + join_ints(ev.residual));
    }
  std::vector<std::string> seq;
  for (const auto& p : sup.sequence) seq.push_back(p.to_string());
  v.notes.push_back("sequence (" + join(seq, ", ") + ") after " + std::to_string(sup.tries_used) + " tries");
  return {v};
}

std::vector<VerdictReport> cmd_mf(Context& ctx, const CommandSpec& c) {
  const auto& rels = ctx.inst.ring->relations();
  if (rels.size() != 1) throw Error("matrix factorization needs a hypersurface (one relation)");
  MatrixFactorization mf = matrix_factorization(ctx.inst.module, c.get_int("cap", 10));
  VerdictReport v;
  v.claim = "matrix-factorization";
  v.columns = {"step", "size", "de_ok", "ed_ok"};
  if (mf.d.empty()) {
    v.notes.push_back("resolution terminates; no factorization");
    v.passed = true;
    return {v};
  }
  const RingPtr& R = ctx.inst.base;
  std::size_t n = mf.d.size();
  PolyMatrix fid(n, std::vector<Polynomial>(n, Polynomial(R)));
  for (std::size_t i = 0; i < n; ++i) fid[i][i] = rels[0];
  bool de = multiply(mf.d, mf.e, R) == fid, ed = multiply(mf.e, mf.d, R) == fid;
  v.rows.push_back({static_cast<std::int64_t>(mf.step), static_cast<std::int64_t>(n), de, ed});
  v.notes.push_back("D = " + matrix_text(mf.d));
  v.notes.push_back("E = " + matrix_text(mf.e));
  v.passed = de && ed;
  return {v};
}

std::vector<VerdictReport> cmd_eisenbud(Context& ctx, const CommandSpec& c) {
  std::size_t codim = ctx.inst.ring->relations().size();
  if (codim == 0) throw Error("Eisenbud operators need at least one relation");
  ResolutionData res = minimal_free_resolution(ctx.inst.module, c.get_int("steps", 8));
  EisenbudOperators ops = eisenbud_operators(res);
  bool diff = operators_commute_with_differential(res, ops);
  VerdictReport v;
  v.claim = "eisenbud-operators";
  v.columns = {"codim", "steps", "commute_with_d", "commute_on_k"};
  std::int64_t on_k = -1;
  if (codim == 2) on_k = operators_commute_on_residue_field(res, ops);
  v.rows.push_back({static_cast<std::int64_t>(codim), static_cast<std::int64_t>(res.differentials.size()), diff, on_k});
  v.passed = diff && on_k != 0;
  if (on_k < 0) v.notes.push_back("residue-field commutation checked only for two relations");
  return {v};
}

std::vector<VerdictReport> run_command(Context& ctx, const CommandSpec& c);

std::vector<VerdictReport> cmd_verify_all(Context& ctx, const CommandSpec& c) {
  const int d = ctx.spec.dim_module;
  std::vector<std::string> battery = {"betti", "coeffs"};
  for (int i = 0; i <= std::min(d, 2); ++i) battery.push_back("syz-coeffs i=" + std::to_string(i));
  battery.push_back("e0-check");
  if (d == 1) {
    battery.push_back("e1-check");
    battery.push_back("tor-rigidity");
  }
  battery.push_back("fixed-n n=1");
  for (int i = 0; i <= std::min(d, 2); ++i) battery.push_back("dual-coeffs i=" + std::to_string(i));
  if (d == 1 || d == 2) {
    battery.push_back("depth-table");
    battery.push_back("superficial");
  }
  std::size_t codim = ctx.inst.ring->relations().size();
  if (codim == 1) battery.push_back("mf");
  if (codim >= 1) battery.push_back("eisenbud");
  std::vector<VerdictReport> out;
  for (const auto& line : battery) {
    CommandSpec sub;
    std::istringstream words(line);
    words >> sub.name;
    std::string w;
    while (words >> w) sub.params[w.substr(0, w.find('='))] = w.substr(w.find('=') + 1);
    for (const auto& [k, val] : c.params)
      if (!sub.params.count(k)) sub.params[k] = val;
    sub.line = c.line;
    try {
      for (auto& r : run_command(ctx, sub)) out.push_back(std::move(r));
    } catch (const std::exception& e) {
      VerdictReport v;
      v.claim = sub.to_text();
      v.notes.push_back(std::string("error: ") + e.what());
      out.push_back(std::move(v));
    }
  }
  return out;
}

std::vector<VerdictReport> run_command(Context& ctx, const CommandSpec& c) {
  const std::string& n = c.name;
  const auto& m = ctx.inst.module;
  const auto& I = ctx.inst.ideal;
  if (n == "betti") return {betti_report(m, c.get_int("j_max", 8), c.get_int("holdout", kDefaultHoldout))};
  if (n == "coeffs") return cmd_coeffs(ctx, c);
  if (n == "syz-coeffs") return {coefficient_growth_table(m, c.get_int("i", 0), I, ctx.growth(c))};
  if (n == "depth-table") return cmd_depth_table(ctx, c);
  if (n == "rr-table") return cmd_rr_table(ctx, c);
  if (n == "dual-coeffs") return {dual_growth_check(m, I, c.get_int("i", 0), ctx.growth(c))};
  if (n == "e0-check") return {e0_recursion_check(m, I, c.get_int("j_max", 8), ctx.spec.dim_module)};
  if (n == "e1-check") {
    if (ctx.spec.dim_module != 1) throw Error("e1-check needs dimension 1");
    return {e1_recursion_check(m, I, c.get_int("j_max", 6), c.get_int("n_lo", 1), c.get_int("n_hi", 4))};
  }
  if (n == "tor-rigidity") {
    if (ctx.spec.dim_module != 1) throw Error("tor-rigidity needs dimension 1");
    int r = c.params.count("r") ? c.get_int("r", 0)
                                : reduction_number_of(ctx, c.get_int("tries", kDefaultSuperficialTries));
    return {tor_rigidity_check(m, I, r, c.get_int("n_max", 5), c.get_int("i_max", 5))};
  }
  if (n == "fixed-n") return {fixed_n_growth_check(m, I, c.get_int("n", 1), ctx.growth(c))};
  if (n == "xi") return cmd_xi(ctx, c);
  if (n == "superficial") return cmd_superficial(ctx, c);
  if (n == "mf") return cmd_mf(ctx, c);
  if (n == "eisenbud") return cmd_eisenbud(ctx, c);
  if (n == "verify-all") return cmd_verify_all(ctx, c);
  throw Error("unknown command '" + n + "'");
}

std::string csv_name(std::size_t index, const std::string& command, std::size_t k, std::size_t count) {
  std::ostringstream s;
  s << std::setw(2) << std::setfill('0') << index + 1 << '-' << command;
  if (count > 1) s << '-' << k + 1;
  s << ".csv";
  return s.str();
}

}  // namespace

RunArtifact run(const ExperimentSpec& spec, const std::vector<CommandSpec>& commands, const RunOptions& options) {
  if (options.cache) set_groebner_store(options.cache);
  struct Reset {
    bool active;
    ~Reset() {
      if (active) set_groebner_store(nullptr);
    }
  } reset{options.cache != nullptr};
  RunArtifact art;
  art.seed = options.seed;
  Context ctx{spec, build_instance(spec), options.seed, std::nullopt, -1};
  for (const auto& hd : {std::pair{ctx.ring_module(), spec.dim_ring}, std::pair{ctx.inst.module, spec.dim_module}}) {
    // Declared dimensions are checked against the Hilbert polynomial degree.
    try {
      hilbert_data(hd.first, ctx.inst.ideal, hd.second);
    } catch (const Error& e) {
      throw SpecError(std::string("declared dimension ") + std::to_string(hd.second) + " rejected: " + e.what(), 0);
    }
  }
  for (const auto& c : commands) {
    CommandResult cr{c, {}, 0};
    auto t0 = std::chrono::steady_clock::now();
    try {
      cr.reports = run_command(ctx, c);
    } catch (const std::exception& e) {
      VerdictReport v;
      v.claim = c.to_text();
      v.notes.push_back(std::string("error in '") + c.to_text() + "' on module " + spec.module + " with ideal (" +
                        join(spec.ideal) + "): " + e.what());
      cr.reports.push_back(std::move(v));
    }
    cr.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    art.results.push_back(std::move(cr));
  }
  if (options.cache) {
    art.cache_stats = options.cache->stats();
    art.warnings = options.cache->warnings();
  }
  return art;
}

RunArtifact run(const ExperimentSpec& spec, const RunOptions& options) { return run(spec, spec.commands, options); }

bool RunArtifact::all_passed() const {
  for (const auto& r : results)
    for (const auto& v : r.reports)
      if (!v.passed) return false;
  return true;
}

std::string RunArtifact::report_text() const {
  std::ostringstream s;
  for (const auto& r : results) {
    s << "== " << r.command.to_text() << " ==\n";
    for (const auto& v : r.reports) s << v.to_text() << '\n';
  }
  s << "overall: " << (all_passed() ? "PASS" : "FAIL") << '\n';
  return s.str();
}

std::string RunArtifact::log_text() const {
  std::ostringstream s;
  s << "seed=" << seed << '\n';
  for (const auto& r : results) {
    std::size_t passed = std::count_if(r.reports.begin(), r.reports.end(), [](const auto& v) { return v.passed; });
    s << std::fixed << std::setprecision(3) << "command '" << r.command.to_text() << "' " << r.seconds << "s "
      << passed << "/" << r.reports.size() << " passed\n";
  }
  if (cache_stats)
    s << "cache hits=" << cache_stats->hits << " misses=" << cache_stats->misses << " stores=" << cache_stats->stores
      << " corrupt=" << cache_stats->corrupt << '\n';
  else
    s << "cache disabled\n";
  for (const auto& w : warnings) s << "warning: " << w << '\n';
  return s.str();
}

void RunArtifact::write(const std::filesystem::path& dir) const {
  std::filesystem::create_directories(dir);
  auto put = [&](const std::string& name, const std::string& text) {
    std::ofstream out(dir / name, std::ios::binary | std::ios::trunc);
    out << text;
    if (!out) throw Error("cannot write " + (dir / name).string());
  };
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& reps = results[i].reports;
    for (std::size_t k = 0; k < reps.size(); ++k)
      put(csv_name(i, results[i].command.name, k, reps.size()), reps[k].to_csv());
  }
  put("report.txt", report_text());
  put("run.log", log_text());
}

}  // namespace syzlab
