#pragma once

#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "syzlab/free_module.hpp"

namespace syzlab {

/// Homogeneous submodule of a graded free module, given by generators.
/// Zero generators are dropped on construction.
class Submodule {
 public:
  explicit Submodule(ModulePtr ambient, std::vector<FreeElement> generators = {});

  const ModulePtr& ambient() const { return ambient_; }
  const std::vector<FreeElement>& generators() const { return generators_; }
  std::size_t size() const { return generators_.size(); }
  bool is_zero() const { return generators_.empty(); }
  bool is_ideal() const { return ambient_->rank() == 1; }
  /// Generators of `this + other`.
  Submodule operator+(const Submodule& other) const;

 private:
  ModulePtr ambient_;
  std::vector<FreeElement> generators_;
};

/// Ideal of Q as a rank-1 submodule.
Submodule make_ideal(const RingPtr& ring, const std::vector<Polynomial>& generators);
ModulePtr ideal_ambient(const RingPtr& ring);
/// Polynomials of an ideal's generators.
std::vector<Polynomial> ideal_generators(const Submodule& ideal);

struct DivisionResult {
  /// quotients[k] multiplies basis element k.
  std::vector<Polynomial> quotients;
  FreeElement remainder;
};

/// Reduced Gröbner basis: monic, no lead term divides another, tails reduced.
/// Elements are sorted increasingly by lead term.
class GroebnerBasis {
 public:
  GroebnerBasis(ModulePtr ambient, std::vector<FreeElement> elements);

  const ModulePtr& ambient() const { return ambient_; }
  const std::vector<FreeElement>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }

  FreeElement normal_form(const FreeElement& f) const;
  DivisionResult divide(const FreeElement& f) const;
  bool contains(const FreeElement& f) const { return normal_form(f).is_zero(); }

  /// Lead monomials grouped by position.
  std::vector<std::vector<Monomial>> lead_monomials_by_position() const;

 private:
  const FreeElement* find_divisor(const Monomial& m, std::uint32_t pos) const;
  ModulePtr ambient_;
  std::vector<FreeElement> elements_;
  std::vector<std::vector<std::size_t>> by_position_;
};

/// Persistent storage for Gröbner bases keyed by a canonical input string.
/// Implementations must be safe for concurrent use.
class GroebnerStore {
 public:
  virtual ~GroebnerStore() = default;
  virtual std::optional<std::string> load(const std::string& canonical_input) = 0;
  virtual void store(const std::string& canonical_input, const std::string& payload) = 0;
  /// Called when a stored payload fails to deserialize.
  virtual void report_corrupt(const std::string& canonical_input) = 0;
};

/// Installs (or clears, with nullptr) the process-wide store consulted by buchberger.
void set_groebner_store(std::shared_ptr<GroebnerStore> store);
std::shared_ptr<GroebnerStore> groebner_store();

/// Canonical serialization of (modulus, variables, orders, shifts, generators).
std::string canonical_input(const Submodule& gens);
std::string serialize_basis(const GroebnerBasis& gb);
/// Throws Error on malformed payloads or when the payload is not a reduced
/// basis containing the source generators.
GroebnerBasis deserialize_basis(const Submodule& source, std::string_view payload);

/// Incremental homogeneous Buchberger (normal strategy, FIFO tie-break,
/// Gebauer–Möller pair pruning; product criterion only for ideals).
class GroebnerBuilder {
 public:
  static constexpr int kUnbounded = std::numeric_limits<int>::max();

  explicit GroebnerBuilder(ModulePtr ambient);

  void add(const FreeElement& generator);
  /// Processes every pending generator and pair of degree <= max_degree.
  void complete(int max_degree = kUnbounded);
  /// Full normal form against the current, possibly unfinished, basis. Exact
  /// for elements of degree <= the last completed degree.
  FreeElement reduce(const FreeElement& f) const;
  GroebnerBasis finish();

 private:
  struct Item {
    int degree;
    std::uint64_t seq;
    std::size_t i, j;  // basis indices; i == npos marks a pending generator j
    Monomial lcm;
    std::uint32_t position;
    bool alive;
  };
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  void insert_basis_element(FreeElement h);
  void push_item(Item item);

  ModulePtr ambient_;
  std::vector<FreeElement> basis_;
  std::vector<FreeElement> pending_;
  std::vector<Item> items_;
  std::set<std::tuple<int, std::uint64_t, std::size_t>> queue_;
  std::uint64_t seq_ = 0;
};

GroebnerBasis buchberger(const Submodule& gens);
/// Gröbner basis with respect to a different module order on the same ambient.
GroebnerBasis buchberger(const Submodule& gens, const ModuleOrder& order);

FreeElement normal_form(const FreeElement& f, const GroebnerBasis& gb);

/// Schreyer syzygies among the basis elements, living in the free module
/// with one generator per basis element in degree deg(g_k). Pairs whose lcm
/// is covered by strictly smaller lcms through a third lead term are skipped.
Submodule syzygy_module(const GroebnerBasis& gb);

/// Kernel of Q^s -> F, e_i |-> generators[i], with e_i in degree degrees[i].
/// Computed through an elimination order on F (+) Q^s.
Submodule generator_syzygies(const ModulePtr& ambient, const std::vector<FreeElement>& generators,
                             const std::vector<int>& degrees);

/// Expresses elements as combinations of fixed generators.
class Lifter {
 public:
  Lifter(const ModulePtr& ambient, const std::vector<FreeElement>& generators, const std::vector<int>& degrees);
  /// Coefficients c with sum c_i g_i = f, or nullopt when f is not in the span.
  std::optional<std::vector<Polynomial>> lift(const FreeElement& f) const;

 private:
  ModulePtr ambient_;
  ModulePtr augmented_;
  std::size_t count_;
  std::optional<GroebnerBasis> gb_;
};

bool membership(const FreeElement& f, const Submodule& n);
bool contains(const Submodule& big, const Submodule& small);
bool equal(const Submodule& a, const Submodule& b);

/// All products of n generators (multisets), duplicates removed; n = 0 gives (1).
Submodule ideal_power(const Submodule& ideal, int n);
/// Generators g*h for g in the ideal and h in the module.
Submodule module_scale(const Submodule& ideal, const Submodule& module);
Submodule intersection(const Submodule& a, const Submodule& b);
/// {u in m : x*u in n}; the result contains n (n is assumed inside m).
Submodule colon_by_element(const Submodule& n, const Polynomial& x, const Submodule& m);
/// Intersection over the ideal's generators of colon_by_element.
Submodule colon_by_ideal(const Submodule& n, const Submodule& ideal, const Submodule& m);

/// Subset of generators (taken in degree order) minimally generating
/// (gens + base)/base.
std::vector<FreeElement> minimal_generators(const std::vector<FreeElement>& gens, const Submodule& base);

/// The whole free module, generated by its basis vectors.
Submodule whole_module(const ModulePtr& ambient);

inline constexpr int kReductionCap = 30;
inline constexpr int kRatliffRushCap = 20;

/// Least r with I^{r+1} m + rel = J I^r m + rel. Throws NotAReduction past the cap.
int reduction_number(const Submodule& i, const Submodule& j, const Submodule& m,
                     const Submodule& relations, int cap = kReductionCap);
int reduction_number(const Submodule& i, const Submodule& j, const Submodule& m, int cap = kReductionCap);

/// Stable value of the chain ((I^{n+k} m + rel) :_m I^k), k = 1, 2, ...
Submodule ratliff_rush(const Submodule& i, int n, const Submodule& m, const Submodule& relations,
                       int cap = kRatliffRushCap);
Submodule ratliff_rush(const Submodule& i, int n, const Submodule& m, int cap = kRatliffRushCap);

}  // namespace syzlab
