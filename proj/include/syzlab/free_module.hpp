#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "syzlab/polynomial.hpp"

namespace syzlab {

enum class ModuleOrderKind {
  TermOverPosition,
  PositionOverTerm,
  /// m*e_i ordered by m*sigma_i in the term-over-position order on the base
  /// module, ties broken by index.
  Schreyer,
};

struct ModuleOrder {
  ModuleOrderKind kind = ModuleOrderKind::TermOverPosition;
  /// Positions below this index dominate every position at or above it; the
  /// chosen kind orders terms inside each block. Used for syzygy elimination.
  std::size_t elimination_prefix = 0;
  std::vector<Monomial> schreyer_monomials;
  std::vector<std::uint32_t> schreyer_positions;

  bool operator==(const ModuleOrder&) const = default;
};

/// Graded free module Q^r with generator degrees `shifts`; the term m*e_i has
/// degree deg(m) + shifts[i].
class FreeModule {
 public:
  FreeModule(RingPtr ring, std::vector<int> shifts, ModuleOrder order = {});

  const RingPtr& ring() const { return ring_; }
  std::size_t rank() const { return shifts_.size(); }
  int shift(std::size_t i) const { return shifts_[i]; }
  const std::vector<int>& shifts() const { return shifts_; }
  const ModuleOrder& order() const { return order_; }

  std::strong_ordering compare(const Monomial& a, std::uint32_t pa, const Monomial& b,
                               std::uint32_t pb) const;
  bool same_as(const FreeModule& o) const;

 private:
  std::strong_ordering compare_top(const Monomial& a, std::uint32_t pa, const Monomial& b,
                                   std::uint32_t pb) const;
  RingPtr ring_;
  std::vector<int> shifts_;
  ModuleOrder order_;
};

using ModulePtr = std::shared_ptr<const FreeModule>;

ModulePtr make_free_module(RingPtr ring, std::vector<int> shifts, ModuleOrder order = {});

struct ModuleTerm {
  Monomial monomial;
  std::uint32_t position;
  std::uint32_t coeff;
};

/// Element of a graded free module, stored as terms sorted decreasingly in
/// the module order.
class FreeElement {
 public:
  explicit FreeElement(ModulePtr module);

  static FreeElement unit(ModulePtr module, std::size_t position);
  static FreeElement from_components(ModulePtr module, const std::vector<Polynomial>& components);
  static FreeElement from_terms(ModulePtr module, std::vector<ModuleTerm> terms);
  /// Re-expresses the same components in a module with identical rank and ring
  /// (different order or prefix).
  static FreeElement rehome(ModulePtr module, const FreeElement& e);

  const ModulePtr& module() const { return module_; }
  const std::vector<ModuleTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const ModuleTerm& lead() const { return terms_.front(); }

  Polynomial component(std::size_t i) const;
  std::vector<Polynomial> components() const;

  int term_degree(const ModuleTerm& t) const { return t.monomial.degree() + module_->shift(t.position); }
  bool is_homogeneous() const;
  /// Degree of the lead term.
  int degree() const;

  FreeElement operator+(const FreeElement& o) const;
  FreeElement operator-(const FreeElement& o) const;
  FreeElement operator-() const;
  FreeElement scaled(std::uint32_t c) const;
  FreeElement times_term(const Monomial& m, std::uint32_t c) const;
  FreeElement times(const Polynomial& p) const;
  FreeElement add_multiple(const FreeElement& o, const Monomial& m, std::uint32_t c) const;
  FreeElement monic() const;

  bool operator==(const FreeElement& o) const;

  /// "[c_0, c_1, ...]" with canonical polynomial text per component.
  std::string to_string() const;

 private:
  void check(const FreeElement& o) const;
  ModulePtr module_;
  std::vector<ModuleTerm> terms_;
};

}  // namespace syzlab
