#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "syzlab/field.hpp"
#include "syzlab/monomial.hpp"

namespace syzlab {

/// Q = F_p[x_1..x_v] with a fixed monomial order. Shared immutably by every
/// polynomial and free module built over it.
class PolynomialRing {
 public:
  PolynomialRing(std::uint32_t modulus, std::vector<std::string> variables,
                 MonomialOrder order = MonomialOrder());

  const PrimeField& field() const { return field_; }
  std::uint32_t modulus() const { return field_.modulus(); }
  std::size_t nvars() const { return variables_.size(); }
  const std::vector<std::string>& variables() const { return variables_; }
  const MonomialOrder& order() const { return order_; }

  /// Index of a variable name, or -1.
  int variable_index(std::string_view name) const;
  bool compatible(const PolynomialRing& o) const;

 private:
  PrimeField field_;
  std::vector<std::string> variables_;
  MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const PolynomialRing>;

RingPtr make_ring(std::uint32_t modulus, std::vector<std::string> variables,
                  MonomialOrder order = MonomialOrder());

struct Term {
  Monomial monomial;
  std::uint32_t coeff;
};

/// Sparse polynomial; terms are kept strictly decreasing in the ring order and
/// never carry a zero coefficient.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring);

  static Polynomial constant(RingPtr ring, std::int64_t c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial term(RingPtr ring, const Monomial& m, std::uint32_t coeff = 1);
  /// Collects like terms, reduces coefficients and sorts.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Term& lead() const { return terms_.front(); }
  const Monomial& lead_monomial() const { return terms_.front().monomial; }
  std::uint32_t lead_coeff() const { return terms_.front().coeff; }
  std::uint32_t coefficient(const Monomial& m) const;
  /// Nonzero constant polynomial.
  bool is_unit() const { return terms_.size() == 1 && terms_[0].monomial.is_one(); }

  bool is_homogeneous() const;
  /// Largest total degree of a term; -1 for zero.
  int degree() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial scaled(std::uint32_t c) const;
  Polynomial times_term(const Monomial& m, std::uint32_t c) const;
  /// this + c*m*o in one merge pass.
  Polynomial add_multiple(const Polynomial& o, const Monomial& m, std::uint32_t c) const;
  Polynomial monic() const;

  bool operator==(const Polynomial& o) const;

  std::string to_string() const;

 private:
  void check(const Polynomial& o) const;
  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Term text "c*x^a*y^b" with a sign-free coefficient, as used by the printers.
std::string format_monomial(const PolynomialRing& ring, const Monomial& m);
void append_term(std::string& out, const PolynomialRing& ring, const Monomial& m, std::uint32_t c,
                 bool first);

/// Parses `3*x^2*y - y^3 + 7` style text; coefficients are reduced mod p.
Polynomial parse_polynomial(const RingPtr& ring, std::string_view text);

}  // namespace syzlab
