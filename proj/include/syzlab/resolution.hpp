#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "syzlab/groebner.hpp"

namespace syzlab {

/// A = Q/(f_1..f_c) with homogeneous f_i of degree >= 2.
class QuotientRing {
 public:
  /// For c <= 2 the regular-sequence property is verified and NotRegularSequence
  /// is raised on failure; longer sequences are taken on trust.
  QuotientRing(RingPtr base, std::vector<Polynomial> relations);

  const RingPtr& base() const { return base_; }
  const std::vector<Polynomial>& relations() const { return relations_; }
  std::size_t codimension() const { return relations_.size(); }
  bool is_complete_intersection() const { return true; }
  /// Complete intersections are Gorenstein, including Q itself.
  bool is_gorenstein() const { return true; }
  bool relations_verified() const { return relations_.size() <= 2; }

  /// Reduced Gröbner basis of (f) as an ideal of Q.
  const GroebnerBasis& relation_basis() const { return *relation_gb_; }
  /// Normal form modulo (f).
  Polynomial reduce(const Polynomial& p) const;
  Submodule relation_ideal() const;

 private:
  RingPtr base_;
  std::vector<Polynomial> relations_;
  std::shared_ptr<const GroebnerBasis> relation_gb_;
};

using QuotientPtr = std::shared_ptr<const QuotientRing>;
QuotientPtr make_quotient(RingPtr base, std::vector<Polynomial> relations);

/// Graded A-module coker(A^{columns} -> A^{shifts}). Columns live in a free
/// Q-module F; the trivial relations f_i e_j are implicit.
class PresentedModule {
 public:
  PresentedModule(QuotientPtr ring, std::vector<int> shifts, std::vector<FreeElement> columns, bool minimal = false);

  static PresentedModule free(QuotientPtr ring, std::vector<int> shifts);
  /// A/J for homogeneous ideal generators of J.
  static PresentedModule cyclic(QuotientPtr ring, const std::vector<Polynomial>& ideal);
  /// The residue field A/m.
  static PresentedModule residue_field(QuotientPtr ring);

  const QuotientPtr& ring() const { return ring_; }
  const ModulePtr& free_module() const { return free_; }
  std::size_t rank() const { return free_->rank(); }
  const std::vector<int>& shifts() const { return free_->shifts(); }
  /// Nontrivial columns, entries in normal form modulo (f).
  const std::vector<FreeElement>& columns() const { return columns_; }
  std::vector<FreeElement> trivial_columns() const;
  std::vector<FreeElement> all_columns() const;
  /// Submodule N of F with M = F/N.
  Submodule relations() const;
  bool is_minimal() const { return minimal_; }
  bool is_zero_module() const { return rank() == 0; }

  /// Gröbner basis of N, computed once.
  const GroebnerBasis& relation_basis() const;
  /// M/JM as a presented module (J an ideal of Q).
  PresentedModule modulo_ideal(const Submodule& ideal) const;
  /// Entry (row, column) of the nontrivial presentation matrix.
  Polynomial entry(std::size_t row, std::size_t column) const { return columns_[column].component(row); }

 private:
  QuotientPtr ring_;
  ModulePtr free_;
  std::vector<FreeElement> columns_;
  bool minimal_;
  struct Lazy {
    std::once_flag once;
    std::optional<GroebnerBasis> gb;
  };
  std::shared_ptr<Lazy> lazy_;
};

PresentedModule minimal_presentation(const PresentedModule& m);

inline constexpr int kDefaultResolutionSteps = 12;

/// Minimal free resolution ... -> F_2 -> F_1 -> F_0 over A.
struct ResolutionData {
  QuotientPtr ring;
  /// free_modules[i] = F_i as a graded free Q-module.
  std::vector<ModulePtr> free_modules;
  /// differentials[i] = d_{i+1}: F_{i+1} -> F_i as columns in F_i.
  std::vector<std::vector<FreeElement>> differentials;
  /// True when some F_i vanished: the resolution is finite.
  bool terminated = false;

  std::size_t steps() const { return differentials.size(); }
  std::vector<std::size_t> betti() const;
  const std::vector<int>& shifts(std::size_t i) const { return free_modules[i]->shifts(); }
};

ResolutionData minimal_free_resolution(const PresentedModule& m, int steps = kDefaultResolutionSteps);

/// Syz_j(M) minimally presented: generators F_j, relations d_{j+1}.
PresentedModule syzygy(const PresentedModule& m, int j);
PresentedModule syzygy(const ResolutionData& res, int j);

/// Tor_i(M, A/K) for a primary ideal K of Q containing (f): total and graded
/// lengths as homology of F (x) A/K.
struct TorLengths {
  std::vector<std::size_t> total;                 // index i
  std::vector<std::map<int, std::size_t>> graded;  // index i, degree -> dimension
};

/// i ranges over 0..i_max; the resolution must have at least i_max + 1 steps
/// unless it terminated. Raises NotPrimary when I is not primary on A.
TorLengths tor_lengths(const ResolutionData& res, int i_max, const Submodule& ideal, int power);
/// Lengths of Ext^i(M, A/I^{power}) from the cochain complex Hom(F, A/I^{power}).
std::vector<std::size_t> ext_lengths(const ResolutionData& res, int i_max, const Submodule& ideal, int power);

/// Pair (D, E) of square matrices over Q with D*E = E*D = f*Id. Empty when the
/// resolution terminates.
struct MatrixFactorization {
  std::vector<std::vector<Polynomial>> d;
  std::vector<std::vector<Polynomial>> e;
  std::size_t step = 0;
  bool empty() const { return d.empty(); }
};

inline constexpr int kPeriodicityCap = 10;
MatrixFactorization matrix_factorization(const PresentedModule& m, int cap = kPeriodicityCap);

/// operators[k][i] is the matrix of t_k: F_{i+2} -> F_i over A (rows index F_i).
struct EisenbudOperators {
  std::vector<std::vector<std::vector<std::vector<Polynomial>>>> operators;
};

EisenbudOperators eisenbud_operators(const ResolutionData& res);
/// d_{i+1} t_k,{i+1} = t_k,i d_{i+3} over A for every computed i.
bool operators_commute_with_differential(const ResolutionData& res, const EisenbudOperators& ops);
/// For c = 2: t1 t2 - t2 t1 vanishes after tensoring with the residue field.
bool operators_commute_on_residue_field(const ResolutionData& res, const EisenbudOperators& ops);

/// Matrix helpers over Q, rows x columns.
using PolyMatrix = std::vector<std::vector<Polynomial>>;
PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b, const RingPtr& ring);
PolyMatrix to_matrix(const std::vector<FreeElement>& columns, std::size_t rows);

struct BettiTable {
  std::vector<std::size_t> betti;
};

/// Estimated complexity: fitted growth degree of the Betti sequence plus one, 0
/// when it is eventually zero. Raises FitInconclusive.
int complexity_estimate(const BettiTable& table, int holdout = 2);

}  // namespace syzlab
