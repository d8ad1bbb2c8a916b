#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "syzlab/filtration.hpp"
#include "syzlab/quasi_polynomial.hpp"

namespace syzlab {

/// Outcome of one checked claim with the data behind it.
struct VerdictReport {
  std::string claim;
  /// CSV header; the first column is the index.
  std::vector<std::string> columns;
  std::vector<std::vector<std::int64_t>> rows;
  std::vector<std::pair<std::string, QuasiPolynomial>> fits;
  /// Fitted degrees must not exceed this (cx - 1) when set.
  std::optional<int> degree_bound;
  std::vector<std::string> notes;
  bool passed = false;

  std::string to_text() const;
  std::string to_csv() const;
};

struct GrowthParams {
  int j_max = 11;
  int holdout = kDefaultHoldout;
  int dimension = 1;
  std::uint64_t seed = 0;
  int tries = kDefaultSuperficialTries;
};

/// Resolution long enough for syzygies 0..j_max + 1 and a complexity estimate.
struct SyzygyFamily {
  ResolutionData resolution;
  std::vector<PresentedModule> modules;  // Syz_0..Syz_{j_max + 1}
  int complexity = 0;
};

SyzygyFamily syzygy_family(const PresentedModule& m, int j_max);

/// e_{i_coeff}(Syz_j) for j = 0..j_max, computed on modules cut down to
/// dimension i_coeff by an accepted superficial sequence, then fitted.
VerdictReport coefficient_growth_table(const PresentedModule& m, int i_coeff, const Submodule& ideal,
                                       const GrowthParams& params);

/// e_0(Syz_j) + e_0(Syz_{j+1}) = beta_j e_0(A) for j < j_max.
VerdictReport e0_recursion_check(const PresentedModule& m, const Submodule& ideal, int j_max, int dimension);

/// l(Tor_{j+1}(M, A/I^{n+1})) = beta_j e_1(A) - e_1(M_j) - e_1(M_{j+1}) for
/// j < j_max and n in [n_lo, n_hi]; dimension 1 only.
VerdictReport e1_recursion_check(const PresentedModule& m, const Submodule& ideal, int j_max, int n_lo, int n_hi);

/// Tor_i(M, A/I^n) and Tor_i(M, A/I^{n+1}) have equal lengths and graded
/// dimension vectors equal up to a twist by the superficial degree, for
/// n in [r, n_max], i in [1, i_max].
VerdictReport tor_rigidity_check(const PresentedModule& m, const Submodule& ideal, int r, int n_max, int i_max);

/// j |-> l(I^n Syz_j / I^{n+1} Syz_j) fitted with degree <= cx - 1.
VerdictReport fixed_n_growth_check(const PresentedModule& m, const Submodule& ideal, int n_fixed,
                                   const GrowthParams& params);

/// c_{i_coeff}(Syz_j) table, c_0 = e_0 comparison, and the dual recursion
/// beta_j e_l(A) - c_l(M_j) - c_l(M_{j+1}) = v_{l-1}(j+1) with v read off
/// n |-> l(Ext^{j+1}(M, A/I^{n+1})).
VerdictReport dual_growth_check(const PresentedModule& m, const Submodule& ideal, int i_coeff,
                                const GrowthParams& params);

/// Each parity subsequence ends in at least three equal entries.
VerdictReport depth_parity_check(const DepthTable& table);

/// Betti numbers of M with the fitted growth and complexity estimate.
VerdictReport betti_report(const PresentedModule& m, int j_max, int holdout = kDefaultHoldout);

}  // namespace syzlab
