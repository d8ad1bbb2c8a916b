#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "syzlab/hilbert.hpp"

namespace syzlab {

inline constexpr int kDefaultSuperficialTries = 25;
/// b-vectors must vanish on [r, r + kBVectorWindow].
inline constexpr int kBVectorWindow = 4;

/// Evidence collected for one module at one level of the superficial sequence.
struct SuperficialEvidence {
  bool nonzerodivisor = false;
  /// Reduction number of I with respect to the sequence on this module.
  int reduction_number = -1;
  std::vector<std::int64_t> b;        // b_0..b_{r+window}
  std::vector<std::int64_t> h_module;  // h_I(M)
  std::vector<std::int64_t> h_cut;     // h_I(M/xM)
  std::vector<std::int64_t> e_module;  // e_0..e_r(M)
  std::vector<std::int64_t> e_cut;     // e_0..e_r(M/xM)
  /// Coefficients of h(M) - h(M/xM) + (1-z)^r b(z); all zero when the identity holds.
  std::vector<std::int64_t> residual;
  bool identity_holds = false;
  bool coefficients_agree = false;
};

struct SuperficialReport {
  bool accepted = false;
  /// x (and y in dimension 2), random combinations of minimal-degree generators.
  std::vector<Polynomial> sequence;
  int dimension = 0;
  /// evidence[level][module]; level 1 (dimension 2) concerns M/xM and y.
  std::vector<std::vector<SuperficialEvidence>> evidence;
  int tries_used = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> rejections;
};

/// Samples candidates until one passes every check on all modules. Raises NoCandidateFound.
SuperficialReport pick_superficial(const Submodule& ideal, const std::vector<PresentedModule>& modules, int dimension,
                                   std::uint64_t seed, int tries = kDefaultSuperficialTries);

/// Checks one fixed sequence; the report records why it fails, if it does.
SuperficialReport check_superficial(const Submodule& ideal, const std::vector<PresentedModule>& modules,
                                    int dimension, const std::vector<Polynomial>& sequence);

/// b_n = l((I^{n+1}M :_M x) / I^n M) for n = 0..n_max.
std::vector<std::int64_t> b_vector(const PresentedModule& m, const Submodule& ideal, const Polynomial& x, int n_max);

/// Depth of G_I(M) in dimension 1 or 2 from the colon criterion.
int assoc_graded_depth(const PresentedModule& m, const Submodule& ideal, const SuperficialReport& sup, int dimension);

/// l(tilde(I^n M) / I^n M) for n = 1..n_max (index 0 of the result is n = 1).
std::vector<std::int64_t> rr_deviation_table(const PresentedModule& m, const Submodule& ideal, int n_max);

struct DepthTable {
  std::vector<int> depth;
  std::vector<std::string> witnesses;
};

DepthTable depth_table(const std::vector<PresentedModule>& modules, const Submodule& ideal, int dimension,
                       std::uint64_t seed, int tries = kDefaultSuperficialTries);

/// Heuristic: depth G_{I^s}(M) for s = 1..s_max; stabilized when the last two agree.
struct XiEstimate {
  int value = 0;
  int stabilized_at = 0;
  bool stabilized = false;
  std::vector<int> depths;  // index s - 1
  static constexpr const char* kFlag = "HEURISTIC";
};

XiEstimate xi_estimate(const PresentedModule& m, const Submodule& ideal, int s_max, std::uint64_t seed,
                       int tries = kDefaultSuperficialTries);

/// Length of F/sub for a submodule of finite colength. Raises NotPrimary.
std::int64_t colength(const Submodule& sub);

}  // namespace syzlab
