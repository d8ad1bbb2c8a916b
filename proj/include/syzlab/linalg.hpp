#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "syzlab/groebner.hpp"

namespace syzlab {

using DenseMatrix = std::vector<std::vector<std::uint32_t>>;

/// Rank over F_p by Gaussian elimination; rows may have any common length.
std::size_t rank_mod_p(DenseMatrix rows, const PrimeField& field);

/// Monomial basis of F/N when it is finite dimensional: the terms m*e_i that
/// no lead term of a Gröbner basis of N divides.
class StandardBasis {
 public:
  /// nullopt when F/N is infinite dimensional.
  static std::optional<StandardBasis> build(const GroebnerBasis& gb);

  const GroebnerBasis& groebner_basis() const { return gb_; }
  std::size_t size() const { return terms_.size(); }
  const std::vector<std::pair<Monomial, std::uint32_t>>& terms() const { return terms_; }
  int degree(std::size_t k) const;
  std::map<int, std::size_t> graded_dimensions() const;
  std::optional<std::size_t> index(const Monomial& m, std::uint32_t position) const;
  /// (index, coefficient) pairs of the normal form of f.
  std::vector<std::pair<std::size_t, std::uint32_t>> coordinates(const FreeElement& f) const;

 private:
  explicit StandardBasis(GroebnerBasis gb) : gb_(std::move(gb)) {}
  GroebnerBasis gb_;
  std::vector<std::pair<Monomial, std::uint32_t>> terms_;
  std::vector<std::unordered_map<Monomial, std::size_t>> lookup_;
};

/// True when some position has no pure power of some variable among its lead
/// terms (and is not killed by a unit lead).
bool infinite_quotient(const GroebnerBasis& gb);

/// Graded ranks of L^s -> L^t, where L = Q/K is finite dimensional with basis
/// `basis` (rank-1 ambient) and source vector e_k (degree src_shift[k]) maps to
/// sum_j images[k][j] e'_j. Keys are degrees.
std::map<int, std::size_t> graded_map_rank(const StandardBasis& basis, const std::vector<int>& src_shift,
                                           const std::vector<std::vector<Polynomial>>& images);

}  // namespace syzlab
