// SPDX-License-Identifier: Apache-2.0
#ifndef CONFALG_DECOMPOSE_HPP_
#define CONFALG_DECOMPOSE_HPP_

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "confalg/module.hpp"
#include "confalg/regularity.hpp"

namespace confalg {

/// Rational solutions (Δ, β) of β = 2Δ−1, 2β² − 3Δβ + 3Δ − 2 = 0, ascending.
std::vector<std::pair<Scalar, Scalar>> solve_partition_relations();

/// Rational roots of Σ c_k x^k (c_k = coeffs[k]), ascending, without
/// multiplicity. The zero polynomial throws InvalidArgument.
std::vector<Scalar> rational_roots(const std::vector<Scalar>& coeffs);

enum class SummandKind { Standard, Dual };

/// Standard: gc_standard(alpha). Dual: gc_dual(alpha), whose action shift
/// is -alpha.
struct Summand {
  SummandKind kind = SummandKind::Standard;
  Scalar alpha;
  std::size_t mult = 1;
  friend bool operator==(const Summand&, const Summand&) = default;
};

std::string kind_name(SummandKind k);

/// Constant-matrix (anti-)representation of M_N on a block.
struct PhiMap {
  std::size_t block = 0;
  bool anti = false;
  std::size_t N = 1;
  /// values[i*N + j] = Φ(E_ij).
  std::vector<QMatrix> values;

  const QMatrix& at(std::size_t i, std::size_t j) const { return values[i * N + j]; }
  std::size_t size() const { return values.empty() ? 0 : values.front().rows(); }
};

/// P with Φ(E_ij)P = P(I_m ⊗ E_ij) (hom) or Φ(E_ij)P = P(I_m ⊗ E_ji)
/// (anti). Columns t·N+i are Φ(E_i1)w_t (with E_1i for anti), w_t the first
/// independent columns of Φ(E_11). Throws NotRepresentation.
QMatrix skolem_noether_similarity(const PhiMap& phi);

/// Φ(E_ij)Φ(E_kl) = δ_jk Φ(E_il) (hom; reversed for anti) and ΣΦ(E_ii) = I.
/// Returns a description of the first failure.
std::optional<std::string> check_phi_relations(const PhiMap& phi);

struct DecompositionReport {
  std::vector<Summand> summands;
  /// New basis Y·P; conjugating the input tables by P gives the tables of
  /// `recipe_module(N, summands)`.
  QMatrix basis_change;
  unsigned verified_n_max = 0;
  std::vector<PhiMap> phi;
  std::vector<std::string> transcript;
};

/// Direct sum of the summands in report order.
ConformalModule recipe_module(std::size_t N, const std::vector<Summand>& summands);

/// A canonical Virasoro pair parameter (a, b) of L_{a,b}.
using CanonicalPair = std::pair<Scalar, Scalar>;

/// Module over gc_1. Throws NotRegular, InconsistentData, PartitionViolation,
/// ClaimFailed, InvalidArgument.
DecompositionReport decompose_gc1(const ConformalModule& M, const CanonicalPair& l1,
                                  const CanonicalPair& l2, unsigned n_max);

/// Module over gc_N, N ≥ 2. Also throws NotRepresentation.
DecompositionReport decompose_gcN(const ConformalModule& M, const CanonicalPair& l1,
                                  const CanonicalPair& l2, unsigned n_max);

}  // namespace confalg

#endif  // CONFALG_DECOMPOSE_HPP_
