// SPDX-License-Identifier: Apache-2.0
#ifndef CONFALG_REGULARITY_HPP_
#define CONFALG_REGULARITY_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "confalg/module.hpp"

namespace confalg {

/// (Δ, α) of a basis vector y with L _λ y = (∂ + Δλ + α) y.
struct Weight {
  Scalar delta;
  Scalar alpha;
  friend bool operator==(const Weight&, const Weight&) = default;
};

struct OffendingEntry {
  std::size_t row = 0;
  std::size_t col = 0;
  MPoly entry;
  std::string reason;
};

/// regular ⇔ the action matrix is diagonal with entries exactly ∂+Δλ+α.
struct RegularityReport {
  bool regular = false;
  std::vector<Weight> weights;
  std::optional<OffendingEntry> offending;
  PolyMatrix action;
};

/// Reads a λ-action matrix in the given basis.
RegularityReport regularity_of_action(const PolyMatrix& action);

/// Regularity of a Virasoro element L of the module's algebra (an element of
/// gc_1 for Vir/HV modules). Throws NotVirasoro.
RegularityReport check_regular(const GcElement& L, const ConformalModule& M);

/// Regularity of the generator L = J^1 of a Vir or HV module.
RegularityReport check_regular(const ConformalModule& M);

struct WeightFactor {
  std::size_t element = 0;
  std::size_t basis_index = 0;
  Scalar delta;
};

struct WeightProduct {
  Scalar value;
  std::vector<WeightFactor> factors;
};

/// Product of every weight in every report; reports index the caller's Γ.
/// Throws NotRegular when a report is irregular.
WeightProduct weight_product(const std::vector<RegularityReport>& reports);

struct VirSemisimpleResult {
  bool semisimple = false;
  RegularityReport report;
  std::optional<Scalar> p;
  /// Rank-one summands M_{Δ_i,α_i}, one per basis vector, when semisimple.
  std::vector<Weight> summands;
};

/// Regular in the given basis with nonzero weight product. Expects a Vir
/// module; any other algebra throws InvalidArgument.
VirSemisimpleResult vir_semisimple(const ConformalModule& M);

/// Regular data of a canonical Virasoro element L_{a,b} = (a∂+b)J^0 + J^1.
struct CanonicalAction {
  Scalar a;
  Scalar b;
  std::vector<Weight> weights;
};

/// J^0 _λ v = β v, J^1 _λ v = (∂+Δλ+α) v.
struct HvData {
  Scalar beta;
  Scalar delta;
  Scalar alpha;
  friend bool operator==(const HvData&, const HvData&) = default;
};

/// Recovers the HV action from two regular canonical actions. Throws
/// InvalidArgument for equal pairs or unequal lengths, InconsistentData when
/// no β fits both coefficient equations.
std::vector<HvData> hv_reduce(const CanonicalAction& first, const CanonicalAction& second);

}  // namespace confalg

#endif  // CONFALG_REGULARITY_HPP_
