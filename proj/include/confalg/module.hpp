// SPDX-License-Identifier: Apache-2.0
#ifndef CONFALG_MODULE_HPP_
#define CONFALG_MODULE_HPP_

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "confalg/gc_algebra.hpp"

namespace confalg {

/// Vir is the subalgebra C[∂]J^1 of gc_1 (L ↦ J^1); HV is C[∂]J^0 ⊕ C[∂]J^1.
enum class AlgebraKind { Vir, HV, Gc };

struct Algebra {
  AlgebraKind kind = AlgebraKind::Gc;
  std::size_t N = 1;

  static Algebra vir() { return {AlgebraKind::Vir, 1}; }
  static Algebra hv() { return {AlgebraKind::HV, 1}; }
  static Algebra gc(std::size_t n) { return {AlgebraKind::Gc, n}; }

  /// Whether J^n_{E_ij} belongs to the algebra.
  bool has_generator(unsigned n, std::size_t i, std::size_t j) const;
  std::string name() const;
  friend bool operator==(const Algebra&, const Algebra&) = default;
};

/// J^n_{E_ij} with 0-based i, j.
struct Generator {
  unsigned n = 0;
  std::size_t i = 0;
  std::size_t j = 0;
  friend auto operator<=>(const Generator&, const Generator&) = default;
};

using ActionTable = std::map<Generator, PolyMatrix>;

/// A free conformal module of finite rank k. The action of J^n_A on the
/// basis row Y = (v_1 … v_k) is J^n_A _λ Y = Y·F(∂,λ), so column j of F is
/// the image of v_j. Values are immutable; copies share a memoized table.
class ConformalModule {
 public:
  struct VirRecipe { Scalar delta, alpha; };
  struct HvRecipe { Scalar delta, alpha, beta; };
  struct StandardRecipe { Scalar alpha; };
  struct DualStandardRecipe { Scalar alpha; };
  struct DirectSumRecipe { std::vector<ConformalModule> parts; };
  struct BasisChangeRecipe { std::vector<ConformalModule> inner; QMatrix u, u_inv; };
  struct ExplicitRecipe { std::optional<unsigned> n_max; ActionTable table; };
  struct DualRecipe { std::vector<ConformalModule> inner; };
  using Recipe = std::variant<VirRecipe, HvRecipe, StandardRecipe, DualStandardRecipe, DirectSumRecipe,
                              BasisChangeRecipe, ExplicitRecipe, DualRecipe>;

  /// M_{Δ,α} over Vir: L _λ v = (∂+Δλ+α) v.
  static ConformalModule vir_module(const Scalar& delta, const Scalar& alpha);
  /// Rank one over HV: J^1 _λ v = (∂+Δλ+α) v, J^0 _λ v = β v.
  static ConformalModule hv_module(const Scalar& delta, const Scalar& alpha, const Scalar& beta);
  /// M_α over gc_N: F = (∂+λ+α)^n A.
  static ConformalModule gc_standard(std::size_t n, const Scalar& alpha);
  /// (M_α)^* over gc_N: F = -(-∂+α)^n A^T.
  static ConformalModule gc_dual(std::size_t n, const Scalar& alpha);
  static ConformalModule direct_sum(const std::vector<ConformalModule>& parts);
  /// New basis Y·U; tables become U^{-1} F U. Throws SingularMatrix.
  static ConformalModule basis_change(const ConformalModule& inner, const QMatrix& u);
  /// Table keyed by generator; missing generators act by zero. For gc
  /// algebras `n_max` bounds the stored degrees (CutoffExceeded above it).
  /// Vir and HV tables are complete and take no cutoff.
  static ConformalModule explicit_table(const Algebra& algebra, std::size_t rank,
                                        std::optional<unsigned> n_max, ActionTable table);
  /// Conformal dual: G(∂,λ) = -F(-∂-λ, λ)^T.
  static ConformalModule dual(const ConformalModule& inner);

  const Algebra& algebra() const;
  std::size_t rank() const;
  const Recipe& recipe() const;
  /// Highest degree available; nullopt when every degree is available.
  std::optional<unsigned> cutoff() const;

  /// F for the generator J^n_{E_ij}. Throws InvalidArgument for a
  /// non-generator and CutoffExceeded past an explicit table's n_max.
  PolyMatrix act_unit(unsigned n, std::size_t i, std::size_t j) const;
  PolyMatrix act_unit(const Generator& g) const { return act_unit(g.n, g.i, g.j); }
  /// F for J^n_A, extended linearly from matrix units.
  PolyMatrix act(unsigned n, const QMatrix& a) const;
  /// Action of a value Σ h(∂)J^n_{E_ij} with bracket parameter ν:
  /// Σ h(-ν)·F_{n,E_ij}(∂, ν). Coefficients may carry λ, μ as parameters.
  PolyMatrix act_value(const GcValue& g, const MPoly& nu) const;
  /// L _λ Y for an element of the algebra.
  PolyMatrix act_element(const GcElement& g) const { return act_value(g, Lam()); }

  /// Generators J^n_{E_ij} of the algebra with n ≤ n_max.
  std::vector<Generator> generators(unsigned n_max) const;

 private:
  struct Node;
  explicit ConformalModule(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  PolyMatrix compute(const Generator& g) const;

  std::shared_ptr<const Node> node_;
};

/// Failure of (M2) at a generator pair, or of the (M1) spot-check (then
/// m = n and a = b).
struct ActionWitness {
  unsigned m = 0;
  unsigned n = 0;
  Generator a;
  Generator b;
  /// a _λ (b _μ Y) - b _μ (a _λ Y) - [a _λ b] _{λ+μ} Y.
  PolyMatrix residual;
  std::string axiom = "M2";
};

struct ModuleCheck {
  bool ok = true;
  std::size_t pairs_checked = 0;
  std::size_t pairs_skipped = 0;
  std::vector<ActionWitness> failures;
};

/// Verifies (M2) for every pair of generators of degree ≤ n_max, and spot
/// checks (M1). Pairs whose bracket needs degrees above an explicit table's
/// cutoff are counted in pairs_skipped.
ModuleCheck check_module_axioms(const ConformalModule& m, unsigned n_max);

ConformalModule dual_module(const ConformalModule& m);

/// V_g: the Vir-module obtained through L ↦ g. Throws NotVirasoro and
/// DimensionMismatch.
ConformalModule restrict_to_virasoro(const GcElement& g, const ConformalModule& m);

/// Every generator's table up to n_max equal?
bool same_tables(const ConformalModule& a, const ConformalModule& b, unsigned n_max);

}  // namespace confalg

#endif  // CONFALG_MODULE_HPP_
