// SPDX-License-Identifier: Apache-2.0
#ifndef CONFALG_VIRASORO_HPP_
#define CONFALG_VIRASORO_HPP_

#include <optional>
#include <string>
#include <vector>

#include "confalg/gc_algebra.hpp"

namespace confalg {

/// Outcome of testing [g _λ g] = (∂+2λ) g.
struct VirasoroCertificate {
  GcElement element;
  bool is_virasoro = false;
  /// [g _λ g] - (∂+2λ) g.
  GcLambdaValue residual;
  std::optional<unsigned> degree;
  /// Only computed for Virasoro elements.
  std::optional<bool> is_standard;
};

/// The zero element satisfies the bracket equation trivially but is not
/// counted as a Virasoro element.
VirasoroCertificate is_virasoro(const GcElement& g);

/// True iff every structure polynomial matrix is f(∂)·(constant matrix).
/// Makes no claim about the Virasoro property.
bool has_standard_shape(const GcElement& g);

/// Standardness of a Virasoro element; throws NotVirasoro otherwise.
bool is_standard(const GcElement& g);

/// (a∂+b)J^0 + J^1 in gc_1.
GcElement make_gc1_virasoro(const Scalar& a, const Scalar& b);

/// Π(L_{a,b}) = (a∂+b)J^0_{I_N} + J^1_{I_N}.
GcElement canonical_virasoro(std::size_t n, const Scalar& a, const Scalar& b);

/// Degree-one standard elements:
///   form 1: (a∂+b) J^0_{ABA} + J^1_A
///   form 2: a J^0_{AB} + J^1_A        (b must be absent)
/// Throws NotIdempotent unless A² = A ≠ 0.
GcElement make_standard_deg1(int form, const Scalar& a, const std::optional<Scalar>& b,
                             const QMatrix& A, const QMatrix& B);

struct HigherTerm {
  unsigned index;  // ≥ 2
  Scalar a;
  QMatrix B;
};

/// J^1_A + Σ a_i J^i_{AB_i}. Requires A² = A ≠ 0 (NotIdempotent) and
/// A B_i A = 0 (ConstraintViolated naming the offending B_i).
GcElement make_standard_higher(const QMatrix& A, const std::vector<HigherTerm>& terms);

enum class NonstandardKind { T1, T2, T3, T4 };

/// Data of the non-standard families. `A`, `B`, `a` have length k ≥ 2;
/// `D` and `b` list D_2..D_ℓ and b_2..b_ℓ and are used by T3/T4 only.
struct NonstandardParams {
  std::vector<QMatrix> A;
  std::vector<QMatrix> B;
  std::vector<Scalar> a;
  std::optional<QMatrix> C;
  std::vector<QMatrix> D;
  std::vector<Scalar> b;
};

/// T1 = J^1_{ΣA_i} + J^0_{A_1B_1A_1} + Σ_{i≥2} (∂+a_i) J^0_{A_iB_iA_i}
/// T2 = J^1_{ΣA_i} + Σ_{i≥1} (∂+a_i) J^0_{A_iB_iA_i}
/// T3 = T1 + J^1_C + Σ_j b_j J^j_{CD_j},  T4 = T2 + J^1_C + Σ_j b_j J^j_{CD_j}
/// Every hypothesis is checked eagerly; a violation throws ConstraintViolated
/// naming the condition. T3/T4 also require C D_j C = 0, without which the
/// C-block J^1_C + Σ b_j J^j_{CD_j} is not a Virasoro element.
GcElement make_nonstandard(NonstandardKind kind, const NonstandardParams& p);

NonstandardKind parse_nonstandard_kind(const std::string& name);

/// Which degree-one forms a standard Virasoro element admits. B is searched
/// as the solution of an exact linear system (A B A = A_0, resp. A B = A_0).
struct Deg1FormMatch {
  bool form1 = false;
  bool form2 = false;
};

Deg1FormMatch match_deg1_forms(const GcElement& g);

/// True iff g = (a∂+b)J^0 + J^1 in gc_1 for some a, b.
bool matches_gc1_form(const GcElement& g);

struct GridCounterexample {
  GcElement element;
  std::string reason;
};

struct GridReport {
  std::size_t N = 1;
  unsigned poly_deg_bound = 0;
  std::size_t candidates = 0;
  std::size_t virasoro = 0;
  std::size_t standard = 0;
  std::size_t nonstandard = 0;
  std::vector<GridCounterexample> counterexamples;
};

/// Enumerates every element of degree ≤ 1 whose structure-polynomial
/// coefficients (∂-degree ≤ poly_deg_bound) range over `coeff_set`, and
/// checks each Virasoro element found against the degree-one classification
/// (the gc_1 form when N = 1; forms 1/2 for standard elements when N ≥ 2).
GridReport classify_deg1_grid(std::size_t n, const std::vector<Scalar>& coeff_set,
                              unsigned poly_deg_bound);

}  // namespace confalg

#endif  // CONFALG_VIRASORO_HPP_
