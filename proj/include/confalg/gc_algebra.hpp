// SPDX-License-Identifier: Apache-2.0
#ifndef CONFALG_GC_ALGEBRA_HPP_
#define CONFALG_GC_ALGEBRA_HPP_

#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "confalg/matrix.hpp"

namespace confalg {

/// An element of C[λ, μ] ⊗ gc_N stored as degree n ↦ N×N polynomial matrix,
/// i.e. Σ_n Σ_ij P^{[n]}_ij J^n_{E_ij}. All-zero matrices are never stored.
/// ∂ is the C[∂]-module variable; λ and μ, when present, are parameters.
class GcValue {
 public:
  using TermMap = std::map<unsigned, PolyMatrix>;

  explicit GcValue(std::size_t n = 1) : n_(n) {
    if (n == 0) throw InvalidArgument("gc_N needs N >= 1");
  }

  std::size_t N() const { return n_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Highest n with nonzero coefficient; nullopt for the zero value.
  std::optional<unsigned> degree() const;
  /// Coefficient matrix of J^n (the zero matrix if absent).
  PolyMatrix coefficient(unsigned n) const;

  /// Adds P J^n. Zero sums are dropped.
  void add(unsigned n, const PolyMatrix& p);

  GcValue operator-() const;
  GcValue& operator+=(const GcValue& o);
  GcValue& operator-=(const GcValue& o);
  friend GcValue operator+(GcValue a, const GcValue& b) { return a += b; }
  friend GcValue operator-(GcValue a, const GcValue& b) { return a -= b; }

  /// Multiplies every structure polynomial by p.
  GcValue times(const MPoly& p) const;
  GcValue substitute(Var v, const MPoly& replacement) const;

  friend bool operator==(const GcValue& a, const GcValue& b) = default;

 private:
  std::size_t n_;
  TermMap terms_;
};

using GcLambdaValue = GcValue;

/// An element of gc_N proper: every structure polynomial uses ∂ only.
class GcElement : public GcValue {
 public:
  explicit GcElement(std::size_t n = 1) : GcValue(n) {}
  /// Throws InvalidArgument if `v` mentions λ or μ.
  explicit GcElement(const GcValue& v);

  /// f(∂) J^n_A.
  static GcElement term(unsigned n, const QMatrix& a, const MPoly& f = MPoly(1));
  static GcElement term(unsigned n, const PolyMatrix& p);

  /// The structure polynomial matrices P^{[s]}(∂).
  const TermMap& structure_matrices() const { return terms(); }

  GcElement& operator+=(const GcElement& o) {
    GcValue::operator+=(o);
    return *this;
  }
  friend GcElement operator+(GcElement a, const GcElement& b) { return a += b; }
};

/// One term of [J^m_A _ν J^n_B]: coeff(∂, ν) · J^degree_{AB or BA}.
struct BracketTerm {
  unsigned degree;
  MPoly coeff;
  bool ab_order;  // true: AB, false: BA
};

/// Structure constants on the C[∂]-basis J^m, J^n, evaluated at a bracket
/// parameter ν (a polynomial in λ, μ).
using StructureRule = std::function<std::vector<BracketTerm>(unsigned m, unsigned n, const MPoly& nu)>;

/// [J^m_A _ν J^n_B] = Σ_s C(m,s)(∂+ν)^s J^{m+n-s}_{AB} - Σ_s C(n,s)(-ν)^s J^{m+n-s}_{BA}.
const StructureRule& gc_rule();

/// Bracket with parameter ν, extended to arbitrary coefficients by
/// sesquilinearity: f(∂) on the left becomes f(-ν), g(∂) on the right
/// becomes g(∂+ν). Throws DimensionMismatch if the N differ.
GcValue bracket(const GcValue& a, const GcValue& b, const MPoly& nu,
                const StructureRule& rule = gc_rule());

/// [a _λ b].
GcLambdaValue lambda_bracket(const GcElement& a, const GcElement& b);

/// ∂·g.
GcElement d_times(const GcElement& g);

/// Location and size of the first coefficient where two values differ.
struct Witness {
  unsigned degree = 0;
  std::size_t row = 0;
  std::size_t col = 0;
  MPoly difference;
};

struct AxiomCheck {
  bool ok = true;
  std::optional<Witness> witness;
};

/// First (degree, row, col) in lexicographic order where lhs - rhs ≠ 0.
std::optional<Witness> first_difference(const GcValue& lhs, const GcValue& rhs);

/// (C2): [a _λ b] = -[b _{-λ-∂} a].
AxiomCheck check_skew_symmetry(const GcElement& a, const GcElement& b,
                               const StructureRule& rule = gc_rule());

/// (C3): [a _λ [b _μ c]] = [[a _λ b] _{λ+μ} c] + [b _μ [a _λ c]].
AxiomCheck check_jacobi(const GcElement& a, const GcElement& b, const GcElement& c,
                        const StructureRule& rule = gc_rule());

/// Π: gc_1 → gc_N, f(∂)J^n ↦ f(∂)J^n_{I_N}.
GcElement canonical_embed(const GcElement& g1, std::size_t n);

/// Both sides of formula (1), (2) or (3) of the binomial identities used in
/// the gc_N decomposition, as polynomials in x = ∂ and y = λ.
std::pair<MPoly, MPoly> combinatorial_sides(int which, unsigned n);

/// True iff the two sides of the chosen identity agree exactly.
bool combinatorial_identity(int which, unsigned n);

}  // namespace confalg

#endif  // CONFALG_GC_ALGEBRA_HPP_
