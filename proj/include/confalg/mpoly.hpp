// SPDX-License-Identifier: Apache-2.0
#ifndef CONFALG_MPOLY_HPP_
#define CONFALG_MPOLY_HPP_

#include <array>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "confalg/scalar.hpp"

namespace confalg {

/// Formal variables. ∂ is always index 0.
enum class Var : std::uint8_t { D = 0, L = 1, M = 2 };

using Exponents = std::array<unsigned, 3>;

/// Sparse polynomial in ∂, λ, μ over Scalar. Zero coefficients are never
/// stored, so structural equality is value equality.
class MPoly {
 public:
  using TermMap = std::map<Exponents, Scalar>;

  MPoly() = default;
  MPoly(const Scalar& c);  // NOLINT(google-explicit-constructor)
  MPoly(long c) : MPoly(Scalar(c)) {}  // NOLINT(google-explicit-constructor)

  static MPoly var(Var v);
  static MPoly monomial(const Exponents& e, const Scalar& c);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Coefficient of ∂^0 λ^0 μ^0.
  Scalar constant_term() const { return coeff({0, 0, 0}); }
  Scalar coeff(const Exponents& e) const;
  unsigned degree(Var v) const;
  bool uses(Var v) const { return degree(v) > 0; }
  /// True if every variable that occurs is in `allowed`.
  bool only_uses(std::initializer_list<Var> allowed) const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const Scalar& c);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Scalar& c) { return a *= c; }
  friend MPoly operator*(const Scalar& c, MPoly a) { return a *= c; }
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

  friend bool operator==(const MPoly& a, const MPoly& b) = default;

  MPoly pow(unsigned exponent) const;

  using Product = std::pair<const MPoly*, const MPoly*>;
  /// Σ aₖ·bₖ accumulated in a single dense buffer.
  static MPoly sum_of_products(const std::vector<Product>& products);

  /// Replaces `v` by `replacement` everywhere.
  MPoly substitute(Var v, const MPoly& replacement) const;

  /// Human-readable rendering such as "∂^2 + 2∂λ + λ^2"; "0" for zero.
  std::string str() const;

 private:
  void add_term(const Exponents& e, const Scalar& c);
  TermMap terms_;
};

/// ∂, λ, μ as polynomials.
inline MPoly D() { return MPoly::var(Var::D); }
inline MPoly Lam() { return MPoly::var(Var::L); }
inline MPoly Mu() { return MPoly::var(Var::M); }

}  // namespace confalg

#endif  // CONFALG_MPOLY_HPP_
