// SPDX-License-Identifier: Apache-2.0
#ifndef CONFALG_LINALG_HPP_
#define CONFALG_LINALG_HPP_

#include <optional>
#include <vector>

#include "confalg/matrix.hpp"

namespace confalg {

using QVector = std::vector<Scalar>;

/// Reduced row echelon form. Pivots are chosen as the first nonzero entry
/// scanning rows top-down within the current column, columns left to right.
struct RowEchelon {
  QMatrix reduced;
  std::vector<std::size_t> pivot_columns;
};

RowEchelon row_echelon(const QMatrix& m);

std::size_t rank(const QMatrix& m);

/// Solution set of M x = b. An inconsistent system is reported through an
/// empty `particular`, not an exception.
struct SolveResult {
  std::size_t rank = 0;
  std::optional<QVector> particular;
  std::vector<QVector> kernel;

  bool consistent() const { return particular.has_value(); }
};

SolveResult exact_solve(const QMatrix& m, const QVector& b);

/// Basis of {x : M x = 0}, one vector per free column.
std::vector<QVector> kernel_basis(const QMatrix& m);

/// Column indices of the first maximal independent set of columns.
std::vector<std::size_t> independent_columns(const QMatrix& m);

Scalar determinant(const QMatrix& m);

/// Throws SingularMatrix when det(M) = 0, DimensionMismatch when not square.
QMatrix constant_inverse(const QMatrix& m);

QVector multiply(const QMatrix& m, const QVector& x);

}  // namespace confalg

#endif  // CONFALG_LINALG_HPP_
