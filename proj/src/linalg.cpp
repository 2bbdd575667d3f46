// SPDX-License-Identifier: Apache-2.0
#include "confalg/linalg.hpp"

#include <utility>

namespace confalg {

RowEchelon row_echelon(const QMatrix& m) {
  RowEchelon out{m, {}};
  QMatrix& a = out.reduced;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < a.rows() && a(pivot, col).is_zero()) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != row) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(pivot, j), a(row, j));
    }
    const Scalar inv = Scalar(1) / a(row, col);
    for (std::size_t j = col; j < a.cols(); ++j) a(row, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col).is_zero()) continue;
      const Scalar f = a(i, col);
      for (std::size_t j = col; j < a.cols(); ++j) a(i, j) -= f * a(row, j);
    }
    out.pivot_columns.push_back(col);
    ++row;
  }
  return out;
}

std::size_t rank(const QMatrix& m) { return row_echelon(m).pivot_columns.size(); }

std::vector<QVector> kernel_basis(const QMatrix& m) {
  const RowEchelon re = row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : re.pivot_columns) is_pivot[c] = true;
  std::vector<QVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    QVector v(m.cols(), Scalar(0));
    v[free] = Scalar(1);
    for (std::size_t r = 0; r < re.pivot_columns.size(); ++r) {
      v[re.pivot_columns[r]] = -re.reduced(r, free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

SolveResult exact_solve(const QMatrix& m, const QVector& b) {
  if (b.size() != m.rows()) throw DimensionMismatch("exact_solve: right-hand side length");
  QMatrix aug(m.rows(), m.cols() + 1);
  aug.set_block(0, 0, m);
  for (std::size_t i = 0; i < m.rows(); ++i) aug(i, m.cols()) = b[i];
  const RowEchelon re = row_echelon(aug);

  SolveResult out;
  out.kernel = kernel_basis(m);
  out.rank = m.cols() - out.kernel.size();
  if (!re.pivot_columns.empty() && re.pivot_columns.back() == m.cols()) return out;

  QVector x(m.cols(), Scalar(0));
  for (std::size_t r = 0; r < re.pivot_columns.size(); ++r) {
    x[re.pivot_columns[r]] = re.reduced(r, m.cols());
  }
  out.particular = std::move(x);
  return out;
}

std::vector<std::size_t> independent_columns(const QMatrix& m) {
  return row_echelon(m).pivot_columns;
}

Scalar determinant(const QMatrix& m) {
  if (!m.is_square()) throw DimensionMismatch("determinant of a non-square matrix");
  QMatrix a = m;
  Scalar det(1);
  const std::size_t n = a.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return Scalar(0);
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(pivot, j), a(col, j));
      det = -det;
    }
    det *= a(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a(i, col).is_zero()) continue;
      const Scalar f = a(i, col) / a(col, col);
      for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
    }
  }
  return det;
}

QMatrix constant_inverse(const QMatrix& m) {
  if (!m.is_square()) throw DimensionMismatch("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  QMatrix aug(n, 2 * n);
  aug.set_block(0, 0, m);
  aug.set_block(0, n, QMatrix::identity(n));
  const RowEchelon re = row_echelon(aug);
  if (re.pivot_columns.size() < n || re.pivot_columns[n - 1] != n - 1) {
    throw SingularMatrix("matrix is singular");
  }
  return re.reduced.block(0, n, n, n);
}

QVector multiply(const QMatrix& m, const QVector& x) {
  if (x.size() != m.cols()) throw DimensionMismatch("matrix-vector product");
  QVector y(m.rows(), Scalar(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) y[i] += m(i, j) * x[j];
  return y;
}

}  // namespace confalg
