// SPDX-License-Identifier: Apache-2.0
#ifndef CONFALG_MATRIX_HPP_
#define CONFALG_MATRIX_HPP_

#include <cstddef>
#include <type_traits>
#include <utility>
#include <vector>

#include "confalg/errors.hpp"
#include "confalg/mpoly.hpp"
#include "confalg/scalar.hpp"

namespace confalg {

/// Dense row-major matrix. Sizes in this library are tiny, so there is no
/// attempt at sparsity or expression templates.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
  /// E_{ij} with 0-based indices.
  static Matrix unit(std::size_t n, std::size_t i, std::size_t j) {
    Matrix m(n, n);
    m(i, j) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const {
    for (const auto& x : data_) {
      if (!x.is_zero()) return false;
    }
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  template <class F>
  auto map(F&& f) const {
    using U = std::decay_t<decltype(f(std::declval<const T&>()))>;
    Matrix<U> r(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(i, j) = f((*this)(i, j));
    return r;
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Matrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }

  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

  Matrix operator-() const {
    return map([](const T& x) { return -x; });
  }
  Matrix& operator+=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product: inner sizes differ");
    Matrix r(a.rows_, b.cols_);
    if constexpr (std::is_same_v<T, MPoly>) {
      std::vector<MPoly::Product> terms;
      for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < b.cols_; ++j) {
          terms.clear();
          for (std::size_t k = 0; k < a.cols_; ++k)
            if (!a(i, k).is_zero() && !b(k, j).is_zero()) terms.emplace_back(&a(i, k), &b(k, j));
          if (!terms.empty()) r(i, j) = MPoly::sum_of_products(terms);
        }
      return r;
    }
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& x = a(i, k);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (!b(k, j).is_zero()) r(i, j) += x * b(k, j);
        }
      }
    return r;
  }

  /// Entrywise scaling by an element of the coefficient ring.
  template <class S>
  Matrix scaled(const S& s) const {
    return map([&](const T& x) { return T(x * s); });
  }

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  void check_same(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sizes differ");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using QMatrix = Matrix<Scalar>;
using PolyMatrix = Matrix<MPoly>;

/// Constant matrix viewed as a polynomial matrix.
inline PolyMatrix to_poly(const QMatrix& m) {
  return m.map([](const Scalar& x) { return MPoly(x); });
}

/// True if every entry is a constant polynomial.
inline bool is_constant(const PolyMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_constant()) return false;
  return true;
}

/// Constant part of a polynomial matrix; throws InvalidArgument if any entry
/// is non-constant.
inline QMatrix to_constant(const PolyMatrix& m) {
  if (!is_constant(m)) throw InvalidArgument("matrix has non-constant entries");
  return m.map([](const MPoly& p) { return p.constant_term(); });
}

inline PolyMatrix substitute(const PolyMatrix& m, Var v, const MPoly& replacement) {
  return m.map([&](const MPoly& p) { return p.substitute(v, replacement); });
}

/// I_m ⊗ A: m diagonal copies of A.
template <class T>
Matrix<T> kron_identity(std::size_t m, const Matrix<T>& a) {
  Matrix<T> r(m * a.rows(), m * a.cols());
  for (std::size_t t = 0; t < m; ++t) r.set_block(t * a.rows(), t * a.cols(), a);
  return r;
}

/// Block-diagonal concatenation.
template <class T>
Matrix<T> block_diagonal(const std::vector<Matrix<T>>& blocks) {
  std::size_t r = 0, c = 0;
  for (const auto& b : blocks) {
    r += b.rows();
    c += b.cols();
  }
  Matrix<T> out(r, c);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    out.set_block(r0, c0, b);
    r0 += b.rows();
    c0 += b.cols();
  }
  return out;
}

}  // namespace confalg

#endif  // CONFALG_MATRIX_HPP_
