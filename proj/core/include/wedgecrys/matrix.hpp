#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "wedgecrys/error.hpp"
#include "wedgecrys/ring_concepts.hpp"

namespace wedgecrys {

/// Dense row-major matrix over an exact commutative ring.
template <CommutativeRing R>
class Matrix {
 public:
  using Ring = R;
  using Element = typename R::Element;

  Matrix(R ring, std::size_t rows, std::size_t cols)
      : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(rows * cols, ring_.zero()) {}

  Matrix(R ring, std::size_t rows, std::size_t cols, std::vector<Element> entries)
      : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
      throw DimensionMismatch("expected " + std::to_string(rows_ * cols_) + " entries, got " +
                              std::to_string(entries_.size()));
  }

  static Matrix identity(const R& ring, std::size_t n) {
    Matrix out(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) out(i, i) = ring.one();
    return out;
  }

  static Matrix diagonal(const R& ring, const std::vector<Element>& diag) {
    Matrix out(ring, diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) out(i, i) = diag[i];
    return out;
  }

  /// Builds a matrix from integer entries, reduced into the ring.
  static Matrix from_integers(const R& ring, std::size_t rows, std::size_t cols, const std::vector<long>& values) {
    std::vector<Element> entries;
    entries.reserve(values.size());
    for (long v : values) entries.push_back(ring.from_integer(v));
    return Matrix(ring, rows, cols, std::move(entries));
  }

  /// The matrix whose columns are `columns`, each of length `rows`.
  static Matrix from_columns(const R& ring, std::size_t rows, const std::vector<std::vector<Element>>& columns) {
    Matrix out(ring, rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j].size() != rows) throw DimensionMismatch("column length mismatch");
      for (std::size_t i = 0; i < rows; ++i) out(i, j) = columns[j][i];
    }
    return out;
  }

  const R& ring() const noexcept { return ring_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  const std::vector<Element>& entries() const noexcept { return entries_; }

  Element& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Element& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  std::vector<Element> row(std::size_t i) const {
    return {entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
            entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
  }

  std::vector<Element> column(std::size_t j) const {
    std::vector<Element> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
    return out;
  }

  Matrix transpose() const {
    Matrix out(ring_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  /// Rows `row_idx` and columns `col_idx` in the order given.
  Matrix submatrix(const std::vector<std::size_t>& row_idx, const std::vector<std::size_t>& col_idx) const {
    Matrix out(ring_, row_idx.size(), col_idx.size());
    for (std::size_t i = 0; i < row_idx.size(); ++i)
      for (std::size_t j = 0; j < col_idx.size(); ++j) out(i, j) = (*this)(row_idx[i], col_idx[j]);
    return out;
  }

  bool is_zero() const {
    for (const auto& x : entries_)
      if (!ring_.is_zero(x)) return false;
    return true;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.ring_ == b.ring_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  R ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Element> entries_;
};

namespace detail {
template <class R>
void require_same_ring(const R& a, const R& b) {
  if (!(a == b)) throw RingMismatch("operands live over different rings: " + a.descriptor() + " vs " + b.descriptor());
}
}  // namespace detail

template <CommutativeRing R>
Matrix<R> operator*(const Matrix<R>& a, const Matrix<R>& b) {
  detail::require_same_ring(a.ring(), b.ring());
  if (a.cols() != b.rows()) throw DimensionMismatch("inner dimensions differ in matrix product");
  const R& ring = a.ring();
  Matrix<R> out(ring, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto& aik = a(i, k);
      if (ring.is_zero(aik)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = ring.add(out(i, j), ring.mul(aik, b(k, j)));
    }
  return out;
}

template <CommutativeRing R>
Matrix<R> operator+(const Matrix<R>& a, const Matrix<R>& b) {
  detail::require_same_ring(a.ring(), b.ring());
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("shape mismatch in matrix sum");
  Matrix<R> out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a.ring().add(a(i, j), b(i, j));
  return out;
}

template <CommutativeRing R>
Matrix<R> operator-(const Matrix<R>& a, const Matrix<R>& b) {
  detail::require_same_ring(a.ring(), b.ring());
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("shape mismatch in matrix difference");
  Matrix<R> out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a.ring().sub(a(i, j), b(i, j));
  return out;
}

template <CommutativeRing R>
Matrix<R> scale(const Matrix<R>& a, const typename R::Element& c) {
  Matrix<R> out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a.ring().mul(c, a(i, j));
  return out;
}

/// Entrywise image under f, over the same ring.
template <CommutativeRing R, class F>
Matrix<R> map_entries(const Matrix<R>& a, F&& f) {
  Matrix<R> out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = f(a(i, j));
  return out;
}

template <CommutativeRing R>
std::vector<typename R::Element> operator*(const Matrix<R>& a, const std::vector<typename R::Element>& v) {
  if (a.cols() != v.size()) throw DimensionMismatch("vector length does not match matrix columns");
  const R& ring = a.ring();
  std::vector<typename R::Element> out(a.rows(), ring.zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] = ring.add(out[i], ring.mul(a(i, j), v[j]));
  return out;
}

/// Block-diagonal matrix diag(a, b).
template <CommutativeRing R>
Matrix<R> block_diagonal(const Matrix<R>& a, const Matrix<R>& b) {
  detail::require_same_ring(a.ring(), b.ring());
  Matrix<R> out(a.ring(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
  return out;
}

}  // namespace wedgecrys
