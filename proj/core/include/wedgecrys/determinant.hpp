#pragma once

#include <cstddef>
#include <vector>

#include "wedgecrys/matrix.hpp"
#include "wedgecrys/ring_concepts.hpp"

namespace wedgecrys {

/// Laplace expansion along the first row. Exponential; meant for n <= 4.
template <CommutativeRing R>
typename R::Element det_cofactor(const Matrix<R>& a) {
  if (!a.is_square()) throw DimensionMismatch("determinant of a non-square matrix");
  const R& ring = a.ring();
  const std::size_t n = a.rows();
  if (n == 0) return ring.one();
  if (n == 1) return a(0, 0);
  if (n == 2) return ring.sub(ring.mul(a(0, 0), a(1, 1)), ring.mul(a(0, 1), a(1, 0)));
  std::vector<std::size_t> rows(n - 1), cols;
  for (std::size_t i = 1; i < n; ++i) rows[i - 1] = i;
  auto acc = ring.zero();
  for (std::size_t j = 0; j < n; ++j) {
    if (ring.is_zero(a(0, j))) continue;
    cols.clear();
    for (std::size_t k = 0; k < n; ++k)
      if (k != j) cols.push_back(k);
    auto term = ring.mul(a(0, j), det_cofactor(a.submatrix(rows, cols)));
    acc = (j % 2 == 0) ? ring.add(acc, term) : ring.sub(acc, term);
  }
  return acc;
}

/// Fraction-free Bareiss elimination; the divisions are exact, so over a
/// field they are carried out with `unit_inverse`.
template <Field R>
typename R::Element det_bareiss(Matrix<R> a) {
  if (!a.is_square()) throw DimensionMismatch("determinant of a non-square matrix");
  const R& ring = a.ring();
  const std::size_t n = a.rows();
  if (n == 0) return ring.one();
  auto prev = ring.one();
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (ring.is_zero(a(k, k))) {
      std::size_t swap = k + 1;
      while (swap < n && ring.is_zero(a(swap, k))) ++swap;
      if (swap == n) return ring.zero();
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(swap, j));
      negate = !negate;
    }
    const auto prev_inv = ring.unit_inverse(prev);
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        auto num = ring.sub(ring.mul(a(i, j), a(k, k)), ring.mul(a(i, k), a(k, j)));
        a(i, j) = ring.mul(num, prev_inv);
      }
    prev = a(k, k);
  }
  auto det = a(n - 1, n - 1);
  return negate ? ring.neg(det) : det;
}

/// Coefficients [1, c_1, ..., c_n] of det(T*I - A) = T^n + c_1 T^(n-1) + ... + c_n,
/// by Berkowitz's division-free algorithm.
template <CommutativeRing R>
std::vector<typename R::Element> charpoly_berkowitz(const Matrix<R>& a) {
  if (!a.is_square()) throw DimensionMismatch("characteristic polynomial of a non-square matrix");
  using E = typename R::Element;
  const R& ring = a.ring();
  const std::size_t n = a.rows();
  std::vector<E> c{ring.one()};
  for (std::size_t r = 0; r < n; ++r) {
    // Leading principal block of size r is M; new row R_ = a(r, 0..r-1), column S = a(0..r-1, r).
    std::vector<E> t{ring.one(), ring.neg(a(r, r))};
    std::vector<E> v(r);
    for (std::size_t i = 0; i < r; ++i) v[i] = a(i, r);
    for (std::size_t k = 0; k < r; ++k) {
      auto dot = ring.zero();
      for (std::size_t i = 0; i < r; ++i) dot = ring.add(dot, ring.mul(a(r, i), v[i]));
      t.push_back(ring.neg(dot));
      if (k + 1 == r) break;
      std::vector<E> next(r, ring.zero());
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) next[i] = ring.add(next[i], ring.mul(a(i, j), v[j]));
      v = std::move(next);
    }
    // c <- T c, with T the (r+2) x (r+1) lower-triangular Toeplitz matrix of t.
    std::vector<E> out(r + 2, ring.zero());
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= i && j < c.size(); ++j)
        if (i - j < t.size()) out[i] = ring.add(out[i], ring.mul(t[i - j], c[j]));
    c = std::move(out);
  }
  return c;
}

template <CommutativeRing R>
typename R::Element det_berkowitz(const Matrix<R>& a) {
  const auto c = charpoly_berkowitz(a);
  const R& ring = a.ring();
  return (a.rows() % 2 == 0) ? c.back() : ring.neg(c.back());
}

/// Cofactor expansion for n <= 4, Bareiss over fields, Berkowitz otherwise.
template <CommutativeRing R>
typename R::Element determinant(const Matrix<R>& a) {
  if (!a.is_square()) throw DimensionMismatch("determinant of a non-square matrix");
  if (a.rows() <= 4) return det_cofactor(a);
  if constexpr (Field<R>) {
    return det_bareiss(a);
  } else {
    return det_berkowitz(a);
  }
}

}  // namespace wedgecrys
