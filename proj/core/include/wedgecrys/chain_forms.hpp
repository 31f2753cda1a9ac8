#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "wedgecrys/error.hpp"
#include "wedgecrys/matrix.hpp"
#include "wedgecrys/ring_concepts.hpp"
#include "wedgecrys/valuation.hpp"

// Normal forms over chain rings (local rings whose ideals are the powers of a
// nilpotent principal maximal ideal): Z/p^m, W(F_q)/p^m, F_q[t]/(t^e), fields.

namespace wedgecrys {

/// Valuations of the Smith diagonal of A, min(rows, cols) of them, sorted
/// ascending; bottom for zero entries.
template <ChainRing R>
std::vector<Valuation> smith_valuations(Matrix<R> a) {
  const R& ring = a.ring();
  const std::size_t rows = a.rows(), cols = a.cols(), k_max = std::min(rows, cols);
  std::vector<Valuation> out;
  out.reserve(k_max);
  for (std::size_t k = 0; k < k_max; ++k) {
    Valuation best = Valuation::bottom();
    std::size_t pi = k, pj = k;
    for (std::size_t i = k; i < rows && best != Valuation(0); ++i)
      for (std::size_t j = k; j < cols; ++j) {
        const Valuation v = ring.valuation(a(i, j));
        if (v < best) {
          best = v;
          pi = i;
          pj = j;
          if (v == Valuation(0)) break;
        }
      }
    if (best.is_bottom()) {
      out.resize(k_max, Valuation::bottom());
      break;
    }
    out.push_back(best);
    for (std::size_t j = 0; j < cols; ++j) std::swap(a(k, j), a(pi, j));
    for (std::size_t i = 0; i < rows; ++i) std::swap(a(i, k), a(i, pj));
    // pivot = pi^v * u; rows below lose their column-k entry, and with it row k
    // can be cleared by column operations that touch nothing else.
    const int v = best.value();
    const auto u_inv = ring.unit_inverse(ring.divide_by_uniformizer(a(k, k), v));
    for (std::size_t i = k + 1; i < rows; ++i) {
      if (ring.is_zero(a(i, k))) continue;
      const auto factor = ring.mul(ring.divide_by_uniformizer(a(i, k), v), u_inv);
      for (std::size_t j = k; j < cols; ++j) a(i, j) = ring.sub(a(i, j), ring.mul(factor, a(k, j)));
    }
  }
  return out;
}

/// Howell form of the row span of A: pivot entries are powers of the
/// uniformizer, entries above a pivot of valuation v are reduced modulo its
/// v-th power, and for every k the rows whose first k entries vanish span all
/// row-span vectors whose first k entries vanish. Zero rows are dropped.
template <ChainRing R>
Matrix<R> howell_form(const Matrix<R>& a) {
  using E = typename R::Element;
  const R& ring = a.ring();
  const std::size_t cols = a.cols();
  const int L = ring.nilpotency();
  std::vector<std::vector<E>> pending;
  for (std::size_t i = 0; i < a.rows(); ++i) pending.push_back(a.row(i));
  std::vector<std::vector<E>> result;
  std::vector<std::size_t> pivot_col;
  std::vector<int> pivot_val;

  auto is_zero_row = [&](const std::vector<E>& r) {
    return std::all_of(r.begin(), r.end(), [&](const E& x) { return ring.is_zero(x); });
  };

  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t best = pending.size();
    Valuation best_v = Valuation::bottom();
    for (std::size_t i = 0; i < pending.size(); ++i) {
      const Valuation v = ring.valuation(pending[i][c]);
      if (v < best_v) {
        best_v = v;
        best = i;
      }
    }
    if (best == pending.size()) continue;
    std::vector<E> piv = std::move(pending[best]);
    pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(best));
    const int v = best_v.value();
    const auto u_inv = ring.unit_inverse(ring.divide_by_uniformizer(piv[c], v));
    for (auto& x : piv) x = ring.mul(x, u_inv);
    for (auto& row : pending) {
      if (ring.is_zero(row[c])) continue;
      const auto factor = ring.divide_by_uniformizer(row[c], v);
      for (std::size_t j = c; j < cols; ++j) row[j] = ring.sub(row[j], ring.mul(factor, piv[j]));
    }
    if (v > 0) {
      // Annihilating the pivot can leave a nonzero tail that must stay in the span.
      const auto ann = ring.uniformizer_power(L - v);
      std::vector<E> extra(cols, ring.zero());
      for (std::size_t j = c + 1; j < cols; ++j) extra[j] = ring.mul(ann, piv[j]);
      if (!is_zero_row(extra)) pending.push_back(std::move(extra));
    }
    std::erase_if(pending, is_zero_row);
    result.push_back(std::move(piv));
    pivot_col.push_back(c);
    pivot_val.push_back(v);
  }

  for (std::size_t i = 0; i < result.size(); ++i) {
    const std::size_t c = pivot_col[i];
    const int v = pivot_val[i];
    for (std::size_t k = 0; k < i; ++k) {
      const auto& x = result[k][c];
      const auto rem = ring.remainder_mod_uniformizer(x, v);
      if (rem == x) continue;
      const auto q = ring.divide_by_uniformizer(ring.sub(x, rem), v);
      for (std::size_t j = c; j < cols; ++j) result[k][j] = ring.sub(result[k][j], ring.mul(q, result[i][j]));
    }
  }

  Matrix<R> out(ring, result.size(), cols);
  for (std::size_t i = 0; i < result.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = result[i][j];
  return out;
}

/// Generators of {x : A x = 0}, one per row of the result, in Howell form.
template <ChainRing R>
Matrix<R> kernel(const Matrix<R>& a) {
  const R& ring = a.ring();
  const std::size_t m = a.rows(), n = a.cols();
  Matrix<R> aug(ring, n, m + n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) aug(i, j) = a(j, i);
    aug(i, m + i) = ring.one();
  }
  const auto h = howell_form(aug);
  std::vector<std::vector<typename R::Element>> rows;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    bool lead_zero = true;
    for (std::size_t j = 0; j < m && lead_zero; ++j) lead_zero = ring.is_zero(h(i, j));
    if (!lead_zero) continue;
    auto r = h.row(i);
    rows.emplace_back(r.begin() + static_cast<std::ptrdiff_t>(m), r.end());
  }
  Matrix<R> out(ring, rows.size(), n);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = rows[i][j];
  return out;
}

/// Inverse over a local ring by Gauss-Jordan with unit pivots; NotInvertible
/// when some column has no unit pivot (then det A is not a unit).
template <LocalRing R>
  requires requires(const R& r, const typename R::Element& x) { r.unit_inverse(x); }
Matrix<R> inverse(Matrix<R> a) {
  if (!a.is_square()) throw DimensionMismatch("inverse of a non-square matrix");
  const R& ring = a.ring();
  const std::size_t n = a.rows();
  auto inv = Matrix<R>::identity(ring, n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && !ring.is_unit(a(piv, c))) ++piv;
    if (piv == n) throw NotInvertible("matrix is not invertible over " + ring.descriptor());
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(a(c, j), a(piv, j));
      std::swap(inv(c, j), inv(piv, j));
    }
    const auto u = ring.unit_inverse(a(c, c));
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) = ring.mul(a(c, j), u);
      inv(c, j) = ring.mul(inv(c, j), u);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || ring.is_zero(a(i, c))) continue;
      const auto f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) = ring.sub(a(i, j), ring.mul(f, a(c, j)));
        inv(i, j) = ring.sub(inv(i, j), ring.mul(f, inv(c, j)));
      }
    }
  }
  return inv;
}

/// coker(A : R^cols -> R^rows) = R^free_rank + sum of R/(pi^v) for v in torsion.
struct CokernelShape {
  std::size_t free_rank = 0;
  std::vector<int> torsion;
  bool is_free() const noexcept { return torsion.empty(); }
};

template <ChainRing R>
CokernelShape cokernel(const Matrix<R>& a) {
  CokernelShape out;
  const auto vals = smith_valuations(a);
  out.free_rank = a.rows() - vals.size();
  for (const Valuation v : vals) {
    if (v.is_bottom())
      ++out.free_rank;
    else if (v.value() > 0)
      out.torsion.push_back(v.value());
  }
  return out;
}

}  // namespace wedgecrys
