#pragma once

#include <cstddef>
#include <string>
#include <type_traits>
#include <vector>

#include "wedgecrys/determinant.hpp"
#include "wedgecrys/error.hpp"
#include "wedgecrys/matrix.hpp"
#include "wedgecrys/subsets.hpp"

namespace wedgecrys {

/// The d-th compound matrix: entry (S, T) is det A[S, T] for d-subsets S, T in
/// lexicographic order, with no extra sign.
template <CommutativeRing R>
Matrix<R> compound(const Matrix<R>& a, std::size_t d) {
  if (!a.is_square()) throw DimensionMismatch("compound of a non-square matrix");
  if (d < 1 || d > a.rows())
    throw DimensionMismatch("compound order " + std::to_string(d) + " outside 1.." + std::to_string(a.rows()));
  const auto subs = subsets(a.rows(), d);
  Matrix<R> out(a.ring(), subs.size(), subs.size());
  for (std::size_t i = 0; i < subs.size(); ++i)
    for (std::size_t j = 0; j < subs.size(); ++j)
      out(i, j) = determinant(a.submatrix(subs[i].members(), subs[j].members()));
  return out;
}

/// Lambda_r of an r-ary map: the value of rho on every increasing r-subset of
/// `items`, in lexicographic order. rho receives the selected items in order.
template <class T, class Rho>
auto lambda_r_tuple(const std::vector<T>& items, std::size_t r, Rho&& rho) {
  using Out = std::decay_t<decltype(rho(std::declval<const std::vector<T>&>()))>;
  if (r < 1 || r > items.size())
    throw ArityMismatch("arity " + std::to_string(r) + " outside 1.." + std::to_string(items.size()));
  std::vector<Out> out;
  std::vector<T> picked;
  picked.reserve(r);
  for (const auto& s : subsets(items.size(), r)) {
    picked.clear();
    for (std::size_t i : s.members()) picked.push_back(items[i]);
    out.push_back(rho(picked));
  }
  return out;
}

/// Coordinates of v_1 ^ ... ^ v_r in the lexicographic basis e_S: the r-minors
/// of the h x r matrix with columns v_i, taken over row subsets S.
template <CommutativeRing R>
std::vector<typename R::Element> wedge_columns(const R& ring, const std::vector<std::vector<typename R::Element>>& cols) {
  if (cols.empty()) throw ArityMismatch("wedge of zero vectors");
  const std::size_t h = cols.front().size();
  const auto stack = Matrix<R>::from_columns(ring, h, cols);
  std::vector<std::size_t> all(cols.size());
  for (std::size_t j = 0; j < all.size(); ++j) all[j] = j;
  std::vector<typename R::Element> out;
  for (const auto& s : subsets(h, cols.size())) out.push_back(determinant(stack.submatrix(s.members(), all)));
  return out;
}

}  // namespace wedgecrys
