#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wedgecrys/chain_forms.hpp"
#include "wedgecrys/compound.hpp"
#include "wedgecrys/matrix.hpp"
#include "wedgecrys/subsets.hpp"

namespace wedgecrys {

enum class IdealStatus { UNIT, ZERO, PROPER_NONZERO, UNDECIDABLE };

std::string_view to_string(IdealStatus s);

/// Status of U_i(A), the ideal generated by the i x i minors, computed from
/// the minors themselves. For local rings the ideal is the unit ideal iff a
/// generator is a unit; for other rings only the witnessed answers (a unit
/// minor, or all minors zero) are given and the rest is UNDECIDABLE.
template <CommutativeRing R>
IdealStatus determinantal_status_by_minors(const Matrix<R>& a, std::size_t i) {
  if (i == 0) return IdealStatus::UNIT;
  if (i > a.rows() || i > a.cols()) return IdealStatus::ZERO;
  const R& ring = a.ring();
  bool all_zero = true;
  const auto rs = subsets(a.rows(), i);
  const auto cs = subsets(a.cols(), i);
  for (const auto& s : rs)
    for (const auto& t : cs) {
      const auto minor = determinant(a.submatrix(s.members(), t.members()));
      if (ring.is_unit(minor)) return IdealStatus::UNIT;
      if (!ring.is_zero(minor)) all_zero = false;
    }
  if (all_zero) return IdealStatus::ZERO;
  return R::kLocal ? IdealStatus::PROPER_NONZERO : IdealStatus::UNDECIDABLE;
}

/// Statuses U_0 .. U_{k+1} with k = min(rows, cols), from the Smith diagonal:
/// over a chain ring U_i is generated by pi^(v_1 + ... + v_i).
template <ChainRing R>
std::vector<IdealStatus> determinantal_statuses_smith(const Matrix<R>& a) {
  const auto vals = smith_valuations(a);
  const int L = a.ring().nilpotency();
  std::vector<IdealStatus> out{IdealStatus::UNIT};
  long sum = 0;
  bool zero = false;
  for (const Valuation v : vals) {
    if (v.is_bottom()) zero = true;
    if (!zero) sum += v.value();
    if (zero || sum >= L)
      out.push_back(IdealStatus::ZERO);
    else
      out.push_back(sum == 0 ? IdealStatus::UNIT : IdealStatus::PROPER_NONZERO);
  }
  out.push_back(IdealStatus::ZERO);
  return out;
}

/// Statuses U_0 .. U_{k+1} with k = min(rows, cols).
template <CommutativeRing R>
std::vector<IdealStatus> determinantal_statuses(const Matrix<R>& a) {
  if constexpr (ChainRing<R>) {
    return determinantal_statuses_smith(a);
  } else {
    std::vector<IdealStatus> out;
    const std::size_t k = std::min(a.rows(), a.cols());
    for (std::size_t i = 0; i <= k + 1; ++i) out.push_back(determinantal_status_by_minors(a, i));
    return out;
  }
}

template <CommutativeRing R>
IdealStatus determinantal_status(const Matrix<R>& a, std::size_t i) {
  const auto all = determinantal_statuses(a);
  return i < all.size() ? all[i] : IdealStatus::ZERO;
}

/// rank = r iff U_r is the unit ideal and U_{r+1} = 0; otherwise undefined.
struct RankResult {
  std::optional<std::size_t> rank;
  std::vector<IdealStatus> witness;  // U_0 .. U_{k+1}
  bool decidable = true;             // false when some status is UNDECIDABLE

  bool defined() const noexcept { return rank.has_value(); }
};

RankResult rank_from_statuses(std::vector<IdealStatus> witness);

template <CommutativeRing R>
RankResult rank(const Matrix<R>& a) {
  return rank_from_statuses(determinantal_statuses(a));
}

/// Oracle route: the same result computed from the minors alone.
template <CommutativeRing R>
RankResult rank_by_minors(const Matrix<R>& a) {
  std::vector<IdealStatus> w;
  const std::size_t k = std::min(a.rows(), a.cols());
  for (std::size_t i = 0; i <= k + 1; ++i) w.push_back(determinantal_status_by_minors(a, i));
  return rank_from_statuses(std::move(w));
}

/// For square A: whether coker A is free of rank n - expected, and whether
/// rank(A) = expected. The two always agree; both are reported so callers can
/// check it.
struct CokernelRankCheck {
  bool cokernel_ok = false;
  bool rank_ok = false;
  std::size_t cokernel_free_rank = 0;
  bool cokernel_free = false;

  bool value() const noexcept { return cokernel_ok && rank_ok; }
  bool consistent() const noexcept { return cokernel_ok == rank_ok; }
};

template <ChainRing R>
CokernelRankCheck cokernel_rank_check(const Matrix<R>& a, std::size_t expected) {
  if (!a.is_square()) throw DimensionMismatch("cokernel_rank_check needs a square matrix");
  const std::size_t n = a.rows();
  const auto shape = cokernel(a);
  CokernelRankCheck out;
  out.cokernel_free = shape.is_free();
  out.cokernel_free_rank = shape.free_rank;
  out.cokernel_ok = expected <= n && shape.is_free() && shape.free_rank == n - expected;
  const auto r = rank_by_minors(a);
  out.rank_ok = r.rank == expected;
  return out;
}

template <CommutativeRing R>
struct WedgeExactSequence {
  Matrix<R> compound_map;
  std::size_t cokernel_rank = 0;
  bool cokernel_free = false;
};

/// For A of rank n-1: the compound map wedge^d A and the free rank of its
/// cokernel, which is C(n-1, d-1).
template <ChainRing R>
WedgeExactSequence<R> wedge_exact_sequence(const Matrix<R>& a, std::size_t d) {
  if (!a.is_square()) throw DimensionMismatch("wedge_exact_sequence needs a square matrix");
  const std::size_t n = a.rows();
  if (d < 1 || d + 1 > n) throw DimensionMismatch("wedge order must lie in 1..n-1");
  const auto r = rank(a);
  if (r.rank != n - 1) throw RankPrecondition("wedge_exact_sequence needs rank n-1");
  auto c = compound(a, d);
  const auto shape = cokernel(c);
  return {std::move(c), shape.free_rank, shape.is_free()};
}

struct RankLemmaCheck {
  bool lhs = false;  // rank(A) = n - 1
  bool rhs = false;  // rank(wedge^d A) = C(n-1, d)
  bool holds() const noexcept { return lhs == rhs; }
};

template <CommutativeRing R>
RankLemmaCheck rank_lemma_check(const Matrix<R>& a, std::size_t d) {
  if (!a.is_square()) throw DimensionMismatch("rank_lemma_check needs a square matrix");
  const std::size_t n = a.rows();
  if (d < 1 || d + 1 > n) throw DimensionMismatch("wedge order must lie in 1..n-1");
  RankLemmaCheck out;
  out.lhs = rank(a).rank == n - 1;
  out.rhs = rank(compound(a, d)).rank == binomial(static_cast<long>(n) - 1, static_cast<long>(d));
  return out;
}

}  // namespace wedgecrys
