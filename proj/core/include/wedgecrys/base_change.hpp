#pragma once

#include <functional>
#include <string>
#include <utility>

#include "wedgecrys/finite_field.hpp"
#include "wedgecrys/integers.hpp"
#include "wedgecrys/local_test_ring.hpp"
#include "wedgecrys/matrix.hpp"
#include "wedgecrys/modulus_ring.hpp"
#include "wedgecrys/witt_ring.hpp"

namespace wedgecrys {

/// A ring homomorphism R -> S given by its action on elements.
template <CommutativeRing R, CommutativeRing S>
struct RingHom {
  R source;
  S target;
  std::function<typename S::Element(const typename R::Element&)> map;
  std::string name;

  typename S::Element operator()(const typename R::Element& x) const { return map(x); }
};

/// Z/p^m -> Z/p^j for j <= m.
RingHom<ModulusRing, ModulusRing> reduction_hom(const ModulusRing& source, int j);
/// Z/p^m -> F_p.
RingHom<ModulusRing, FiniteField> residue_hom(const ModulusRing& source);
/// W(F_q)/p^m -> W(F_q)/p^j for j <= m.
RingHom<WittRing, WittRing> reduction_hom(const WittRing& source, int j);
/// W(F_q)/p^m -> F_q.
RingHom<WittRing, FiniteField> residue_hom(const WittRing& source);
/// F_q[t]/(t^e) -> F_q.
RingHom<LocalTestRing, FiniteField> residue_hom(const LocalTestRing& source);
/// F_{p^a} -> F_{p^b}; only the prime-field case a = 1 is supported.
RingHom<FiniteField, FiniteField> embedding_hom(const FiniteField& source, const FiniteField& target);
/// Z -> Q.
RingHom<IntegerRing, Rationals> embedding_hom(const IntegerRing& source);
/// Z -> Z/p^m.
RingHom<IntegerRing, ModulusRing> reduction_hom(const IntegerRing& source, const ModulusRing& target);

/// Entrywise image of A under hom.
template <CommutativeRing R, CommutativeRing S>
Matrix<S> base_change_matrix(const Matrix<R>& a, const RingHom<R, S>& hom) {
  detail::require_same_ring(a.ring(), hom.source);
  std::vector<typename S::Element> entries;
  entries.reserve(a.entries().size());
  for (const auto& x : a.entries()) entries.push_back(hom(x));
  return Matrix<S>(hom.target, a.rows(), a.cols(), std::move(entries));
}

}  // namespace wedgecrys
