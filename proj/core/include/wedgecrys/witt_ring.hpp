#pragma once

#include <memory>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "wedgecrys/finite_field.hpp"
#include "wedgecrys/valuation.hpp"

namespace wedgecrys {

/// Truncated unramified Witt vectors W(F_q)/p^m, represented as
/// (Z/p^m)[x]/(f^) where f^ is the lift of the defining polynomial of F_q
/// with coefficients in [0, p).
///
/// The Frobenius is the unique ring endomorphism reducing to u -> u^p mod p.
/// It fixes Z/p^m and is determined by the image of x, found once by Newton
/// iteration on f^ starting from x^p, then cached with its inverse.
class WittRing {
 public:
  /// Coordinates in the basis 1, x, ..., x^(a-1), each in [0, p^m).
  struct Element {
    std::vector<mpz_class> coeffs;
    friend bool operator==(const Element&, const Element&) = default;
  };
  static constexpr bool kLocal = true;
  static constexpr bool kField = false;

  /// Throws NonPrime when p is composite or p = 2.
  WittRing(long p, int a, int m);

  long prime() const noexcept;
  int degree() const noexcept;
  int precision() const noexcept;
  const mpz_class& modulus() const noexcept;
  const FiniteField& residue_field() const noexcept;
  /// The same ring at another precision.
  WittRing with_precision(int m) const;

  Element zero() const;
  Element one() const;
  Element from_integer(long n) const;
  Element from_integer(const mpz_class& n) const;
  Element generator() const;
  Element add(const Element& x, const Element& y) const;
  Element sub(const Element& x, const Element& y) const;
  Element neg(const Element& x) const;
  Element mul(const Element& x, const Element& y) const;
  Element scale(const Element& x, const mpz_class& c) const;
  Element pow(const Element& x, const mpz_class& e) const;
  bool is_zero(const Element& x) const;
  bool is_unit(const Element& x) const;

  Valuation valuation(const Element& x) const;
  int nilpotency() const noexcept { return precision(); }
  Element uniformizer_power(int k) const;
  Element divide_by_uniformizer(const Element& x, int k) const;
  Element remainder_mod_uniformizer(const Element& x, int k) const;
  Element unit_inverse(const Element& x) const;

  /// x mod p^k, coordinates in [0, p^k).
  Element truncate(const Element& x, int k) const;
  /// True when x and y agree modulo p^k.
  bool equal_mod(const Element& x, const Element& y, int k) const;

  Element frobenius(const Element& x) const;
  Element frobenius_inverse(const Element& x) const;
  /// phi^k for any integer k (phi has order a).
  Element frobenius_power(const Element& x, int k) const;
  /// phi(x) for the generator x; a root of f^ congruent to x^p mod p.
  const Element& frobenius_root() const noexcept;

  /// The unique (q-1)-st root of unity, or 0, reducing to u.
  Element teichmuller(const FiniteField::Element& u) const;
  FiniteField::Element reduce(const Element& x) const;
  /// Coordinate-wise lift of a residue-field element.
  Element lift(const FiniteField::Element& u) const;

  /// a x a matrices over Z/p^m (row-major) of multiplication by x and of phi
  /// on the coordinate basis.
  std::vector<mpz_class> multiplication_matrix(const Element& x) const;
  std::vector<mpz_class> frobenius_matrix() const;

  /// "W(F_q)/p^m".
  std::string descriptor() const;
  std::string format(const Element& x) const;
  Element parse(std::string_view text) const;

  Element random(std::mt19937_64& gen) const;
  std::vector<Element> elements() const;

  const detail::UnramifiedArith& arithmetic() const noexcept;

  friend bool operator==(const WittRing& a, const WittRing& b) {
    return a.prime() == b.prime() && a.degree() == b.degree() && a.precision() == b.precision();
  }

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

/// Builds W(F_{p^a})/p^m. Deterministic for fixed (p, a, m).
WittRing make_witt_ring(long p, int a, int m);

}  // namespace wedgecrys
