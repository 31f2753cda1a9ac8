#pragma once

#include <memory>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "wedgecrys/valuation.hpp"

namespace wedgecrys {

namespace detail {
class UnramifiedArith;
}

/// F_q with q = p^a, realised as F_p[x]/(f) for the defining polynomial
/// chosen by `detail::defining_polynomial`.
class FiniteField {
 public:
  /// Coefficients of a polynomial in x of degree < a, lowest first, in [0, p).
  struct Element {
    std::vector<mpz_class> coeffs;
    friend bool operator==(const Element&, const Element&) = default;
  };
  static constexpr bool kLocal = true;
  static constexpr bool kField = true;

  FiniteField(long p, int a);

  long characteristic() const noexcept;
  int degree() const noexcept;
  mpz_class order() const;
  const std::vector<long>& defining_polynomial() const noexcept;

  Element zero() const;
  Element one() const;
  Element from_integer(long n) const;
  Element from_coefficients(const std::vector<long>& coeffs) const;
  /// The class of x in F_p[x]/(f).
  Element generator() const;
  Element add(const Element& x, const Element& y) const;
  Element sub(const Element& x, const Element& y) const;
  Element neg(const Element& x) const;
  Element mul(const Element& x, const Element& y) const;
  Element pow(const Element& x, const mpz_class& e) const;
  bool is_zero(const Element& x) const;
  bool is_unit(const Element& x) const { return !is_zero(x); }
  Element inverse(const Element& x) const;
  /// x -> x^p.
  Element frobenius(const Element& x) const;

  Valuation valuation(const Element& x) const { return is_zero(x) ? Valuation::bottom() : Valuation(0); }
  int nilpotency() const { return 1; }
  Element uniformizer_power(int k) const { return k == 0 ? one() : zero(); }
  Element divide_by_uniformizer(const Element& x, int) const { return x; }
  Element remainder_mod_uniformizer(const Element& x, int k) const { return k == 0 ? zero() : x; }
  Element unit_inverse(const Element& x) const { return inverse(x); }

  /// "F_q".
  std::string descriptor() const;
  /// A decimal for a = 1, otherwise "(c0,c1,...)".
  std::string format(const Element& x) const;
  Element parse(std::string_view text) const;

  Element random(std::mt19937_64& gen) const;
  std::vector<Element> elements() const;

  const detail::UnramifiedArith& arithmetic() const noexcept { return *arith_; }

  friend bool operator==(const FiniteField& a, const FiniteField& b) {
    return a.characteristic() == b.characteristic() && a.degree() == b.degree();
  }

 private:
  std::shared_ptr<const detail::UnramifiedArith> arith_;
};

namespace detail {
/// Shared "(c0,c1,...)" / plain-integer coefficient syntax used by F_q and W.
std::vector<mpz_class> parse_coefficient_tuple(std::string_view text, int degree);
std::string format_coefficient_tuple(const std::vector<mpz_class>& coeffs);
}  // namespace detail

}  // namespace wedgecrys
