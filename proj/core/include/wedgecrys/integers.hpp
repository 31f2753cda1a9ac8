#pragma once

#include <random>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "wedgecrys/valuation.hpp"

namespace wedgecrys {

/// The integers. Not local: determinantal ideals over Z are only decided
/// when the answer is witnessed by a single generator.
class IntegerRing {
 public:
  using Element = mpz_class;
  static constexpr bool kLocal = false;
  static constexpr bool kField = false;

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_integer(long n) const { return n; }
  Element add(const Element& x, const Element& y) const { return x + y; }
  Element sub(const Element& x, const Element& y) const { return x - y; }
  Element neg(const Element& x) const { return -x; }
  Element mul(const Element& x, const Element& y) const { return x * y; }
  bool is_zero(const Element& x) const { return x == 0; }
  bool is_unit(const Element& x) const { return x == 1 || x == -1; }

  std::string descriptor() const { return "Z"; }
  std::string format(const Element& x) const { return x.get_str(); }
  Element parse(std::string_view text) const;

  /// Small integers in [-9, 9].
  Element random(std::mt19937_64& gen) const;

  friend bool operator==(const IntegerRing&, const IntegerRing&) { return true; }
};

/// The rational numbers.
class Rationals {
 public:
  using Element = mpq_class;
  static constexpr bool kLocal = true;
  static constexpr bool kField = true;

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_integer(long n) const { return n; }
  Element add(const Element& x, const Element& y) const { return x + y; }
  Element sub(const Element& x, const Element& y) const { return x - y; }
  Element neg(const Element& x) const { return -x; }
  Element mul(const Element& x, const Element& y) const { return x * y; }
  bool is_zero(const Element& x) const { return x == 0; }
  bool is_unit(const Element& x) const { return x != 0; }

  Valuation valuation(const Element& x) const { return x == 0 ? Valuation::bottom() : Valuation(0); }
  int nilpotency() const { return 1; }
  Element uniformizer_power(int k) const { return k == 0 ? 1 : 0; }
  Element divide_by_uniformizer(const Element& x, int) const { return x; }
  Element remainder_mod_uniformizer(const Element& x, int k) const { return k == 0 ? Element(0) : x; }
  Element unit_inverse(const Element& x) const { return 1 / x; }

  std::string descriptor() const { return "Q"; }
  /// "n" for integers, "n/d" otherwise.
  std::string format(const Element& x) const { return x.get_str(); }
  Element parse(std::string_view text) const;

  /// Fractions with numerator in [-9, 9] and denominator in [1, 4].
  Element random(std::mt19937_64& gen) const;

  friend bool operator==(const Rationals&, const Rationals&) { return true; }
};

namespace detail {
/// Parses a decimal integer with optional sign; throws ParseError.
mpz_class parse_integer(std::string_view text);
}  // namespace detail

}  // namespace wedgecrys
