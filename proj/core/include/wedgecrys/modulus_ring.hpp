#pragma once

#include <memory>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "wedgecrys/valuation.hpp"

namespace wedgecrys {

/// Z/p^m with residues kept in [0, p^m).
///
/// p = 2 is accepted here because this ring also serves as F_2 for the
/// linear-algebra checks; the p-adic constructions reject it.
class ModulusRing {
 public:
  using Element = mpz_class;
  static constexpr bool kLocal = true;
  static constexpr bool kField = false;

  ModulusRing(long p, int m);

  long prime() const noexcept;
  int precision() const noexcept;
  const mpz_class& modulus() const noexcept;
  const mpz_class& p_power(int k) const;

  Element zero() const { return 0; }
  Element one() const;
  Element from_integer(long n) const;
  Element from_integer(const mpz_class& n) const;
  Element add(const Element& x, const Element& y) const;
  Element sub(const Element& x, const Element& y) const;
  Element neg(const Element& x) const;
  Element mul(const Element& x, const Element& y) const;
  bool is_zero(const Element& x) const { return x == 0; }
  bool is_unit(const Element& x) const;

  /// Largest v with x in p^v Z/p^m; bottom for x = 0.
  Valuation valuation(const Element& x) const;
  int nilpotency() const noexcept { return precision(); }
  Element uniformizer_power(int k) const;
  Element divide_by_uniformizer(const Element& x, int k) const;
  Element remainder_mod_uniformizer(const Element& x, int k) const;
  Element unit_inverse(const Element& x) const;

  /// x mod p^k, as a residue in [0, p^k).
  Element truncate(const Element& x, int k) const;

  std::string descriptor() const;
  std::string format(const Element& x) const { return x.get_str(); }
  Element parse(std::string_view text) const;

  Element random(std::mt19937_64& gen) const;
  std::vector<Element> elements() const;

  friend bool operator==(const ModulusRing& a, const ModulusRing& b) {
    return a.prime() == b.prime() && a.precision() == b.precision();
  }

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

}  // namespace wedgecrys
