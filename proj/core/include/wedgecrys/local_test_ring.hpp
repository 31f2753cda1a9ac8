#pragma once

#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "wedgecrys/finite_field.hpp"
#include "wedgecrys/valuation.hpp"

namespace wedgecrys {

/// The truncated polynomial ring F_q[t]/(t^e): a small local ring with zero
/// divisors, maximal ideal (t) and residue field F_q.
class LocalTestRing {
 public:
  /// Coefficients of 1, t, ..., t^(e-1).
  struct Element {
    std::vector<FiniteField::Element> coeffs;
    friend bool operator==(const Element&, const Element&) = default;
  };
  static constexpr bool kLocal = true;
  static constexpr bool kField = false;

  LocalTestRing(FiniteField base, int e);

  const FiniteField& residue_field() const noexcept { return base_; }
  int length() const noexcept { return e_; }

  Element zero() const;
  Element one() const;
  Element from_integer(long n) const;
  Element from_residue(const FiniteField::Element& u) const;
  /// The uniformizer t.
  Element t() const { return uniformizer_power(1); }
  Element add(const Element& x, const Element& y) const;
  Element sub(const Element& x, const Element& y) const;
  Element neg(const Element& x) const;
  Element mul(const Element& x, const Element& y) const;
  bool is_zero(const Element& x) const;
  /// A unit iff the residue (constant term) is nonzero.
  bool is_unit(const Element& x) const;
  /// True iff x lies in the maximal ideal (t).
  bool in_maximal_ideal(const Element& x) const;
  FiniteField::Element residue(const Element& x) const { return x.coeffs.front(); }

  Valuation valuation(const Element& x) const;
  int nilpotency() const noexcept { return e_; }
  Element uniformizer_power(int k) const;
  Element divide_by_uniformizer(const Element& x, int k) const;
  Element remainder_mod_uniformizer(const Element& x, int k) const;
  Element unit_inverse(const Element& x) const;

  /// "F_q[t]/(t^e)".
  std::string descriptor() const;
  /// "(u0,u1,...)" with each u in the residue-field syntax.
  std::string format(const Element& x) const;
  Element parse(std::string_view text) const;

  Element random(std::mt19937_64& gen) const;
  std::vector<Element> elements() const;

  friend bool operator==(const LocalTestRing& a, const LocalTestRing& b) {
    return a.base_ == b.base_ && a.e_ == b.e_;
  }

 private:
  FiniteField base_;
  int e_;
};

}  // namespace wedgecrys
