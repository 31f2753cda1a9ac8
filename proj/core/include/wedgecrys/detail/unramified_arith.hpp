#pragma once

#include <vector>

#include <gmpxx.h>

#include "wedgecrys/valuation.hpp"

namespace wedgecrys::detail {

using Coeffs = std::vector<mpz_class>;

/// Arithmetic in (Z/p^m)[x]/(f) for a monic f of degree a whose reduction
/// mod p is irreducible. Elements are coefficient vectors of length a,
/// lowest degree first, each coefficient in [0, p^m).
class UnramifiedArith {
 public:
  /// `defining` holds the a+1 coefficients of f, lowest first, leading 1.
  UnramifiedArith(long p, int a, int m, std::vector<long> defining);

  long prime() const noexcept { return p_; }
  int degree() const noexcept { return a_; }
  int precision() const noexcept { return m_; }
  const mpz_class& modulus() const noexcept { return modulus_; }
  const mpz_class& p_power(int k) const { return powers_.at(static_cast<std::size_t>(k)); }
  const std::vector<long>& defining() const noexcept { return defining_; }

  Coeffs zero() const { return Coeffs(static_cast<std::size_t>(a_), mpz_class(0)); }
  Coeffs constant(const mpz_class& c) const;
  Coeffs generator() const;

  Coeffs add(const Coeffs& x, const Coeffs& y) const;
  Coeffs sub(const Coeffs& x, const Coeffs& y) const;
  Coeffs neg(const Coeffs& x) const;
  Coeffs mul(const Coeffs& x, const Coeffs& y) const;
  Coeffs scale(const Coeffs& x, const mpz_class& c) const;
  Coeffs pow(Coeffs base, mpz_class exponent) const;

  bool is_zero(const Coeffs& x) const;
  /// Minimum p-adic valuation over the coefficients; bottom when x == 0.
  Valuation valuation(const Coeffs& x) const;

  /// Canonicalises arbitrary integer coefficients into [0, p^m).
  Coeffs normalise(Coeffs x) const;

 private:
  long p_;
  int a_;
  int m_;
  mpz_class modulus_;
  std::vector<mpz_class> powers_;  // p^0 .. p^m
  std::vector<long> defining_;
  Coeffs tail_;  // f - x^a, so x^a == -tail_ in the quotient
};

bool is_prime(long n);

/// Monic irreducible polynomial of degree a over F_p, lowest coefficient
/// first: the Conway polynomial when tabulated (p in {3,5,7}, a <= 4),
/// otherwise the lexicographically smallest one, comparing coefficients
/// from degree a-1 down to degree 0.
std::vector<long> defining_polynomial(long p, int a);

/// Irreducibility over F_p by the Ben-Or test.
bool is_irreducible_mod_p(const std::vector<long>& poly, long p);

}  // namespace wedgecrys::detail
