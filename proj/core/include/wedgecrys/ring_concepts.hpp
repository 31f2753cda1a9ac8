#pragma once

#include <concepts>
#include <random>
#include <string>
#include <string_view>

#include "wedgecrys/valuation.hpp"

namespace wedgecrys {

/// An exact commutative ring with canonical element representatives, so
/// that `==` on elements is equality in the ring.
///
/// Ring objects are cheap handles to immutable shared state; elements are
/// plain values that only make sense together with their ring.
template <class R>
concept CommutativeRing =
    std::copy_constructible<R> && std::equality_comparable<R> &&
    std::regular<typename R::Element> &&
    requires(const R& ring, const typename R::Element& x, long n, std::string_view text) {
      { ring.zero() } -> std::same_as<typename R::Element>;
      { ring.one() } -> std::same_as<typename R::Element>;
      { ring.from_integer(n) } -> std::same_as<typename R::Element>;
      { ring.add(x, x) } -> std::same_as<typename R::Element>;
      { ring.sub(x, x) } -> std::same_as<typename R::Element>;
      { ring.neg(x) } -> std::same_as<typename R::Element>;
      { ring.mul(x, x) } -> std::same_as<typename R::Element>;
      { ring.is_zero(x) } -> std::same_as<bool>;
      { ring.is_unit(x) } -> std::same_as<bool>;
      { ring.descriptor() } -> std::convertible_to<std::string>;
      { ring.format(x) } -> std::convertible_to<std::string>;
      { ring.parse(text) } -> std::same_as<typename R::Element>;
      { R::kLocal } -> std::convertible_to<bool>;
    };

/// A local ring: an ideal is the unit ideal iff one of its generators is a unit.
template <class R>
concept LocalRing = CommutativeRing<R> && R::kLocal;

/// A local principal ideal ring whose maximal ideal is generated by a
/// nilpotent uniformizer (or is zero, for fields). Every ideal is a power of
/// the maximal ideal, which is what Smith and Howell reductions rely on.
///
/// `nilpotency()` is the least L with uniformizer^L = 0 (1 for fields).
/// `divide_by_uniformizer(x, k)` returns some y with uniformizer^k * y = x and
/// requires valuation(x) >= k. `remainder_mod_uniformizer(x, k)` is the
/// canonical representative of x modulo the k-th power of the maximal ideal.
template <class R>
concept ChainRing =
    LocalRing<R> && requires(const R& ring, const typename R::Element& x, int k) {
      { ring.valuation(x) } -> std::same_as<Valuation>;
      { ring.nilpotency() } -> std::same_as<int>;
      { ring.uniformizer_power(k) } -> std::same_as<typename R::Element>;
      { ring.divide_by_uniformizer(x, k) } -> std::same_as<typename R::Element>;
      { ring.remainder_mod_uniformizer(x, k) } -> std::same_as<typename R::Element>;
      { ring.unit_inverse(x) } -> std::same_as<typename R::Element>;
    };

/// A field; `unit_inverse` inverts every nonzero element.
template <class R>
concept Field = ChainRing<R> && R::kField;

/// Rings able to draw elements from a seeded engine.
template <class R>
concept RandomSampling = CommutativeRing<R> && requires(const R& ring, std::mt19937_64& gen) {
  { ring.random(gen) } -> std::same_as<typename R::Element>;
};

/// A finite ring whose elements can be listed; used by exhaustive checks.
template <class R>
concept Enumerable = CommutativeRing<R> && requires(const R& ring) {
  { ring.elements() };
};

}  // namespace wedgecrys
