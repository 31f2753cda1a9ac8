#pragma once

#include <compare>
#include <limits>
#include <ostream>
#include <string>

namespace wedgecrys {

/// Valuation of a ring element at finite precision.
///
/// `bottom()` means the element is zero at the working precision, i.e. its
/// true valuation is at least the precision and cannot be read off. It
/// compares greater than every finite value and never takes part in
/// arithmetic: callers must decide what a bottom means for them.
class Valuation {
 public:
  constexpr explicit Valuation(int value) noexcept : value_(value) {}

  static constexpr Valuation bottom() noexcept { return Valuation(kBottom); }

  constexpr bool is_bottom() const noexcept { return value_ == kBottom; }
  constexpr bool is_finite() const noexcept { return value_ != kBottom; }

  /// The finite value; only meaningful when `is_finite()`.
  constexpr int value() const noexcept { return value_; }

  friend constexpr bool operator==(Valuation, Valuation) noexcept = default;
  friend constexpr auto operator<=>(Valuation a, Valuation b) noexcept {
    return a.value_ <=> b.value_;
  }

  std::string to_string() const {
    return is_bottom() ? std::string("BOTTOM") : std::to_string(value_);
  }

  friend std::ostream& operator<<(std::ostream& os, Valuation v) {
    return os << v.to_string();
  }

 private:
  static constexpr int kBottom = std::numeric_limits<int>::max();
  int value_;
};

}  // namespace wedgecrys
