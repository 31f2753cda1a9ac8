#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace wedgecrys {

/// Binomial coefficient C(n, k); 0 when k < 0 or k > n.
std::size_t binomial(long n, long k);

/// A strictly increasing set of indices into {0, ..., n-1}. Printed 1-based.
///
/// The r-subsets of {0..n-1} are ordered lexicographically. This order indexes
/// rows and columns of compound matrices and wedge coordinates everywhere.
class IndexSubset {
 public:
  /// Throws DimensionMismatch unless members are strictly increasing and < n.
  IndexSubset(std::size_t n, std::vector<std::size_t> members);

  std::size_t ambient() const noexcept { return n_; }
  std::size_t size() const noexcept { return members_.size(); }
  const std::vector<std::size_t>& members() const noexcept { return members_; }
  std::size_t operator[](std::size_t i) const { return members_[i]; }

  /// Position in the lexicographic list of all size()-subsets of {0..n-1}.
  std::size_t rank() const;
  /// Complement in {0..n-1}, increasing.
  IndexSubset complement() const;
  /// "{1,3}" style, 1-based.
  std::string to_string() const;

  friend bool operator==(const IndexSubset&, const IndexSubset&) = default;
  friend auto operator<=>(const IndexSubset& a, const IndexSubset& b) { return a.members_ <=> b.members_; }

 private:
  std::size_t n_;
  std::vector<std::size_t> members_;
};

/// All r-subsets of {0..n-1} in lexicographic order.
std::vector<IndexSubset> subsets(std::size_t n, std::size_t r);

/// Inverse of IndexSubset::rank.
IndexSubset subset_unrank(std::size_t n, std::size_t r, std::size_t index);

}  // namespace wedgecrys
