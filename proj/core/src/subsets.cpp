#include "wedgecrys/subsets.hpp"

#include "wedgecrys/error.hpp"

namespace wedgecrys {

std::size_t binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::size_t out = 1;
  for (long i = 1; i <= k; ++i) out = out * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  return out;
}

IndexSubset::IndexSubset(std::size_t n, std::vector<std::size_t> members) : n_(n), members_(std::move(members)) {
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i] >= n_) throw DimensionMismatch("subset index out of range");
    if (i > 0 && members_[i - 1] >= members_[i]) throw DimensionMismatch("subset must be strictly increasing");
  }
}

std::size_t IndexSubset::rank() const {
  // Count the subsets that precede this one: for position i, every smaller
  // choice c at that position contributes C(n-1-c, r-1-i) completions.
  const auto r = static_cast<long>(members_.size());
  const auto n = static_cast<long>(n_);
  std::size_t out = 0;
  long prev = -1;
  for (long i = 0; i < r; ++i) {
    const auto cur = static_cast<long>(members_[static_cast<std::size_t>(i)]);
    for (long c = prev + 1; c < cur; ++c) out += binomial(n - 1 - c, r - 1 - i);
    prev = cur;
  }
  return out;
}

IndexSubset IndexSubset::complement() const {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    if (k < members_.size() && members_[k] == i) {
      ++k;
      continue;
    }
    out.push_back(i);
  }
  return IndexSubset(n_, std::move(out));
}

std::string IndexSubset::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(members_[i] + 1);
  }
  return out + '}';
}

std::vector<IndexSubset> subsets(std::size_t n, std::size_t r) {
  std::vector<IndexSubset> out;
  if (r > n) return out;
  out.reserve(binomial(static_cast<long>(n), static_cast<long>(r)));
  std::vector<std::size_t> cur(r);
  for (std::size_t i = 0; i < r; ++i) cur[i] = i;
  while (true) {
    out.emplace_back(n, cur);
    std::size_t i = r;
    while (i > 0 && cur[i - 1] == n - r + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < r; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

IndexSubset subset_unrank(std::size_t n, std::size_t r, std::size_t index) {
  if (index >= binomial(static_cast<long>(n), static_cast<long>(r))) throw DimensionMismatch("subset index out of range");
  std::vector<std::size_t> out;
  std::size_t c = 0;
  for (std::size_t i = 0; i < r; ++i) {
    while (true) {
      const std::size_t block = binomial(static_cast<long>(n - 1 - c), static_cast<long>(r - 1 - i));
      if (index < block) break;
      index -= block;
      ++c;
    }
    out.push_back(c++);
  }
  return IndexSubset(n, std::move(out));
}

}  // namespace wedgecrys
