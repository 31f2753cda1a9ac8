#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "wedgecrys/serialization.hpp"

namespace wedgecrys::cli {

/// Outcome of a property campaign. `counterexample` holds the first failing
/// case verbatim (ring, matrices, parameters).
struct CampaignReport {
  std::string campaign;
  std::string mode;  // "random" or "exhaustive-f2"
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::size_t cases = 0;
  std::size_t failures = 0;
  json details = json::object();
  std::optional<json> counterexample;

  bool ok() const noexcept { return failures == 0; }
  json to_json() const;
};

/// Matrix with uniformly random entries.
template <RandomSampling R>
Matrix<R> random_matrix(const R& ring, std::size_t rows, std::size_t cols, std::mt19937_64& gen) {
  Matrix<R> a(ring, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a(i, j) = ring.random(gen);
  return a;
}

template <RandomSampling R>
Matrix<R> random_invertible(const R& ring, std::size_t n, std::mt19937_64& gen) {
  while (true) {
    auto a = random_matrix(ring, n, n, gen);
    if (ring.is_unit(determinant(a))) return a;
  }
}

/// Half the draws are uniform; the rest are P D Q with random invertible P, Q
/// and a diagonal D of zeros and uniformizer powers, so every rank and every
/// undefined-rank shape shows up.
template <RandomSampling R>
  requires ChainRing<R>
Matrix<R> random_structured_matrix(const R& ring, std::size_t n, std::mt19937_64& gen) {
  if (std::uniform_int_distribution<int>(0, 1)(gen) == 0) return random_matrix(ring, n, n, gen);
  const int L = ring.nilpotency();
  Matrix<R> d(ring, n, n);
  std::uniform_int_distribution<int> val(0, L + 1);
  for (std::size_t i = 0; i < n; ++i) {
    const int v = val(gen);
    d(i, i) = v >= L ? ring.zero() : ring.uniformizer_power(v);
  }
  return random_invertible(ring, n, gen) * d * random_invertible(ring, n, gen);
}

/// rank(A) = 2 iff rank(wedge^2 A) = 1 on all 512 matrices in M_3(F_2).
CampaignReport rank_lemma_exhaustive_f2();
/// 4 x 4 matrices over F_5 and Z/27, d in {2, 3}.
CampaignReport rank_lemma_random(std::uint64_t seed, std::size_t trials);
/// Pairs of 4 x 4 matrices over Z/27 and F_9, d in {2, 3}.
CampaignReport cauchy_binet(std::uint64_t seed, std::size_t trials);
/// FV = VF = p on conjugated standard modules.
CampaignReport axioms(std::uint64_t seed, std::size_t trials);
/// Multilinear compatibility for every h <= 4 and r <= h, `trials` trials each.
CampaignReport compat(std::uint64_t seed, std::size_t trials, bool wrong_shift);
/// Theta round trip, graded audit and chart paths on random bi- and trilinear
/// maps over F_5[x, y].
CampaignReport adjunction(std::uint64_t seed, std::size_t trials);

const std::vector<std::string>& campaign_names();

}  // namespace wedgecrys::cli
