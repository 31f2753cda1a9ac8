#include "wedgecrys/random.hpp"

#include <stdexcept>

namespace wedgecrys {

mpz_class random_below(const mpz_class& bound, std::mt19937_64& gen) {
  if (bound <= 0) throw std::invalid_argument("random_below: bound must be positive");
  if (mpz_fits_ulong_p(bound.get_mpz_t())) {
    std::uniform_int_distribution<unsigned long> dist(0, bound.get_ui() - 1);
    return mpz_class(dist(gen));
  }
  // Draw 64 extra bits so that the bias of the final reduction is negligible.
  const std::size_t words = mpz_sizeinbase(bound.get_mpz_t(), 2) / 64 + 2;
  mpz_class acc = 0;
  for (std::size_t i = 0; i < words; ++i) {
    acc <<= 64;
    const std::uint64_t w = gen();
    acc += mpz_class(static_cast<unsigned long>(w >> 32)) << 32;
    acc += static_cast<unsigned long>(w & 0xffffffffULL);
  }
  return acc % bound;
}

}  // namespace wedgecrys
