#include "wedgecrys/modulus_ring.hpp"

#include <string>

#include "wedgecrys/detail/unramified_arith.hpp"
#include "wedgecrys/error.hpp"
#include "wedgecrys/integers.hpp"
#include "wedgecrys/random.hpp"

namespace wedgecrys {

struct ModulusRing::Impl {
  long p;
  int m;
  std::vector<mpz_class> powers;  // p^0 .. p^m
};

ModulusRing::ModulusRing(long p, int m) {
  if (!detail::is_prime(p)) throw NonPrime(std::to_string(p) + " is not prime");
  if (m < 1) throw BadDescriptor("precision must be at least 1");
  auto impl = std::make_shared<Impl>();
  impl->p = p;
  impl->m = m;
  mpz_class power = 1;
  for (int k = 0; k <= m; ++k) {
    impl->powers.push_back(power);
    power *= p;
  }
  impl_ = std::move(impl);
}

long ModulusRing::prime() const noexcept { return impl_->p; }
int ModulusRing::precision() const noexcept { return impl_->m; }
const mpz_class& ModulusRing::modulus() const noexcept { return impl_->powers.back(); }

const mpz_class& ModulusRing::p_power(int k) const {
  if (k < 0 || k > impl_->m) throw std::out_of_range("p_power exponent out of range");
  return impl_->powers[static_cast<std::size_t>(k)];
}

ModulusRing::Element ModulusRing::one() const { return 1; }

ModulusRing::Element ModulusRing::from_integer(long n) const { return from_integer(mpz_class(n)); }

ModulusRing::Element ModulusRing::from_integer(const mpz_class& n) const {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), modulus().get_mpz_t());
  return r;
}

ModulusRing::Element ModulusRing::add(const Element& x, const Element& y) const {
  mpz_class r = x + y;
  if (r >= modulus()) r -= modulus();
  return r;
}

ModulusRing::Element ModulusRing::sub(const Element& x, const Element& y) const {
  mpz_class r = x - y;
  if (r < 0) r += modulus();
  return r;
}

ModulusRing::Element ModulusRing::neg(const Element& x) const {
  return x == 0 ? mpz_class(0) : mpz_class(modulus() - x);
}

ModulusRing::Element ModulusRing::mul(const Element& x, const Element& y) const {
  mpz_class r = x * y;
  mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), modulus().get_mpz_t());
  return r;
}

bool ModulusRing::is_unit(const Element& x) const {
  return !mpz_divisible_ui_p(x.get_mpz_t(), static_cast<unsigned long>(impl_->p));
}

Valuation ModulusRing::valuation(const Element& x) const {
  if (x == 0) return Valuation::bottom();
  int v = 0;
  while (mpz_divisible_p(x.get_mpz_t(), impl_->powers[static_cast<std::size_t>(v) + 1].get_mpz_t())) ++v;
  return Valuation(v);
}

ModulusRing::Element ModulusRing::uniformizer_power(int k) const {
  if (k >= impl_->m) return 0;
  return p_power(k);
}

ModulusRing::Element ModulusRing::divide_by_uniformizer(const Element& x, int k) const {
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), p_power(k).get_mpz_t());
  return q;
}

ModulusRing::Element ModulusRing::remainder_mod_uniformizer(const Element& x, int k) const {
  return truncate(x, k);
}

ModulusRing::Element ModulusRing::unit_inverse(const Element& x) const {
  mpz_class r;
  if (mpz_invert(r.get_mpz_t(), x.get_mpz_t(), modulus().get_mpz_t()) == 0)
    throw NotInvertible(x.get_str() + " is not a unit in " + descriptor());
  return r;
}

ModulusRing::Element ModulusRing::truncate(const Element& x, int k) const {
  if (k >= impl_->m) return x;
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), p_power(k).get_mpz_t());
  return r;
}

std::string ModulusRing::descriptor() const { return "Z/" + modulus().get_str(); }

ModulusRing::Element ModulusRing::parse(std::string_view text) const {
  return from_integer(detail::parse_integer(text));
}

ModulusRing::Element ModulusRing::random(std::mt19937_64& gen) const {
  return random_below(modulus(), gen);
}

std::vector<ModulusRing::Element> ModulusRing::elements() const {
  if (modulus() > 1'000'000) throw UnsupportedRing("ring too large to enumerate");
  std::vector<Element> out;
  for (mpz_class x = 0; x < modulus(); ++x) out.push_back(x);
  return out;
}

}  // namespace wedgecrys
