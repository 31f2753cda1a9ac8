#include "wedgecrys/witt_ring.hpp"

#include <string>

#include "wedgecrys/detail/unramified_arith.hpp"
#include "wedgecrys/error.hpp"
#include "wedgecrys/random.hpp"

namespace wedgecrys {

using detail::Coeffs;

struct WittRing::Impl {
  FiniteField residue;
  detail::UnramifiedArith arith;
  Element frobenius_root;
  // images[k][i] = phi^k(x^i) for k = 0 .. a-1.
  std::vector<std::vector<Coeffs>> images;

  Impl(long p, int a, int m) : residue(p, a), arith(p, a, m, residue.defining_polynomial()) {}
};

namespace {

Coeffs evaluate_defining(const detail::UnramifiedArith& ar, const Coeffs& y) {
  const auto& f = ar.defining();
  Coeffs acc = ar.zero();
  for (std::size_t i = f.size(); i-- > 0;) acc = ar.add(ar.mul(acc, y), ar.constant(f[i]));
  return acc;
}

Coeffs evaluate_derivative(const detail::UnramifiedArith& ar, const Coeffs& y) {
  const auto& f = ar.defining();
  Coeffs acc = ar.zero();
  for (std::size_t i = f.size(); i-- > 1;)
    acc = ar.add(ar.mul(acc, y), ar.constant(mpz_class(f[i]) * static_cast<long>(i)));
  return acc;
}

// Inverse of a unit u: invert the residue, then Newton iteration z <- z(2 - uz).
Coeffs unit_inverse_impl(const detail::UnramifiedArith& ar, const FiniteField& k, const Coeffs& u) {
  FiniteField::Element residue;
  residue.coeffs.reserve(u.size());
  for (const auto& c : u) residue.coeffs.emplace_back(c % ar.prime());
  if (k.is_zero(residue)) throw NotInvertible("element is not a unit");
  Coeffs z = k.inverse(residue).coeffs;
  const Coeffs two = ar.constant(2);
  for (int correct = 1; correct < ar.precision(); correct *= 2) z = ar.mul(z, ar.sub(two, ar.mul(u, z)));
  return z;
}

Coeffs combine(const detail::UnramifiedArith& ar, const std::vector<Coeffs>& basis_images, const Coeffs& x) {
  Coeffs out = ar.zero();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += x[i] * basis_images[i][j];
  }
  return ar.normalise(std::move(out));
}

}  // namespace

WittRing::WittRing(long p, int a, int m) {
  if (p == 2) throw NonPrime("p = 2 is not supported for Witt rings");
  if (!detail::is_prime(p)) throw NonPrime(std::to_string(p) + " is not prime");
  if (a < 1) throw BadDescriptor("extension degree must be at least 1");
  if (m < 1) throw BadDescriptor("precision must be at least 1");
  auto impl = std::make_shared<Impl>(p, a, m);
  const auto& ar = impl->arith;

  // Newton iteration for the root of f^ lifting x^p; precision doubles each step.
  Coeffs y = ar.pow(ar.generator(), p);
  for (int correct = 1; correct < m; correct *= 2) {
    const Coeffs inv = unit_inverse_impl(ar, impl->residue, evaluate_derivative(ar, y));
    y = ar.sub(y, ar.mul(evaluate_defining(ar, y), inv));
  }
  if (!ar.is_zero(evaluate_defining(ar, y))) throw Error("Frobenius lift did not converge");
  impl->frobenius_root = {y};

  impl->images.resize(static_cast<std::size_t>(a));
  Coeffs root = ar.generator();
  for (int k = 0; k < a; ++k) {
    auto& img = impl->images[static_cast<std::size_t>(k)];
    Coeffs power = ar.constant(1);
    for (int i = 0; i < a; ++i) {
      img.push_back(power);
      power = ar.mul(power, root);
    }
    // phi^{k+1}(x) = phi^k(phi(x)) = sum_i y_i phi^k(x^i).
    root = combine(ar, img, y);
  }
  impl_ = std::move(impl);
}

WittRing make_witt_ring(long p, int a, int m) { return WittRing(p, a, m); }

long WittRing::prime() const noexcept { return impl_->arith.prime(); }
int WittRing::degree() const noexcept { return impl_->arith.degree(); }
int WittRing::precision() const noexcept { return impl_->arith.precision(); }
const mpz_class& WittRing::modulus() const noexcept { return impl_->arith.modulus(); }
const FiniteField& WittRing::residue_field() const noexcept { return impl_->residue; }
const detail::UnramifiedArith& WittRing::arithmetic() const noexcept { return impl_->arith; }
const WittRing::Element& WittRing::frobenius_root() const noexcept { return impl_->frobenius_root; }

WittRing WittRing::with_precision(int m) const { return WittRing(prime(), degree(), m); }

WittRing::Element WittRing::zero() const { return {impl_->arith.zero()}; }
WittRing::Element WittRing::one() const { return {impl_->arith.constant(1)}; }
WittRing::Element WittRing::from_integer(long n) const { return {impl_->arith.constant(n)}; }
WittRing::Element WittRing::from_integer(const mpz_class& n) const { return {impl_->arith.constant(n)}; }
WittRing::Element WittRing::generator() const { return {impl_->arith.generator()}; }
WittRing::Element WittRing::add(const Element& x, const Element& y) const { return {impl_->arith.add(x.coeffs, y.coeffs)}; }
WittRing::Element WittRing::sub(const Element& x, const Element& y) const { return {impl_->arith.sub(x.coeffs, y.coeffs)}; }
WittRing::Element WittRing::neg(const Element& x) const { return {impl_->arith.neg(x.coeffs)}; }
WittRing::Element WittRing::mul(const Element& x, const Element& y) const { return {impl_->arith.mul(x.coeffs, y.coeffs)}; }
WittRing::Element WittRing::scale(const Element& x, const mpz_class& c) const { return {impl_->arith.scale(x.coeffs, c)}; }
WittRing::Element WittRing::pow(const Element& x, const mpz_class& e) const { return {impl_->arith.pow(x.coeffs, e)}; }
bool WittRing::is_zero(const Element& x) const { return impl_->arith.is_zero(x.coeffs); }

bool WittRing::is_unit(const Element& x) const {
  for (const auto& c : x.coeffs)
    if (!mpz_divisible_ui_p(c.get_mpz_t(), static_cast<unsigned long>(prime()))) return true;
  return false;
}

Valuation WittRing::valuation(const Element& x) const { return impl_->arith.valuation(x.coeffs); }

WittRing::Element WittRing::uniformizer_power(int k) const {
  if (k >= precision()) return zero();
  return {impl_->arith.constant(impl_->arith.p_power(k))};
}

WittRing::Element WittRing::divide_by_uniformizer(const Element& x, int k) const {
  Element out = x;
  const mpz_class& d = impl_->arith.p_power(k);
  for (auto& c : out.coeffs) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
  return out;
}

WittRing::Element WittRing::remainder_mod_uniformizer(const Element& x, int k) const { return truncate(x, k); }

WittRing::Element WittRing::unit_inverse(const Element& x) const {
  return {unit_inverse_impl(impl_->arith, impl_->residue, x.coeffs)};
}

WittRing::Element WittRing::truncate(const Element& x, int k) const {
  if (k >= precision()) return x;
  Element out = x;
  const mpz_class& d = impl_->arith.p_power(k);
  for (auto& c : out.coeffs) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
  return out;
}

bool WittRing::equal_mod(const Element& x, const Element& y, int k) const {
  return truncate(sub(x, y), k) == zero();
}

WittRing::Element WittRing::frobenius(const Element& x) const { return frobenius_power(x, 1); }
WittRing::Element WittRing::frobenius_inverse(const Element& x) const { return frobenius_power(x, -1); }

WittRing::Element WittRing::frobenius_power(const Element& x, int k) const {
  const int a = degree();
  const int r = ((k % a) + a) % a;
  if (r == 0) return x;
  return {combine(impl_->arith, impl_->images[static_cast<std::size_t>(r)], x.coeffs)};
}

WittRing::Element WittRing::teichmuller(const FiniteField::Element& u) const {
  const mpz_class q = residue_field().order();
  Element z = lift(u);
  for (int i = 0; i <= precision(); ++i) {
    Element next = pow(z, q);
    if (next == z) return z;
    z = std::move(next);
  }
  return z;
}

FiniteField::Element WittRing::reduce(const Element& x) const {
  FiniteField::Element out;
  out.coeffs.reserve(x.coeffs.size());
  for (const auto& c : x.coeffs) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(prime()));
    out.coeffs.push_back(r);
  }
  return out;
}

WittRing::Element WittRing::lift(const FiniteField::Element& u) const { return {impl_->arith.normalise(u.coeffs)}; }

std::vector<mpz_class> WittRing::multiplication_matrix(const Element& x) const {
  const auto a = static_cast<std::size_t>(degree());
  std::vector<mpz_class> out(a * a);
  Coeffs basis = impl_->arith.constant(1);
  const Coeffs gen = impl_->arith.generator();
  for (std::size_t j = 0; j < a; ++j) {
    const Coeffs col = impl_->arith.mul(x.coeffs, basis);
    for (std::size_t i = 0; i < a; ++i) out[i * a + j] = col[i];
    basis = impl_->arith.mul(basis, gen);
  }
  return out;
}

std::vector<mpz_class> WittRing::frobenius_matrix() const {
  const auto a = static_cast<std::size_t>(degree());
  std::vector<mpz_class> out(a * a);
  const auto& img = impl_->images[a == 1 ? 0 : 1];
  for (std::size_t j = 0; j < a; ++j)
    for (std::size_t i = 0; i < a; ++i) out[i * a + j] = img[j][i];
  return out;
}

std::string WittRing::descriptor() const {
  return "W(" + residue_field().descriptor() + ")/" + std::to_string(prime()) + "^" + std::to_string(precision());
}

std::string WittRing::format(const Element& x) const { return detail::format_coefficient_tuple(x.coeffs); }

WittRing::Element WittRing::parse(std::string_view text) const {
  return {impl_->arith.normalise(detail::parse_coefficient_tuple(text, degree()))};
}

WittRing::Element WittRing::random(std::mt19937_64& gen) const {
  Element out = zero();
  for (auto& c : out.coeffs) c = random_below(modulus(), gen);
  return out;
}

std::vector<WittRing::Element> WittRing::elements() const {
  mpz_class total;
  mpz_pow_ui(total.get_mpz_t(), modulus().get_mpz_t(), static_cast<unsigned long>(degree()));
  if (total > 1'000'000) throw UnsupportedRing("ring too large to enumerate");
  const long n = total.get_si();
  std::vector<Element> out;
  out.reserve(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) {
    Element e = zero();
    mpz_class rest = i;
    for (auto& c : e.coeffs) {
      c = rest % modulus();
      rest /= modulus();
    }
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace wedgecrys
