#include "wedgecrys/finite_field.hpp"

#include <cctype>
#include <string>

#include "wedgecrys/detail/unramified_arith.hpp"
#include "wedgecrys/error.hpp"
#include "wedgecrys/integers.hpp"
#include "wedgecrys/random.hpp"

namespace wedgecrys {

namespace detail {

std::vector<mpz_class> parse_coefficient_tuple(std::string_view text, int degree) {
  std::size_t begin = 0;
  while (begin < text.size() && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  std::size_t end = text.size();
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  text = text.substr(begin, end - begin);
  std::vector<mpz_class> out(static_cast<std::size_t>(degree), mpz_class(0));
  if (text.empty() || text.front() != '(') {
    out.at(0) = parse_integer(text);
    return out;
  }
  if (text.back() != ')') throw ParseError("unterminated tuple '" + std::string(text) + "'");
  std::string_view body = text.substr(1, text.size() - 2);
  std::size_t index = 0;
  while (true) {
    const auto comma = body.find(',');
    if (index >= out.size()) throw ParseError("too many coefficients in '" + std::string(text) + "'");
    out[index++] = parse_integer(body.substr(0, comma));
    if (comma == std::string_view::npos) break;
    body = body.substr(comma + 1);
  }
  return out;
}

std::string format_coefficient_tuple(const std::vector<mpz_class>& coeffs) {
  if (coeffs.size() == 1) return coeffs[0].get_str();
  std::string out = "(";
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i) out += ',';
    out += coeffs[i].get_str();
  }
  return out + ')';
}

}  // namespace detail

FiniteField::FiniteField(long p, int a) {
  if (!detail::is_prime(p)) throw NonPrime(std::to_string(p) + " is not prime");
  arith_ = std::make_shared<const detail::UnramifiedArith>(p, a, 1, detail::defining_polynomial(p, a));
}

long FiniteField::characteristic() const noexcept { return arith_->prime(); }
int FiniteField::degree() const noexcept { return arith_->degree(); }

mpz_class FiniteField::order() const {
  mpz_class q;
  mpz_ui_pow_ui(q.get_mpz_t(), static_cast<unsigned long>(characteristic()),
                static_cast<unsigned long>(degree()));
  return q;
}

const std::vector<long>& FiniteField::defining_polynomial() const noexcept { return arith_->defining(); }

FiniteField::Element FiniteField::zero() const { return {arith_->zero()}; }
FiniteField::Element FiniteField::one() const { return {arith_->constant(1)}; }
FiniteField::Element FiniteField::from_integer(long n) const { return {arith_->constant(n)}; }

FiniteField::Element FiniteField::from_coefficients(const std::vector<long>& coeffs) const {
  if (coeffs.size() > static_cast<std::size_t>(degree()))
    throw DimensionMismatch("too many coefficients for " + descriptor());
  detail::Coeffs c = arith_->zero();
  for (std::size_t i = 0; i < coeffs.size(); ++i) c[i] = coeffs[i];
  return {arith_->normalise(std::move(c))};
}

FiniteField::Element FiniteField::generator() const { return {arith_->generator()}; }
FiniteField::Element FiniteField::add(const Element& x, const Element& y) const { return {arith_->add(x.coeffs, y.coeffs)}; }
FiniteField::Element FiniteField::sub(const Element& x, const Element& y) const { return {arith_->sub(x.coeffs, y.coeffs)}; }
FiniteField::Element FiniteField::neg(const Element& x) const { return {arith_->neg(x.coeffs)}; }
FiniteField::Element FiniteField::mul(const Element& x, const Element& y) const { return {arith_->mul(x.coeffs, y.coeffs)}; }
FiniteField::Element FiniteField::pow(const Element& x, const mpz_class& e) const { return {arith_->pow(x.coeffs, e)}; }
bool FiniteField::is_zero(const Element& x) const { return arith_->is_zero(x.coeffs); }

FiniteField::Element FiniteField::inverse(const Element& x) const {
  if (is_zero(x)) throw NotInvertible("zero has no inverse in " + descriptor());
  return pow(x, order() - 2);
}

FiniteField::Element FiniteField::frobenius(const Element& x) const { return pow(x, characteristic()); }

std::string FiniteField::descriptor() const { return "F_" + order().get_str(); }

std::string FiniteField::format(const Element& x) const { return detail::format_coefficient_tuple(x.coeffs); }

FiniteField::Element FiniteField::parse(std::string_view text) const {
  return {arith_->normalise(detail::parse_coefficient_tuple(text, degree()))};
}

FiniteField::Element FiniteField::random(std::mt19937_64& gen) const {
  detail::Coeffs c = arith_->zero();
  const mpz_class p = characteristic();
  for (auto& v : c) v = random_below(p, gen);
  return {std::move(c)};
}

std::vector<FiniteField::Element> FiniteField::elements() const {
  if (order() > 1'000'000) throw UnsupportedRing("field too large to enumerate");
  std::vector<Element> out;
  const long p = characteristic();
  const long q = order().get_si();
  out.reserve(static_cast<std::size_t>(q));
  for (long n = 0; n < q; ++n) {
    detail::Coeffs c = arith_->zero();
    long rest = n;
    for (auto& v : c) {
      v = rest % p;
      rest /= p;
    }
    out.push_back({std::move(c)});
  }
  return out;
}

}  // namespace wedgecrys
