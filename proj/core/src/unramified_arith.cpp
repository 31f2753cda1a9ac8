#include "wedgecrys/detail/unramified_arith.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "wedgecrys/error.hpp"

namespace wedgecrys::detail {

namespace {

using SmallPoly = std::vector<long>;  // coefficients mod p, lowest first

long mod_p(long v, long p) {
  long r = v % p;
  return r < 0 ? r + p : r;
}

void trim(SmallPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

long inverse_mod_p(long a, long p) {
  // p is prime, so a^(p-2) works, but the extended gcd is cheaper.
  long t = 0, new_t = 1, r = p, new_r = mod_p(a, p);
  while (new_r != 0) {
    long q = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
  }
  return mod_p(t, p);
}

SmallPoly poly_mod(SmallPoly a, const SmallPoly& f, long p) {
  trim(a);
  const long lead_inv = inverse_mod_p(f.back(), p);
  const std::size_t df = f.size() - 1;
  while (a.size() >= f.size()) {
    const long c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - 1 - df;
    for (std::size_t i = 0; i <= df; ++i) a[shift + i] = mod_p(a[shift + i] - c * f[i] % p, p);
    trim(a);
  }
  return a;
}

SmallPoly poly_mulmod(const SmallPoly& a, const SmallPoly& b, const SmallPoly& f, long p) {
  if (a.empty() || b.empty()) return {};
  SmallPoly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  return poly_mod(std::move(prod), f, p);
}

SmallPoly poly_powmod(SmallPoly base, long e, const SmallPoly& f, long p) {
  SmallPoly acc{1};
  base = poly_mod(std::move(base), f, p);
  while (e > 0) {
    if (e & 1) acc = poly_mulmod(acc, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1;
  }
  return acc;
}

SmallPoly poly_gcd(SmallPoly a, SmallPoly b, long p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    SmallPoly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Conway polynomials, lowest coefficient first.
const std::map<std::pair<long, int>, SmallPoly>& conway_table() {
  static const std::map<std::pair<long, int>, SmallPoly> table = {
      {{3, 1}, {1, 1}},          {{3, 2}, {2, 2, 1}},       {{3, 3}, {1, 2, 0, 1}},
      {{3, 4}, {2, 0, 0, 2, 1}}, {{5, 1}, {3, 1}},          {{5, 2}, {2, 4, 1}},
      {{5, 3}, {3, 3, 0, 1}},    {{5, 4}, {2, 4, 4, 0, 1}}, {{7, 1}, {4, 1}},
      {{7, 2}, {3, 6, 1}},       {{7, 3}, {4, 0, 6, 1}},    {{7, 4}, {3, 4, 5, 0, 1}},
  };
  return table;
}

}  // namespace

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_irreducible_mod_p(const std::vector<long>& poly, long p) {
  SmallPoly f;
  f.reserve(poly.size());
  for (long c : poly) f.push_back(mod_p(c, p));
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t degree = f.size() - 1;
  if (degree == 1) return true;
  SmallPoly h{0, 1};
  for (std::size_t i = 1; i <= degree / 2; ++i) {
    h = poly_powmod(h, p, f, p);
    SmallPoly diff = h;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = mod_p(diff[1] - 1, p);
    trim(diff);
    if (diff.empty()) return false;
    if (poly_gcd(f, diff, p).size() > 1) return false;
  }
  return true;
}

std::vector<long> defining_polynomial(long p, int a) {
  if (a < 1) throw BadDescriptor("extension degree must be at least 1");
  if (auto it = conway_table().find({p, a}); it != conway_table().end()) return it->second;
  // Enumerate (c_{a-1}, ..., c_0) as a base-p counter, most significant first.
  std::vector<long> digits(static_cast<std::size_t>(a), 0);
  while (true) {
    std::vector<long> poly(static_cast<std::size_t>(a) + 1, 0);
    for (int i = 0; i < a; ++i) poly[static_cast<std::size_t>(i)] = digits[static_cast<std::size_t>(a - 1 - i)];
    poly.back() = 1;
    if (is_irreducible_mod_p(poly, p)) return poly;
    int pos = a - 1;
    while (pos >= 0 && ++digits[static_cast<std::size_t>(pos)] == p) digits[static_cast<std::size_t>(pos--)] = 0;
    if (pos < 0) break;
  }
  // Unreachable: irreducible polynomials of every degree exist over F_p.
  throw Error("no irreducible polynomial found");
}

UnramifiedArith::UnramifiedArith(long p, int a, int m, std::vector<long> defining)
    : p_(p), a_(a), m_(m), defining_(std::move(defining)) {
  if (a_ < 1 || m_ < 1) throw BadDescriptor("degree and precision must be positive");
  if (defining_.size() != static_cast<std::size_t>(a_) + 1 || defining_.back() != 1)
    throw BadDescriptor("defining polynomial must be monic of the stated degree");
  powers_.reserve(static_cast<std::size_t>(m_) + 1);
  mpz_class power = 1;
  for (int k = 0; k <= m_; ++k) {
    powers_.push_back(power);
    power *= p_;
  }
  modulus_ = powers_.back();
  tail_.reserve(static_cast<std::size_t>(a_));
  for (int i = 0; i < a_; ++i) tail_.emplace_back(defining_[static_cast<std::size_t>(i)]);
}

Coeffs UnramifiedArith::normalise(Coeffs x) const {
  for (auto& c : x) {
    c %= modulus_;
    if (c < 0) c += modulus_;
  }
  return x;
}

Coeffs UnramifiedArith::constant(const mpz_class& c) const {
  Coeffs out = zero();
  out[0] = c;
  return normalise(std::move(out));
}

Coeffs UnramifiedArith::generator() const {
  if (a_ == 1) return constant(-mpz_class(defining_[0]));
  Coeffs out = zero();
  out[1] = 1;
  return out;
}

Coeffs UnramifiedArith::add(const Coeffs& x, const Coeffs& y) const {
  Coeffs out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    out[i] = x[i] + y[i];
    if (out[i] >= modulus_) out[i] -= modulus_;
  }
  return out;
}

Coeffs UnramifiedArith::sub(const Coeffs& x, const Coeffs& y) const {
  Coeffs out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    out[i] = x[i] - y[i];
    if (out[i] < 0) out[i] += modulus_;
  }
  return out;
}

Coeffs UnramifiedArith::neg(const Coeffs& x) const {
  Coeffs out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] == 0 ? mpz_class(0) : mpz_class(modulus_ - x[i]);
  return out;
}

Coeffs UnramifiedArith::mul(const Coeffs& x, const Coeffs& y) const {
  const std::size_t a = static_cast<std::size_t>(a_);
  if (a == 1) return {mpz_class((x[0] * y[0]) % modulus_)};
  std::vector<mpz_class> prod(2 * a - 1, mpz_class(0));
  for (std::size_t i = 0; i < a; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < a; ++j) prod[i + j] += x[i] * y[j];
  }
  for (std::size_t k = 2 * a - 2; k >= a; --k) {
    if (prod[k] == 0) continue;
    prod[k] %= modulus_;
    for (std::size_t i = 0; i < a; ++i)
      if (tail_[i] != 0) prod[k - a + i] -= prod[k] * tail_[i];
  }
  prod.resize(a);
  return normalise(std::move(prod));
}

Coeffs UnramifiedArith::scale(const Coeffs& x, const mpz_class& c) const {
  Coeffs out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] * c;
  return normalise(std::move(out));
}

Coeffs UnramifiedArith::pow(Coeffs base, mpz_class exponent) const {
  Coeffs acc = constant(1);
  while (exponent > 0) {
    if (mpz_odd_p(exponent.get_mpz_t())) acc = mul(acc, base);
    exponent >>= 1;
    if (exponent > 0) base = mul(base, base);
  }
  return acc;
}

bool UnramifiedArith::is_zero(const Coeffs& x) const {
  return std::all_of(x.begin(), x.end(), [](const mpz_class& c) { return c == 0; });
}

Valuation UnramifiedArith::valuation(const Coeffs& x) const {
  int best = m_;
  for (const auto& c : x) {
    if (c == 0) continue;
    int v = 0;
    while (v < best && mpz_divisible_p(c.get_mpz_t(), powers_[static_cast<std::size_t>(v) + 1].get_mpz_t())) ++v;
    best = std::min(best, v);
  }
  return best >= m_ ? Valuation::bottom() : Valuation(best);
}

}  // namespace wedgecrys::detail
