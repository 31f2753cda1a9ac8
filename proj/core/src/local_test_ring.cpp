#include "wedgecrys/local_test_ring.hpp"

#include <string>

#include "wedgecrys/error.hpp"

namespace wedgecrys {

LocalTestRing::LocalTestRing(FiniteField base, int e) : base_(std::move(base)), e_(e) {
  if (e < 1) throw BadDescriptor("nilpotency exponent must be at least 1");
}

LocalTestRing::Element LocalTestRing::zero() const {
  return {std::vector<FiniteField::Element>(static_cast<std::size_t>(e_), base_.zero())};
}

LocalTestRing::Element LocalTestRing::one() const { return from_residue(base_.one()); }
LocalTestRing::Element LocalTestRing::from_integer(long n) const { return from_residue(base_.from_integer(n)); }

LocalTestRing::Element LocalTestRing::from_residue(const FiniteField::Element& u) const {
  Element out = zero();
  out.coeffs[0] = u;
  return out;
}

LocalTestRing::Element LocalTestRing::add(const Element& x, const Element& y) const {
  Element out = zero();
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] = base_.add(x.coeffs[i], y.coeffs[i]);
  return out;
}

LocalTestRing::Element LocalTestRing::sub(const Element& x, const Element& y) const {
  Element out = zero();
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] = base_.sub(x.coeffs[i], y.coeffs[i]);
  return out;
}

LocalTestRing::Element LocalTestRing::neg(const Element& x) const {
  Element out = zero();
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] = base_.neg(x.coeffs[i]);
  return out;
}

LocalTestRing::Element LocalTestRing::mul(const Element& x, const Element& y) const {
  Element out = zero();
  const auto e = static_cast<std::size_t>(e_);
  for (std::size_t i = 0; i < e; ++i) {
    if (base_.is_zero(x.coeffs[i])) continue;
    for (std::size_t j = 0; i + j < e; ++j)
      out.coeffs[i + j] = base_.add(out.coeffs[i + j], base_.mul(x.coeffs[i], y.coeffs[j]));
  }
  return out;
}

bool LocalTestRing::is_zero(const Element& x) const {
  for (const auto& c : x.coeffs)
    if (!base_.is_zero(c)) return false;
  return true;
}

bool LocalTestRing::is_unit(const Element& x) const { return !base_.is_zero(x.coeffs[0]); }
bool LocalTestRing::in_maximal_ideal(const Element& x) const { return base_.is_zero(x.coeffs[0]); }

Valuation LocalTestRing::valuation(const Element& x) const {
  for (int i = 0; i < e_; ++i)
    if (!base_.is_zero(x.coeffs[static_cast<std::size_t>(i)])) return Valuation(i);
  return Valuation::bottom();
}

LocalTestRing::Element LocalTestRing::uniformizer_power(int k) const {
  Element out = zero();
  if (k < e_) out.coeffs[static_cast<std::size_t>(k)] = base_.one();
  return out;
}

LocalTestRing::Element LocalTestRing::divide_by_uniformizer(const Element& x, int k) const {
  Element out = zero();
  for (int i = k; i < e_; ++i) out.coeffs[static_cast<std::size_t>(i - k)] = x.coeffs[static_cast<std::size_t>(i)];
  return out;
}

LocalTestRing::Element LocalTestRing::remainder_mod_uniformizer(const Element& x, int k) const {
  Element out = x;
  for (int i = k; i < e_; ++i) out.coeffs[static_cast<std::size_t>(i)] = base_.zero();
  return out;
}

LocalTestRing::Element LocalTestRing::unit_inverse(const Element& x) const {
  if (!is_unit(x)) throw NotInvertible(format(x) + " is not a unit in " + descriptor());
  // Solve x * y = 1 coefficient by coefficient.
  const auto e = static_cast<std::size_t>(e_);
  const FiniteField::Element inv0 = base_.inverse(x.coeffs[0]);
  Element y = zero();
  y.coeffs[0] = inv0;
  for (std::size_t n = 1; n < e; ++n) {
    FiniteField::Element acc = base_.zero();
    for (std::size_t i = 1; i <= n; ++i) acc = base_.add(acc, base_.mul(x.coeffs[i], y.coeffs[n - i]));
    y.coeffs[n] = base_.neg(base_.mul(inv0, acc));
  }
  return y;
}

std::string LocalTestRing::descriptor() const {
  return base_.descriptor() + "[t]/(t^" + std::to_string(e_) + ")";
}

std::string LocalTestRing::format(const Element& x) const {
  std::string out = "(";
  for (std::size_t i = 0; i < x.coeffs.size(); ++i) {
    if (i) out += ',';
    out += base_.format(x.coeffs[i]);
  }
  return out + ')';
}

LocalTestRing::Element LocalTestRing::parse(std::string_view text) const {
  // Split the outer tuple at top-level commas; residue entries may be tuples.
  std::size_t begin = text.find_first_not_of(" \t\n");
  std::size_t end = text.find_last_not_of(" \t\n");
  if (begin == std::string_view::npos) throw ParseError("empty element");
  text = text.substr(begin, end - begin + 1);
  if (text.front() != '(' || text.back() != ')') return from_residue(base_.parse(text));
  Element out = zero();
  std::string_view body = text.substr(1, text.size() - 2);
  std::size_t index = 0, depth = 0, start = 0;
  for (std::size_t i = 0; i <= body.size(); ++i) {
    if (i < body.size() && body[i] == '(') ++depth;
    if (i < body.size() && body[i] == ')') --depth;
    if (i == body.size() || (body[i] == ',' && depth == 0)) {
      if (index >= out.coeffs.size()) throw ParseError("too many coefficients in '" + std::string(text) + "'");
      out.coeffs[index++] = base_.parse(body.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

LocalTestRing::Element LocalTestRing::random(std::mt19937_64& gen) const {
  Element out = zero();
  for (auto& c : out.coeffs) c = base_.random(gen);
  return out;
}

std::vector<LocalTestRing::Element> LocalTestRing::elements() const {
  const auto field = base_.elements();
  const std::size_t q = field.size();
  std::size_t total = 1;
  for (int i = 0; i < e_; ++i) {
    total *= q;
    if (total > 1'000'000) throw UnsupportedRing("ring too large to enumerate");
  }
  std::vector<Element> out;
  out.reserve(total);
  for (std::size_t n = 0; n < total; ++n) {
    Element x = zero();
    std::size_t rest = n;
    for (auto& c : x.coeffs) {
      c = field[rest % q];
      rest /= q;
    }
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace wedgecrys
