#include "wedgecrys/dieudonne.hpp"

#include <algorithm>
#include <numeric>
#include <regex>

#include "wedgecrys/chain_forms.hpp"
#include "wedgecrys/determinant.hpp"
#include "wedgecrys/detail/unramified_arith.hpp"
#include "wedgecrys/error.hpp"

namespace wedgecrys {

WMatrix frobenius_entries(const WMatrix& a, int k) {
  const WittRing& ring = a.ring();
  return map_entries(a, [&](const WittRing::Element& x) { return ring.frobenius_power(x, k); });
}

WVector frobenius_entries(const WittRing& ring, const WVector& v, int k) {
  WVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(ring.frobenius_power(x, k));
  return out;
}

// ---------------------------------------------------------------------------
// Descriptors and modules

GroupDescriptor GroupDescriptor::make(int h, int dim) {
  if (h < 0 || dim < 0 || dim > h)
    throw BadDescriptor("need 0 <= dim <= h, got h=" + std::to_string(h) + " dim=" + std::to_string(dim));
  return GroupDescriptor{h, dim};
}

GroupDescriptor GroupDescriptor::parse(const std::string& name) {
  if (name == "mu") return mu();
  if (name == "QpZp") return qpzp();
  static const std::regex lt(R"(LT_(\d{1,4}))");
  static const std::regex general(R"(G\((\d{1,4}),(\d{1,4})\))");
  std::smatch m;
  if (std::regex_match(name, m, lt)) return lubin_tate(std::stoi(m[1]));
  if (std::regex_match(name, m, general)) return make(std::stoi(m[1]), std::stoi(m[2]));
  throw BadDescriptor("unknown group descriptor '" + name + "'");
}

std::string GroupDescriptor::name() const {
  if (h == 1 && dim == 1) return "mu";
  if (h == 1 && dim == 0) return "QpZp";
  if (dim == 1) return "LT_" + std::to_string(h);
  return "G(" + std::to_string(h) + "," + std::to_string(dim) + ")";
}

DieudonneModule::DieudonneModule(WittRing ring, WMatrix mf, WMatrix mv)
    : ring_(std::move(ring)), mf_(std::move(mf)), mv_(std::move(mv)) {
  detail::require_same_ring(ring_, mf_.ring());
  detail::require_same_ring(ring_, mv_.ring());
  if (!mf_.is_square() || !mv_.is_square() || mf_.rows() != mv_.rows())
    throw DimensionMismatch("MF and MV must be square of the same size");
}

AxiomReport verify_axioms(const DieudonneModule& d) {
  const WittRing& ring = d.ring();
  const auto p_id = scale(WMatrix::identity(ring, d.rank()), ring.from_integer(ring.prime()));
  AxiomReport out;
  out.fv_ok = d.mf() * frobenius_entries(d.mv(), 1) == p_id;
  out.vf_ok = d.mv() * frobenius_entries(d.mf(), -1) == p_id;
  if (!out.fv_ok) out.diagnostic += "MF*phi(MV) != p*I; ";
  if (!out.vf_ok) out.diagnostic += "MV*phi^-1(MF) != p*I; ";
  if (!out.diagnostic.empty()) out.diagnostic.resize(out.diagnostic.size() - 2);
  return out;
}

DieudonneModule make_standard(const GroupDescriptor& desc, const WittRing& ring) {
  const auto checked = GroupDescriptor::make(desc.h, desc.dim);
  const int h = checked.h;
  WMatrix mf(ring, static_cast<std::size_t>(h), static_cast<std::size_t>(h));
  WMatrix mv = mf;
  if (h == 0) return DieudonneModule(ring, mf, mv);
  const int total = h - checked.dim;
  const int g = std::gcd(h, total);
  const int t = h / g;
  const int s = total / g;
  const auto one = ring.one();
  const auto p = ring.from_integer(ring.prime());
  for (int block = 0; block < g; ++block) {
    const auto base = static_cast<std::size_t>(block * t);
    for (int i = 0; i < t; ++i) {
      const bool heavy = i >= t - s;
      const auto col = base + static_cast<std::size_t>(i);
      const auto next = base + static_cast<std::size_t>((i + 1) % t);
      mf(next, col) = heavy ? p : one;
      mv(col, next) = heavy ? one : p;
    }
  }
  return DieudonneModule(ring, std::move(mf), std::move(mv));
}

DieudonneModule direct_sum(const DieudonneModule& a, const DieudonneModule& b) {
  detail::require_same_ring(a.ring(), b.ring());
  return DieudonneModule(a.ring(), block_diagonal(a.mf(), b.mf()), block_diagonal(a.mv(), b.mv()));
}

DieudonneModule conjugate(const DieudonneModule& d, const WMatrix& u) {
  const auto u_inv = inverse(u);
  return DieudonneModule(d.ring(), u * d.mf() * frobenius_entries(u_inv, 1),
                         u * d.mv() * frobenius_entries(u_inv, -1));
}

WMatrix random_unimodular(const WittRing& ring, std::size_t n, std::mt19937_64& gen) {
  while (true) {
    WMatrix u(ring, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) u(i, j) = ring.random(gen);
    if (ring.is_unit(determinant(u))) return u;
  }
}

WVector apply_F(const DieudonneModule& d, const WVector& v) { return d.mf() * frobenius_entries(d.ring(), v, 1); }
WVector apply_V(const DieudonneModule& d, const WVector& v) { return d.mv() * frobenius_entries(d.ring(), v, -1); }

// ---------------------------------------------------------------------------
// Isocrystals

Isocrystal::Isocrystal(WittRing ring, WMatrix m, int shift, int eff_precision)
    : ring_(std::move(ring)), m_(std::move(m)), shift_(shift), eff_precision_(eff_precision) {
  detail::require_same_ring(ring_, m_.ring());
  if (!m_.is_square()) throw DimensionMismatch("isocrystal matrix must be square");
  if (eff_precision_ < 0 || eff_precision_ > ring_.precision())
    throw BadDescriptor("effective precision must lie in 0..m");
}

Isocrystal Isocrystal::from_dieudonne(const DieudonneModule& d) {
  return Isocrystal(d.ring(), d.mf(), 0, d.ring().precision());
}

IsoVector apply_F(const Isocrystal& c, const WVector& v) {
  const WittRing& ring = c.ring();
  const int e = c.shift();
  const int eff = c.eff_precision();
  WVector w = c.matrix() * frobenius_entries(ring, v, 1);
  if (e < 0) {
    for (auto& x : w) x = ring.truncate(ring.mul(x, ring.uniformizer_power(-e)), eff);
    return {std::move(w), eff};
  }
  if (eff - e < 1) throw PrecisionExhausted("shift exceeds effective precision", e + 1);
  for (auto& x : w) {
    x = ring.truncate(x, eff);
    const Valuation v_x = ring.valuation(x);
    if (v_x.is_finite() && v_x.value() < e)
      throw PrecisionExhausted("F(v) is not divisible by p^" + std::to_string(e));
    x = ring.divide_by_uniformizer(x, e);
  }
  return {std::move(w), eff - e};
}

// ---------------------------------------------------------------------------
// Newton polygons and slopes

NewtonPolygon NewtonPolygon::from_slopes(std::vector<mpq_class> slopes) {
  std::sort(slopes.begin(), slopes.end());
  NewtonPolygon out;
  for (const auto& s : slopes) {
    if (!out.segments.empty() && out.segments.back().slope == s)
      ++out.segments.back().mult;
    else
      out.segments.push_back({s, 1});
  }
  return out;
}

std::vector<mpq_class> NewtonPolygon::multiset() const {
  std::vector<mpq_class> out;
  for (const auto& seg : segments) out.insert(out.end(), seg.mult, seg.slope);
  return out;
}

std::size_t NewtonPolygon::rank() const {
  std::size_t n = 0;
  for (const auto& seg : segments) n += seg.mult;
  return n;
}

mpq_class NewtonPolygon::total() const {
  mpq_class t = 0;
  for (const auto& seg : segments) t += seg.slope * static_cast<long>(seg.mult);
  return t;
}

std::string NewtonPolygon::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < segments.size(); ++i) {
    if (i) out += ", ";
    out += segments[i].slope.get_str() + " x" + std::to_string(segments[i].mult);
  }
  return out + "}";
}

NewtonPolygon newton_polygon(const std::vector<Valuation>& vals, int precision) {
  if (vals.empty() || vals.front() != Valuation(0)) throw Error("leading coefficient must be a unit");
  const std::size_t n = vals.size() - 1;
  if (vals.back().is_bottom())
    throw PrecisionExhausted("constant coefficient vanishes at precision " + std::to_string(precision),
                             precision + 1);
  // Lower convex hull of the finite points, left to right.
  std::vector<std::pair<long, long>> hull;
  for (std::size_t k = 0; k <= n; ++k) {
    if (vals[k].is_bottom()) continue;
    const std::pair<long, long> pt{static_cast<long>(k), vals[k].value()};
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull.back();
      // Drop b when it lies on or above the segment a -> pt.
      const long cross = (b.first - a.first) * (pt.second - a.second) - (b.second - a.second) * (pt.first - a.first);
      if (cross <= 0)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(pt);
  }
  // A vanishing coefficient only tells us v >= precision; that is harmless
  // exactly when the hull already passes at or below that height.
  for (std::size_t k = 0; k <= n; ++k) {
    if (!vals[k].is_bottom()) continue;
    const auto kk = static_cast<long>(k);
    auto it = std::find_if(hull.begin(), hull.end(), [&](const auto& pt) { return pt.first > kk; });
    const auto& right = *it;
    const auto& left = *(it - 1);
    const mpq_class height =
        mpq_class(left.second) + mpq_class(right.second - left.second, right.first - left.first) * (kk - left.first);
    if (height > precision)
      throw PrecisionExhausted("coefficient " + std::to_string(k) + " vanishes below the Newton polygon at precision " +
                               std::to_string(precision));
  }
  NewtonPolygon out;
  for (std::size_t i = 1; i < hull.size(); ++i) {
    const long len = hull[i].first - hull[i - 1].first;
    mpq_class slope(hull[i].second - hull[i - 1].second, len);
    slope.canonicalize();
    if (!out.segments.empty() && out.segments.back().slope == slope)
      out.segments.back().mult += static_cast<std::size_t>(len);
    else
      out.segments.push_back({slope, static_cast<std::size_t>(len)});
  }
  return out;
}

WMatrix twisted_product(const WMatrix& m) {
  WMatrix out = m;
  for (int k = 1; k < m.ring().degree(); ++k) out = out * frobenius_entries(m, k);
  return out;
}

NewtonPolygon slopes(const Isocrystal& c) {
  const WittRing& ring = c.ring();
  const int n = static_cast<int>(c.rank());
  const int a = ring.degree();
  const int eff = c.eff_precision();
  if (eff <= n * a)
    throw PrecisionExhausted("slopes need precision above " + std::to_string(n * a), n * a + 1);
  if (n == 0) return {};
  const auto coeffs = charpoly_berkowitz(twisted_product(c.matrix()));
  std::vector<Valuation> vals;
  vals.reserve(coeffs.size());
  for (const auto& x : coeffs) {
    const Valuation v = ring.valuation(x);
    vals.push_back(v.is_finite() && v.value() < eff ? v : Valuation::bottom());
  }
  NewtonPolygon poly = newton_polygon(vals, eff);
  for (auto& seg : poly.segments) {
    seg.slope = seg.slope / a - c.shift();
    seg.slope.canonicalize();
  }
  return poly;
}

NewtonPolygon slopes(const DieudonneModule& d) { return slopes(Isocrystal::from_dieudonne(d)); }

int det_valuation(const WMatrix& m, int precision) {
  int sum = 0;
  for (const Valuation v : smith_valuations(m)) {
    if (v.is_bottom() || v.value() >= precision)
      throw PrecisionExhausted("determinant vanishes at precision " + std::to_string(precision), precision + 1);
    sum += v.value();
  }
  // Each Smith entry is known exactly, so the sum may exceed the precision.
  return sum;
}

int dimension(const DieudonneModule& d) {
  return static_cast<int>(d.rank()) - det_valuation(d.mf(), d.ring().precision());
}

// ---------------------------------------------------------------------------
// Eigenspaces

std::vector<mpz_class> to_coordinates(const WittRing&, const WVector& v) {
  std::vector<mpz_class> out;
  for (const auto& x : v) out.insert(out.end(), x.coeffs.begin(), x.coeffs.end());
  return out;
}

WVector from_coordinates(const WittRing& ring, const std::vector<mpz_class>& coords) {
  const auto a = static_cast<std::size_t>(ring.degree());
  if (coords.size() % a != 0) throw DimensionMismatch("coordinate count is not a multiple of the degree");
  WVector out;
  for (std::size_t j = 0; j < coords.size(); j += a) {
    WittRing::Element x{std::vector<mpz_class>(coords.begin() + static_cast<std::ptrdiff_t>(j),
                                               coords.begin() + static_cast<std::ptrdiff_t>(j + a))};
    out.push_back(std::move(x));
  }
  return out;
}

Matrix<ModulusRing> linearised_operator(const WMatrix& m, int k, int precision) {
  const WittRing& ring = m.ring();
  const std::size_t n = m.rows();
  const auto a = static_cast<std::size_t>(ring.degree());
  ModulusRing z(ring.prime(), precision);
  Matrix<ModulusRing> out(z, n * a, n * a);
  const auto pk = ring.uniformizer_power(k);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t s = 0; s < a; ++s) {
      WittRing::Element basis = ring.zero();
      basis.coeffs[s] = 1;
      const auto phi_basis = ring.frobenius(basis);
      for (std::size_t i = 0; i < n; ++i) {
        auto image = ring.mul(m(i, j), phi_basis);
        if (i == j) image = ring.sub(image, ring.mul(pk, basis));
        for (std::size_t t = 0; t < a; ++t) out(i * a + t, j * a + s) = z.from_integer(image.coeffs[t]);
      }
    }
  return out;
}

std::size_t Eigenspace::free_rank() const {
  return static_cast<std::size_t>(std::count(invariants.begin(), invariants.end(), 0));
}

Eigenspace eigenspace(const Isocrystal& c, int exponent) {
  const WittRing& ring = c.ring();
  const int k = exponent + c.shift();
  if (exponent < 0 || k < 0) throw BadDescriptor("eigenvalue exponent must be non-negative");
  const int eff = c.eff_precision();
  const int reduced = eff - k;
  if (reduced < 1) throw PrecisionExhausted("eigenspace needs precision above " + std::to_string(k), k + 1);

  Eigenspace out;
  out.precision = reduced;
  const auto ker = kernel(linearised_operator(c.matrix(), k, eff));
  for (std::size_t i = 0; i < ker.rows(); ++i) out.raw.push_back(from_coordinates(ring, ker.row(i)));

  ModulusRing z(ring.prime(), reduced);
  Matrix<ModulusRing> red(z, ker.rows(), ker.cols());
  for (std::size_t i = 0; i < ker.rows(); ++i)
    for (std::size_t j = 0; j < ker.cols(); ++j) red(i, j) = z.from_integer(ker(i, j));
  const auto h = howell_form(red);
  for (std::size_t i = 0; i < h.rows(); ++i) {
    const auto row = h.row(i);
    out.basis.push_back(from_coordinates(ring, row));
    for (const auto& x : row)
      if (x != 0) {
        out.pivot_valuations.push_back(z.valuation(x).value());
        break;
      }
  }
  for (const auto& v : smith_valuations(h))
    if (v.is_finite()) out.invariants.push_back(v.value());
  return out;
}

Eigenspace eigenspace(const DieudonneModule& d, int exponent) {
  return eigenspace(Isocrystal::from_dieudonne(d), exponent);
}

}  // namespace wedgecrys
