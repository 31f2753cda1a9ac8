#include "wedgecrys/wedge_crystal.hpp"

#include <algorithm>

#include "wedgecrys/compound.hpp"
#include "wedgecrys/error.hpp"
#include "wedgecrys/random.hpp"
#include "wedgecrys/subsets.hpp"

namespace wedgecrys {

namespace {

void check_order(std::size_t r, std::size_t n) {
  if (r < 1 || r > n)
    throw DimensionMismatch("wedge order " + std::to_string(r) + " outside 1.." + std::to_string(n));
}

WittRing::Element move_to(const WittRing& from, const WittRing& to, const WittRing::Element& x) {
  return {from.truncate(x, to.precision()).coeffs};
}

}  // namespace

Isocrystal wedge_isocrystal(const Isocrystal& c, std::size_t r) {
  check_order(r, c.rank());
  if (r == 1) return c;
  const int ri = static_cast<int>(r);
  return Isocrystal(c.ring(), compound(c.matrix(), r), ri * c.shift() + (ri - 1), c.eff_precision());
}

Isocrystal wedge_isocrystal(const DieudonneModule& d, std::size_t r) {
  return wedge_isocrystal(Isocrystal::from_dieudonne(d), r);
}

std::optional<DieudonneModule> wedge_dieudonne(const DieudonneModule& d, std::size_t r) {
  check_order(r, d.rank());
  const WittRing& ring = d.ring();
  const int loss = static_cast<int>(r) - 1;
  const int m = ring.precision() - loss;
  if (m < 1) throw PrecisionExhausted("wedge Dieudonne module needs precision above " + std::to_string(loss), loss + 1);
  const auto mf = compound(d.mf(), r);
  const auto mv = compound(d.mv(), r);
  for (const auto& x : mf.entries()) {
    const Valuation v = ring.valuation(x);
    if (v.is_finite() && v.value() < loss) return std::nullopt;
  }
  const WittRing target = ring.with_precision(m);
  WMatrix f(target, mf.rows(), mf.cols()), v(target, mv.rows(), mv.cols());
  for (std::size_t i = 0; i < mf.rows(); ++i)
    for (std::size_t j = 0; j < mf.cols(); ++j) {
      f(i, j) = move_to(ring, target, ring.divide_by_uniformizer(mf(i, j), loss));
      v(i, j) = move_to(ring, target, mv(i, j));
    }
  return DieudonneModule(target, std::move(f), std::move(v));
}

CompatReport multilinear_compat_check(const DieudonneModule& d, std::size_t r, std::size_t trials,
                                      std::uint64_t seed, bool wrong_shift) {
  check_order(r, d.rank());
  const WittRing& ring = d.ring();
  const std::size_t h = d.rank();
  const auto mf_w = compound(d.mf(), r);
  const auto p_shift = ring.uniformizer_power(wrong_shift ? 0 : static_cast<int>(r) - 1);
  CompatReport out;
  out.trials = trials;
  for (std::size_t t = 0; t < trials; ++t) {
    auto gen = trial_engine(seed, t);
    std::vector<WVector> xs(r);
    for (auto& x : xs) {
      x.resize(h);
      for (auto& e : x) e = ring.random(gen);
    }
    std::vector<WVector> vx, fx;
    for (const auto& x : xs) {
      vx.push_back(apply_V(d, x));
      fx.push_back(apply_F(d, x));
    }
    for (std::size_t i = 0; i < r; ++i) {
      std::vector<WVector> left, right;
      for (std::size_t j = 0; j < r; ++j) {
        left.push_back(i == j ? xs[j] : vx[j]);
        right.push_back(i == j ? fx[j] : xs[j]);
      }
      const auto lhs = mf_w * frobenius_entries(ring, wedge_columns(ring, left), 1);
      auto rhs = wedge_columns(ring, right);
      for (auto& e : rhs) e = ring.mul(p_shift, e);
      ++out.checks;
      if (lhs != rhs) {
        if (out.failures++ == 0)
          out.first_failure = "trial " + std::to_string(t) + ", slot " + std::to_string(i + 1) + ", ring " +
                              ring.descriptor() + ", r " + std::to_string(r);
      }
    }
  }
  return out;
}

bool has_degree(const Isocrystal& c, const WVector& v, int degree) {
  const WittRing& ring = c.ring();
  const int k = degree + 1 + c.shift();
  if (k < 0 || v.size() != c.rank()) return false;
  const auto lhs = c.matrix() * frobenius_entries(ring, v, 1);
  const auto pk = ring.uniformizer_power(k);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!ring.equal_mod(lhs[i], ring.mul(pk, v[i]), c.eff_precision())) return false;
  return true;
}

GradedVector make_graded_vector(const Isocrystal& c, WVector v, int degree) {
  if (!has_degree(c, v, degree))
    throw DegreeViolation("vector does not satisfy F v = p^" + std::to_string(degree + 1) + " v");
  return {std::move(v), degree, c.eff_precision()};
}

GradedVector graded_wedge(const Isocrystal& c, const std::vector<GradedVector>& vs) {
  if (vs.empty()) throw ArityMismatch("wedge of zero vectors");
  const auto w_iso = wedge_isocrystal(c, vs.size());
  std::vector<WVector> cols;
  int degree = 0;
  int precision = c.eff_precision();
  for (const auto& v : vs) {
    cols.push_back(v.vec);
    degree += v.degree;
    precision = std::min(precision, v.precision);
  }
  WVector w = wedge_columns(c.ring(), cols);
  if (!has_degree(w_iso, w, degree))
    throw DegreeViolation("wedge fails F = p^" + std::to_string(degree + 1) + " in the wedge isocrystal");
  return {std::move(w), degree, precision};
}

std::vector<GradedVector> lambda_r_sections(const Isocrystal& c, const std::vector<GradedVector>& vs, std::size_t r) {
  for (const auto& v : vs)
    if (v.degree != vs.front().degree) throw GradeMismatch("lambda_r sections need vectors of one degree");
  return lambda_r_tuple(vs, r, [&](const std::vector<GradedVector>& picked) { return graded_wedge(c, picked); });
}

DimHeight dim_height_check(const GroupDescriptor& desc, std::size_t r, long p, int a, int m) {
  if (desc.dim > 1) throw BadDescriptor("dimension formula needs dim <= 1");
  check_order(r, static_cast<std::size_t>(desc.h));
  if (m == 0) m = desc.h * a + 2;
  const auto d = make_standard(desc, make_witt_ring(p, a, m));
  const auto mf_w = compound(d.mf(), r);
  DimHeight out;
  out.height = static_cast<int>(mf_w.rows());
  const int v = det_valuation(mf_w, m);
  out.dim = out.height - (v - out.height * (static_cast<int>(r) - 1));
  out.expected_dim = static_cast<int>(binomial(desc.h - 1, static_cast<long>(r) - 1)) * desc.dim;
  return out;
}

NewtonPolygon slope_transform(const NewtonPolygon& np, std::size_t r) {
  const auto ms = np.multiset();
  check_order(r, ms.size());
  const mpq_class offset(static_cast<long>(r) - 1);
  auto sums = lambda_r_tuple(ms, r, [&](const std::vector<mpq_class>& picked) {
    mpq_class s = -offset;
    for (const auto& x : picked) s += x;
    return s;
  });
  return NewtonPolygon::from_slopes(std::move(sums));
}

int required_wedge_precision(const GroupDescriptor& desc, std::size_t r, int a) {
  const auto rl = static_cast<long>(r);
  const long height = static_cast<long>(binomial(desc.h, rl));
  const long vdet = static_cast<long>(binomial(desc.h - 1, rl - 1)) * (desc.h - desc.dim);
  return static_cast<int>(std::max(a * vdet, a * height)) + 1;
}

namespace {

MuCheck mu_check_of(const Isocrystal& wedge, int h) {
  MuCheck out;
  out.rank_one = wedge.rank() == 1;
  if (!out.rank_one) return out;
  out.slope_zero = slopes(wedge) == NewtonPolygon::from_slopes({mpq_class(0)});
  out.unit_entry = wedge.ring().valuation(wedge.matrix()(0, 0)) == Valuation(h - 1);
  return out;
}

}  // namespace

MuCheck mu_check(int h, long p, int a) {
  const auto desc = GroupDescriptor::lubin_tate(h);
  const auto hs = static_cast<std::size_t>(h);
  const auto ring = make_witt_ring(p, a, required_wedge_precision(desc, hs, a));
  return mu_check_of(wedge_isocrystal(make_standard(desc, ring), hs), h);
}

WedgeReport wedge_report(const GroupDescriptor& desc, std::size_t r, long p, int a, int m) {
  if (desc.dim > 1) throw BadDescriptor("wedge report needs dim <= 1");
  check_order(r, static_cast<std::size_t>(desc.h));
  const int required = required_wedge_precision(desc, r, a);
  if (m == 0) m = required;
  if (m < required)
    throw PrecisionExhausted("precision " + std::to_string(m) + " is below the required " + std::to_string(required),
                             required);
  const auto ring = make_witt_ring(p, a, m);
  const auto d = make_standard(desc, ring);
  const auto wedge = wedge_isocrystal(d, r);
  WedgeReport out;
  out.source = desc;
  out.r = r;
  out.p = p;
  out.a = a;
  out.m = m;
  out.height = static_cast<int>(wedge.rank());
  const int v = det_valuation(wedge.matrix(), m);
  out.dim = out.height - (v - out.height * (static_cast<int>(r) - 1));
  out.slopes = slopes(wedge);
  if (r == static_cast<std::size_t>(desc.h)) out.mu_check = mu_check_of(wedge, desc.h).ok() && desc.dim == 1;
  return out;
}

}  // namespace wedgecrys
