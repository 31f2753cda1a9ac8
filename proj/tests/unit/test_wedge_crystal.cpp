#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "wedgecrys/exterior_linalg.hpp"
#include "wedgecrys/wedge_crystal.hpp"

using namespace wedgecrys;

namespace {

mpq_class q(long n, long d = 1) {
  mpq_class r(n, d);
  r.canonicalize();
  return r;
}

NewtonPolygon polygon(std::initializer_list<std::pair<mpq_class, std::size_t>> segs) {
  NewtonPolygon np;
  for (const auto& [s, k] : segs) np.segments.push_back({s, k});
  return np;
}

DieudonneModule sum_of(const WittRing& w, std::initializer_list<GroupDescriptor> parts) {
  DieudonneModule d(w, WMatrix(w, 0, 0), WMatrix(w, 0, 0));
  for (const auto& g : parts) d = direct_sum(d, make_standard(g, w));
  return d;
}

WVector unit_vector(const WittRing& w, std::size_t n, std::size_t i) {
  WVector v(n, w.zero());
  v[i] = w.one();
  return v;
}

/// 2 x 2 minors of two columns, computed by hand in lexicographic order.
WVector wedge2(const WittRing& w, const WVector& x, const WVector& y) {
  WVector out;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j) out.push_back(w.sub(w.mul(x[i], y[j]), w.mul(x[j], y[i])));
  return out;
}

}  // namespace

TEST(WedgeIsocrystal, DegreeOneIsIdentity) {
  const auto w = make_witt_ring(3, 2, 6);
  const auto d = make_standard(GroupDescriptor::lubin_tate(3), w);
  const auto c = Isocrystal::from_dieudonne(d);
  const auto c1 = wedge_isocrystal(c, 1);
  EXPECT_EQ(c1.matrix(), c.matrix());
  EXPECT_EQ(c1.shift(), c.shift());
  EXPECT_EQ(c1.eff_precision(), c.eff_precision());
}

TEST(WedgeIsocrystal, TopWedgeOfLubinTate2IsMu) {
  const auto w = make_witt_ring(3, 1, 4);
  const auto c = wedge_isocrystal(make_standard(GroupDescriptor::lubin_tate(2), w), 2);
  EXPECT_EQ(c.rank(), 1U);
  EXPECT_EQ(c.matrix(), WMatrix::from_integers(w, 1, 1, {-3}));
  EXPECT_EQ(c.shift(), 1);
  EXPECT_EQ(slopes(c), polygon({{q(0), 1}}));
}

TEST(WedgeIsocrystal, LubinTate4SquaredHasSlopeOneHalf) {
  const auto desc = GroupDescriptor::lubin_tate(4);
  const auto w = make_witt_ring(3, 1, required_wedge_precision(desc, 2, 1));
  const auto c = wedge_isocrystal(make_standard(desc, w), 2);
  EXPECT_EQ(c.rank(), 6U);
  EXPECT_EQ(slopes(c), polygon({{q(1, 2), 6}}));
}

TEST(WedgeIsocrystal, ShiftFollowsSourceShift) {
  const auto w = make_witt_ring(3, 1, 8);
  const Isocrystal c(w, WMatrix::identity(w, 3), 2, 8);
  const auto c2 = wedge_isocrystal(c, 2);
  EXPECT_EQ(c2.shift(), 2 * 2 + 1);
  EXPECT_EQ(c2.matrix(), WMatrix::identity(w, 3));
  const auto c3 = wedge_isocrystal(c, 3);
  EXPECT_EQ(c3.shift(), 3 * 2 + 2);
}

TEST(WedgeIsocrystal, FunctorialUnderSemilinearBaseChange) {
  std::mt19937_64 gen(41);
  const auto w = make_witt_ring(3, 2, 5);
  for (int t = 0; t < 10; ++t) {
    const auto d = make_standard(GroupDescriptor::make(4, t % 2), w);
    const auto u = random_unimodular(w, 4, gen);
    const auto c = conjugate(d, u);
    for (std::size_t r = 1; r <= 4; ++r) {
      const auto cu = compound(u, r);
      EXPECT_EQ(wedge_isocrystal(c, r).matrix() * frobenius_entries(cu), cu * compound(d.mf(), r));
    }
  }
}

TEST(WedgeIsocrystal, FrobeniusOnDecomposables) {
  // F_w(x1 ^ x2) = p^{-1} F x1 ^ F x2 for every pair.
  std::mt19937_64 gen(42);
  const auto w = make_witt_ring(3, 2, 6);
  const auto d = conjugate(make_standard(GroupDescriptor::lubin_tate(3), w), random_unimodular(w, 3, gen));
  const auto c = wedge_isocrystal(d, 2);
  for (int t = 0; t < 20; ++t) {
    WVector x{w.random(gen), w.random(gen), w.random(gen)};
    WVector y{w.random(gen), w.random(gen), w.random(gen)};
    const auto lhs = c.matrix() * frobenius_entries(w, wedge2(w, x, y));
    EXPECT_EQ(lhs, wedge2(w, apply_F(d, x), apply_F(d, y)));
  }
}

TEST(MultilinearCompat, Examples) {
  const auto w = make_witt_ring(3, 1, 4);
  const auto lt2 = make_standard(GroupDescriptor::lubin_tate(2), w);
  EXPECT_TRUE(multilinear_compat_check(lt2, 1, 20, 1).ok());
  const auto good = multilinear_compat_check(lt2, 2, 100, 2);
  EXPECT_TRUE(good.ok());
  EXPECT_EQ(good.trials, 100U);
  EXPECT_EQ(good.checks, 200U);
  const auto bad = multilinear_compat_check(lt2, 2, 100, 2, true);
  EXPECT_FALSE(bad.ok());
  EXPECT_FALSE(bad.first_failure.empty());
}

TEST(MultilinearCompat, HoldsForConjugatedModulesAndWrongShiftFails) {
  std::mt19937_64 gen(43);
  for (int h = 1; h <= 4; ++h)
    for (int dim = 0; dim <= h; ++dim) {
      const auto w = make_witt_ring(3, 1 + h % 2, 4);
      const auto d = conjugate(make_standard(GroupDescriptor::make(h, dim), w),
                               random_unimodular(w, static_cast<std::size_t>(h), gen));
      for (std::size_t r = 1; r <= static_cast<std::size_t>(h); ++r) {
        EXPECT_TRUE(multilinear_compat_check(d, r, 20, 100 + r).ok()) << h << "," << dim << "," << r;
        if (r >= 2) {
          EXPECT_FALSE(multilinear_compat_check(d, r, 20, 100 + r, true).ok()) << h << "," << dim << "," << r;
        }
      }
    }
}

TEST(GradedWedge, RepeatedVectorGivesZero) {
  const auto w = make_witt_ring(3, 2, 4);
  const auto d = sum_of(w, {GroupDescriptor::mu(), GroupDescriptor::mu()});
  const auto c = Isocrystal::from_dieudonne(d);
  const auto v = make_graded_vector(c, WVector{w.one(), w.from_integer(2)}, -1);
  const auto g = graded_wedge(c, {v, v});
  EXPECT_EQ(g.vec, WVector{w.zero()});
  EXPECT_EQ(g.degree, -2);
}

TEST(GradedWedge, MuSquaredTeichmullerColumns) {
  const auto w = make_witt_ring(3, 2, 4);
  const auto c = Isocrystal::from_dieudonne(sum_of(w, {GroupDescriptor::mu(), GroupDescriptor::mu()}));
  const auto& f = w.residue_field();
  const auto a = w.teichmuller(f.generator()), b = w.teichmuller(f.from_integer(2));
  // Phi-fixed columns: Teichmuller lifts of F_3 and integers.
  const auto x = make_graded_vector(c, WVector{w.one(), w.from_integer(2)}, -1);
  const auto y = make_graded_vector(c, WVector{w.from_integer(5), w.one()}, -1);
  const auto g = graded_wedge(c, {x, y});
  EXPECT_EQ(g.vec, wedge2(w, x.vec, y.vec));
  EXPECT_EQ(g.vec, WVector{w.from_integer(1 - 10)});
  EXPECT_TRUE(has_degree(wedge_isocrystal(c, 2), g.vec, -2));
  // A non-fixed Teichmuller column is not an eigenvector.
  EXPECT_THROW(make_graded_vector(c, WVector{a, b}, -1), DegreeViolation);
}

TEST(GradedWedge, MuPlusQpZp) {
  const auto w = make_witt_ring(3, 1, 5);
  const auto c = Isocrystal::from_dieudonne(sum_of(w, {GroupDescriptor::mu(), GroupDescriptor::qpzp()}));
  const auto x = make_graded_vector(c, unit_vector(w, 2, 0), -1);  // F x = x
  const auto y = make_graded_vector(c, unit_vector(w, 2, 1), 0);   // F y = p y
  const auto g = graded_wedge(c, {x, y});
  EXPECT_EQ(g.degree, -1);
  EXPECT_EQ(g.vec, WVector{w.one()});
  // F_w = p^{-1} (p) = 1 on the wedge.
  const auto fw = apply_F(wedge_isocrystal(c, 2), g.vec);
  EXPECT_EQ(fw.vec, g.vec);
}

TEST(GradedWedge, DegreesAddOnEigenvectorBattery) {
  std::mt19937_64 gen(44);
  const auto w = make_witt_ring(3, 2, 6);
  const auto battery = {sum_of(w, {GroupDescriptor::mu(), GroupDescriptor::mu(), GroupDescriptor::qpzp()}),
                        sum_of(w, {GroupDescriptor::qpzp(), GroupDescriptor::qpzp(), GroupDescriptor::lubin_tate(2)}),
                        sum_of(w, {GroupDescriptor::mu(), GroupDescriptor::qpzp(), GroupDescriptor::lubin_tate(2)})};
  std::size_t wedges = 0;
  for (const auto& base : battery) {
    const auto d = conjugate(base, random_unimodular(w, base.rank(), gen));
    const auto c = Isocrystal::from_dieudonne(d);
    std::vector<GradedVector> vs;
    for (int e = 0; e <= 1; ++e)
      for (const auto& v : eigenspace(d, e).raw) vs.push_back(make_graded_vector(c, v, e - 1));
    for (std::size_t r = 1; r <= std::min<std::size_t>(3, vs.size()); ++r)
      for (const auto& s : subsets(vs.size(), r)) {
        std::vector<GradedVector> pick;
        int total = 0;
        for (auto i : s.members()) {
          pick.push_back(vs[i]);
          total += vs[i].degree;
        }
        const auto g = graded_wedge(c, pick);
        EXPECT_EQ(g.degree, total);
        EXPECT_TRUE(has_degree(wedge_isocrystal(c, r), g.vec, total));
        ++wedges;
      }
  }
  EXPECT_GT(wedges, 20U);
}

TEST(LambdaRSections, FullWedgeWhenRIsH) {
  const auto w = make_witt_ring(3, 1, 4);
  const auto c = Isocrystal::from_dieudonne(sum_of(w, {GroupDescriptor::qpzp(), GroupDescriptor::qpzp()}));
  std::vector<GradedVector> vs{make_graded_vector(c, unit_vector(w, 2, 0), 0),
                               make_graded_vector(c, unit_vector(w, 2, 1), 0)};
  const auto s = lambda_r_sections(c, vs, 2);
  ASSERT_EQ(s.size(), 1U);
  EXPECT_EQ(s[0].vec, WVector{w.one()});
  EXPECT_EQ(s[0].degree, 0);
}

TEST(LambdaRSections, CoordinateWedgesOfMuCubed) {
  const auto w = make_witt_ring(3, 2, 4);
  const auto c = Isocrystal::from_dieudonne(
      sum_of(w, {GroupDescriptor::mu(), GroupDescriptor::mu(), GroupDescriptor::mu()}));
  std::vector<GradedVector> vs;
  for (std::size_t i = 0; i < 3; ++i) vs.push_back(make_graded_vector(c, unit_vector(w, 3, i), -1));
  const auto s = lambda_r_sections(c, vs, 2);
  ASSERT_EQ(s.size(), 3U);
  for (std::size_t k = 0; k < 3; ++k) EXPECT_EQ(s[k].vec, unit_vector(w, 3, k));
}

TEST(LambdaRSections, BilinearityOnDependentInputs) {
  std::mt19937_64 gen(45);
  const auto w = make_witt_ring(3, 1, 5);
  const auto c = Isocrystal::from_dieudonne(
      sum_of(w, {GroupDescriptor::qpzp(), GroupDescriptor::qpzp(), GroupDescriptor::qpzp()}));
  for (int t = 0; t < 10; ++t) {
    WVector v1{w.random(gen), w.random(gen), w.random(gen)};
    WVector v2{w.random(gen), w.random(gen), w.random(gen)};
    WVector v3(3);
    for (std::size_t i = 0; i < 3; ++i) v3[i] = w.add(v1[i], v2[i]);
    std::vector<GradedVector> vs{make_graded_vector(c, v1, 0), make_graded_vector(c, v2, 0),
                                 make_graded_vector(c, v3, 0)};
    const auto s = lambda_r_sections(c, vs, 2);
    // v1 ^ v3 = v1 ^ v2 and v2 ^ v3 = -(v1 ^ v2).
    EXPECT_EQ(s[1].vec, s[0].vec);
    for (std::size_t i = 0; i < 3; ++i) EXPECT_TRUE(w.is_zero(w.add(s[1].vec[i], s[2].vec[i])));
    EXPECT_EQ(s[0].vec, wedge2(w, v1, v2));
    // Repeating an input gives the zero section.
    const auto rep = lambda_r_sections(c, {vs[0], vs[0], vs[1]}, 2);
    EXPECT_EQ(rep[0].vec, WVector(3, w.zero()));
  }
}

TEST(LambdaRSections, RejectsMixedDegrees) {
  const auto w = make_witt_ring(3, 1, 4);
  const auto c = Isocrystal::from_dieudonne(sum_of(w, {GroupDescriptor::mu(), GroupDescriptor::qpzp()}));
  std::vector<GradedVector> vs{make_graded_vector(c, unit_vector(w, 2, 0), -1),
                               make_graded_vector(c, unit_vector(w, 2, 1), 0)};
  EXPECT_THROW(lambda_r_sections(c, vs, 2), GradeMismatch);
  EXPECT_THROW(lambda_r_sections(c, {vs[0]}, 2), ArityMismatch);
}

TEST(DimHeight, Examples) {
  auto r = dim_height_check(GroupDescriptor::lubin_tate(5), 2);
  EXPECT_EQ(r.height, 10);
  EXPECT_EQ(r.dim, 4);
  r = dim_height_check(GroupDescriptor::lubin_tate(4), 2);
  EXPECT_EQ(r.height, 6);
  EXPECT_EQ(r.dim, 3);
  for (std::size_t k = 1; k <= 4; ++k) EXPECT_EQ(dim_height_check(GroupDescriptor::make(4, 0), k).dim, 0);
  EXPECT_THROW(dim_height_check(GroupDescriptor::make(4, 2), 2), BadDescriptor);
}

TEST(DimHeight, FormulaForAllSmallCases) {
  for (int h = 2; h <= 6; ++h)
    for (int dim = 0; dim <= 1; ++dim)
      for (std::size_t r = 1; r <= static_cast<std::size_t>(h); ++r) {
        const auto x = dim_height_check(GroupDescriptor::make(h, dim), r);
        EXPECT_EQ(x.height, oracle::binom(h, static_cast<long>(r)));
        EXPECT_EQ(x.dim, oracle::binom(h - 1, static_cast<long>(r) - 1) * dim);
        EXPECT_TRUE(x.ok());
      }
}

TEST(SlopeTransform, Examples) {
  EXPECT_EQ(slope_transform(polygon({{q(1, 3), 2}, {q(1), 1}}), 1), polygon({{q(1, 3), 2}, {q(1), 1}}));
  EXPECT_EQ(slope_transform(polygon({{q(1, 2), 2}}), 2), polygon({{q(0), 1}}));
  EXPECT_EQ(slope_transform(polygon({{q(3, 4), 4}}), 2), polygon({{q(1, 2), 6}}));
}

TEST(SlopeTransform, MatchesSubsetSumOracle) {
  std::mt19937_64 gen(46);
  std::uniform_int_distribution<long> num(0, 6), den(1, 4), len(1, 6);
  for (int t = 0; t < 100; ++t) {
    std::vector<mpq_class> slopes;
    const long n = len(gen);
    for (long i = 0; i < n; ++i) slopes.push_back(q(num(gen), den(gen)));
    const auto np = NewtonPolygon::from_slopes(slopes);
    for (std::size_t r = 1; r <= static_cast<std::size_t>(n); ++r)
      EXPECT_EQ(slope_transform(np, r).multiset(), oracle::subset_sums(np.multiset(), r));
  }
}

TEST(SlopeTransform, CommutesWithWedgeOnStandardModules) {
  for (int h = 1; h <= 5; ++h)
    for (int dim = 0; dim <= h; ++dim)
      for (std::size_t r = 1; r <= static_cast<std::size_t>(h); ++r) {
        const auto desc = GroupDescriptor::make(h, dim);
        const auto w = make_witt_ring(3, 1, required_wedge_precision(desc, r, 1));
        const auto source = slopes(make_standard(desc, make_witt_ring(3, 1, h + 1)));
        EXPECT_EQ(slopes(wedge_isocrystal(make_standard(desc, w), r)), slope_transform(source, r))
            << h << "," << dim << "," << r;
      }
}

TEST(MuCheck, TopWedgeOfDimensionOneIsMu) {
  for (int h = 2; h <= 6; ++h) {
    const auto m = mu_check(h);
    EXPECT_TRUE(m.rank_one);
    EXPECT_TRUE(m.slope_zero);
    EXPECT_TRUE(m.unit_entry);
  }
  EXPECT_TRUE(mu_check(3, 5, 2).ok());
}

TEST(RequiredPrecision, Formula) {
  EXPECT_EQ(required_wedge_precision(GroupDescriptor::lubin_tate(5), 2, 1), 17);
  EXPECT_EQ(required_wedge_precision(GroupDescriptor::lubin_tate(2), 2, 1), 2);
  EXPECT_EQ(required_wedge_precision(GroupDescriptor::make(4, 0), 2, 2), 25);
}

TEST(WedgeReport, ExamplesAndPrecisionError) {
  auto rep = wedge_report(GroupDescriptor::lubin_tate(2), 2, 3, 1);
  EXPECT_EQ(rep.height, 1);
  EXPECT_EQ(rep.dim, 1);
  EXPECT_EQ(rep.slopes, polygon({{q(0), 1}}));
  ASSERT_TRUE(rep.mu_check.has_value());
  EXPECT_TRUE(*rep.mu_check);
  rep = wedge_report(GroupDescriptor::lubin_tate(5), 2, 3, 1);
  EXPECT_EQ(rep.height, 10);
  EXPECT_EQ(rep.dim, 4);
  EXPECT_EQ(rep.slopes, polygon({{q(3, 5), 10}}));
  EXPECT_FALSE(rep.mu_check.has_value());
  rep = wedge_report(GroupDescriptor::lubin_tate(3), 1, 3, 1);
  EXPECT_EQ(rep.height, 3);
  EXPECT_EQ(rep.dim, 1);
  EXPECT_EQ(rep.slopes, polygon({{q(2, 3), 3}}));
  try {
    wedge_report(GroupDescriptor::lubin_tate(5), 2, 3, 1, 5);
    FAIL() << "expected PrecisionExhausted";
  } catch (const PrecisionExhausted& e) {
    EXPECT_EQ(e.required_precision(), 17);
  }
}

TEST(WedgeDieudonne, IntegralExactlyWhenMinorsAreDivisible) {
  for (int h = 1; h <= 5; ++h)
    for (int dim = 0; dim <= h; ++dim)
      for (std::size_t r = 1; r <= static_cast<std::size_t>(h); ++r) {
        const auto w = make_witt_ring(3, 1, h + 4);
        const auto d = make_standard(GroupDescriptor::make(h, dim), w);
        bool divisible = true;
        for (const auto& row : oracle::compound(d.mf(), r))
          for (const auto& x : row) {
            const auto v = w.valuation(x);
            divisible = divisible && (v.is_bottom() || v.value() >= static_cast<int>(r) - 1);
          }
        const auto wd = wedge_dieudonne(d, r);
        EXPECT_EQ(wd.has_value(), divisible) << h << "," << dim << "," << r;
        if (dim <= 1) {
          EXPECT_TRUE(wd.has_value()) << h << "," << dim << "," << r;
        }
        if (wd) {
          EXPECT_TRUE(verify_axioms(*wd).ok());
          EXPECT_EQ(dimension(*wd), static_cast<int>(oracle::binom(h - 1, static_cast<long>(r) - 1)) * dim);
        }
      }
}
