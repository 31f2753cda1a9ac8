#include <gtest/gtest.h>

#include "oracles.hpp"
#include "wedgecrys/dieudonne.hpp"
#include "wedgecrys/exterior_linalg.hpp"

using namespace wedgecrys;

namespace {

NewtonPolygon polygon(std::initializer_list<std::pair<mpq_class, std::size_t>> segs) {
  NewtonPolygon np;
  for (const auto& [s, k] : segs) np.segments.push_back({s, k});
  return np;
}

mpq_class q(long n, long d = 1) {
  mpq_class r(n, d);
  r.canonicalize();
  return r;
}

/// Slopes through an independently computed lower hull of the twisted
/// product's characteristic polynomial.
std::vector<mpq_class> hull_slopes(const DieudonneModule& d) {
  const auto& ring = d.ring();
  const auto c = charpoly_berkowitz(twisted_product(d.mf()));
  std::vector<long> v;
  for (const auto& x : c) {
    const auto val = ring.valuation(x);
    v.push_back(val.is_bottom() ? -1 : val.value());
  }
  auto s = oracle::lower_hull_slopes(v);
  for (auto& x : s) x /= ring.degree();
  return s;
}

WVector basis_vector(const WittRing& ring, std::size_t n, std::size_t i) {
  WVector v(n, ring.zero());
  v[i] = ring.one();
  return v;
}

}  // namespace

TEST(GroupDescriptor, NamesAndValidation) {
  EXPECT_EQ(GroupDescriptor::mu().name(), "mu");
  EXPECT_EQ(GroupDescriptor::qpzp().name(), "QpZp");
  EXPECT_EQ(GroupDescriptor::lubin_tate(4).name(), "LT_4");
  EXPECT_EQ(GroupDescriptor::make(4, 0).name(), "G(4,0)");
  EXPECT_EQ(GroupDescriptor::parse("LT_3"), GroupDescriptor::make(3, 1));
  EXPECT_EQ(GroupDescriptor::parse("mu"), GroupDescriptor::make(1, 1));
  EXPECT_EQ(GroupDescriptor::parse("G(5,2)"), GroupDescriptor::make(5, 2));
  EXPECT_THROW(GroupDescriptor::make(2, 3), BadDescriptor);
  EXPECT_THROW(GroupDescriptor::make(2, -1), BadDescriptor);
  EXPECT_THROW(GroupDescriptor::parse("LT_x"), BadDescriptor);
}

TEST(MakeStandard, Mu) {
  const auto w = make_witt_ring(3, 1, 4);
  const auto d = make_standard(GroupDescriptor::mu(), w);
  EXPECT_EQ(d.rank(), 1U);
  EXPECT_EQ(d.mf(), WMatrix::from_integers(w, 1, 1, {1}));
  EXPECT_EQ(d.mv(), WMatrix::from_integers(w, 1, 1, {3}));
  EXPECT_EQ(slopes(d), polygon({{q(0), 1}}));
}

TEST(MakeStandard, QpZp) {
  const auto w = make_witt_ring(3, 1, 4);
  const auto d = make_standard(GroupDescriptor::qpzp(), w);
  EXPECT_EQ(d.mf(), WMatrix::from_integers(w, 1, 1, {3}));
  EXPECT_EQ(d.mv(), WMatrix::from_integers(w, 1, 1, {1}));
  EXPECT_EQ(slopes(d), polygon({{q(1), 1}}));
}

TEST(MakeStandard, LubinTate2) {
  const auto w = make_witt_ring(3, 1, 4);
  const auto d = make_standard(GroupDescriptor::lubin_tate(2), w);
  EXPECT_EQ(d.mf(), WMatrix::from_integers(w, 2, 2, {0, 3, 1, 0}));
  EXPECT_EQ(slopes(d), polygon({{q(1, 2), 2}}));
  EXPECT_EQ(det_valuation(d.mf(), 4), 1);
}

TEST(MakeStandard, AxiomsHoldForEveryDescriptorUpToHeightSix) {
  for (auto [p, a] : {std::pair{3L, 1}, std::pair{3L, 2}, std::pair{5L, 1}})
    for (int h = 1; h <= 6; ++h)
      for (int dim = 0; dim <= h; ++dim) {
        const auto w = make_witt_ring(p, a, h * a + 2);
        const auto d = make_standard(GroupDescriptor::make(h, dim), w);
        EXPECT_TRUE(verify_axioms(d).ok()) << h << "," << dim;
        EXPECT_EQ(height(d), h);
        EXPECT_EQ(dimension(d), dim);
      }
}

TEST(MakeStandard, StandardModulesAreIsoclinic) {
  for (int h = 1; h <= 6; ++h)
    for (int dim = 0; dim <= h; ++dim) {
      const auto w = make_witt_ring(3, 1, h + 2);
      const auto d = make_standard(GroupDescriptor::make(h, dim), w);
      EXPECT_EQ(slopes(d), polygon({{q(h - dim, h), static_cast<std::size_t>(h)}})) << h << "," << dim;
    }
}

TEST(VerifyAxioms, RejectsBrokenModule) {
  const auto w = make_witt_ring(3, 1, 3);
  const DieudonneModule bad(w, WMatrix::from_integers(w, 1, 1, {1}), WMatrix::from_integers(w, 1, 1, {1}));
  const auto r = verify_axioms(bad);
  EXPECT_FALSE(r.ok());
  EXPECT_FALSE(r.diagnostic.empty());
}

TEST(VerifyAxioms, SurvivesUnimodularConjugation) {
  std::mt19937_64 gen(31);
  for (int t = 0; t < 30; ++t) {
    const int h = 1 + t % 4;
    const auto w = make_witt_ring(3, 1 + t % 2, 5);
    const auto d = make_standard(GroupDescriptor::make(h, t % (h + 1)), w);
    const auto u = random_unimodular(w, static_cast<std::size_t>(h), gen);
    const auto c = conjugate(d, u);
    EXPECT_TRUE(verify_axioms(c).ok());
    // Direct check of MF' = U MF phi(U)^{-1}.
    EXPECT_EQ(c.mf() * frobenius_entries(u), u * d.mf());
  }
}

TEST(Conjugate, RejectsSingularChangeOfBasis) {
  const auto w = make_witt_ring(3, 1, 3);
  const auto d = make_standard(GroupDescriptor::lubin_tate(2), w);
  EXPECT_THROW(conjugate(d, WMatrix::from_integers(w, 2, 2, {1, 0, 0, 3})), NotInvertible);
}

TEST(ApplyF, Examples) {
  const auto w = make_witt_ring(3, 2, 4);
  const auto mu = make_standard(GroupDescriptor::mu(), w);
  EXPECT_EQ(apply_F(mu, WVector{w.zero()}), WVector{w.zero()});
  const auto& f = w.residue_field();
  for (const auto& u : f.elements())
    EXPECT_EQ(apply_F(mu, WVector{w.teichmuller(u)}), WVector{w.teichmuller(f.pow(u, 3))});
  const auto lt2 = make_standard(GroupDescriptor::lubin_tate(2), w);
  EXPECT_EQ(apply_F(lt2, basis_vector(w, 2, 0)), basis_vector(w, 2, 1));
  // FV = VF = p on vectors.
  std::mt19937_64 gen(32);
  for (int t = 0; t < 20; ++t) {
    WVector v{w.random(gen), w.random(gen)};
    const WVector pv{w.mul(w.from_integer(3), v[0]), w.mul(w.from_integer(3), v[1])};
    EXPECT_EQ(apply_F(lt2, apply_V(lt2, v)), pv);
    EXPECT_EQ(apply_V(lt2, apply_F(lt2, v)), pv);
  }
}

TEST(ApplyF, IsocrystalShiftDividesOrFails) {
  const auto w = make_witt_ring(3, 1, 4);
  const Isocrystal c(w, WMatrix::from_integers(w, 1, 1, {3}), 1, 4);
  const auto r = apply_F(c, WVector{w.from_integer(2)});
  EXPECT_EQ(r.precision, 3);
  EXPECT_EQ(r.vec, WVector{w.from_integer(2)});
  const Isocrystal c2(w, WMatrix::from_integers(w, 1, 1, {1}), 1, 4);
  EXPECT_THROW(apply_F(c2, WVector{w.one()}), PrecisionExhausted);
  const Isocrystal c3(w, WMatrix::from_integers(w, 1, 1, {1}), 4, 4);
  EXPECT_THROW(apply_F(c3, WVector{w.one()}), PrecisionExhausted);
}

TEST(Slopes, Examples) {
  const auto w = make_witt_ring(3, 1, 6);
  EXPECT_EQ(slopes(make_standard(GroupDescriptor::lubin_tate(3), w)), polygon({{q(2, 3), 3}}));
  const auto mixed = direct_sum(make_standard(GroupDescriptor::mu(), w), make_standard(GroupDescriptor::qpzp(), w));
  EXPECT_EQ(slopes(mixed), polygon({{q(0), 1}, {q(1), 1}}));
  EXPECT_EQ(dimension(mixed), 1);
  EXPECT_EQ(height(mixed), 2);
}

TEST(Slopes, AgreeWithIndependentHullAndBalanceTheBooks) {
  std::mt19937_64 gen(33);
  for (auto [p, a] : {std::pair{3L, 1}, std::pair{3L, 2}, std::pair{5L, 1}})
    for (int h = 1; h <= 5; ++h)
      for (int dim = 0; dim <= h; ++dim) {
        const auto w = make_witt_ring(p, a, h * a + 2);
        const auto d = conjugate(make_standard(GroupDescriptor::make(h, dim), w),
                                 random_unimodular(w, static_cast<std::size_t>(h), gen));
        const auto np = slopes(d);
        EXPECT_EQ(np.multiset(), hull_slopes(d));
        EXPECT_EQ(np.rank(), static_cast<std::size_t>(h));
        EXPECT_EQ(np.total(), mpq_class(h - dimension(d)));
      }
}

TEST(Slopes, InvariantUnderConjugationAndAdditiveUnderSums) {
  std::mt19937_64 gen(34);
  const auto w = make_witt_ring(3, 2, 14);
  for (int t = 0; t < 10; ++t) {
    const auto a = make_standard(GroupDescriptor::make(2 + t % 3, t % 2), w);
    const auto b = make_standard(GroupDescriptor::make(1 + t % 2, (t / 2) % 2), w);
    const auto s = direct_sum(a, b);
    auto merged = slopes(a).multiset();
    for (const auto& x : slopes(b).multiset()) merged.push_back(x);
    EXPECT_EQ(slopes(s), NewtonPolygon::from_slopes(merged));
    EXPECT_EQ(dimension(s), dimension(a) + dimension(b));
    const auto u = random_unimodular(w, s.rank(), gen);
    EXPECT_EQ(slopes(conjugate(s, u)), slopes(s));
  }
}

TEST(Slopes, PrecisionGuard) {
  const auto w = make_witt_ring(3, 1, 3);
  const auto d = make_standard(GroupDescriptor::lubin_tate(3), w);
  try {
    slopes(d);
    FAIL() << "expected PrecisionExhausted";
  } catch (const PrecisionExhausted& e) {
    EXPECT_EQ(e.required_precision(), 4);
  }
}

TEST(NewtonPolygon, HullAndErrors) {
  // (0,0), (1,BOTTOM), (2,1): one segment of slope 1/2.
  const auto np = newton_polygon({Valuation(0), Valuation::bottom(), Valuation(1)}, 5);
  EXPECT_EQ(np, polygon({{q(1, 2), 2}}));
  EXPECT_THROW(newton_polygon({Valuation(0), Valuation(3), Valuation::bottom()}, 4), PrecisionExhausted);
  const auto s = NewtonPolygon::from_slopes({q(1), q(0), q(1)});
  EXPECT_EQ(s, polygon({{q(0), 1}, {q(1), 2}}));
  EXPECT_EQ(s.total(), 2);
  EXPECT_EQ(s.rank(), 3U);
}

TEST(Dimension, ExamplesAndPrecisionStability) {
  const auto w = make_witt_ring(3, 1, 7);
  EXPECT_EQ(dimension(make_standard(GroupDescriptor::mu(), w)), 1);
  EXPECT_EQ(dimension(make_standard(GroupDescriptor::qpzp(), w)), 0);
  const auto lt5 = make_standard(GroupDescriptor::lubin_tate(5), w);
  EXPECT_EQ(height(lt5), 5);
  EXPECT_EQ(dimension(lt5), 1);
  for (int h = 1; h <= 6; ++h)
    for (int dim = 0; dim <= h; ++dim) {
      const auto desc = GroupDescriptor::make(h, dim);
      EXPECT_EQ(dimension(make_standard(desc, make_witt_ring(3, 1, h + 2))),
                dimension(make_standard(desc, make_witt_ring(3, 1, h + 4))));
    }
}

TEST(DirectSum, RingMismatchAndEmptySummand) {
  const auto a = make_standard(GroupDescriptor::mu(), make_witt_ring(3, 1, 3));
  const auto b = make_standard(GroupDescriptor::mu(), make_witt_ring(3, 1, 4));
  EXPECT_THROW(direct_sum(a, b), RingMismatch);
  const auto& w = a.ring();
  const DieudonneModule empty(w, WMatrix(w, 0, 0), WMatrix(w, 0, 0));
  const auto s = direct_sum(a, empty);
  EXPECT_EQ(s.mf(), a.mf());
  EXPECT_EQ(s.mv(), a.mv());
}

TEST(Eigenspace, MuIsTheTeichmullerSpan) {
  const auto w = make_witt_ring(3, 2, 5);
  const auto e = eigenspace(make_standard(GroupDescriptor::mu(), w), 0);
  EXPECT_EQ(e.precision, 5);
  EXPECT_EQ(e.rank(), 1U);
  EXPECT_EQ(e.free_rank(), 1U);
  // The fixed vectors are W(F_3) inside W(F_9).
  EXPECT_EQ(w.frobenius(e.basis[0][0]), e.basis[0][0]);
}

TEST(Eigenspace, QpZpAtExponentOneLosesOneLevel) {
  const auto w = make_witt_ring(3, 2, 5);
  const auto d = make_standard(GroupDescriptor::qpzp(), w);
  const auto e = eigenspace(d, 1);
  EXPECT_EQ(e.precision, 4);
  EXPECT_EQ(e.free_rank(), 1U);
  EXPECT_EQ(eigenspace(d, 0).rank(), 0U);
}

TEST(Eigenspace, LubinTateHasNoUnitRootPart) {
  const auto w = make_witt_ring(3, 2, 5);
  const auto e = eigenspace(make_standard(GroupDescriptor::lubin_tate(2), w), 0);
  EXPECT_EQ(e.free_rank(), 0U);
  for (int v : e.pivot_valuations) EXPECT_GE(v, 1);
}

TEST(Eigenspace, BasisVectorsAreEigenvectorsAtReducedPrecision) {
  std::mt19937_64 gen(35);
  const auto w = make_witt_ring(3, 2, 5);
  for (int k = 0; k <= 2; ++k)
    for (int l = 0; l <= 2; ++l) {
      if (k + l == 0) continue;
      auto d = DieudonneModule(w, WMatrix(w, 0, 0), WMatrix(w, 0, 0));
      for (int i = 0; i < k; ++i) d = direct_sum(d, make_standard(GroupDescriptor::mu(), w));
      for (int i = 0; i < l; ++i) d = direct_sum(d, make_standard(GroupDescriptor::qpzp(), w));
      d = conjugate(d, random_unimodular(w, d.rank(), gen));
      for (int c = 0; c <= 1; ++c) {
        const auto e = eigenspace(d, c);
        EXPECT_EQ(e.free_rank(), static_cast<std::size_t>(c == 0 ? k : l));
        EXPECT_EQ(e.invariants.size(), e.free_rank());
        for (const auto& x : e.basis) {
          const auto fx = apply_F(d, x);
          for (std::size_t i = 0; i < x.size(); ++i)
            EXPECT_TRUE(w.equal_mod(fx[i], w.mul(w.uniformizer_power(c), x[i]), e.precision));
        }
      }
    }
}

TEST(Eigenspace, MatchesExhaustiveKernelModP2) {
  std::mt19937_64 gen(36);
  for (int a = 1; a <= 2; ++a)
    for (int h = 1; h <= 2; ++h)
      for (int dim = 0; dim <= h; ++dim)
        for (int c = 0; c <= 1; ++c) {
          const auto w = make_witt_ring(3, a, 2);
          const auto d = conjugate(make_standard(GroupDescriptor::make(h, dim), w),
                                   random_unimodular(w, static_cast<std::size_t>(h), gen));
          const auto e = eigenspace(d, c);
          const std::size_t n = static_cast<std::size_t>(a * h);
          std::vector<std::vector<long>> gens;
          for (const auto& v : e.raw) {
            std::vector<long> g;
            for (const auto& x : to_coordinates(w, v)) g.push_back(x.get_si());
            gens.push_back(g);
          }
          const auto span = oracle::brute_span(gens, 9, n);
          // Every x in (W/9)^h with M phi(x) = p^c x.
          oracle::ZmodVectors vs{9, n};
          std::set<long> solutions;
          for (long code = 0; code < vs.count(); ++code) {
            const auto coords = vs.decode(code);
            std::vector<mpz_class> z(coords.begin(), coords.end());
            const auto x = from_coordinates(w, z);
            const auto fx = apply_F(d, x);
            bool ok = true;
            for (std::size_t i = 0; i < x.size() && ok; ++i) ok = fx[i] == w.mul(w.uniformizer_power(c), x[i]);
            if (ok) solutions.insert(code);
          }
          EXPECT_EQ(span, solutions) << "a=" << a << " h=" << h << " dim=" << dim << " c=" << c;
        }
}

TEST(Eigenspace, PrecisionExhausted) {
  const auto w = make_witt_ring(3, 1, 2);
  EXPECT_THROW(eigenspace(make_standard(GroupDescriptor::mu(), w), 2), PrecisionExhausted);
}

TEST(Coordinates, RoundTrip) {
  std::mt19937_64 gen(37);
  const auto w = make_witt_ring(5, 3, 2);
  for (int t = 0; t < 20; ++t) {
    WVector v{w.random(gen), w.random(gen)};
    EXPECT_EQ(from_coordinates(w, to_coordinates(w, v)), v);
  }
}

TEST(LinearisedOperator, MatchesSemilinearApplication) {
  std::mt19937_64 gen(38);
  const auto w = make_witt_ring(3, 2, 3);
  const auto d = conjugate(make_standard(GroupDescriptor::lubin_tate(3), w), random_unimodular(w, 3, gen));
  const auto op = linearised_operator(d.mf(), 1, 3);
  for (int t = 0; t < 10; ++t) {
    WVector x{w.random(gen), w.random(gen), w.random(gen)};
    const auto lhs = op * to_coordinates(w, x);
    auto fx = apply_F(d, x);
    for (auto& y : fx) y = w.sub(y, w.mul(w.from_integer(3), x[&y - &fx[0]]));
    EXPECT_EQ(lhs, to_coordinates(w, fx));
  }
}
