#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "wedgecrys/error.hpp"
#include "wedgecrys/finite_field.hpp"
#include "wedgecrys/integers.hpp"
#include "wedgecrys/ring_concepts.hpp"

namespace wedgecrys {

/// Exponent vector of a monomial; negative entries appear only in Laurent
/// (chart) coordinates.
using Exponent = std::vector<int>;

/// K[x_0, ..., x_{k-1}] graded by positive variable degrees. Polynomials are
/// sparse maps from exponents to nonzero coefficients; the same type carries
/// Laurent polynomials.
template <Field K>
class GradedRing {
 public:
  using Coeff = typename K::Element;
  using Poly = std::map<Exponent, Coeff>;

  GradedRing(K field, std::vector<int> degrees);

  const K& field() const noexcept { return field_; }
  std::size_t nvars() const noexcept { return degrees_.size(); }
  const std::vector<int>& degrees() const noexcept { return degrees_; }

  Poly zero() const { return {}; }
  Poly one() const;
  Poly constant(const Coeff& c) const;
  Poly monomial(Exponent e, const Coeff& c) const;
  Poly variable(std::size_t i) const;

  Poly add(const Poly& a, const Poly& b) const;
  Poly sub(const Poly& a, const Poly& b) const;
  Poly neg(const Poly& a) const;
  Poly mul(const Poly& a, const Poly& b) const;
  Poly scale(const Poly& a, const Coeff& c) const;
  Poly pow(const Poly& a, unsigned e) const;

  int degree(const Exponent& e) const;
  /// True for the zero polynomial too.
  bool is_homogeneous(const Poly& a, int d) const;
  bool is_monomial(const Poly& a) const { return a.size() == 1; }
  bool is_polynomial(const Poly& a) const;

  /// All exponent vectors with non-negative entries and degree d.
  std::vector<Exponent> monomials(int d) const;
  /// Uniform coefficients on every monomial of degree d (zero when d < 0).
  Poly random_homogeneous(int d, std::mt19937_64& gen) const;

  /// a / f^k for a monomial f.
  Poly divide_by_monomial(const Poly& a, const Poly& f, unsigned k) const;

  /// "2*x0^2*x1 + x1^-1" style; "0" for zero.
  std::string format(const Poly& a) const;

  bool operator==(const GradedRing& o) const { return field_ == o.field_ && degrees_ == o.degrees_; }

 private:
  K field_;
  std::vector<int> degrees_;
};

/// M = S(-g_0) + ... + S(-g_{k-1}); a degree-d element has coordinate i
/// homogeneous of degree d - g_i.
struct FreeGradedModule {
  std::vector<int> generator_degrees;
  std::size_t rank() const noexcept { return generator_degrees.size(); }
  friend bool operator==(const FreeGradedModule&, const FreeGradedModule&) = default;
};

template <Field K>
using ModuleElement = std::vector<typename GradedRing<K>::Poly>;

template <Field K>
bool is_homogeneous_element(const GradedRing<K>& ring, const FreeGradedModule& m, const ModuleElement<K>& x, int d);

template <Field K>
ModuleElement<K> random_element(const GradedRing<K>& ring, const FreeGradedModule& m, int d, std::mt19937_64& gen);

/// Multilinear map M_1 x ... x M_r -> N recorded by its values on generator
/// tuples; values are indexed with the first source most significant.
template <Field K>
class GradedMultilinearMap {
 public:
  GradedMultilinearMap(GradedRing<K> ring, std::vector<FreeGradedModule> sources, FreeGradedModule target);

  const GradedRing<K>& ring() const noexcept { return ring_; }
  const std::vector<FreeGradedModule>& sources() const noexcept { return sources_; }
  const FreeGradedModule& target() const noexcept { return target_; }
  std::size_t arity() const noexcept { return sources_.size(); }
  std::size_t size() const noexcept { return values_.size(); }

  std::size_t index(const std::vector<std::size_t>& tuple) const;
  std::vector<std::size_t> tuple(std::size_t index) const;
  int degree_sum(const std::vector<std::size_t>& tuple) const;

  const ModuleElement<K>& value(const std::vector<std::size_t>& tuple) const { return values_[index(tuple)]; }
  void set_value(const std::vector<std::size_t>& tuple, ModuleElement<K> v);
  const std::vector<ModuleElement<K>>& values() const noexcept { return values_; }

  /// Multilinear extension; arguments may carry Laurent coordinates.
  ModuleElement<K> evaluate(const std::vector<ModuleElement<K>>& args) const;

  /// Every generator value has degree equal to its generator-degree sum.
  bool generators_graded() const;

  friend bool operator==(const GradedMultilinearMap& a, const GradedMultilinearMap& b) {
    return a.sources_ == b.sources_ && a.target_ == b.target_ && a.values_ == b.values_;
  }

 private:
  GradedRing<K> ring_;
  std::vector<FreeGradedModule> sources_;
  FreeGradedModule target_;
  std::vector<ModuleElement<K>> values_;
};

/// Random map whose generator values are homogeneous of the right degree.
template <Field K>
GradedMultilinearMap<K> random_graded_map(const GradedRing<K>& ring, const std::vector<FreeGradedModule>& sources,
                                          const FreeGradedModule& target, std::mt19937_64& gen);

/// Generator audit, then degree containment and multilinearity on random
/// homogeneous inputs of degree up to `degree_bound` (0 picks
/// 2 * max generator degree + 4).
template <Field K>
bool is_graded_multilinear(const GradedMultilinearMap<K>& tau, std::size_t trials, std::uint64_t seed,
                           int degree_bound = 0);

/// An i-graded morphism M -> N[i], i >= 0: entry (j, l) is homogeneous of
/// degree g_l - n_j + i.
template <Field K>
struct StarHomElement {
  int grade = 0;
  FreeGradedModule source;
  FreeGradedModule target;
  std::vector<typename GradedRing<K>::Poly> entries;  // row-major, target.rank() x source.rank()

  const typename GradedRing<K>::Poly& entry(std::size_t j, std::size_t l) const { return entries[j * source.rank() + l]; }
  ModuleElement<K> apply(const GradedRing<K>& ring, const ModuleElement<K>& x) const;
  bool audit(const GradedRing<K>& ring) const;

  friend bool operator==(const StarHomElement&, const StarHomElement&) = default;
};

/// Theta(tau): for each generator tuple of the first r - 1 sources, the
/// morphism m_r -> tau(..., m_r) as a StarHomElement of grade equal to the
/// tuple's generator-degree sum.
template <Field K>
struct ThetaMap {
  GradedRing<K> ring;
  std::vector<FreeGradedModule> sources;  // first r - 1
  FreeGradedModule last;
  FreeGradedModule target;
  std::vector<StarHomElement<K>> values;
};

/// Throws NotGraded when tau fails the generator audit.
template <Field K>
ThetaMap<K> theta(const GradedMultilinearMap<K>& tau);

template <Field K>
GradedMultilinearMap<K> theta_inverse(const ThetaMap<K>& t);

/// Theta(tau)(m_1, ..., m_{r-1}) for homogeneous arguments of the given degrees.
template <Field K>
StarHomElement<K> theta_apply(const ThetaMap<K>& t, const std::vector<ModuleElement<K>>& args,
                              const std::vector<int>& degrees);

/// Degree-zero localization of a graded morphism at a monomial f, in Laurent
/// coordinates: m / f^k maps to phi(m) / f^(n + k), i.e. the matrix Phi / f^n.
template <Field K>
struct ChartMap {
  typename GradedRing<K>::Poly f;
  FreeGradedModule source;
  FreeGradedModule target;
  std::vector<typename GradedRing<K>::Poly> entries;  // row-major, Laurent

  ModuleElement<K> apply(const GradedRing<K>& ring, const ModuleElement<K>& x) const;
  friend bool operator==(const ChartMap&, const ChartMap&) = default;
};

/// Throws GradeMismatch unless deg f divides the grade, UnsupportedRing
/// unless f is a monomial of positive degree.
template <Field K>
ChartMap<K> localize_deg0_map(const GradedRing<K>& ring, const StarHomElement<K>& phi,
                              const typename GradedRing<K>::Poly& f);

/// The chart map on D+(f) restricted to D+(fg). In Laurent coordinates the
/// restriction M_(f) -> M_(fg) is the identity, so only the chart changes.
template <Field K>
ChartMap<K> restrict_chart(const GradedRing<K>& ring, const ChartMap<K>& c, const typename GradedRing<K>::Poly& g);

/// Localize at f then restrict to D+(fg), against localizing g^n phi at fg.
template <Field K>
bool restriction_check(const GradedRing<K>& ring, const StarHomElement<K>& phi, const typename GradedRing<K>::Poly& f,
                       const typename GradedRing<K>::Poly& g);

/// Degree-zero Laurent monomials m / f^k (k <= max_power, m a monomial of
/// degree k deg f) that are not products of two nontrivial such monomials:
/// generators of the chart ring S_(f). max_power = 0 picks the product of the
/// variable degrees.
template <Field K>
std::vector<Exponent> chart_generators(const GradedRing<K>& ring, const typename GradedRing<K>::Poly& f,
                                       unsigned max_power = 0);

/// Whether a Laurent polynomial lies in S_(f): degree zero, with negative
/// exponents only where f has positive ones.
template <Field K>
bool in_chart_ring(const GradedRing<K>& ring, const typename GradedRing<K>::Poly& f,
                   const typename GradedRing<K>::Poly& x);

/// The multilinear map induced on the charts D+(f).
template <Field K>
class ChartMultilinear {
 public:
  ChartMultilinear(GradedMultilinearMap<K> tau, typename GradedRing<K>::Poly f);

  const typename GradedRing<K>::Poly& f() const noexcept { return f_; }
  /// Direct localization: tau applied to Laurent coordinates.
  ModuleElement<K> evaluate_direct(const std::vector<ModuleElement<K>>& xs) const;
  /// Through the adjunction: clear denominators of x_1..x_{r-1}, apply
  /// Theta(tau), localize the resulting morphism at f, apply it to x_r.
  ModuleElement<K> evaluate_adjunction(const std::vector<ModuleElement<K>>& xs) const;

  /// Random chart element of M_(f): m / f^c with m homogeneous of degree c deg f.
  ModuleElement<K> random_chart_element(const FreeGradedModule& m, std::mt19937_64& gen, unsigned max_power = 2) const;

 private:
  GradedMultilinearMap<K> tau_;
  ThetaMap<K> theta_;
  typename GradedRing<K>::Poly f_;
  int f_degree_;
};

struct ChartPathReport {
  std::size_t checks = 0;
  std::size_t failures = 0;
  bool ok() const noexcept { return failures == 0; }
};

/// Compares the two chart paths on random chart inputs.
template <Field K>
ChartPathReport chart_path_check(const GradedMultilinearMap<K>& tau, const typename GradedRing<K>::Poly& f,
                                 std::size_t trials, std::uint64_t seed);

#define WEDGECRYS_GRADED_EXTERN(K)                                                                              \
  extern template class GradedRing<K>;                                                                          \
  extern template class GradedMultilinearMap<K>;                                                                \
  extern template struct StarHomElement<K>;                                                                     \
  extern template struct ChartMap<K>;                                                                           \
  extern template class ChartMultilinear<K>;                                                                    \
  extern template bool is_homogeneous_element<K>(const GradedRing<K>&, const FreeGradedModule&,                \
                                                 const ModuleElement<K>&, int);                                 \
  extern template ModuleElement<K> random_element<K>(const GradedRing<K>&, const FreeGradedModule&, int,       \
                                                     std::mt19937_64&);                                         \
  extern template GradedMultilinearMap<K> random_graded_map<K>(const GradedRing<K>&,                           \
                                                               const std::vector<FreeGradedModule>&,            \
                                                               const FreeGradedModule&, std::mt19937_64&);      \
  extern template bool is_graded_multilinear<K>(const GradedMultilinearMap<K>&, std::size_t, std::uint64_t, int); \
  extern template ThetaMap<K> theta<K>(const GradedMultilinearMap<K>&);                                         \
  extern template GradedMultilinearMap<K> theta_inverse<K>(const ThetaMap<K>&);                                 \
  extern template StarHomElement<K> theta_apply<K>(const ThetaMap<K>&, const std::vector<ModuleElement<K>>&,    \
                                                   const std::vector<int>&);                                    \
  extern template ChartMap<K> localize_deg0_map<K>(const GradedRing<K>&, const StarHomElement<K>&,              \
                                                   const typename GradedRing<K>::Poly&);                        \
  extern template ChartMap<K> restrict_chart<K>(const GradedRing<K>&, const ChartMap<K>&,                       \
                                                const typename GradedRing<K>::Poly&);                           \
  extern template bool restriction_check<K>(const GradedRing<K>&, const StarHomElement<K>&,                     \
                                            const typename GradedRing<K>::Poly&,                                \
                                            const typename GradedRing<K>::Poly&);                               \
  extern template std::vector<Exponent> chart_generators<K>(const GradedRing<K>&,                              \
                                                            const typename GradedRing<K>::Poly&, unsigned);     \
  extern template bool in_chart_ring<K>(const GradedRing<K>&, const typename GradedRing<K>::Poly&,              \
                                        const typename GradedRing<K>::Poly&);                                   \
  extern template ChartPathReport chart_path_check<K>(const GradedMultilinearMap<K>&,                           \
                                                      const typename GradedRing<K>::Poly&, std::size_t,          \
                                                      std::uint64_t);

WEDGECRYS_GRADED_EXTERN(FiniteField)
WEDGECRYS_GRADED_EXTERN(Rationals)

#undef WEDGECRYS_GRADED_EXTERN

}  // namespace wedgecrys
