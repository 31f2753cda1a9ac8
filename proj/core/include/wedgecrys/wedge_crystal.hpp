#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wedgecrys/dieudonne.hpp"

namespace wedgecrys {

/// wedge^r of an isocrystal: matrix compound(M, r), shift r e + (r - 1), so
/// that F_w = p^{-(r-1)} wedge^r F. For r = 1 the input is returned.
Isocrystal wedge_isocrystal(const Isocrystal& c, std::size_t r);
Isocrystal wedge_isocrystal(const DieudonneModule& d, std::size_t r);

/// wedge^r as a Dieudonne module when it is one: V_w = wedge^r MV is always
/// integral, F_w = p^{-(r-1)} wedge^r MF is integral iff p^{r-1} divides every
/// r-minor of MF. The result lives at precision m - (r - 1).
std::optional<DieudonneModule> wedge_dieudonne(const DieudonneModule& d, std::size_t r);

struct CompatReport {
  std::size_t trials = 0;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string first_failure;
  bool ok() const noexcept { return failures == 0; }
};

/// For random x_1..x_r and every slot i, checks
///   F_w(V x_1 ^ .. ^ x_i ^ .. ^ V x_r) = x_1 ^ .. ^ F x_i ^ .. ^ x_r
/// in the form wedge^r MF phi(lhs) = p^shift rhs, with shift = r - 1, or 0
/// for the negative control.
CompatReport multilinear_compat_check(const DieudonneModule& d, std::size_t r, std::size_t trials,
                                      std::uint64_t seed, bool wrong_shift = false);

/// A vector with F v = p^{degree + 1} v modulo p^precision.
struct GradedVector {
  WVector vec;
  int degree = 0;
  int precision = 0;
};

/// Whether M phi(v) = p^{degree + 1 + shift} v modulo p^eff_precision.
bool has_degree(const Isocrystal& c, const WVector& v, int degree);

/// Verifies and wraps; throws DegreeViolation.
GradedVector make_graded_vector(const Isocrystal& c, WVector v, int degree);

/// The wedge of r graded vectors, of degree sum(d_i) in wedge_isocrystal(c, r),
/// verified before it is returned; throws DegreeViolation.
GradedVector graded_wedge(const Isocrystal& c, const std::vector<GradedVector>& vs);

/// graded_wedge on every increasing r-subset of vs, in lexicographic order.
/// All inputs must share one degree (GradeMismatch otherwise).
std::vector<GradedVector> lambda_r_sections(const Isocrystal& c, const std::vector<GradedVector>& vs, std::size_t r);

struct DimHeight {
  int height = 0;
  int dim = 0;
  int expected_dim = 0;  // C(h-1, r-1) * dim
  bool ok() const noexcept { return dim == expected_dim; }
};

/// Height and dimension of wedge^r of the standard module, from
/// v_p(det wedge^r MF) at precision m (default h a + 2). Requires dim <= 1.
DimHeight dim_height_check(const GroupDescriptor& desc, std::size_t r, long p = 3, int a = 1, int m = 0);

/// Slope multiset {l_i1 + ... + l_ir - (r - 1) : i1 < ... < ir}.
NewtonPolygon slope_transform(const NewtonPolygon& np, std::size_t r);

struct MuCheck {
  bool rank_one = false;
  bool slope_zero = false;
  bool unit_entry = false;  // det MF / p^{h-1} is a unit
  bool ok() const noexcept { return rank_one && slope_zero && unit_entry; }
};

/// wedge^h of the standard module of height h and dimension 1 against mu,
/// over W(F_{p^a}) at the precision the slopes need.
MuCheck mu_check(int h, long p = 3, int a = 1);

/// Precision that makes wedge slopes and dimensions computable:
/// max(a C(h-1,r-1)(h-dim), a C(h,r)) + 1.
int required_wedge_precision(const GroupDescriptor& desc, std::size_t r, int a);

struct WedgeReport {
  GroupDescriptor source;
  std::size_t r = 1;
  long p = 3;
  int a = 1;
  int m = 0;
  int height = 0;
  int dim = 0;
  NewtonPolygon slopes;
  std::optional<bool> mu_check;  // present when r = h
};

/// Throws BadDescriptor for dim > 1 and PrecisionExhausted (with the required
/// precision) when m is too small. m = 0 picks the required precision.
WedgeReport wedge_report(const GroupDescriptor& desc, std::size_t r, long p, int a, int m = 0);

}  // namespace wedgecrys
