#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "wedgecrys/matrix.hpp"
#include "wedgecrys/modulus_ring.hpp"
#include "wedgecrys/witt_ring.hpp"

namespace wedgecrys {

using WMatrix = Matrix<WittRing>;
using WVector = std::vector<WittRing::Element>;

/// phi^k applied to every entry.
WMatrix frobenius_entries(const WMatrix& a, int k = 1);
WVector frobenius_entries(const WittRing& ring, const WVector& v, int k = 1);

/// Height and dimension of a p-divisible group, with an optional standard name:
/// "mu" (1,1), "QpZp" (1,0), "LT_h" (h,1), otherwise "G(h,dim)".
struct GroupDescriptor {
  int h = 0;
  int dim = 0;

  /// Throws BadDescriptor unless 0 <= dim <= h.
  static GroupDescriptor make(int h, int dim);
  static GroupDescriptor mu() { return make(1, 1); }
  static GroupDescriptor qpzp() { return make(1, 0); }
  static GroupDescriptor lubin_tate(int h) { return make(h, 1); }
  /// Accepts the names above; throws BadDescriptor.
  static GroupDescriptor parse(const std::string& name);

  std::string name() const;
  friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;
};

/// Free module of rank h over W(F_q)/p^m with F(v) = MF phi(v) and
/// V(v) = MV phi^{-1}(v).
class DieudonneModule {
 public:
  DieudonneModule(WittRing ring, WMatrix mf, WMatrix mv);

  const WittRing& ring() const noexcept { return ring_; }
  std::size_t rank() const noexcept { return mf_.rows(); }
  const WMatrix& mf() const noexcept { return mf_; }
  const WMatrix& mv() const noexcept { return mv_; }

 private:
  WittRing ring_;
  WMatrix mf_;
  WMatrix mv_;
};

struct AxiomReport {
  bool fv_ok = false;  // MF phi(MV) = p I
  bool vf_ok = false;  // MV phi^{-1}(MF) = p I
  std::string diagnostic;
  bool ok() const noexcept { return fv_ok && vf_ok; }
};

AxiomReport verify_axioms(const DieudonneModule& d);

/// Standard module of the given height and dimension: a direct sum of
/// gcd(h, h-dim) copies of the simple module of slope (h-dim)/h. The simple
/// block of slope s/t is the weighted cycle F e_i = w_i e_{i+1 mod t} with
/// w_i = 1 for i < t-s and w_i = p otherwise, and V e_{i+1} = (p/w_i) e_i.
DieudonneModule make_standard(const GroupDescriptor& desc, const WittRing& ring);

DieudonneModule direct_sum(const DieudonneModule& a, const DieudonneModule& b);

/// Change of basis by an invertible U: MF' = U MF phi(U)^{-1},
/// MV' = U MV phi^{-1}(U^{-1}). Throws NotInvertible.
DieudonneModule conjugate(const DieudonneModule& d, const WMatrix& u);

/// Random matrix with unit determinant.
WMatrix random_unimodular(const WittRing& ring, std::size_t n, std::mt19937_64& gen);

WVector apply_F(const DieudonneModule& d, const WVector& v);
WVector apply_V(const DieudonneModule& d, const WVector& v);

/// Rank-n module with Frobenius p^{-shift} M phi, meaningful modulo
/// p^eff_precision.
class Isocrystal {
 public:
  Isocrystal(WittRing ring, WMatrix m, int shift, int eff_precision);
  /// Forgets V: M = MF, shift 0, full precision.
  static Isocrystal from_dieudonne(const DieudonneModule& d);

  const WittRing& ring() const noexcept { return ring_; }
  std::size_t rank() const noexcept { return m_.rows(); }
  const WMatrix& matrix() const noexcept { return m_; }
  int shift() const noexcept { return shift_; }
  int eff_precision() const noexcept { return eff_precision_; }

 private:
  WittRing ring_;
  WMatrix m_;
  int shift_;
  int eff_precision_;
};

/// A vector known modulo p^precision; entries are reduced into [0, p^precision).
struct IsoVector {
  WVector vec;
  int precision = 0;
};

/// p^{-shift} M phi(v), dividing exactly; PrecisionExhausted when M phi(v) is
/// not divisible by p^shift at the working precision.
IsoVector apply_F(const Isocrystal& c, const WVector& v);

/// Newton polygon as ascending (slope, multiplicity) segments.
struct NewtonPolygon {
  struct Segment {
    mpq_class slope;
    std::size_t mult = 0;
    friend bool operator==(const Segment&, const Segment&) = default;
  };
  std::vector<Segment> segments;

  /// Aggregates an unsorted slope multiset.
  static NewtonPolygon from_slopes(std::vector<mpq_class> slopes);
  std::vector<mpq_class> multiset() const;
  std::size_t rank() const;
  /// Sum of slope * multiplicity.
  mpq_class total() const;
  std::string to_string() const;

  friend bool operator==(const NewtonPolygon&, const NewtonPolygon&) = default;
};

/// Lower convex hull slopes of the points (k, v(c_k)), k = 0..n, for
/// c_0 = 1, c_1, ..., c_n; bottom valuations (>= precision) are tolerated only
/// where the hull stays at or below the precision. Throws PrecisionExhausted.
NewtonPolygon newton_polygon(const std::vector<Valuation>& coeff_valuations, int precision);

/// M phi(M) ... phi^{a-1}(M).
WMatrix twisted_product(const WMatrix& m);

/// Slopes of the isocrystal: Newton polygon of det(T - L) for the twisted
/// product L, divided by a, minus the shift. Requires eff_precision > n a.
NewtonPolygon slopes(const Isocrystal& c);
NewtonPolygon slopes(const DieudonneModule& d);

/// v_p(det M) as the sum of the Smith valuations. Every Smith entry below the
/// precision is exact, so the sum itself may exceed it. PrecisionExhausted
/// when some Smith entry vanishes.
int det_valuation(const WMatrix& m, int precision);

/// h - v_p(det MF).
int dimension(const DieudonneModule& d);
inline int height(const DieudonneModule& d) { return static_cast<int>(d.rank()); }

/// Basis of {x : F x = p^c x} as a module over Z/p^precision.
struct Eigenspace {
  int precision = 0;          // m' = eff_precision - c - shift
  std::vector<WVector> basis; // Howell basis of the reduction mod p^m'
  std::vector<WVector> raw;   // Howell basis of the solutions mod p^eff_precision
  /// Pivot valuations of `basis`.
  std::vector<int> pivot_valuations;
  /// Smith valuations of `basis` over Z/p^precision, zero entries dropped.
  std::vector<int> invariants;

  std::size_t rank() const noexcept { return basis.size(); }
  /// Number of free Z/p^precision summands.
  std::size_t free_rank() const;
};

/// Linearises M phi - p^{c+shift} over the coordinates of W(F_q)/p^m as a
/// Z/p^m-matrix of size (a n) x (a n) and takes its Howell kernel.
Eigenspace eigenspace(const Isocrystal& c, int exponent);
Eigenspace eigenspace(const DieudonneModule& d, int exponent);

/// The (a n) x (a n) matrix over Z/p^precision of x -> M phi(x) - p^k x in
/// coordinates (entry-major: coordinate s of entry j is index j a + s).
Matrix<ModulusRing> linearised_operator(const WMatrix& m, int k, int precision);

/// Coordinates of v over Z/p^precision and back.
std::vector<mpz_class> to_coordinates(const WittRing& ring, const WVector& v);
WVector from_coordinates(const WittRing& ring, const std::vector<mpz_class>& coords);

}  // namespace wedgecrys
