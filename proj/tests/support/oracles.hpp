#pragma once

// Brute-force reference computations. Nothing here calls the library's
// determinant, compound, reduction or Newton polygon code.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include <gmpxx.h>

#include "wedgecrys/matrix.hpp"

namespace oracle {

/// Leibniz expansion over any ring.
template <class R>
typename R::Element leibniz_det(const R& ring, const std::vector<std::vector<typename R::Element>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return ring.one();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  auto total = ring.zero();
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    auto term = ring.one();
    for (std::size_t i = 0; i < n; ++i) term = ring.mul(term, a[i][perm[i]]);
    total = inversions % 2 ? ring.sub(total, term) : ring.add(total, term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// r-subsets of {0..n-1} in lexicographic order, by bitmask filtering.
inline std::vector<std::vector<std::size_t>> lex_subsets(std::size_t n, std::size_t r) {
  std::vector<std::vector<std::size_t>> out;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != r) continue;
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1U << i)) s.push_back(i);
    out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

template <class R>
std::vector<std::vector<typename R::Element>> rows_of(const wedgecrys::Matrix<R>& a) {
  std::vector<std::vector<typename R::Element>> out(a.rows(), std::vector<typename R::Element>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i][j] = a(i, j);
  return out;
}

template <class R>
typename R::Element minor(const wedgecrys::Matrix<R>& a, const std::vector<std::size_t>& rs,
                          const std::vector<std::size_t>& cs) {
  std::vector<std::vector<typename R::Element>> sub(rs.size(), std::vector<typename R::Element>(cs.size()));
  for (std::size_t i = 0; i < rs.size(); ++i)
    for (std::size_t j = 0; j < cs.size(); ++j) sub[i][j] = a(rs[i], cs[j]);
  return leibniz_det(a.ring(), sub);
}

template <class R>
std::vector<std::vector<typename R::Element>> compound(const wedgecrys::Matrix<R>& a, std::size_t d) {
  const auto rs = lex_subsets(a.rows(), d);
  const auto cs = lex_subsets(a.cols(), d);
  std::vector<std::vector<typename R::Element>> out(rs.size(), std::vector<typename R::Element>(cs.size()));
  for (std::size_t i = 0; i < rs.size(); ++i)
    for (std::size_t j = 0; j < cs.size(); ++j) out[i][j] = minor(a, rs[i], cs[j]);
  return out;
}

/// Classification of the ideal of i-minors over a local ring by brute force.
enum class Ideal { Unit, Zero, Proper };

template <class R>
Ideal minors_ideal(const wedgecrys::Matrix<R>& a, std::size_t i) {
  if (i == 0) return Ideal::Unit;
  if (i > a.rows() || i > a.cols()) return Ideal::Zero;
  bool zero = true;
  for (const auto& rs : lex_subsets(a.rows(), i))
    for (const auto& cs : lex_subsets(a.cols(), i)) {
      const auto m = minor(a, rs, cs);
      if (a.ring().is_unit(m)) return Ideal::Unit;
      if (!a.ring().is_zero(m)) zero = false;
    }
  return zero ? Ideal::Zero : Ideal::Proper;
}

/// Classical rank over a local ring when defined, -1 otherwise.
template <class R>
int brute_rank(const wedgecrys::Matrix<R>& a) {
  const std::size_t k = std::min(a.rows(), a.cols());
  for (std::size_t r = 0; r <= k; ++r)
    if (minors_ideal(a, r) == Ideal::Unit && minors_ideal(a, r + 1) == Ideal::Zero) return static_cast<int>(r);
  return -1;
}

// ---------------------------------------------------------------------------
// Dense vectors over Z/N, encoded as integers in base N for set membership.

struct ZmodVectors {
  long N;
  std::size_t n;

  long count() const {
    long c = 1;
    for (std::size_t i = 0; i < n; ++i) c *= N;
    return c;
  }
  std::vector<long> decode(long code) const {
    std::vector<long> v(n);
    for (std::size_t i = 0; i < n; ++i) {
      v[i] = code % N;
      code /= N;
    }
    return v;
  }
  long encode(const std::vector<long>& v) const {
    long code = 0;
    for (std::size_t i = n; i-- > 0;) code = code * N + ((v[i] % N) + N) % N;
    return code;
  }
};

/// Every x in (Z/N)^cols with A x = 0.
inline std::set<long> brute_kernel(const std::vector<std::vector<long>>& a, long N, std::size_t cols) {
  ZmodVectors vs{N, cols};
  std::set<long> out;
  for (long code = 0; code < vs.count(); ++code) {
    const auto x = vs.decode(code);
    bool zero = true;
    for (const auto& row : a) {
      long s = 0;
      for (std::size_t j = 0; j < cols; ++j) s = (s + row[j] * x[j]) % N;
      if (s != 0) {
        zero = false;
        break;
      }
    }
    if (zero) out.insert(code);
  }
  return out;
}

/// Span over Z/N of the given vectors, by closure.
inline std::set<long> brute_span(const std::vector<std::vector<long>>& gens, long N, std::size_t n) {
  ZmodVectors vs{N, n};
  std::set<long> span{0};
  for (const auto& g : gens) {
    std::set<long> next;
    for (long code : span) {
      auto base = vs.decode(code);
      for (long c = 0; c < N; ++c) {
        std::vector<long> v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = base[i] + c * g[i];
        next.insert(vs.encode(v));
      }
    }
    span = std::move(next);
  }
  return span;
}

// ---------------------------------------------------------------------------
// Polynomials over F_p as coefficient vectors, lowest degree first.

using Poly = std::vector<long>;

inline Poly trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

inline Poly poly_mod(Poly a, const Poly& m, long p) {
  a = trim(a);
  const long inv_lead = [&] {
    for (long x = 1; x < p; ++x)
      if ((m.back() * x) % p == 1) return x;
    return 0L;
  }();
  while (a.size() >= m.size()) {
    const long c = (a.back() * inv_lead) % p;
    const std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) a[shift + i] = ((a[shift + i] - c * m[i]) % p + p) % p;
    a = trim(a);
  }
  return a;
}

inline Poly poly_mul(const Poly& a, const Poly& b, long p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  return trim(out);
}

/// Trial division by every monic polynomial of degree 1..deg/2.
inline bool irreducible(const Poly& f, long p) {
  const std::size_t deg = f.size() - 1;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    long total = 1;
    for (std::size_t i = 0; i < d; ++i) total *= p;
    for (long code = 0; code < total; ++code) {
      Poly g(d + 1, 0);
      long c = code;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = c % p;
        c /= p;
      }
      g[d] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

/// Multiplicative order of x modulo f.
inline long order_of_x(const Poly& f, long p) {
  Poly x{0, 1};
  Poly cur = poly_mod(x, f, p);
  for (long k = 1; k < 1'000'000; ++k) {
    if (cur == Poly{1}) return k;
    cur = poly_mod(poly_mul(cur, x, p), f, p);
  }
  return -1;
}

// ---------------------------------------------------------------------------
// Newton polygons.

/// Slopes (with repetition) of the lower convex hull of (k, v_k), k = 0..n;
/// negative v_k means "no point".
inline std::vector<mpq_class> lower_hull_slopes(const std::vector<long>& v) {
  std::vector<std::pair<long, long>> pts;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (v[k] >= 0) pts.emplace_back(static_cast<long>(k), v[k]);
  std::vector<mpq_class> out;
  std::size_t i = 0;
  while (i + 1 < pts.size()) {
    // Smallest slope from pts[i]; ties go to the farthest point.
    std::size_t best = i + 1;
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      mpq_class sj(pts[j].second - pts[i].second, pts[j].first - pts[i].first);
      mpq_class sb(pts[best].second - pts[i].second, pts[best].first - pts[i].first);
      sj.canonicalize();
      sb.canonicalize();
      if (sj < sb || (sj == sb && j > best)) best = j;
    }
    mpq_class s(pts[best].second - pts[i].second, pts[best].first - pts[i].first);
    s.canonicalize();
    for (long k = pts[i].first; k < pts[best].first; ++k) out.push_back(s);
    i = best;
  }
  return out;
}

/// {l_i1 + ... + l_ir - (r - 1)} over all r-subsets, sorted.
inline std::vector<mpq_class> subset_sums(const std::vector<mpq_class>& slopes, std::size_t r) {
  std::vector<mpq_class> out;
  for (const auto& s : lex_subsets(slopes.size(), r)) {
    mpq_class t = -static_cast<long>(r - 1);
    for (auto i : s) t += slopes[i];
    out.push_back(t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline long binom(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace oracle
