#pragma once

// Brute-force verifiers. Nothing here calls into the partition, enumerative
// or Ehrhart formula code; inputs are plain points and inequalities.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <utility>
#include <vector>

#include "pfpoly/core.hpp"
#include "pfpoly/preposet.hpp"

namespace pfpoly::oracle {

/// coeffs . x <= rhs
struct Inequality {
  std::vector<Rational> coeffs;
  Rational rhs;
};

namespace detail {

inline Integer floor_of(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

inline Integer ceil_of(const Rational& r) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

}  // namespace detail

/// |Z^n ∩ tP| for P = {x : A x <= b}, by pruned box enumeration.
inline Integer lattice_count(const std::vector<Inequality>& ineqs, long t) {
  if (ineqs.empty()) throw InvalidInput("no inequalities");
  if (t < 0) throw InvalidInput("negative dilation");
  const std::size_t n = ineqs[0].coeffs.size();
  std::vector<std::optional<Rational>> lo(n), hi(n);
  for (const auto& q : ineqs) {
    int nz = -1, count = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (q.coeffs[i] != 0) {
        nz = static_cast<int>(i);
        ++count;
      }
    if (count != 1) continue;
    const auto i = static_cast<std::size_t>(nz);
    const Rational bound = t * q.rhs / q.coeffs[i];
    if (q.coeffs[i] < 0) {
      if (!lo[i] || bound > *lo[i]) lo[i] = bound;
    } else if (!hi[i] || bound < *hi[i]) {
      hi[i] = bound;
    }
  }
  // Upper bounds from inequalities whose other terms are bounded below.
  for (const auto& q : ineqs)
    for (std::size_t i = 0; i < n; ++i) {
      if (q.coeffs[i] <= 0) continue;
      Rational rest = t * q.rhs;
      bool ok = true;
      for (std::size_t j = 0; j < n && ok; ++j) {
        if (j == i || q.coeffs[j] == 0) continue;
        if (q.coeffs[j] > 0 && lo[j]) rest -= q.coeffs[j] * *lo[j];
        else ok = false;
      }
      if (!ok) continue;
      const Rational bound = rest / q.coeffs[i];
      if (!hi[i] || bound < *hi[i]) hi[i] = bound;
    }
  std::vector<Integer> L(n), U(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!lo[i] || !hi[i]) throw InvalidInput("unbounded region");
    L[i] = detail::ceil_of(*lo[i]);
    U[i] = detail::floor_of(*hi[i]);
    if (L[i] > U[i]) return 0;
  }
  // Minimal contribution of coordinates k..n-1 to each inequality.
  std::vector<std::vector<Rational>> tail_min(ineqs.size(), std::vector<Rational>(n + 1, Rational(0)));
  for (std::size_t q = 0; q < ineqs.size(); ++q)
    for (std::size_t k = n; k-- > 0;) {
      const Rational& a = ineqs[q].coeffs[k];
      tail_min[q][k] = tail_min[q][k + 1] + (a >= 0 ? a * Rational(L[k]) : a * Rational(U[k]));
    }
  std::vector<Rational> partial(ineqs.size(), Rational(0));
  std::vector<Rational> rhs;
  for (const auto& q : ineqs) rhs.push_back(t * q.rhs);
  Integer count = 0;
  // Each inequality, given the prefix and the cheapest tail, bounds x_k to
  // an interval; the last coordinate is counted without enumeration.
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    Integer lo_k = L[k], hi_k = U[k];
    for (std::size_t q = 0; q < ineqs.size(); ++q) {
      const Rational& a = ineqs[q].coeffs[k];
      if (a == 0) continue;
      const Rational slack = rhs[q] - partial[q] - tail_min[q][k + 1];
      if (a > 0) {
        const Integer h = detail::floor_of(slack / a);
        if (h < hi_k) hi_k = h;
      } else {
        const Integer l = detail::ceil_of(slack / a);
        if (l > lo_k) lo_k = l;
      }
      if (lo_k > hi_k) return;
    }
    if (k + 1 == n) {
      // the zero-coefficient inequalities still need the prefix to fit
      for (std::size_t q = 0; q < ineqs.size(); ++q)
        if (ineqs[q].coeffs[k] == 0 && partial[q] > rhs[q]) return;
      count += hi_k - lo_k + 1;
      return;
    }
    for (Integer x = lo_k; x <= hi_k; ++x) {
      const Rational xr(x);
      for (std::size_t q = 0; q < ineqs.size(); ++q)
        if (ineqs[q].coeffs[k] != 0) partial[q] += ineqs[q].coeffs[k] * xr;
      rec(k + 1);
      for (std::size_t q = 0; q < ineqs.size(); ++q)
        if (ineqs[q].coeffs[k] != 0) partial[q] -= ineqs[q].coeffs[k] * xr;
    }
  };
  rec(0);
  return count;
}

/// Whether A x = b, x >= 0 has a solution (exact two-phase simplex, phase
/// one only, Bland's rule).
inline bool feasible(std::vector<std::vector<Rational>> A, std::vector<Rational> b) {
  const std::size_t rows = A.size();
  if (rows == 0) return true;
  const std::size_t cols = A[0].size();
  for (std::size_t r = 0; r < rows; ++r)
    if (b[r] < 0) {
      for (auto& x : A[r]) x = -x;
      b[r] = -b[r];
    }
  // tableau: [A | I | b], artificial columns cols..cols+rows-1
  const std::size_t width = cols + rows;
  std::vector<std::vector<Rational>> T(rows, std::vector<Rational>(width + 1, Rational(0)));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) T[r][c] = A[r][c];
    T[r][cols + r] = 1;
    T[r][width] = b[r];
  }
  std::vector<std::size_t> basis(rows);
  for (std::size_t r = 0; r < rows; ++r) basis[r] = cols + r;
  // reduced costs of minimizing the sum of artificials
  std::vector<Rational> cost(width + 1, Rational(0));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c <= width; ++c)
      if (c < cols || c == width) cost[c] -= T[r][c];
  for (;;) {
    std::size_t enter = width;
    for (std::size_t c = 0; c < width; ++c)
      if (cost[c] < 0) {
        enter = c;
        break;
      }
    if (enter == width) break;
    std::size_t leave = rows;
    Rational best;
    for (std::size_t r = 0; r < rows; ++r) {
      if (T[r][enter] <= 0) continue;
      const Rational ratio = T[r][width] / T[r][enter];
      if (leave == rows || ratio < best || (ratio == best && basis[r] < basis[leave])) {
        leave = r;
        best = ratio;
      }
    }
    if (leave == rows) break;  // cannot happen: the objective is bounded below
    const Rational piv = T[leave][enter];
    for (auto& x : T[leave]) x /= piv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == leave || T[r][enter] == 0) continue;
      const Rational f = T[r][enter];
      for (std::size_t c = 0; c <= width; ++c) T[r][c] -= f * T[leave][c];
    }
    const Rational f = cost[enter];
    for (std::size_t c = 0; c <= width; ++c) cost[c] -= f * T[leave][c];
    basis[leave] = enter;
  }
  return cost[width] == 0;
}

/// p in conv(S)?
inline bool in_convex_hull(const Point& p, const std::vector<Point>& S) {
  if (S.empty()) return false;
  const std::size_t n = p.size();
  std::vector<std::vector<Rational>> A(n + 1, std::vector<Rational>(S.size(), Rational(0)));
  std::vector<Rational> b(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t s = 0; s < S.size(); ++s) A[i][s] = S[s][i];
    b[i] = p[i];
  }
  for (std::size_t s = 0; s < S.size(); ++s) A[n][s] = 1;
  b[n] = 1;
  return feasible(std::move(A), std::move(b));
}

namespace detail {

/// p not in conv(S \ {p}), with `all` = set(S) and `centroid` of S shared
/// across calls. Midpoint witnesses settle most non-extreme points, a
/// perceptron separator most extreme ones, and the exact LP the rest.
inline bool is_extreme_in(const Point& p, const std::set<Point>& all, const Point& centroid) {
  const std::size_t n = p.size();
  auto mirrored = [&](const Point& q) {
    if (q == p) return false;
    Point r(n);
    for (std::size_t i = 0; i < n; ++i) r[i] = 2 * p[i] - q[i];
    return r != p && all.count(r) > 0;
  };
  // short directions e_i and e_i - e_j first
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= n; ++j) {
      if (j == i) continue;
      Point q = p;
      q[i] += 1;
      if (j < n) q[j] -= 1;
      if (all.count(q) && mirrored(q)) return false;
    }
  for (const auto& q : all)
    if (mirrored(q)) return false;
  // perceptron steps c += p - q on violators, starting from p - centroid;
  // any strict separator certifies extremality without the LP
  Point c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = p[i] - centroid[i];
  for (int step = 0; step < 64 * static_cast<int>(n); ++step) {
    const Rational cp = dot(c, p);
    auto bad = std::find_if(all.begin(), all.end(), [&](const Point& q) { return q != p && !(dot(c, q) < cp); });
    if (bad == all.end()) return true;
    for (std::size_t i = 0; i < n; ++i) c[i] += p[i] - (*bad)[i];
  }
  std::vector<Point> rest;
  for (const auto& q : all)
    if (q != p) rest.push_back(q);
  return !in_convex_hull(p, rest);
}

inline Point centroid(const std::set<Point>& pts, std::size_t n) {
  Point g(n, Rational(0));
  for (const auto& q : pts)
    for (std::size_t i = 0; i < n; ++i) g[i] += q[i];
  if (!pts.empty())
    for (auto& x : g) x /= static_cast<long>(pts.size());
  return g;
}

}  // namespace detail

/// p not in conv(S \ {p}).
inline bool is_extreme(const Point& p, const std::vector<Point>& S) {
  std::set<Point> all(S.begin(), S.end());
  all.insert(p);
  return detail::is_extreme_in(p, all, detail::centroid(all, p.size()));
}

/// The extreme points of S, sorted and deduplicated.
inline std::vector<Point> extreme_points(const std::vector<Point>& S) {
  std::set<Point> all(S.begin(), S.end());
  if (all.empty()) return {};
  const Point g = detail::centroid(all, all.begin()->size());
  std::vector<Point> out;
  for (const auto& p : all)
    if (detail::is_extreme_in(p, all, g)) out.push_back(p);
  return out;
}

/// Affine dimension of a point set (-1 when empty).
inline int affine_dimension(const std::vector<Point>& pts) {
  if (pts.empty()) return -1;
  std::vector<std::vector<Rational>> M;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    std::vector<Rational> row(pts[0].size());
    for (std::size_t k = 0; k < row.size(); ++k) row[k] = pts[i][k] - pts[0][k];
    M.push_back(std::move(row));
  }
  int rank = 0;
  const std::size_t cols = pts[0].size();
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(M.size()); ++c) {
    std::size_t piv = static_cast<std::size_t>(rank);
    while (piv < M.size() && M[piv][c] == 0) ++piv;
    if (piv == M.size()) continue;
    std::swap(M[piv], M[static_cast<std::size_t>(rank)]);
    const auto& P = M[static_cast<std::size_t>(rank)];
    for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < M.size(); ++r) {
      if (M[r][c] == 0) continue;
      const Rational f = M[r][c] / P[c];
      for (std::size_t k = c; k < cols; ++k) M[r][k] -= f * P[k];
    }
    ++rank;
  }
  return rank;
}

struct FaceLattice {
  /// vertex index sets of the nonempty faces, sorted by (dimension, set)
  std::vector<std::vector<int>> faces;
  std::vector<int> dims;
  /// (i, j): face i is a facet of face j
  std::vector<std::pair<int, int>> covers;
  /// indices of the inequalities that define facets
  std::vector<int> facet_inequalities;

  std::vector<long> f_vector() const {
    std::vector<long> f;
    for (int d : dims) {
      if (d >= static_cast<int>(f.size())) f.resize(static_cast<std::size_t>(d) + 1, 0);
      ++f[static_cast<std::size_t>(d)];
    }
    return f;
  }
};

/// Faces as intersections of facet vertex sets, graded by affine dimension.
inline FaceLattice face_lattice_from_incidence(const std::vector<Point>& V, const std::vector<Inequality>& F) {
  if (V.empty()) throw InvalidInput("no vertices");
  const std::size_t n = V[0].size();
  if (affine_dimension(V) != static_cast<int>(n)) throw InvalidInput("polytope is not full-dimensional");
  using Set = std::vector<bool>;
  auto points_of = [&](const Set& s) {
    std::vector<Point> out;
    for (std::size_t i = 0; i < s.size(); ++i)
      if (s[i]) out.push_back(V[i]);
    return out;
  };
  FaceLattice L;
  std::set<Set> facets;
  for (std::size_t q = 0; q < F.size(); ++q) {
    Set tight(V.size(), false);
    for (std::size_t v = 0; v < V.size(); ++v) {
      const Rational lhs = dot(F[q].coeffs, V[v]);
      if (lhs > F[q].rhs) throw InvalidInput("a vertex violates an inequality");
      tight[v] = lhs == F[q].rhs;
    }
    if (affine_dimension(points_of(tight)) == static_cast<int>(n) - 1) {
      L.facet_inequalities.push_back(static_cast<int>(q));
      facets.insert(tight);
    }
  }
  std::set<Set> faces{Set(V.size(), true)};
  std::queue<Set> work;
  work.push(Set(V.size(), true));
  while (!work.empty()) {
    const Set cur = work.front();
    work.pop();
    for (const auto& f : facets) {
      Set next(V.size());
      bool any = false;
      for (std::size_t i = 0; i < V.size(); ++i) any |= (next[i] = cur[i] && f[i]);
      if (any && faces.insert(next).second) work.push(next);
    }
  }
  std::vector<std::pair<int, Set>> graded;
  for (const auto& s : faces) graded.emplace_back(affine_dimension(points_of(s)), s);
  std::sort(graded.begin(), graded.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second > b.second;  // earlier vertices first
  });
  for (const auto& [d, s] : graded) {
    std::vector<int> idx;
    for (std::size_t i = 0; i < s.size(); ++i)
      if (s[i]) idx.push_back(static_cast<int>(i));
    L.faces.push_back(std::move(idx));
    L.dims.push_back(d);
  }
  auto subset = [](const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  for (std::size_t i = 0; i < L.faces.size(); ++i)
    for (std::size_t j = 0; j < L.faces.size(); ++j)
      if (L.dims[j] == L.dims[i] + 1 && subset(L.faces[i], L.faces[j]))
        L.covers.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return L;
}

/// Whether c is reached from b by a sequence of Hasse-edge contractions.
inline bool contraction_search(const Preposet& c, const Preposet& b) {
  if (c.n() != b.n()) return false;
  auto below = [&](const Preposet& p) {
    // contraction only adds relations, so p must be contained in c
    for (int i = 0; i <= p.n(); ++i)
      if ((p.up_set(i) & ~c.up_set(i)) != 0) return false;
    return true;
  };
  if (!below(b)) return false;
  std::set<Preposet> seen{b};
  std::queue<Preposet> q;
  q.push(b);
  while (!q.empty()) {
    const Preposet cur = q.front();
    q.pop();
    if (cur == c) return true;
    for (auto [x, y] : cur.covers()) {
      Preposet next = cur.contract(x, y);
      if (below(next) && seen.insert(next).second) q.push(next);
    }
  }
  return false;
}

/// Everything reachable from b by Hasse-edge contractions, b included.
inline std::set<Preposet> contraction_closure(const Preposet& b) {
  std::set<Preposet> seen{b};
  std::queue<Preposet> q;
  q.push(b);
  while (!q.empty()) {
    const Preposet cur = q.front();
    q.pop();
    for (auto [x, y] : cur.covers()) {
      Preposet next = cur.contract(x, y);
      if (seen.insert(next).second) q.push(next);
    }
  }
  return seen;
}

/// Extreme points of {a + b : a in A, b in B}.
inline std::vector<Point> minkowski_vertex_sum(const std::vector<Point>& A, const std::vector<Point>& B) {
  std::set<Point> sums;
  for (const auto& a : A)
    for (const auto& b : B) {
      if (a.size() != b.size()) throw InvalidInput("dimension mismatch in Minkowski sum");
      Point s(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
      sums.insert(std::move(s));
    }
  std::vector<Point> all(sums.begin(), sums.end());
  return extreme_points(all);
}

/// Nonnegative integer points whose sorted entries are bounded by u termwise.
inline std::vector<Point> parking_lattice_points(const std::vector<Rational>& u) {
  const std::size_t n = u.size();
  std::vector<Rational> sorted_u = u;
  std::sort(sorted_u.begin(), sorted_u.end());
  const long top = detail::floor_of(sorted_u.back()).get_si();
  std::vector<Point> out;
  Point cur(n);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == n) {
      Point s = cur;
      std::sort(s.begin(), s.end());
      for (std::size_t i = 0; i < n; ++i)
        if (s[i] > sorted_u[i]) return;
      out.push_back(cur);
      return;
    }
    for (long x = 0; x <= top; ++x) {
      cur[k] = x;
      rec(k + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace pfpoly::oracle
