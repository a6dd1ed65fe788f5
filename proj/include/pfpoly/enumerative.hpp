#pragma once

// Ascents and descents of labeled tree posets, Eulerian and generalized
// Eulerian polynomials, and h-polynomials of the simple PF(u).

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "pfpoly/core.hpp"
#include "pfpoly/partitions.hpp"
#include "pfpoly/polytope.hpp"

namespace pfpoly {

/// A poset given by its Hasse diagram on a set of integer labels.
struct LabeledForestPoset {
  std::vector<int> labels;                 // sorted ground set
  std::vector<std::pair<int, int>> covers;  // (lower, upper)

  /// Poset on [n] = {1, ..., n}.
  static LabeledForestPoset on_range(int n, std::vector<std::pair<int, int>> covers) {
    LabeledForestPoset q;
    for (int i = 1; i <= n; ++i) q.labels.push_back(i);
    q.covers = std::move(covers);
    q.validate();
    return q;
  }

  /// The Hasse diagram of a preposet on [0, n] that is a poset.
  static LabeledForestPoset from_preposet(const Preposet& p) {
    if (!p.is_poset()) throw InvalidInput("preorder has nontrivial classes");
    LabeledForestPoset q;
    for (int i = 0; i <= p.n(); ++i) q.labels.push_back(i);
    q.covers = p.covers();
    return q;
  }

  int size() const { return static_cast<int>(labels.size()); }

  bool is_tree() const {
    if (covers.size() + 1 != labels.size()) return false;
    std::vector<int> parent(labels.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto idx = [&](int x) {
      return static_cast<int>(std::lower_bound(labels.begin(), labels.end(), x) - labels.begin());
    };
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
      return x;
    };
    for (auto [a, b] : covers) {
      const int ra = find(idx(a)), rb = find(idx(b));
      if (ra == rb) return false;
      parent[static_cast<std::size_t>(ra)] = rb;
    }
    return true;
  }

  /// The poset with every cover reversed.
  LabeledForestPoset dual() const {
    LabeledForestPoset q = *this;
    for (auto& [a, b] : q.covers) std::swap(a, b);
    return q;
  }

  void validate() const {
    for (auto [a, b] : covers) {
      if (!std::binary_search(labels.begin(), labels.end(), a) || !std::binary_search(labels.begin(), labels.end(), b))
        throw InvalidInput("cover edge outside the ground set");
      if (a == b) throw InvalidInput("loop in a Hasse diagram");
    }
  }
};

struct AscentDescentStats {
  int asc = 0;
  int des = 0;
};

inline AscentDescentStats stats(const LabeledForestPoset& q) {
  AscentDescentStats s;
  for (auto [lo, hi] : q.covers) (hi > lo ? s.asc : s.des) += 1;
  return s;
}

/// A_k(t) = sum over permutations of k of t^des.
inline Polynomial eulerian(int k) {
  if (k < 1) throw InvalidInput("Eulerian polynomial index must be positive");
  std::vector<Integer> row{1};
  for (int n = 2; n <= k; ++n) {
    std::vector<Integer> next(static_cast<std::size_t>(n), 0);
    for (int m = 0; m < n; ++m) {
      if (m < n - 1) next[static_cast<std::size_t>(m)] += (m + 1) * row[static_cast<std::size_t>(m)];
      if (m >= 1) next[static_cast<std::size_t>(m)] += (n - m) * row[static_cast<std::size_t>(m - 1)];
    }
    row = std::move(next);
  }
  std::vector<Rational> c(row.begin(), row.end());
  return Polynomial(c);
}

/// The tree 1 < 2 < ... < p with p covered by each of p+1, ..., p+q.
inline LabeledForestPoset t_poset(int p, int q) {
  if (p < 1 || q < 1) throw InvalidInput("T(p, q) needs p, q >= 1");
  std::vector<std::pair<int, int>> cov;
  for (int j = 1; j < p; ++j) cov.emplace_back(j, j + 1);
  for (int k = p + 1; k <= p + q; ++k) cov.emplace_back(p, k);
  return LabeledForestPoset::on_range(p + q, cov);
}

/// Sum of t^asc over the distinct relabelings of a tree poset on [n].
inline Polynomial gen_eulerian_brute(const LabeledForestPoset& q) {
  if (!q.is_tree()) throw InvalidInput("generalized Eulerian polynomial needs a tree Hasse diagram");
  const int n = q.size();
  for (int i = 0; i < n; ++i)
    if (q.labels[static_cast<std::size_t>(i)] != i + 1) throw InvalidInput("poset must live on [n]");
  std::vector<int> sigma(static_cast<std::size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 1);
  std::set<std::vector<std::pair<int, int>>> seen;
  std::vector<Rational> c(static_cast<std::size_t>(n), Rational(0));
  do {
    std::vector<std::pair<int, int>> e;
    for (auto [a, b] : q.covers) e.emplace_back(sigma[static_cast<std::size_t>(a - 1)], sigma[static_cast<std::size_t>(b - 1)]);
    std::sort(e.begin(), e.end());
    if (!seen.insert(e).second) continue;
    int asc = 0;
    for (auto [a, b] : e) asc += b > a;
    c[static_cast<std::size_t>(asc)] += 1;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return Polynomial(c);
}

/// A(T(p, q), t) in closed form.
inline Polynomial gen_eulerian_T(int p, int q) {
  if (p < 1 || q < 1) throw InvalidInput("T(p, q) needs p, q >= 1");
  const int n = p + q;
  const int y = std::min(1, p - 1);
  Polynomial out;
  for (int i = 0; i <= y; ++i) out += Rational(binomial(n, i)) * Polynomial::geometric(i, n - i - 1);
  for (int i = 1; i <= p - 2; ++i)
    out += Rational(binomial(n, i + 1)) * Polynomial::geometric(1, n - i - 2) * eulerian(i + 1);
  return out;
}

namespace detail {

inline int magnitude(const std::vector<int>& m) { return std::accumulate(m.begin(), m.end(), 0); }

inline void require_simple(const std::vector<int>& m) {
  if (!is_simple(m)) throw Unsupported("h-polynomial is only available for simple PF(u)");
}

}  // namespace detail

/// g(t) of the case m_0 != 0 (ell >= 2, m_1 = ... = m_{ell-1} = 1).
inline Polynomial g0_polynomial(const std::vector<int>& m) {
  const int n = detail::magnitude(m);
  const int ell = static_cast<int>(m.size()) - 1;
  const int ml = m.back();
  const int z = std::min(ml, n - ml - 1);
  Polynomial g;
  for (int i = 0; i <= z; ++i) g += Rational(binomial(n, i)) * Polynomial::geometric(i + 1, n - i);
  for (int i = 1; i <= ell - 2; ++i)
    g += Rational(binomial(n, i + ml)) * Polynomial::geometric(2, n - i - ml) * gen_eulerian_T(i, ml);
  return g;
}

/// Closed-form h-polynomial of a simple PF(m, d).
inline Polynomial h_polynomial(const std::vector<int>& m) {
  detail::require_simple(m);
  const int n = detail::magnitude(m);
  const int ell = static_cast<int>(m.size()) - 1;
  const Polynomial t = Polynomial::monomial(1);
  if (m == std::vector<int>{0, n}) return Polynomial({1, 1}).pow(static_cast<unsigned>(n));
  if (m == std::vector<int>{n - 1, 1}) return Polynomial::geometric(0, n);
  const int ml = m.back();
  Polynomial h;
  for (int j = 0; j <= ml; ++j) h += Rational(binomial(n, j)) * Polynomial::monomial(j);
  const int top = m[0] == 0 ? ell - 1 : ell - 2;
  for (int i = 1; i <= top; ++i) h += Rational(binomial(n, i + ml)) * t * gen_eulerian_T(i, ml);
  if (m[0] != 0) h += g0_polynomial(m);
  return h;
}

inline Polynomial h_polynomial(const UVector& u) { return h_polynomial(md_pair(u).m); }

/// Descents of the poset ([0, n], <=_B).
inline int descents(const SkewedBinaryPartition& b) { return stats(LabeledForestPoset::from_preposet(preposet_of(b))).des; }
inline int ascents(const SkewedBinaryPartition& b) { return stats(LabeledForestPoset::from_preposet(preposet_of(b))).asc; }

/// g_i(t) = sum of t^asc(B) over B of type a_i, i = 0, ..., r.
inline std::vector<Polynomial> g_split(const std::vector<int>& m, int jobs = 1) {
  detail::require_simple(m);
  const auto types = omega(m);
  return parallel_map<Polynomial>(
      types.size(),
      [&](std::size_t i) {
        Polynomial g;
        for (const auto& b : partitions_of_type(types[i])) g += Polynomial::monomial(ascents(b));
        return g;
      },
      jobs);
}

/// h(t) as the sum of t^des(B) over all B with type in Omega_m.
inline Polynomial h_via_descents(const std::vector<int>& m, int jobs = 1) {
  detail::require_simple(m);
  const auto types = omega(m);
  auto parts = parallel_map<Polynomial>(
      types.size(),
      [&](std::size_t i) {
        Polynomial g;
        for (const auto& b : partitions_of_type(types[i])) g += Polynomial::monomial(descents(b));
        return g;
      },
      jobs);
  Polynomial h;
  for (const auto& p : parts) h += p;
  return h;
}

inline Polynomial h_via_descents(const UVector& u, int jobs = 1) { return h_via_descents(md_pair(u).m, jobs); }

}  // namespace pfpoly
