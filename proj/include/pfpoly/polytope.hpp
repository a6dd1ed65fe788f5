#pragma once

// The parking function polytope PF(u): MD pairs, vertex types, vertices,
// normal cones, the face poset via SBP(m), facets, rays, and classification.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pfpoly/cones.hpp"
#include "pfpoly/core.hpp"
#include "pfpoly/parallel.hpp"
#include "pfpoly/partitions.hpp"

namespace pfpoly {

/// Nondecreasing, nonnegative, nonzero rational vector u_1 <= ... <= u_n.
class UVector {
 public:
  UVector() = default;
  explicit UVector(std::vector<Rational> entries) : u_(std::move(entries)) {
    if (u_.empty()) throw InvalidInput("u must have at least one entry");
    if (static_cast<int>(u_.size()) >= Preposet::kMaxElements) throw InvalidInput("u is too long");
    for (std::size_t i = 0; i < u_.size(); ++i) {
      if (u_[i] < 0) throw InvalidInput("u must be nonnegative");
      if (i && u_[i] < u_[i - 1]) throw InvalidInput("u must be nondecreasing");
    }
    if (u_.back() == 0) throw InvalidInput("u must be nonzero");
  }

  /// Comma-separated entries, each "p" or "p/q".
  static UVector parse(std::string_view text) {
    std::vector<Rational> v;
    std::string s(text);
    std::size_t p = 0;
    while (p <= s.size()) {
      std::size_t q = s.find(',', p);
      if (q == std::string::npos) q = s.size();
      v.push_back(parse_rational(s.substr(p, q - p)));
      p = q + 1;
    }
    return UVector(std::move(v));
  }

  int n() const { return static_cast<int>(u_.size()); }
  /// u_i for i in [1, n].
  const Rational& at(int i) const { return u_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<Rational>& entries() const { return u_; }

  bool is_integral() const {
    return std::all_of(u_.begin(), u_.end(), [](const Rational& r) { return is_integer(r); });
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < u_.size(); ++i) s += (i ? "," : "") + pfpoly::to_string(u_[i]);
    return s;
  }

  friend bool operator==(const UVector& a, const UVector& b) { return a.u_ == b.u_; }

 private:
  std::vector<Rational> u_;
};

inline void check_multiplicity(const std::vector<int>& m) {
  if (m.size() < 2) throw InvalidInput("multiplicity vector needs at least one positive value");
  if (m[0] < 0) throw InvalidInput("m_0 must be nonnegative");
  for (std::size_t i = 1; i < m.size(); ++i)
    if (m[i] < 1) throw InvalidInput("m_i must be positive for i >= 1");
  if (std::accumulate(m.begin(), m.end(), 0) >= Preposet::kMaxElements) throw InvalidInput("magnitude too large");
}

struct MDPair {
  std::vector<int> m;       // (m_0, ..., m_l)
  std::vector<Rational> d;  // d_1 < ... < d_l

  MDPair() = default;
  MDPair(std::vector<int> mult, std::vector<Rational> data) : m(std::move(mult)), d(std::move(data)) {
    check_multiplicity(m);
    if (d.size() + 1 != m.size()) throw InvalidInput("data vector length must be len(m) - 1");
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (d[i] <= 0) throw InvalidInput("data values must be positive");
      if (i && d[i] <= d[i - 1]) throw InvalidInput("data vector must be strictly increasing");
    }
  }

  int n() const { return std::accumulate(m.begin(), m.end(), 0); }
  int ell() const { return static_cast<int>(m.size()) - 1; }

  UVector u() const {
    std::vector<Rational> v(static_cast<std::size_t>(m[0]), Rational(0));
    for (int i = 1; i <= ell(); ++i)
      for (int k = 0; k < m[static_cast<std::size_t>(i)]; ++k) v.push_back(d[static_cast<std::size_t>(i - 1)]);
    return UVector(std::move(v));
  }
};

inline MDPair md_pair(const UVector& u) {
  std::vector<int> m{0};
  std::vector<Rational> d;
  for (const auto& x : u.entries()) {
    if (x == 0) {
      ++m[0];
    } else if (!d.empty() && d.back() == x) {
      ++m.back();
    } else {
      d.push_back(x);
      m.push_back(1);
    }
  }
  return MDPair(std::move(m), std::move(d));
}

/// The u with multiplicity vector m and data d = (1, ..., l).
inline UVector default_u(const std::vector<int>& m) {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < m.size(); ++i) d.emplace_back(static_cast<long>(i));
  return MDPair(m, d).u();
}

/// All 2^n - 1 multiplicity vectors of magnitude n.
inline std::vector<std::vector<int>> all_multiplicity_vectors(int n) {
  std::vector<std::vector<int>> out;
  // a weak composition (m_0, ...) with positive tail, m != (n)
  for (int m0 = 0; m0 < n; ++m0) {
    std::vector<int> cur{m0};
    std::function<void(int)> rec = [&](int rest) {
      if (rest == 0) {
        out.push_back(cur);
        return;
      }
      for (int v = 1; v <= rest; ++v) {
        cur.push_back(v);
        rec(rest - v);
        cur.pop_back();
      }
    };
    rec(n - m0);
  }
  return out;
}

/// The vertex types a_0, ..., a_r.
inline std::vector<SkewedBinaryComposition> omega(const std::vector<int>& m) {
  check_multiplicity(m);
  const int m0 = m[0];
  const int ell = static_cast<int>(m.size()) - 1;
  const int n = std::accumulate(m.begin(), m.end(), 0);
  const int r = n - m0;
  std::vector<SkewedBinaryComposition> out;
  std::vector<CompositionEntry> a0;
  if (m0 > 0) a0 = {{m0, Tag::Plain}, {0, Tag::Plain}};
  else a0 = {{0, Tag::Plain}, {0, Tag::Circle}};
  for (int i = 1; i <= ell; ++i) a0.push_back({m[static_cast<std::size_t>(i)], Tag::Plain});
  out.emplace_back(a0);
  for (int i = 1; i <= r; ++i) {
    std::vector<CompositionEntry> a{{m0 + i, Tag::Plain}, {0, Tag::Circle}};
    int partial = 0, g = 1;
    for (; g <= ell; ++g) {
      partial += m[static_cast<std::size_t>(g)];
      if (i < partial) break;
    }
    if (g <= ell) {
      a.push_back({partial - i, Tag::Plain});
      for (int h = g + 1; h <= ell; ++h) a.push_back({m[static_cast<std::size_t>(h)], Tag::Plain});
    }
    out.emplace_back(a);
  }
  return out;
}

inline bool in_omega(const SkewedBinaryComposition& t, const std::vector<int>& m) {
  for (const auto& a : omega(m))
    if (a == t) return true;
  return false;
}

inline Point vertex_of(const SkewedBinaryPartition& b, const MDPair& pair) {
  const auto t = type_of(b);
  if (t.n() != pair.n() || !in_omega(t, pair.m)) throw InvalidInput("type of the partition is not a vertex type");
  Point v(static_cast<std::size_t>(pair.n()), Rational(0));
  const int k = b.k();
  for (int j = 1; j <= k; ++j)
    for (int e : b.block(j).elements) v[static_cast<std::size_t>(e - 1)] = pair.d[static_cast<std::size_t>(pair.ell() - k + j - 1)];
  return v;
}

/// All partitions with type in Omega_m, in canonical order.
inline std::vector<SkewedBinaryPartition> vertex_partitions(const std::vector<int>& m, int jobs = 1) {
  const auto types = omega(m);
  auto parts = parallel_map<std::vector<SkewedBinaryPartition>>(
      types.size(), [&](std::size_t i) { return partitions_of_type(types[i]); }, jobs);
  std::vector<SkewedBinaryPartition> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  std::sort(out.begin(), out.end());
  return out;
}

/// The vertices of PF(u), lexicographically sorted.
inline std::vector<Point> vertices(const UVector& u, int jobs = 1) {
  const MDPair pair = md_pair(u);
  const auto types = omega(pair.m);
  auto pts = parallel_map<std::vector<Point>>(
      types.size(),
      [&](std::size_t i) {
        std::vector<Point> v;
        for (const auto& b : partitions_of_type(types[i])) v.push_back(vertex_of(b, pair));
        return v;
      },
      jobs);
  std::vector<Point> out;
  for (auto& p : pts) out.insert(out.end(), p.begin(), p.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline SlicedPreorderCone normal_cone_at(const SkewedBinaryPartition& b, const MDPair& pair) {
  const auto t = type_of(b);
  if (t.n() != pair.n() || !in_omega(t, pair.m)) throw InvalidInput("type of the partition is not a vertex type");
  return cone_of(b);
}

/// Whether a composition is the type of a member of SBP(m).
inline bool is_sbp_type(const SkewedBinaryComposition& t, const std::vector<int>& m) {
  const int n = std::accumulate(m.begin(), m.end(), 0);
  if (t.n() != n) return false;
  const int p = t.k();
  const int ell = static_cast<int>(m.size()) - 1;
  const int m0 = m[0];
  // S[j + 1] = |b_{-1}| + ... + |b_j|
  std::vector<int> S;
  int acc = 0;
  for (int j = -1; j <= p; ++j) S.push_back(acc += t.at(j).value);
  auto s = [&](int j) { return S[static_cast<std::size_t>(j + 1)]; };
  std::vector<int> M;
  acc = 0;
  for (int x : m) M.push_back(acc += x);
  auto mm = [&](int i) { return M[static_cast<std::size_t>(i)]; };

  const bool b0_plain = t.at(0).tag == Tag::Plain;
  if ((0 < s(0) && s(0) <= m0) != b0_plain) return false;
  if (!(m0 < (p >= 1 ? s(1) : s(0)))) return false;
  std::vector<bool> fits(static_cast<std::size_t>(p + 1), false);
  for (int i = 1; i <= ell; ++i) {
    int count = 0;
    for (int j = 1; j <= p; ++j)
      if (mm(i - 1) <= s(j - 1) && s(j - 1) < s(j) && s(j) <= mm(i)) {
        ++count;
        fits[static_cast<std::size_t>(j)] = true;
      }
    if (count > 1) return false;
  }
  for (int j = 1; j <= p; ++j)
    if ((t.at(j).tag == Tag::Plain) != fits[static_cast<std::size_t>(j)]) return false;
  return true;
}

inline std::vector<SkewedBinaryComposition> sbp_types(const std::vector<int>& m) {
  check_multiplicity(m);
  std::vector<SkewedBinaryComposition> out;
  for (auto& t : all_compositions(std::accumulate(m.begin(), m.end(), 0)))
    if (is_sbp_type(t, m)) out.push_back(t);
  return out;
}

/// SBP(m): types first, then every partition of each type.
inline std::vector<SkewedBinaryPartition> sbp_enumerate(const std::vector<int>& m, int jobs = 1) {
  const auto types = sbp_types(m);
  auto parts = parallel_map<std::vector<SkewedBinaryPartition>>(
      types.size(), [&](std::size_t i) { return partitions_of_type(types[i]); }, jobs);
  std::vector<SkewedBinaryPartition> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  std::sort(out.begin(), out.end());
  return out;
}

struct FacePosetStructure {
  std::vector<SkewedBinaryPartition> nodes;  // sorted by (face dimension, partition)
  std::vector<int> dims;                     // face dimension = n - cone dimension
  /// (i, j): face i is a facet of face j.
  std::vector<std::pair<int, int>> covers;
};

inline FacePosetStructure face_poset(const std::vector<int>& m, int jobs = 1) {
  const int n = std::accumulate(m.begin(), m.end(), 0);
  auto nodes = sbp_enumerate(m, jobs);
  std::stable_sort(nodes.begin(), nodes.end(), [&](const auto& a, const auto& b) {
    return cone_dim(a) > cone_dim(b);
  });
  FacePosetStructure fp;
  std::map<SkewedBinaryPartition, int> index;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    index.emplace(nodes[i], static_cast<int>(i));
    fp.dims.push_back(n - cone_dim(nodes[i]));
  }
  auto lower = parallel_map<std::vector<SkewedBinaryPartition>>(
      nodes.size(), [&](std::size_t i) { return cover_contractions(nodes[i]); }, jobs);
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (const auto& c : lower[i]) {
      auto it = index.find(c);
      if (it == index.end()) throw std::logic_error("contraction escaped SBP(m)");
      fp.covers.emplace_back(static_cast<int>(i), it->second);
    }
  std::sort(fp.covers.begin(), fp.covers.end());
  fp.nodes = std::move(nodes);
  return fp;
}

inline FacePosetStructure face_poset(const UVector& u, int jobs = 1) { return face_poset(md_pair(u).m, jobs); }

/// f_k = number of k-dimensional faces, k = 0..n, counted per type.
inline std::vector<Integer> f_vector(const std::vector<int>& m) {
  const int n = std::accumulate(m.begin(), m.end(), 0);
  std::vector<Integer> f(static_cast<std::size_t>(n + 1), 0);
  for (const auto& t : sbp_types(m)) f[static_cast<std::size_t>(n - cone_dim(t))] += count_of_type(t);
  return f;
}

inline std::vector<Integer> f_vector(const UVector& u) { return f_vector(md_pair(u).m); }

inline Polynomial f_polynomial(const std::vector<Integer>& f) {
  std::vector<Rational> c;
  for (const auto& x : f) c.emplace_back(x);
  return Polynomial(c);
}

/// coeffs . x <= rhs
struct LinearInequality {
  std::vector<Rational> coeffs;
  Rational rhs;
  bool facet = false;
  friend bool operator==(const LinearInequality&, const LinearInequality&) = default;
};

/// Sizes |I| for which sum_{i in I} x_i <= w_u(I) is a facet (and e_I a ray).
inline std::vector<int> facet_subset_sizes(const std::vector<int>& m) {
  check_multiplicity(m);
  const int n = std::accumulate(m.begin(), m.end(), 0);
  const int ell = static_cast<int>(m.size()) - 1;
  std::set<int> sz;
  if (ell == 1 && m[0] == 0) {
    sz = {1};
  } else if (ell == 1 && m[1] == 1) {
    sz = {n};
  } else {
    sz = {1, n};
    if (ell >= 2)
      for (int k = m.back() + 1; k <= n - m[0] - 1; ++k) sz.insert(k);
  }
  return {sz.begin(), sz.end()};
}

/// w_u(I) for |I| = k: the sum of the k largest entries of u.
inline Rational top_sum(const UVector& u, int k) {
  Rational s = 0;
  for (int i = 0; i < k; ++i) s += u.at(u.n() - i);
  return s;
}

/// Nonempty subsets of [n] as bit masks over {1..n}, ordered by size then
/// lexicographically.
inline std::vector<std::vector<int>> subsets_by_size(int n) {
  std::vector<std::vector<int>> out;
  for (int k = 1; k <= n; ++k) {
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
      if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
      }
      for (int i = start; i <= n; ++i) {
        cur.push_back(i);
        rec(i + 1);
        cur.pop_back();
      }
    };
    rec(1);
  }
  return out;
}

/// x_i >= 0 (as -x_i <= 0) for each i, then sum_{i in I} x_i <= w_u(I) for
/// every nonempty I, with facet flags.
inline std::vector<LinearInequality> facet_description(const UVector& u, bool facets_only = false) {
  const int n = u.n();
  const auto sizes = facet_subset_sizes(md_pair(u).m);
  std::vector<LinearInequality> out;
  for (int i = 1; i <= n; ++i) {
    LinearInequality q{std::vector<Rational>(static_cast<std::size_t>(n), Rational(0)), 0, true};
    q.coeffs[static_cast<std::size_t>(i - 1)] = -1;
    out.push_back(std::move(q));
  }
  for (const auto& I : subsets_by_size(n)) {
    const int k = static_cast<int>(I.size());
    const bool facet = std::binary_search(sizes.begin(), sizes.end(), k);
    if (facets_only && !facet) continue;
    LinearInequality q{std::vector<Rational>(static_cast<std::size_t>(n), Rational(0)), top_sum(u, k), facet};
    for (int i : I) q.coeffs[static_cast<std::size_t>(i - 1)] = 1;
    out.push_back(std::move(q));
  }
  return out;
}

/// Generators of the one-dimensional normal cones: -e_i, then e_I.
inline std::vector<std::vector<int>> rays(const UVector& u) {
  const int n = u.n();
  std::vector<std::vector<int>> out;
  for (int i = 1; i <= n; ++i) {
    std::vector<int> r(static_cast<std::size_t>(n), 0);
    r[static_cast<std::size_t>(i - 1)] = -1;
    out.push_back(r);
  }
  const auto sizes = n == 1 ? std::vector<int>{1} : facet_subset_sizes(md_pair(u).m);
  for (const auto& I : subsets_by_size(n)) {
    if (!std::binary_search(sizes.begin(), sizes.end(), static_cast<int>(I.size()))) continue;
    std::vector<int> r(static_cast<std::size_t>(n), 0);
    for (int i : I) r[static_cast<std::size_t>(i - 1)] = 1;
    out.push_back(r);
  }
  return out;
}

inline bool is_simple(const std::vector<int>& m) {
  check_multiplicity(m);
  const int n = std::accumulate(m.begin(), m.end(), 0);
  const int ell = static_cast<int>(m.size()) - 1;
  if (m == std::vector<int>{0, n} || m == std::vector<int>{n - 1, 1}) return true;
  if (ell < 2) return false;
  for (int i = 1; i <= ell - 1; ++i)
    if (m[static_cast<std::size_t>(i)] != 1) return false;
  return true;
}

inline bool is_simple(const UVector& u) { return is_simple(md_pair(u).m); }

inline bool is_simplicial_polytope(const std::vector<int>& m) {
  const int n = std::accumulate(m.begin(), m.end(), 0);
  if (n <= 2) return true;
  return m == std::vector<int>{n - 1, 1};
}

inline bool is_simplicial_polytope(const UVector& u) { return is_simplicial_polytope(md_pair(u).m); }

/// A vertex partition whose closed normal cone contains c.
inline SkewedBinaryPartition locate_vertex(const UVector& u, const Point& c) {
  const int n = u.n();
  if (static_cast<int>(c.size()) != n) throw InvalidInput("point has the wrong dimension");
  const auto m = md_pair(u).m;
  // order[k] = coordinate (1-based) holding the (k+1)-th smallest value
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return c[static_cast<std::size_t>(a - 1)] < c[static_cast<std::size_t>(b - 1)]; });
  auto coord = [&](int pos) { return order[static_cast<std::size_t>(pos - 1)]; };  // pos in [1,n]
  auto range = [&](int lo, int hi) {
    std::vector<int> v;
    for (int p = lo; p <= hi; ++p) v.push_back(coord(p));
    return v;
  };
  std::vector<Block> blocks;
  if (c[static_cast<std::size_t>(coord(n) - 1)] <= 0) {
    blocks = {Block(range(1, n)), Block({0})};
    return SkewedBinaryPartition(blocks);
  }
  int i = 1;
  while (c[static_cast<std::size_t>(coord(i) - 1)] <= 0) ++i;
  std::vector<int> t;
  int acc = 0;
  for (int x : m) t.push_back(acc += x);
  const int m0 = m[0];
  const int ell = static_cast<int>(m.size()) - 1;
  if (m0 == 0 || m0 + 1 < i) {
    int j = 0;
    while (i > t[static_cast<std::size_t>(j)]) ++j;
    blocks.emplace_back(range(1, i - 1));
    blocks.emplace_back(std::vector<int>{0});
    blocks.emplace_back(range(i, t[static_cast<std::size_t>(j)]));
    for (int s = j + 1; s <= ell; ++s)
      blocks.emplace_back(range(t[static_cast<std::size_t>(s - 1)] + 1, t[static_cast<std::size_t>(s)]));
  } else {
    auto first = range(1, t[0]);
    first.push_back(0);
    blocks.emplace_back(first);
    blocks.emplace_back();
    for (int s = 1; s <= ell; ++s)
      blocks.emplace_back(range(t[static_cast<std::size_t>(s - 1)] + 1, t[static_cast<std::size_t>(s)]));
  }
  return SkewedBinaryPartition(blocks);
}

namespace detail {

inline void permutation_tuples(const std::vector<Block>& fixed, const std::vector<Block>& rest,
                               std::vector<SkewedBinaryPartition>& out) {
  std::vector<std::vector<int>> perms;
  for (const auto& b : rest) perms.push_back(b.elements);
  std::function<void(std::size_t, std::vector<Block>&)> rec = [&](std::size_t k, std::vector<Block>& acc) {
    if (k == perms.size()) {
      out.emplace_back(acc);
      return;
    }
    std::vector<int> p = perms[k];
    std::sort(p.begin(), p.end());
    do {
      const std::size_t before = acc.size();
      for (int e : p) acc.emplace_back(std::vector<int>{e});
      rec(k + 1, acc);
      acc.resize(before);
    } while (std::next_permutation(p.begin(), p.end()));
  };
  std::vector<Block> acc = fixed;
  rec(0, acc);
}

}  // namespace detail

/// Cones of PF(1, ..., n) whose union is the cone of b.
inline std::vector<SkewedBinaryPartition> stellahedral_refinement(const SkewedBinaryPartition& b) {
  const auto t = type_of(b);
  for (int i = 1; i <= t.k(); ++i)
    if (t.at(i).tag != Tag::Plain) throw InvalidInput("type is not a vertex type");
  if (t.at(0).value != 0) throw InvalidInput("type is not a vertex type");
  std::vector<SkewedBinaryPartition> out;
  std::vector<Block> positive;
  for (int i = 1; i <= b.k(); ++i) positive.push_back(b.block(i));
  if (t.at(0).tag == Tag::Circle) {
    detail::permutation_tuples({b.minus_one(), b.zero_block()}, positive, out);
  } else {
    std::vector<int> others;
    for (int e : b.minus_one().elements)
      if (e != 0) others.push_back(e);
    const int r = static_cast<int>(others.size());
    for (int mask = 0; mask < (1 << r); ++mask) {
      std::vector<int> s, rest;
      for (int q = 0; q < r; ++q) ((mask >> q) & 1 ? s : rest).push_back(others[static_cast<std::size_t>(q)]);
      std::vector<Block> pos;
      if (!rest.empty()) pos.emplace_back(rest);
      pos.insert(pos.end(), positive.begin(), positive.end());
      detail::permutation_tuples({Block(s), Block({0})}, pos, out);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace pfpoly
