#pragma once

// Agreement suites between the formula modules and the brute-force oracles,
// per input u. Shared by `pfpoly check` and the acceptance binary.

#include <algorithm>
#include <iterator>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "pfpoly/cones.hpp"
#include "pfpoly/ehrhart.hpp"
#include "pfpoly/enumerative.hpp"
#include "pfpoly/oracle.hpp"
#include "pfpoly/polytope.hpp"

namespace pfpoly::check {

struct Result {
  std::string name;
  bool ok = true;
  std::string detail;  // first disagreement, empty when ok
};

namespace detail {

inline std::string point_string(const Point& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + pfpoly::to_string(p[i]);
  return s + ")";
}

inline Result fail(std::string name, std::string detail) { return {std::move(name), false, std::move(detail)}; }

/// X(u): permutations of (0, ..., 0, u_{k+1}, ..., u_n), k = 0..n.
inline std::vector<Point> candidate_points(const UVector& u) {
  std::set<Point> out;
  const int n = u.n();
  for (int k = 0; k <= n; ++k) {
    Point p(static_cast<std::size_t>(n), Rational(0));
    for (int i = k + 1; i <= n; ++i) p[static_cast<std::size_t>(i - 1)] = u.at(i);
    std::sort(p.begin(), p.end());
    do out.insert(p);
    while (std::next_permutation(p.begin(), p.end()));
  }
  return {out.begin(), out.end()};
}

inline std::vector<oracle::Inequality> all_inequalities(const UVector& u) {
  std::vector<oracle::Inequality> F;
  for (const auto& q : facet_description(u)) F.push_back({q.coeffs, q.rhs});
  return F;
}

inline Point random_point(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<long> num(-40, 40), den(1, 7);
  Point c;
  for (int i = 0; i < n; ++i) c.push_back(make_rational(num(rng), den(rng)));
  return c;
}

/// A random point of the closed cone of a preposet: random increasing
/// values along a random linear extension of its classes.
inline Point random_point_in_cone(std::mt19937_64& rng, const Preposet& p) {
  auto labels = p.class_labels();
  std::vector<int> order;
  std::vector<bool> placed(labels.size(), false);
  while (order.size() < labels.size()) {
    std::vector<std::size_t> avail;
    for (std::size_t a = 0; a < labels.size(); ++a) {
      if (placed[a]) continue;
      bool minimal = true;
      for (std::size_t b = 0; b < labels.size(); ++b)
        if (!placed[b] && b != a && p.less(labels[b], labels[a])) minimal = false;
      if (minimal) avail.push_back(a);
    }
    const std::size_t pick = avail[std::uniform_int_distribution<std::size_t>(0, avail.size() - 1)(rng)];
    placed[pick] = true;
    order.push_back(labels[pick]);
  }
  std::map<int, Rational> value;
  Rational cur = 0;
  std::uniform_int_distribution<long> step(1, 9), den(1, 5);
  for (int l : order) {
    cur += make_rational(step(rng), den(rng));
    value[l] = cur;
  }
  Point c;
  for (int i = 1; i <= p.n(); ++i) c.push_back(value[p.class_label(i)] - value[p.class_label(0)]);
  return c;
}

}  // namespace detail

constexpr std::size_t kMaxLatticeSweep = 20000;

/// vertices(u) equals the extreme points of X(u); for integral u, also the
/// extreme points among all u-parking lattice points.
inline Result vertices_agree(const UVector& u, bool lattice_sweep = true, int jobs = 1) {
  const std::string name = "vertices";
  const auto V = vertices(u, jobs);
  if (oracle::extreme_points(detail::candidate_points(u)) != V) return detail::fail(name, "extreme points of X(u) differ from vertices(u)");
  if (lattice_sweep && u.is_integral()) {
    const auto S = oracle::parking_lattice_points(u.entries());
    if (S.size() > kMaxLatticeSweep)
      return {name, true, "lattice sweep skipped (" + std::to_string(S.size()) + " points)"};
    const auto E = oracle::extreme_points(S);
    if (E != V) {
      std::vector<Point> diff;
      std::set_symmetric_difference(E.begin(), E.end(), V.begin(), V.end(), std::back_inserter(diff));
      const bool listed = std::binary_search(V.begin(), V.end(), diff[0]);
      return detail::fail(name, "lattice point " + detail::point_string(diff[0]) + (listed ? " listed but not extreme" : " extreme but not listed"));
    }
  }
  return {name, true, ""};
}

constexpr std::size_t kMaxWitnesses = 2000;

/// Interior witnesses of maximal cones uniquely maximize their vertex, and
/// random points are covered by some closed maximal cone whose vertex
/// maximizes them.
inline Result normal_fan_agrees(const UVector& u, int samples, unsigned seed = 1) {
  const std::string name = "normal fan";
  const auto pair = md_pair(u);
  const auto V = vertices(u);
  const auto parts = vertex_partitions(pair.m);
  std::vector<SlicedPreorderCone> cones;
  std::vector<Point> verts;
  for (const auto& b : parts) {
    cones.push_back(normal_cone_at(b, pair));
    verts.push_back(vertex_of(b, pair));
  }
  std::mt19937_64 rng(seed);
  // every witness, or a fixed-seed sample of kMaxWitnesses of them
  std::vector<std::size_t> which(parts.size());
  for (std::size_t i = 0; i < which.size(); ++i) which[i] = i;
  if (which.size() > kMaxWitnesses) {
    std::shuffle(which.begin(), which.end(), rng);
    which.resize(kMaxWitnesses);
  }
  for (std::size_t i : which) {
    const auto c = cones[i].interior_point();
    const Rational best = dot(c, verts[i]);
    for (const auto& w : V)
      if (w != verts[i] && !(dot(c, w) < best))
        return detail::fail(name, "witness of " + parts[i].to_string() + " does not uniquely select its vertex");
  }
  for (int s = 0; s < samples; ++s) {
    const Point c = detail::random_point(rng, u.n());
    Rational best = dot(c, V[0]);
    for (const auto& w : V) best = std::max(best, dot(c, w));
    bool covered = false;
    for (std::size_t i = 0; i < cones.size() && !covered; ++i)
      if (cones[i].contains(c)) {
        if (dot(c, verts[i]) != best) return detail::fail(name, "cone containing " + detail::point_string(c) + " has a non-maximizing vertex");
        covered = true;
      }
    if (!covered) return detail::fail(name, "point " + detail::point_string(c) + " lies in no maximal cone");
  }
  return {name, true, ""};
}

/// Facet flags of the inequality description match tight-set dimensions.
inline Result facets_agree(const UVector& u) {
  const std::string name = "facets";
  const auto V = oracle::extreme_points(detail::candidate_points(u));
  for (const auto& q : facet_description(u)) {
    std::vector<Point> tight;
    for (const auto& v : V) {
      const Rational lhs = dot(q.coeffs, v);
      if (lhs > q.rhs) return detail::fail(name, "vertex " + detail::point_string(v) + " violates an inequality");
      if (lhs == q.rhs) tight.push_back(v);
    }
    if ((oracle::affine_dimension(tight) == u.n() - 1) != q.facet) {
      std::string s;
      for (const auto& c : q.coeffs) s += pfpoly::to_string(c) + " ";
      return detail::fail(name, "facet flag wrong for coefficients " + s);
    }
  }
  return {name, true, ""};
}

/// The oracle face lattice (incidence closure) is isomorphic to the dual of
/// SBP(m): each SBP node maps to the vertex set maximizing an interior point
/// of its cone, and this map preserves dimension and covers bijectively.
inline Result face_lattice_agrees(const UVector& u, int jobs = 1) {
  const std::string name = "face lattice";
  const int n = u.n();
  const auto V = oracle::extreme_points(detail::candidate_points(u));
  const auto L = oracle::face_lattice_from_incidence(V, detail::all_inequalities(u));
  const auto fp = face_poset(u, jobs);
  if (L.faces.size() != fp.nodes.size())
    return detail::fail(name, "face counts differ: " + std::to_string(L.faces.size()) + " vs " + std::to_string(fp.nodes.size()));
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < L.faces.size(); ++i) index[L.faces[i]] = static_cast<int>(i);
  std::vector<int> image(fp.nodes.size());
  std::set<int> used;
  for (std::size_t i = 0; i < fp.nodes.size(); ++i) {
    const Point c = cone_of(fp.nodes[i]).interior_point();
    Rational best = dot(c, V[0]);
    for (const auto& v : V) best = std::max(best, dot(c, v));
    std::vector<int> arg;
    for (std::size_t k = 0; k < V.size(); ++k)
      if (dot(c, V[k]) == best) arg.push_back(static_cast<int>(k));
    auto it = index.find(arg);
    if (it == index.end()) return detail::fail(name, fp.nodes[i].to_string() + " selects a vertex set that is not a face");
    if (L.dims[static_cast<std::size_t>(it->second)] != fp.dims[i])
      return detail::fail(name, fp.nodes[i].to_string() + " has the wrong face dimension");
    if (!used.insert(it->second).second) return detail::fail(name, "two partitions select the same face");
    image[i] = it->second;
  }
  std::set<std::pair<int, int>> lc(L.covers.begin(), L.covers.end()), mapped;
  for (auto [i, j] : fp.covers) mapped.emplace(image[static_cast<std::size_t>(i)], image[static_cast<std::size_t>(j)]);
  if (lc != mapped) return detail::fail(name, "cover relations differ");
  std::vector<Integer> f(static_cast<std::size_t>(n + 1), 0);
  for (int d : L.dims) ++f[static_cast<std::size_t>(d)];
  if (f != f_vector(u)) return detail::fail(name, "f-vector differs");
  return {name, true, ""};
}

/// For simple u: closed form = descent sum = h_from_f(oracle f-vector).
inline Result h_polynomial_agrees(const UVector& u, bool use_oracle_f, int jobs = 1) {
  const std::string name = "h-polynomial";
  const int n = u.n();
  const auto h = h_polynomial(u);
  if (h != h_via_descents(u, jobs)) return detail::fail(name, "closed form differs from the descent sum");
  std::vector<Rational> f;
  if (use_oracle_f) {
    const auto V = oracle::extreme_points(detail::candidate_points(u));
    for (long x : oracle::face_lattice_from_incidence(V, detail::all_inequalities(u)).f_vector()) f.emplace_back(x);
  } else {
    for (const auto& x : f_vector(u)) f.emplace_back(x);
  }
  if (h != h_from_f(Polynomial(f))) return detail::fail(name, "h differs from h_from_f(f)");
  if (!h.is_palindromic(n)) return detail::fail(name, "h is not palindromic");
  for (const auto& c : h.coefficients())
    if (c < 0) return detail::fail(name, "negative h coefficient");
  if (h.eval(1) != Rational(static_cast<long>(vertices(u).size()))) return detail::fail(name, "h(1) is not the vertex count");
  return {name, true, ""};
}

/// For integral u: the Ehrhart polynomial matches lattice counts for
/// t = 0..tmax and its leading coefficient is the volume.
inline Result ehrhart_agrees(const UVector& u, int tmax, int jobs = 1) {
  const std::string name = "ehrhart";
  const auto p = ehrhart_polynomial(u, jobs);
  const auto F = detail::all_inequalities(u);
  for (long t = 0; t <= tmax; ++t) {
    const Integer count = oracle::lattice_count(F, t);
    if (p.eval(t) != Rational(count))
      return detail::fail(name, "t=" + std::to_string(t) + ": formula " + pfpoly::to_string(p.eval(t)) + ", lattice count " + count.get_str());
  }
  if (p[u.n()] != volume(u, jobs)) return detail::fail(name, "leading coefficient differs from the volume");
  return {name, true, ""};
}

/// is_contraction agrees with brute contraction closure on SBP(m) x SBP(m).
inline Result contraction_agrees(const std::vector<int>& m, int jobs = 1) {
  const std::string name = "contraction";
  const auto sbp = sbp_enumerate(m, jobs);
  std::vector<Preposet> pre;
  for (const auto& b : sbp) pre.push_back(preposet_of(b));
  auto bad = parallel_map<std::string>(
      sbp.size(),
      [&](std::size_t i) -> std::string {
        const auto reach = oracle::contraction_closure(pre[i]);
        for (std::size_t j = 0; j < sbp.size(); ++j)
          if (is_contraction(sbp[j], sbp[i]) != (reach.count(pre[j]) > 0))
            return sbp[j].to_string() + " vs " + sbp[i].to_string();
        return "";
      },
      jobs);
  for (const auto& s : bad)
    if (!s.empty()) return detail::fail(name, "disagreement on " + s);
  return {name, true, ""};
}

/// Each maximal cone is the union of its stellahedral pieces: interiors are
/// disjoint, `samples` points per parent cone are covered, and case (i) has
/// prod |B_i|! pieces.
inline Result stellahedral_agrees(const std::vector<int>& m, int samples, unsigned seed = 1) {
  const std::string name = "stellahedral";
  std::mt19937_64 rng(seed);
  const auto parts = vertex_partitions(m);
  for (const auto& b : parts) {
    const auto pieces = stellahedral_refinement(b);
    const int n = b.n();
    std::vector<int> stella(static_cast<std::size_t>(n + 1), 1);
    stella[0] = 0;
    std::vector<SlicedPreorderCone> cones;
    for (const auto& p : pieces) {
      if (!in_omega(type_of(p), stella)) return detail::fail(name, p.to_string() + " is not a maximal stellahedral cone");
      cones.push_back(cone_of(p));
    }
    if (std::set<SkewedBinaryPartition>(pieces.begin(), pieces.end()).size() != pieces.size())
      return detail::fail(name, "repeated piece for " + b.to_string());
    if (type_of(b).at(0).tag == Tag::Circle) {
      Integer expect = 1;
      for (int i = 1; i <= b.k(); ++i) expect *= factorial(b.block(i).size());
      if (Integer(static_cast<long>(pieces.size())) != expect) return detail::fail(name, "piece count for " + b.to_string());
    }
    const auto parent = cone_of(b);
    for (const auto& c : cones)
      if (!parent.contains(c.interior_point())) return detail::fail(name, "piece leaves the parent cone of " + b.to_string());
    for (int s = 0; s < samples; ++s) {
      const Point c = detail::random_point_in_cone(rng, parent.source());
      int closed = 0, open = 0;
      for (const auto& k : cones) {
        closed += k.contains(c);
        open += k.contains(c, Membership::Interior);
      }
      if (closed == 0) return detail::fail(name, detail::point_string(c) + " not covered in " + b.to_string());
      if (open > 1) return detail::fail(name, "overlapping interiors at " + detail::point_string(c));
    }
  }
  return {name, true, ""};
}

/// Simple / simplicial classification against the oracle face lattice:
/// every vertex lies on n edges; every facet has n vertices.
inline Result classification_agrees(const UVector& u) {
  const std::string name = "classification";
  const int n = u.n();
  const auto V = oracle::extreme_points(detail::candidate_points(u));
  const auto L = oracle::face_lattice_from_incidence(V, detail::all_inequalities(u));
  std::vector<int> up(L.faces.size(), 0);
  for (auto [i, j] : L.covers) ++up[static_cast<std::size_t>(i)];
  bool simple = true, simplicial = true;
  for (std::size_t i = 0; i < L.faces.size(); ++i) {
    if (L.dims[i] == 0 && up[i] != n) simple = false;
    if (L.dims[i] == n - 1 && static_cast<int>(L.faces[i].size()) != n) simplicial = false;
  }
  if (simple != is_simple(u)) return detail::fail(name, "is_simple disagrees with vertex degrees");
  if (simplicial != is_simplicial_polytope(u)) return detail::fail(name, "is_simplicial disagrees with facet sizes");
  return {name, true, ""};
}

constexpr int kMaxOracle = 6;

/// Facet flags against tight sets of the listed vertices; used where the
/// brute vertex oracle is too slow.
inline Result facets_consistent(const UVector& u) {
  const std::string name = "facets";
  const auto V = vertices(u);
  for (const auto& q : facet_description(u)) {
    std::vector<Point> tight;
    for (const auto& v : V) {
      const Rational lhs = dot(q.coeffs, v);
      if (lhs > q.rhs) return detail::fail(name, "vertex " + detail::point_string(v) + " violates an inequality");
      if (lhs == q.rhs) tight.push_back(v);
    }
    if ((oracle::affine_dimension(tight) == u.n() - 1) != q.facet) return detail::fail(name, "facet flag wrong");
  }
  return {name, true, "tight sets of the listed vertices"};
}

/// The suites run by `pfpoly check`. Quick mode samples less and skips the
/// lattice-point sweep above n = 4; above n = 6 the brute vertex oracle and
/// lattice counts are replaced by consistency checks on the listed vertices.
inline std::vector<Result> run_suites(const UVector& u, bool full, int jobs = 1) {
  std::vector<Result> out;
  const int n = u.n();
  const auto m = md_pair(u).m;
  const bool brute = full || n <= kMaxOracle;
  if (brute) {
    out.push_back(vertices_agree(u, full || n <= 4, jobs));
    out.push_back(facets_agree(u));
  } else {
    out.push_back({"vertices", true, "skipped above n = 6"});
    out.push_back(facets_consistent(u));
  }
  out.push_back(normal_fan_agrees(u, full ? 1000 : 100));
  if (is_simple(m)) out.push_back(h_polynomial_agrees(u, full, jobs));
  if (u.is_integral() && brute) out.push_back(ehrhart_agrees(u, (n <= 4 ? 2 : 1) + (full ? 1 : 0), jobs));
  if (full) {
    out.push_back(face_lattice_agrees(u, jobs));
    out.push_back(classification_agrees(u));
    out.push_back(contraction_agrees(m, jobs));
    out.push_back(stellahedral_agrees(m, 20));
  }
  return out;
}

}  // namespace pfpoly::check
