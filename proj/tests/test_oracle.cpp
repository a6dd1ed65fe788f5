#include <gtest/gtest.h>

#include <random>

#include "pfpoly/oracle.hpp"

using namespace pfpoly;
using namespace pfpoly::oracle;

namespace {

Point pt(std::initializer_list<long> xs) {
  Point p;
  for (long x : xs) p.emplace_back(x);
  return p;
}

std::vector<Rational> row(std::initializer_list<long> xs) { return pt(xs); }

std::vector<Inequality> box(int n, long d) {
  std::vector<Inequality> out;
  for (int i = 0; i < n; ++i) {
    std::vector<Rational> a(static_cast<std::size_t>(n), Rational(0));
    a[static_cast<std::size_t>(i)] = -1;
    out.push_back({a, 0});
    a[static_cast<std::size_t>(i)] = 1;
    out.push_back({a, d});
  }
  return out;
}

std::vector<Inequality> simplex(int n, long d) {
  std::vector<Inequality> out;
  for (int i = 0; i < n; ++i) {
    std::vector<Rational> a(static_cast<std::size_t>(n), Rational(0));
    a[static_cast<std::size_t>(i)] = -1;
    out.push_back({a, 0});
  }
  out.push_back({std::vector<Rational>(static_cast<std::size_t>(n), Rational(1)), d});
  return out;
}

std::vector<Point> cube_vertices(int n, long d) {
  std::vector<Point> out;
  for (int mask = 0; mask < (1 << n); ++mask) {
    Point p;
    for (int i = 0; i < n; ++i) p.emplace_back((mask >> i) & 1 ? d : 0);
    out.push_back(p);
  }
  return out;
}

}  // namespace

TEST(LatticeCount, BoxesAndSimplices) {
  for (int n = 1; n <= 4; ++n)
    for (long t = 0; t <= 3; ++t) {
      Integer cube = 1, simp = binomial(2 * t + n, n);
      for (int i = 0; i < n; ++i) cube *= 2 * t + 1;
      EXPECT_EQ(lattice_count(box(n, 2), t), cube);
      EXPECT_EQ(lattice_count(simplex(n, 2), t), simp);
    }
}

TEST(LatticeCount, RationalRightHandSides) {
  // 0 <= x <= 1/2: only x = 0 until t = 2
  std::vector<Inequality> q{{row({-1}), 0}, {row({1}), make_rational(1, 2)}};
  EXPECT_EQ(lattice_count(q, 1), 1);
  EXPECT_EQ(lattice_count(q, 2), 2);
  EXPECT_EQ(lattice_count(q, 5), 3);
}

TEST(LatticeCount, Unbounded) {
  std::vector<Inequality> q{{row({-1, 0}), 0}, {row({0, -1}), 0}, {row({1, -1}), 0}};
  EXPECT_THROW(lattice_count(q, 1), InvalidInput);
}

TEST(LatticeCount, Empty) {
  std::vector<Inequality> q{{row({-1}), -3}, {row({1}), 1}};
  EXPECT_EQ(lattice_count(q, 1), 0);
}

TEST(Feasibility, SmallSystems) {
  EXPECT_TRUE(feasible({row({1, 1})}, row({2})));
  EXPECT_FALSE(feasible({row({1, 1})}, row({-1})));
  EXPECT_FALSE(feasible({row({1, -1}), row({1, 1})}, row({3, 1})));
  EXPECT_TRUE(feasible({row({1, -1}), row({1, 1})}, row({1, 3})));
}

TEST(ConvexHull, ExtremePoints) {
  auto sq = cube_vertices(2, 2);
  auto pts = sq;
  pts.push_back(pt({1, 1}));
  pts.push_back(pt({1, 0}));
  for (const auto& v : sq) EXPECT_TRUE(is_extreme(v, pts));
  EXPECT_FALSE(is_extreme(pt({1, 1}), pts));
  EXPECT_FALSE(is_extreme(pt({1, 0}), pts));
  // not a midpoint of any pair, still interior
  std::vector<Point> tri{pt({0, 0}), pt({3, 0}), pt({0, 3}), pt({1, 1})};
  EXPECT_FALSE(is_extreme(pt({1, 1}), tri));
  EXPECT_TRUE(in_convex_hull(pt({1, 1}), {pt({0, 0}), pt({3, 0}), pt({0, 3})}));
  EXPECT_FALSE(in_convex_hull(pt({2, 2}), {pt({0, 0}), pt({3, 0}), pt({0, 3})}));
}

TEST(ConvexHull, RandomPointsAgainstBarycentric) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> c(-5, 5);
  std::vector<Point> tri{pt({0, 0}), pt({4, 0}), pt({0, 4})};
  for (int rep = 0; rep < 200; ++rep) {
    Point p = pt({c(rng), c(rng)});
    const bool inside = p[0] >= 0 && p[1] >= 0 && p[0] + p[1] <= 4;
    EXPECT_EQ(in_convex_hull(p, tri), inside);
  }
}

TEST(AffineDimension, Basic) {
  EXPECT_EQ(affine_dimension({}), -1);
  EXPECT_EQ(affine_dimension({pt({1, 2})}), 0);
  EXPECT_EQ(affine_dimension({pt({0, 0}), pt({1, 1}), pt({2, 2})}), 1);
  EXPECT_EQ(affine_dimension(cube_vertices(3, 1)), 3);
}

TEST(FaceLattice, CubeAndSimplex) {
  for (int n = 1; n <= 4; ++n) {
    auto L = face_lattice_from_incidence(cube_vertices(n, 1), box(n, 1));
    std::vector<long> f;
    for (int k = 0; k <= n; ++k) f.push_back(Integer(binomial(n, k) * (Integer(1) << (n - k))).get_si());
    EXPECT_EQ(L.f_vector(), f);
    std::vector<Point> sv{Point(static_cast<std::size_t>(n), Rational(0))};
    for (int i = 0; i < n; ++i) {
      Point e(static_cast<std::size_t>(n), Rational(0));
      e[static_cast<std::size_t>(i)] = 1;
      sv.push_back(e);
    }
    auto S = face_lattice_from_incidence(sv, simplex(n, 1));
    std::vector<long> g;
    for (int k = 0; k <= n; ++k) g.push_back(binomial(n + 1, k + 1).get_si());
    EXPECT_EQ(S.f_vector(), g);
  }
}

TEST(FaceLattice, RedundantInequalityIsNotAFacet) {
  auto q = box(2, 1);
  q.push_back({row({1, 1}), 2});  // touches one vertex only
  q.push_back({row({1, 1}), 5});  // touches nothing
  auto L = face_lattice_from_incidence(cube_vertices(2, 1), q);
  EXPECT_EQ(L.facet_inequalities.size(), 4u);
  EXPECT_EQ(L.f_vector(), (std::vector<long>{4, 4, 1}));
  EXPECT_EQ(L.covers.size(), 8u + 4u);
}

TEST(ContractionSearch, SmallPreposets) {
  const auto chain = Preposet::from_relations(2, {{0, 1}, {1, 2}});
  const auto collapsed = Preposet::from_relations(2, {{0, 1}, {1, 0}, {1, 2}});
  const auto everything = Preposet::from_relations(2, {{0, 1}, {1, 2}, {2, 0}});
  EXPECT_TRUE(contraction_search(collapsed, chain));
  EXPECT_TRUE(contraction_search(everything, chain));
  EXPECT_TRUE(contraction_search(chain, chain));
  EXPECT_FALSE(contraction_search(chain, collapsed));
  // 0 <= 2 with 1 free: 0 ~ 2 is reachable, 0 <= 1 is not
  const auto v = Preposet::from_relations(2, {{0, 2}});
  EXPECT_FALSE(contraction_search(Preposet::from_relations(2, {{0, 2}, {0, 1}}), v));
  EXPECT_TRUE(contraction_search(Preposet::from_relations(2, {{0, 2}, {2, 0}}), v));
}

TEST(Minkowski, SquarePlusTriangle) {
  std::vector<Point> seg{pt({0, 0}), pt({1, 0})};
  std::vector<Point> seg2{pt({0, 0}), pt({0, 1})};
  auto sq = minkowski_vertex_sum(seg, seg2);
  EXPECT_EQ(sq, (std::vector<Point>{pt({0, 0}), pt({0, 1}), pt({1, 0}), pt({1, 1})}));
  EXPECT_EQ(sq.size(), 4u);
  auto hex = minkowski_vertex_sum(sq, {pt({0, 0}), pt({1, 0}), pt({0, 1})});
  EXPECT_EQ(hex.size(), 5u);
}

TEST(ParkingPoints, Counts) {
  // classical parking functions of length n (shifted to start at 0): (n+1)^(n-1)
  for (int n = 1; n <= 5; ++n) {
    std::vector<Rational> u;
    for (int i = 0; i < n; ++i) u.emplace_back(i);
    Integer expect = 1;
    for (int i = 0; i < n - 1; ++i) expect *= n + 1;
    EXPECT_EQ(Integer(static_cast<long>(parking_lattice_points(u).size())), expect);
  }
  EXPECT_EQ(parking_lattice_points({Rational(1), Rational(2)}).size(), 8u);
}
