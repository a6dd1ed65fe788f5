#pragma once

// Sliced preorder cones: {c in R^n : c_0 = 0, c_i <= c_j whenever i <= j}.

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "pfpoly/core.hpp"
#include "pfpoly/partitions.hpp"
#include "pfpoly/preposet.hpp"

namespace pfpoly {

enum class Membership { Closed, Interior };

class SlicedPreorderCone {
 public:
  SlicedPreorderCone() = default;
  explicit SlicedPreorderCone(Preposet p) : p_(std::move(p)) {
    for (int i = 0; i <= p_.n(); ++i)
      for (int j = 0; j <= p_.n(); ++j)
        if (i != j && p_.leq(i, j)) relations_.emplace_back(i, j);
    for (int i = 0; i <= p_.n(); ++i) {
      const int a = p_.class_label(i);
      if (a != i) equalities_.emplace_back(a, i);
    }
    covers_ = p_.covers();
  }

  const Preposet& source() const { return p_; }
  int n() const { return p_.n(); }

  /// Every pair i != j with c_i <= c_j (equalities appear in both directions).
  const std::vector<std::pair<int, int>>& relations() const { return relations_; }
  /// Minimal description: c_label = c_i within classes ...
  const std::vector<std::pair<int, int>>& equalities() const { return equalities_; }
  /// ... plus c_a <= c_b on covers between class labels.
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }

  /// Dimension = number of equivalence classes - 1.
  int dim() const { return p_.num_classes() - 1; }

  bool contains(const Point& c, Membership mode = Membership::Closed) const {
    check_dim(c);
    for (auto [a, i] : equalities_)
      if (coord(c, a) != coord(c, i)) return false;
    for (auto [a, b] : covers_) {
      const Rational& x = coord(c, a);
      const Rational& y = coord(c, b);
      if (mode == Membership::Closed ? !(x <= y) : !(x < y)) return false;
    }
    return true;
  }

  /// Closed membership read off the full relation list.
  bool contains_full(const Point& c) const {
    check_dim(c);
    for (auto [i, j] : relations_)
      if (coord(c, i) > coord(c, j)) return false;
    return true;
  }

  /// A rational point of the relative interior: c_i = level(i) - level(0)
  /// where level counts classes strictly below.
  Point interior_point() const {
    std::vector<int> level(static_cast<std::size_t>(n() + 1), 0);
    for (int i = 0; i <= n(); ++i)
      for (int j : p_.class_labels())
        if (p_.less(j, i)) ++level[static_cast<std::size_t>(i)];
    Point c(static_cast<std::size_t>(n()));
    for (int i = 1; i <= n(); ++i) c[static_cast<std::size_t>(i - 1)] = level[static_cast<std::size_t>(i)] - level[0];
    return c;
  }

  std::string to_string() const {
    auto name = [](int i) { return i == 0 ? std::string("0") : "c" + std::to_string(i); };
    if (auto b = representing_partition(p_)) {
      std::string s;
      for (int i = 0; i < b->size(); ++i) {
        if (i) s += " <= ";
        const Block& bl = (*b)[i];
        for (std::size_t k = 0; k < bl.elements.size(); ++k) {
          if (k) s += bl.homogeneous ? " = " : ",";
          s += name(bl.elements[k]);
        }
      }
      return s;
    }
    std::string s;
    for (auto [a, i] : equalities_) s += (s.empty() ? "" : "; ") + name(a) + " = " + name(i);
    for (auto [a, b] : covers_) s += (s.empty() ? "" : "; ") + name(a) + " <= " + name(b);
    return s;
  }

  friend bool operator==(const SlicedPreorderCone& a, const SlicedPreorderCone& b) { return a.p_ == b.p_; }

 private:
  static const Rational& zero() {
    static const Rational z(0);
    return z;
  }
  static const Rational& coord(const Point& c, int i) { return i == 0 ? zero() : c[static_cast<std::size_t>(i - 1)]; }
  void check_dim(const Point& c) const {
    if (static_cast<int>(c.size()) != n()) throw InvalidInput("point has the wrong dimension for this cone");
  }

  Preposet p_;
  std::vector<std::pair<int, int>> relations_, equalities_, covers_;
};

inline SlicedPreorderCone cone_of(const Preposet& p) { return SlicedPreorderCone(p); }
inline SlicedPreorderCone cone_of(const SkewedBinaryPartition& b) { return SlicedPreorderCone(preposet_of(b)); }

inline bool contains(const SlicedPreorderCone& s, const Point& c, Membership mode = Membership::Closed) {
  return s.contains(c, mode);
}

/// dim of the cone of a skewed binary partition, from its type.
inline int cone_dim(const SkewedBinaryComposition& t) {
  int d = 0;
  for (int i = -1; i <= t.k(); ++i) {
    const auto& e = t.at(i);
    if (e.tag == Tag::Plain) d += e.value;
    if (e.tag == Tag::Star) d += 1;
  }
  return d;
}

inline int cone_dim(const SkewedBinaryPartition& b) { return cone_dim(type_of(b)); }

inline int cone_codim(const SkewedBinaryComposition& t) {
  int c = t.at(0).value;
  for (int i = 1; i <= t.k(); ++i)
    if (t.at(i).tag == Tag::Star) c += t.at(i).value - 1;
  return c;
}

inline bool is_face_of(const SlicedPreorderCone& face, const SlicedPreorderCone& cone) {
  auto f = representing_partition(face.source());
  auto c = representing_partition(cone.source());
  if (!f || !c) throw InvalidInput("cone does not come from a binary partition");
  return is_contraction(*f, *c);
}

inline bool is_simplicial(const SlicedPreorderCone& s) {
  const Preposet& p = s.source();
  if (!p.is_poset()) return false;
  const auto cov = p.covers();
  if (static_cast<int>(cov.size()) != p.n()) return false;
  // n edges on n + 1 nodes: a tree iff connected
  std::vector<int> parent(static_cast<std::size_t>(p.n() + 1));
  for (int i = 0; i <= p.n(); ++i) parent[static_cast<std::size_t>(i)] = i;
  std::function<int(int)> find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  int components = p.n() + 1;
  for (auto [a, b] : cov) {
    const int ra = find(a), rb = find(b);
    if (ra != rb) {
      parent[static_cast<std::size_t>(ra)] = rb;
      --components;
    }
  }
  return components == 1;
}

/// All linear extensions of a poset on [0,n], each as the sequence
/// pi(0), ..., pi(n) read bottom to top; the cone of pi is the chain
/// c_{pi(0)} <= ... <= c_{pi(n)}.
inline std::vector<std::vector<int>> linear_extension_decomposition(const SlicedPreorderCone& s) {
  const Preposet& p = s.source();
  if (!p.is_poset()) throw InvalidInput("linear extensions need a poset");
  const int n = p.n();
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  Preposet::Mask used = 0;
  std::function<void()> rec = [&]() {
    if (static_cast<int>(cur.size()) == n + 1) {
      out.push_back(cur);
      return;
    }
    for (int i = 0; i <= n; ++i) {
      if (used & Preposet::bit(i)) continue;
      bool minimal = true;
      for (int j = 0; j <= n; ++j)
        if (j != i && !(used & Preposet::bit(j)) && p.leq(j, i)) {
          minimal = false;
          break;
        }
      if (!minimal) continue;
      used |= Preposet::bit(i);
      cur.push_back(i);
      rec();
      cur.pop_back();
      used &= ~Preposet::bit(i);
    }
  };
  rec();
  return out;
}

/// The chain preposet pi(0) <= pi(1) <= ... <= pi(n).
inline SlicedPreorderCone chain_cone(const std::vector<int>& order) {
  std::vector<std::pair<int, int>> rel;
  for (std::size_t i = 1; i < order.size(); ++i) rel.emplace_back(order[i - 1], order[i]);
  return SlicedPreorderCone(Preposet::from_relations(static_cast<int>(order.size()) - 1, rel));
}

}  // namespace pfpoly
