#pragma once

// Preorders on the ground set [0,n], stored as a transitively closed
// relation matrix with one 64-bit row per element.

#include <bit>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "pfpoly/core.hpp"

namespace pfpoly {

class Preposet {
 public:
  using Mask = std::uint64_t;
  static constexpr int kMaxElements = 64;

  Preposet() = default;

  /// The discrete preorder on [0,n] (reflexive only).
  explicit Preposet(int n) : n_(n) {
    if (n < 0 || n + 1 > kMaxElements) throw InvalidInput("ground set [0,n] too large");
    up_.assign(static_cast<std::size_t>(n + 1), 0);
    for (int i = 0; i <= n; ++i) up_[idx(i)] = bit(i);
  }

  /// Closure of the given rows (bit j of rows[i] set means i <= j).
  static Preposet from_rows(int n, std::vector<Mask> rows) {
    Preposet p(n);
    if (rows.size() != p.up_.size()) throw InvalidInput("relation matrix has wrong size");
    for (int i = 0; i <= n; ++i) p.up_[p.idx(i)] |= rows[p.idx(i)];
    p.close();
    return p;
  }

  /// Reflexive-transitive closure of the given pairs (i, j) meaning i <= j.
  static Preposet from_relations(int n, const std::vector<std::pair<int, int>>& pairs) {
    Preposet p(n);
    for (auto [i, j] : pairs) {
      p.check(i);
      p.check(j);
      p.up_[p.idx(i)] |= bit(j);
    }
    p.close();
    return p;
  }

  int n() const { return n_; }
  int size() const { return n_ + 1; }

  bool leq(int i, int j) const { return (up_[idx(i)] >> j) & 1U; }
  bool less(int i, int j) const { return leq(i, j) && !leq(j, i); }
  bool equiv(int i, int j) const { return leq(i, j) && leq(j, i); }

  /// Elements above i (including i), as a bit mask.
  Mask up_set(int i) const { return up_[idx(i)]; }

  /// Equivalence class of i as a bit mask.
  Mask class_mask(int i) const {
    Mask m = 0;
    for (int j = 0; j <= n_; ++j)
      if (equiv(i, j)) m |= bit(j);
    return m;
  }

  /// Classes are labelled by their minimum element.
  int class_label(int i) const { return std::countr_zero(class_mask(i)); }

  std::vector<int> class_labels() const {
    std::vector<int> out;
    for (int i = 0; i <= n_; ++i)
      if (class_label(i) == i) out.push_back(i);
    return out;
  }

  std::vector<int> class_members(int i) const { return bits_of(class_mask(i)); }

  int num_classes() const { return static_cast<int>(class_labels().size()); }

  bool is_poset() const { return num_classes() == n_ + 1; }

  /// Cover relations between classes, as (lower label, upper label).
  std::vector<std::pair<int, int>> covers() const {
    std::vector<std::pair<int, int>> out;
    const auto labels = class_labels();
    for (int a : labels)
      for (int b : labels) {
        if (!less(a, b)) continue;
        bool direct = true;
        for (int c : labels)
          if (less(a, c) && less(c, b)) {
            direct = false;
            break;
          }
        if (direct) out.emplace_back(a, b);
      }
    return out;
  }

  bool is_cover(int g, int h) const {
    const int a = class_label(g), b = class_label(h);
    for (auto [x, y] : covers())
      if (x == a && y == b) return true;
    return false;
  }

  /// Contracts the Hasse edge between the classes of g and h.
  Preposet contract(int g, int h) const {
    if (!is_cover(g, h) && !is_cover(h, g)) throw InvalidInput("not a Hasse diagram edge");
    Preposet p = *this;
    p.up_[idx(h)] |= bit(g);
    p.up_[idx(g)] |= bit(h);
    p.close();
    return p;
  }

  Preposet dual() const {
    Preposet p(n_);
    for (int i = 0; i <= n_; ++i)
      for (int j = 0; j <= n_; ++j)
        if (leq(i, j)) p.up_[idx(j)] |= bit(i);
    return p;
  }

  const std::vector<Mask>& rows() const { return up_; }

  friend bool operator==(const Preposet& a, const Preposet& b) { return a.n_ == b.n_ && a.up_ == b.up_; }
  friend bool operator<(const Preposet& a, const Preposet& b) {
    return a.n_ != b.n_ ? a.n_ < b.n_ : a.up_ < b.up_;
  }

  static std::vector<int> bits_of(Mask m) {
    std::vector<int> out;
    while (m) {
      out.push_back(std::countr_zero(m));
      m &= m - 1;
    }
    return out;
  }
  static constexpr Mask bit(int i) { return Mask{1} << i; }

 private:
  std::size_t idx(int i) const { return static_cast<std::size_t>(i); }
  void check(int i) const {
    if (i < 0 || i > n_) throw InvalidInput("element outside [0,n]");
  }
  void close() {
    // Warshall on bit rows: if i <= k then everything above k is above i.
    for (int k = 0; k <= n_; ++k)
      for (int i = 0; i <= n_; ++i)
        if ((up_[idx(i)] >> k) & 1U) up_[idx(i)] |= up_[idx(k)];
  }

  int n_ = 0;
  std::vector<Mask> up_;
};

struct PreposetHash {
  std::size_t operator()(const Preposet& p) const {
    std::size_t h = std::hash<int>{}(p.n());
    for (auto r : p.rows()) h = h * 1000003U ^ std::hash<std::uint64_t>{}(r);
    return h;
  }
};

}  // namespace pfpoly
