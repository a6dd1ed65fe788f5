#pragma once

// Binary partitions, skewed binary partitions and compositions, their
// preposets, and the contraction order via block-intersection graphs.

#include <algorithm>
#include <bit>
#include <compare>
#include <deque>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pfpoly/core.hpp"
#include "pfpoly/preposet.hpp"

namespace pfpoly {

struct Block {
  std::vector<int> elements;  // sorted
  bool homogeneous = false;

  Block() = default;
  Block(std::vector<int> elems, bool homog = false) : elements(std::move(elems)), homogeneous(homog) {
    std::sort(elements.begin(), elements.end());
  }

  int size() const { return static_cast<int>(elements.size()); }
  bool empty() const { return elements.empty(); }
  bool contains(int e) const { return std::binary_search(elements.begin(), elements.end(), e); }

  Preposet::Mask mask() const {
    Preposet::Mask m = 0;
    for (int e : elements) m |= Preposet::bit(e);
    return m;
  }

  friend auto operator<=>(const Block&, const Block&) = default;
  friend bool operator==(const Block&, const Block&) = default;
};

namespace detail {

// Checks that the nonempty blocks partition [0,n] and returns n.
inline int check_cover(const std::vector<Block>& blocks) {
  int total = 0;
  Preposet::Mask seen = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 1; i < b.elements.size(); ++i)
      if (b.elements[i] == b.elements[i - 1]) throw InvalidInput("repeated element in a block");
    for (int e : b.elements) {
      if (e < 0 || e >= Preposet::kMaxElements) throw InvalidInput("block element out of range");
      if (seen & Preposet::bit(e)) throw InvalidInput("blocks are not disjoint");
      seen |= Preposet::bit(e);
    }
    total += b.size();
    if (b.size() == 1 && b.homogeneous) throw InvalidInput("singleton block marked homogeneous");
  }
  if (total == 0) throw InvalidInput("empty partition");
  const int n = total - 1;
  const Preposet::Mask full = (n + 1 == 64) ? ~Preposet::Mask{0} : (Preposet::bit(n + 1) - 1);
  if (seen != full) throw InvalidInput("blocks do not cover [0,n]");
  return n;
}

inline std::string block_to_string(const Block& b) {
  std::string s = "{";
  for (std::size_t i = 0; i < b.elements.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(b.elements[i]);
  }
  s += "}";
  if (b.homogeneous) s += "*";
  return s;
}

inline std::vector<Block> parse_blocks(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (ch != ' ' && ch != '\t' && ch != '\n') s += ch;
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') throw InvalidInput("partition must be wrapped in parentheses");
  std::vector<Block> out;
  std::size_t i = 1;
  const std::size_t end = s.size() - 1;
  while (i < end) {
    if (s[i] != '{') throw InvalidInput("expected '{' in partition text");
    const std::size_t close = s.find('}', i);
    if (close == std::string::npos || close > end) throw InvalidInput("unterminated block");
    std::vector<int> elems;
    std::string body = s.substr(i + 1, close - i - 1);
    std::size_t p = 0;
    while (p < body.size()) {
      std::size_t q = body.find(',', p);
      if (q == std::string::npos) q = body.size();
      const std::string tok = body.substr(p, q - p);
      if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos || tok.size() > 3)
        throw InvalidInput("bad block element '" + tok + "'");
      elems.push_back(std::stoi(tok));
      p = q + 1;
    }
    i = close + 1;
    bool star = false;
    if (i < end && s[i] == '*') {
      star = true;
      ++i;
    }
    out.emplace_back(std::move(elems), star);
    if (i < end) {
      if (s[i] != ',') throw InvalidInput("expected ',' between blocks");
      ++i;
    }
  }
  return out;
}

}  // namespace detail

/// Ordered partition of [0,n] into nonempty blocks.
class BinaryPartition {
 public:
  BinaryPartition() = default;
  explicit BinaryPartition(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
    for (auto& b : blocks_) {
      std::sort(b.elements.begin(), b.elements.end());
      if (b.empty()) throw InvalidInput("binary partition with an empty block");
    }
    n_ = detail::check_cover(blocks_);
  }

  int n() const { return n_; }
  int size() const { return static_cast<int>(blocks_.size()); }
  const std::vector<Block>& blocks() const { return blocks_; }
  const Block& operator[](int i) const { return blocks_[static_cast<std::size_t>(i)]; }

  int block_of(int e) const {
    for (int i = 0; i < size(); ++i)
      if ((*this)[i].contains(e)) return i;
    throw InvalidInput("element outside the ground set");
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
      if (i) s += ",";
      s += detail::block_to_string(blocks_[i]);
    }
    return s + ")";
  }

  static BinaryPartition parse(std::string_view text) { return BinaryPartition(detail::parse_blocks(text)); }

  friend auto operator<=>(const BinaryPartition& a, const BinaryPartition& b) { return a.blocks_ <=> b.blocks_; }
  friend bool operator==(const BinaryPartition& a, const BinaryPartition& b) { return a.blocks_ == b.blocks_; }

 private:
  std::vector<Block> blocks_;
  int n_ = 0;
};

/// (B_{-1}, B_0, B_1, ..., B_k); B_{-1} and B_0 may be empty.
class SkewedBinaryPartition {
 public:
  SkewedBinaryPartition() = default;

  /// blocks[0] = B_{-1}, blocks[1] = B_0, blocks[1 + i] = B_i.
  explicit SkewedBinaryPartition(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
    if (blocks_.size() < 2) throw InvalidInput("skewed binary partition needs the B_{-1} and B_0 slots");
    for (auto& b : blocks_) std::sort(b.elements.begin(), b.elements.end());
    n_ = detail::check_cover(blocks_);
    const Block& bm = blocks_[0];
    const Block& b0 = blocks_[1];
    if (bm.homogeneous) throw InvalidInput("B_{-1} must be non-homogeneous");
    if (b0.homogeneous != (b0.size() >= 2)) throw InvalidInput("B_0 is homogeneous exactly when |B_0| >= 2");
    const bool zero_in_m = bm.contains(0);
    if (!zero_in_m && !b0.contains(0)) throw InvalidInput("0 must lie in B_{-1} or B_0");
    if (zero_in_m && (bm.size() < 2 || !b0.empty()))
      throw InvalidInput("0 in B_{-1} requires |B_{-1}| >= 2 and B_0 empty");
    for (std::size_t i = 2; i < blocks_.size(); ++i)
      if (blocks_[i].empty()) throw InvalidInput("blocks B_1, ..., B_k must be nonempty");
  }

  static SkewedBinaryPartition parse(std::string_view text) {
    return SkewedBinaryPartition(detail::parse_blocks(text));
  }

  int n() const { return n_; }
  /// Number k of positive blocks.
  int k() const { return static_cast<int>(blocks_.size()) - 2; }
  const Block& minus_one() const { return blocks_[0]; }
  const Block& zero_block() const { return blocks_[1]; }
  /// B_i for i in [-1, k].
  const Block& block(int i) const { return blocks_[static_cast<std::size_t>(i + 1)]; }
  const std::vector<Block>& all_blocks() const { return blocks_; }

  /// Index i in [-1, k] of the block holding e.
  int block_of(int e) const {
    for (int i = -1; i <= k(); ++i)
      if (block(i).contains(e)) return i;
    throw InvalidInput("element outside the ground set");
  }

  /// B-hat: the binary partition obtained by dropping empty blocks.
  BinaryPartition hat() const {
    std::vector<Block> bs;
    for (const auto& b : blocks_)
      if (!b.empty()) bs.push_back(b);
    return BinaryPartition(std::move(bs));
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
      if (i) s += ",";
      s += detail::block_to_string(blocks_[i]);
    }
    return s + ")";
  }

  friend auto operator<=>(const SkewedBinaryPartition& a, const SkewedBinaryPartition& b) {
    return a.blocks_ <=> b.blocks_;
  }
  friend bool operator==(const SkewedBinaryPartition& a, const SkewedBinaryPartition& b) {
    return a.blocks_ == b.blocks_;
  }

 private:
  std::vector<Block> blocks_;
  int n_ = 0;
};

/// Re-inserts the B_{-1}/B_0 slots into a binary partition when possible.
inline std::optional<SkewedBinaryPartition> to_skewed(const BinaryPartition& a) {
  const auto& bs = a.blocks();
  std::vector<Block> out;
  if (bs[0].contains(0)) {
    if (bs[0].homogeneous || bs[0].size() == 1) {
      out.push_back(Block{});
      out.push_back(bs[0]);
    } else {
      out.push_back(bs[0]);
      out.push_back(Block{});
    }
    out.insert(out.end(), bs.begin() + 1, bs.end());
  } else if (bs.size() >= 2 && bs[1].contains(0) && !bs[0].homogeneous) {
    out = bs;
  } else {
    return std::nullopt;
  }
  return SkewedBinaryPartition(std::move(out));
}

enum class Tag { Plain, Circle, Star };

struct CompositionEntry {
  int value = 0;
  Tag tag = Tag::Plain;
  friend auto operator<=>(const CompositionEntry&, const CompositionEntry&) = default;
  friend bool operator==(const CompositionEntry&, const CompositionEntry&) = default;
};

/// (b_{-1}, b_0, b_1, ..., b_k) with tagged entries.
class SkewedBinaryComposition {
 public:
  SkewedBinaryComposition() = default;
  explicit SkewedBinaryComposition(std::vector<CompositionEntry> entries) : entries_(std::move(entries)) {
    if (entries_.size() < 2) throw InvalidInput("composition needs b_{-1} and b_0");
    const auto& bm = entries_[0];
    const auto& b0 = entries_[1];
    if (bm.tag != Tag::Plain || bm.value < 0) throw InvalidInput("b_{-1} must be a plain nonnegative integer");
    if (b0.tag == Tag::Star || b0.value < 0) throw InvalidInput("b_0 must be plain or circled");
    if (b0.tag == Tag::Plain && (b0.value != 0 || bm.value < 1))
      throw InvalidInput("plain b_0 must be 0 with b_{-1} positive");
    for (std::size_t i = 2; i < entries_.size(); ++i) {
      const auto& e = entries_[i];
      if (e.tag == Tag::Circle || e.value < 1) throw InvalidInput("b_i (i >= 1) must be positive, plain or starred");
      if (e.tag == Tag::Star && e.value < 2) throw InvalidInput("1* is not a valid entry");
    }
    for (const auto& e : entries_) n_ += e.value;
    if (n_ < 1) throw InvalidInput("composition of 0");
  }

  static SkewedBinaryComposition parse(std::string_view text) {
    std::vector<CompositionEntry> es;
    std::string s;
    for (char ch : text)
      if (ch != ' ' && ch != '(' && ch != ')') s += ch;
    std::size_t p = 0;
    while (p <= s.size()) {
      std::size_t q = s.find(',', p);
      if (q == std::string::npos) q = s.size();
      std::string tok = s.substr(p, q - p);
      CompositionEntry e;
      if (!tok.empty() && (tok.back() == 'o' || tok.back() == '*')) {
        e.tag = tok.back() == 'o' ? Tag::Circle : Tag::Star;
        tok.pop_back();
      }
      if (tok.empty() || tok.size() > 3 || tok.find_first_not_of("0123456789") != std::string::npos)
        throw InvalidInput("bad composition entry");
      e.value = std::stoi(tok);
      es.push_back(e);
      p = q + 1;
    }
    return SkewedBinaryComposition(std::move(es));
  }

  int n() const { return n_; }
  int k() const { return static_cast<int>(entries_.size()) - 2; }
  /// b_i for i in [-1, k].
  const CompositionEntry& at(int i) const { return entries_[static_cast<std::size_t>(i + 1)]; }
  const std::vector<CompositionEntry>& entries() const { return entries_; }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(entries_[i].value);
      if (entries_[i].tag == Tag::Circle) s += "o";
      if (entries_[i].tag == Tag::Star) s += "*";
    }
    return s;
  }

  friend auto operator<=>(const SkewedBinaryComposition& a, const SkewedBinaryComposition& b) {
    return a.entries_ <=> b.entries_;
  }
  friend bool operator==(const SkewedBinaryComposition& a, const SkewedBinaryComposition& b) {
    return a.entries_ == b.entries_;
  }

 private:
  std::vector<CompositionEntry> entries_;
  int n_ = 0;
};

/// Every skewed binary composition of n.
inline std::vector<SkewedBinaryComposition> all_compositions(int n) {
  std::vector<SkewedBinaryComposition> out;
  std::vector<CompositionEntry> cur;
  std::function<void(int)> tail = [&](int rest) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int v = 1; v <= rest; ++v)
      for (Tag tg : {Tag::Plain, Tag::Star}) {
        if (tg == Tag::Star && v < 2) continue;
        cur.push_back({v, tg});
        tail(rest - v);
        cur.pop_back();
      }
  };
  for (int bm = 0; bm <= n; ++bm) {
    for (int b0 = 0; bm + b0 <= n; ++b0) {
      cur = {{bm, Tag::Plain}, {b0, Tag::Circle}};
      tail(n - bm - b0);
    }
    if (bm >= 1) {
      cur = {{bm, Tag::Plain}, {0, Tag::Plain}};
      tail(n - bm);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline SkewedBinaryComposition type_of(const SkewedBinaryPartition& b) {
  std::vector<CompositionEntry> es;
  if (b.zero_block().contains(0)) {
    es.push_back({b.minus_one().size(), Tag::Plain});
    es.push_back({b.zero_block().size() - 1, Tag::Circle});
  } else {
    es.push_back({b.minus_one().size() - 1, Tag::Plain});
    es.push_back({0, Tag::Plain});
  }
  for (int i = 1; i <= b.k(); ++i) es.push_back({b.block(i).size(), b.block(i).homogeneous ? Tag::Star : Tag::Plain});
  return SkewedBinaryComposition(std::move(es));
}

inline SkewedBinaryPartition standard_of_type(const SkewedBinaryComposition& t) {
  std::vector<Block> blocks;
  int next = 1;
  auto take = [&](int count) {
    std::vector<int> v;
    for (int j = 0; j < count; ++j) v.push_back(next++);
    return v;
  };
  const bool zero_in_b0 = t.at(0).tag == Tag::Circle;
  std::vector<int> bm = take(t.at(-1).value);
  std::vector<int> b0 = take(t.at(0).value);
  (zero_in_b0 ? b0 : bm).push_back(0);
  blocks.emplace_back(std::move(bm), false);
  const bool homog0 = b0.size() >= 2;
  blocks.emplace_back(std::move(b0), homog0);
  for (int i = 1; i <= t.k(); ++i) blocks.emplace_back(take(t.at(i).value), t.at(i).tag == Tag::Star);
  return SkewedBinaryPartition(std::move(blocks));
}

/// All skewed binary partitions of the given type, in canonical order.
inline std::vector<SkewedBinaryPartition> partitions_of_type(const SkewedBinaryComposition& t) {
  const int n = t.n();
  const bool zero_in_b0 = t.at(0).tag == Tag::Circle;
  std::vector<int> sizes;
  for (int i = -1; i <= t.k(); ++i) sizes.push_back(t.at(i).value);
  std::vector<SkewedBinaryPartition> out;
  std::vector<std::vector<int>> parts(sizes.size());
  // Assigns positive elements 1..n to slots with the prescribed counts.
  std::function<void(int)> rec = [&](int e) {
    if (e > n) {
      std::vector<Block> blocks;
      for (std::size_t s = 0; s < parts.size(); ++s) {
        std::vector<int> v = parts[s];
        if ((s == 0 && !zero_in_b0) || (s == 1 && zero_in_b0)) v.push_back(0);
        const bool homog = s == 1 ? v.size() >= 2 : (s >= 2 && t.at(static_cast<int>(s) - 1).tag == Tag::Star);
        blocks.emplace_back(std::move(v), homog);
      }
      out.emplace_back(std::move(blocks));
      return;
    }
    for (std::size_t s = 0; s < parts.size(); ++s) {
      if (static_cast<int>(parts[s].size()) >= sizes[s]) continue;
      parts[s].push_back(e);
      rec(e + 1);
      parts[s].pop_back();
    }
  };
  rec(1);
  std::sort(out.begin(), out.end());
  return out;
}

/// Number of partitions of a type (a multinomial coefficient).
inline Integer count_of_type(const SkewedBinaryComposition& t) {
  Integer c = factorial(t.n());
  for (const auto& e : t.entries()) c /= factorial(e.value);
  return c;
}

inline Preposet preposet_of(const BinaryPartition& b) {
  const int n = b.n();
  std::vector<Preposet::Mask> rows(static_cast<std::size_t>(n + 1), 0);
  Preposet::Mask above = 0;
  for (int i = b.size() - 1; i >= 0; --i) {
    const Preposet::Mask own = b[i].mask();
    for (int e : b[i].elements) rows[static_cast<std::size_t>(e)] = above | (b[i].homogeneous ? own : Preposet::bit(e));
    above |= own;
  }
  return Preposet::from_rows(n, std::move(rows));
}

inline Preposet preposet_of(const SkewedBinaryPartition& b) { return preposet_of(b.hat()); }

/// The binary partition whose preposet is p, if one exists.
inline std::optional<BinaryPartition> representing_partition(const Preposet& p) {
  const auto labels = p.class_labels();
  // level = length of the longest chain of classes strictly below
  std::vector<int> level(static_cast<std::size_t>(p.n() + 1), -1);
  std::vector<int> order = labels;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return std::popcount(p.up_set(a)) > std::popcount(p.up_set(b));
  });
  int top = 0;
  for (int a : order) {
    int lv = 0;
    for (int c : labels)
      if (p.less(c, a)) lv = std::max(lv, level[static_cast<std::size_t>(c)] + 1);
    level[static_cast<std::size_t>(a)] = lv;
    top = std::max(top, lv);
  }
  std::vector<Block> blocks;
  for (int lv = 0; lv <= top; ++lv) {
    std::vector<int> classes;
    for (int a : labels)
      if (level[static_cast<std::size_t>(a)] == lv) classes.push_back(a);
    if (classes.size() == 1) {
      auto members = p.class_members(classes[0]);
      const bool homog = members.size() >= 2;
      blocks.emplace_back(std::move(members), homog);
    } else {
      std::vector<int> elems;
      for (int a : classes) {
        if (p.class_members(a).size() != 1) return std::nullopt;
        elems.push_back(a);
      }
      blocks.emplace_back(std::move(elems), false);
    }
  }
  BinaryPartition b(std::move(blocks));
  if (!(preposet_of(b) == p)) return std::nullopt;
  return b;
}

inline std::optional<SkewedBinaryPartition> representing_skewed(const Preposet& p) {
  auto b = representing_partition(p);
  if (!b) return std::nullopt;
  return to_skewed(*b);
}

/// G(B, C): left vertices are the blocks of B, right vertices those of C.
class BipartiteBlockGraph {
 public:
  BipartiteBlockGraph(const BinaryPartition& b, const BinaryPartition& c) {
    if (b.n() != c.n()) throw InvalidInput("partitions of different ground sets");
    for (const auto& x : b.blocks()) left_homog_.push_back(x.homogeneous);
    for (const auto& y : c.blocks()) right_homog_.push_back(y.homogeneous);
    adj_.assign(left_homog_.size(), std::vector<bool>(right_homog_.size(), false));
    inter_.assign(left_homog_.size(), std::vector<int>(right_homog_.size(), 0));
    for (int i = 0; i < b.size(); ++i)
      for (int j = 0; j < c.size(); ++j) {
        const int k = std::popcount(b[i].mask() & c[j].mask());
        inter_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = k;
        adj_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = k > 0;
      }
  }

  int left_size() const { return static_cast<int>(left_homog_.size()); }
  int right_size() const { return static_cast<int>(right_homog_.size()); }
  bool left_homogeneous(int i) const { return left_homog_[static_cast<std::size_t>(i)]; }
  bool right_homogeneous(int j) const { return right_homog_[static_cast<std::size_t>(j)]; }
  bool adjacent(int i, int j) const { return adj_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
  /// |B_i ∩ C_j|
  int intersection(int i, int j) const { return inter_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < left_size(); ++i)
      for (int j = 0; j < right_size(); ++j)
        if (adjacent(i, j)) out.emplace_back(i, j);
    return out;
  }

  int left_deg(int i) const { return left_deg_star(i) + left_deg_vee(i); }
  int left_deg_star(int i) const { return count_left(i, true); }
  int left_deg_vee(int i) const { return count_left(i, false); }
  int right_deg(int j) const { return right_deg_star(j) + right_deg_vee(j); }
  int right_deg_star(int j) const { return count_right(j, true); }
  int right_deg_vee(int j) const { return count_right(j, false); }

 private:
  int count_left(int i, bool homog) const {
    int c = 0;
    for (int j = 0; j < right_size(); ++j)
      if (adjacent(i, j) && right_homogeneous(j) == homog) ++c;
    return c;
  }
  int count_right(int j, bool homog) const {
    int c = 0;
    for (int i = 0; i < left_size(); ++i)
      if (adjacent(i, j) && left_homogeneous(i) == homog) ++c;
    return c;
  }

  std::vector<bool> left_homog_, right_homog_;
  std::vector<std::vector<bool>> adj_;
  std::vector<std::vector<int>> inter_;
};

inline BipartiteBlockGraph bipartite_graph(const BinaryPartition& b, const BinaryPartition& c) {
  return BipartiteBlockGraph(b, c);
}

inline bool is_noncrossing(const BipartiteBlockGraph& g) {
  const auto es = g.edges();
  for (auto [i, j] : es)
    for (auto [s, t] : es)
      if (i < s && j > t) return false;
  return true;
}

/// C <= B: the preposet of C is a contraction of that of B.
inline bool is_contraction(const BinaryPartition& c, const BinaryPartition& b) {
  if (b.n() != c.n()) return false;
  const BipartiteBlockGraph g(b, c);
  if (!is_noncrossing(g)) return false;
  for (int i = 0; i < g.left_size(); ++i) {
    if (g.left_homogeneous(i)) {
      if (g.left_deg_star(i) != 1 || g.left_deg_vee(i) != 0) return false;
    } else if (g.left_deg_vee(i) > 1) {
      return false;
    }
  }
  for (int j = 0; j < g.right_size(); ++j) {
    if (!g.right_homogeneous(j)) {
      if (g.right_deg_star(j) != 0 || g.right_deg_vee(j) != 1) return false;
    } else if (g.right_deg(j) == 1 && g.right_deg_star(j) != 1) {
      return false;
    }
  }
  return true;
}

inline bool is_contraction(const SkewedBinaryPartition& c, const SkewedBinaryPartition& b) {
  return is_contraction(c.hat(), b.hat());
}

/// C ⋖ B, via the block-graph conditions for covers.
inline bool is_cover(const BinaryPartition& c, const BinaryPartition& b) {
  if (b.n() != c.n()) return false;
  const BipartiteBlockGraph g(b, c);
  if (!is_noncrossing(g)) return false;
  int cj = -1;
  for (int j = 0; j < g.right_size(); ++j) {
    if (g.right_deg(j) == 2) {
      if (cj != -1) return false;
      cj = j;
    } else if (g.right_deg(j) != 1) {
      return false;
    }
  }
  if (cj == -1 || !g.right_homogeneous(cj)) return false;
  auto same_type_neighbor = [&](int i) {
    for (int j = 0; j < g.right_size(); ++j)
      if (g.adjacent(i, j) && g.right_homogeneous(j) == g.left_homogeneous(i)) return true;
    return false;
  };
  for (int j = 0; j < g.right_size(); ++j) {
    if (j == cj) continue;
    bool ok = false;
    for (int i = 0; i < g.left_size(); ++i)
      if (g.adjacent(i, j) && g.left_homogeneous(i) == g.right_homogeneous(j)) ok = true;
    if (!ok) return false;
  }
  for (int i = 0; i < g.left_size(); ++i) {
    if (!g.left_homogeneous(i) && g.adjacent(i, cj)) {
      if (g.left_deg(i) > 2 || g.intersection(i, cj) != 1) return false;
    } else if (g.left_deg(i) != 1 || !same_type_neighbor(i)) {
      return false;
    }
  }
  return true;
}

inline bool is_cover(const SkewedBinaryPartition& c, const SkewedBinaryPartition& b) {
  return is_cover(c.hat(), b.hat());
}

/// Contracts the Hasse edge from the class of g up to the class of h.
inline SkewedBinaryPartition contract_edge(const SkewedBinaryPartition& b, int g, int h) {
  if (g < 0 || h < 0 || g > b.n() || h > b.n()) throw InvalidInput("element outside [0,n]");
  const Preposet p = preposet_of(b);
  if (!p.is_cover(g, h)) throw InvalidInput("not a cover edge of the preposet");
  const BinaryPartition a = b.hat();
  const int i = a.block_of(g);
  if (a.block_of(h) != i + 1) throw std::logic_error("cover edge between non-consecutive blocks");
  const Block& bi = a[i];
  const Block& bj = a[i + 1];
  std::vector<int> gbar = bi.homogeneous ? bi.elements : std::vector<int>{g};
  std::vector<int> hbar = bj.homogeneous ? bj.elements : std::vector<int>{h};
  std::vector<int> x, y;
  for (int e : bi.elements)
    if (!bi.homogeneous && e != g) x.push_back(e);
  for (int e : bj.elements)
    if (!bj.homogeneous && e != h) y.push_back(e);
  std::vector<Block> out(a.blocks().begin(), a.blocks().begin() + i);
  if (!x.empty()) out.emplace_back(std::move(x), false);
  std::vector<int> merged = gbar;
  merged.insert(merged.end(), hbar.begin(), hbar.end());
  out.emplace_back(std::move(merged), true);
  if (!y.empty()) out.emplace_back(std::move(y), false);
  out.insert(out.end(), a.blocks().begin() + i + 2, a.blocks().end());
  auto s = to_skewed(BinaryPartition(std::move(out)));
  if (!s) throw std::logic_error("contraction is not representable as a skewed binary partition");
  return *s;
}

/// One-edge contractions of b, one per Hasse edge.
inline std::vector<SkewedBinaryPartition> cover_contractions(const SkewedBinaryPartition& b) {
  std::vector<SkewedBinaryPartition> out;
  for (auto [g, h] : preposet_of(b).covers()) out.push_back(contract_edge(b, g, h));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// The down-set of b under contraction (b included).
inline std::set<SkewedBinaryPartition> all_contractions(const SkewedBinaryPartition& b) {
  std::set<SkewedBinaryPartition> seen{b};
  std::deque<SkewedBinaryPartition> queue{b};
  while (!queue.empty()) {
    const auto cur = queue.front();
    queue.pop_front();
    for (auto& c : cover_contractions(cur))
      if (seen.insert(c).second) queue.push_back(c);
  }
  return seen;
}

}  // namespace pfpoly
