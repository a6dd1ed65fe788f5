#pragma once

// Minkowski decompositions of PF(u), the polymatroid rank w_u, draconian
// sequences, Ehrhart polynomials and volumes.

#include <cstdint>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "pfpoly/core.hpp"
#include "pfpoly/parallel.hpp"
#include "pfpoly/polytope.hpp"

namespace pfpoly {

/// y_k for k = 1..n: the alternating sum over C(k-1, j) (-1)^j u_{k-j}.
inline std::map<int, Rational> y_coefficients(const UVector& u) {
  std::map<int, Rational> y;
  for (int k = 1; k <= u.n(); ++k) {
    Rational s = 0;
    for (int j = 0; j < k; ++j) s += Rational(binomial(k - 1, j)) * (j % 2 ? -1 : 1) * u.at(k - j);
    y[k] = s;
  }
  return y;
}

/// coeff * PF(1_k); 1_k has its last k coordinates equal to 1.
struct HypersimplexTerm {
  int k = 0;
  Rational coeff;
};

/// u_1 PF(1_n) + sum (u_{k+1} - u_k) PF(1_{n-k}), zero terms kept.
inline std::vector<HypersimplexTerm> minkowski_hypersimplex(const UVector& u) {
  std::vector<HypersimplexTerm> out{{u.n(), u.at(1)}};
  for (int k = 1; k < u.n(); ++k) out.push_back({u.n() - k, u.at(k + 1) - u.at(k)});
  return out;
}

struct Summand {
  std::uint64_t set = 0;  // bit i for element i in [1, n]
  Rational y;
  int size() const { return __builtin_popcountll(set); }
  std::vector<int> elements() const {
    std::vector<int> v;
    for (int i = 1; i < 64; ++i)
      if (set >> i & 1) v.push_back(i);
    return v;
  }
};

/// PF(u) = sum of y_I conv(0, e_i : i in I); only nonzero y_I are kept.
struct MinkowskiDecomposition {
  int n = 0;
  std::vector<Summand> summands;  // by size, then lexicographically

  /// (size, y) for each size with nonzero y.
  std::vector<std::pair<int, Rational>> by_size() const {
    std::vector<std::pair<int, Rational>> out;
    for (const auto& s : summands)
      if (out.empty() || out.back().first != s.size()) out.emplace_back(s.size(), s.y);
    return out;
  }
};

inline MinkowskiDecomposition minkowski_decomposition(const UVector& u) {
  MinkowskiDecomposition dec;
  dec.n = u.n();
  const auto y = y_coefficients(u);
  for (const auto& I : subsets_by_size(u.n())) {
    const Rational& c = y.at(static_cast<int>(I.size()));
    if (c == 0) continue;
    Summand s;
    for (int i : I) s.set |= std::uint64_t{1} << i;
    s.y = c;
    dec.summands.push_back(s);
  }
  return dec;
}

using DraconianSequence = std::vector<int>;

namespace detail {

/// Walks every a >= 0 with sum_J a_j <= |union_J I_j| for all J. Feasibility
/// is kept as a b-matching of summand units onto elements, so each visited
/// node is admissible and extends by augmenting paths.
class DraconianWalker {
 public:
  DraconianWalker(const MinkowskiDecomposition& dec, std::function<void(const std::vector<int>&)> visit)
      : dec_(dec), visit_(std::move(visit)), owner_(static_cast<std::size_t>(dec.n + 1), -1) {
    for (const auto& s : dec.summands) sets_.push_back(s.elements());
  }

  /// Sequences whose first nonzero position is `first` (or the zero
  /// sequence when first < 0).
  void run_from(int first) {
    a_.assign(dec_.summands.size(), 0);
    std::fill(owner_.begin(), owner_.end(), -1);
    if (first < 0) {
      visit_(a_);
      return;
    }
    grow(static_cast<std::size_t>(first), dec_.n);
  }

 private:
  bool augment(int j, std::vector<bool>& seen) {
    for (int e : sets_[static_cast<std::size_t>(j)]) {
      if (seen[static_cast<std::size_t>(e)]) continue;
      seen[static_cast<std::size_t>(e)] = true;
      const int k = owner_[static_cast<std::size_t>(e)];
      if (k < 0 || augment(k, seen)) {
        owner_[static_cast<std::size_t>(e)] = j;
        return true;
      }
    }
    return false;
  }

  // Tries every positive amount at position j, then recurses to later ones.
  void grow(std::size_t j, int budget) {
    const auto saved = owner_;
    int added = 0;
    while (added < budget) {
      std::vector<bool> seen(owner_.size(), false);
      if (!augment(static_cast<int>(j), seen)) break;
      ++added;
      a_[j] = added;
      visit_(a_);
      for (std::size_t k = j + 1; k < sets_.size(); ++k) grow(k, budget - added);
    }
    a_[j] = 0;
    owner_ = saved;
  }

  const MinkowskiDecomposition& dec_;
  std::function<void(const std::vector<int>&)> visit_;
  std::vector<std::vector<int>> sets_;
  std::vector<int> owner_;
  std::vector<int> a_;
};

inline void require_integral_y(const MinkowskiDecomposition& dec) {
  if (dec.summands.empty()) throw InvalidInput("empty Minkowski decomposition");
  for (const auto& s : dec.summands)
    if (!is_integer(s.y)) throw Unsupported("draconian sequences need integral coefficients");
}

}  // namespace detail

/// All draconian sequences of the decomposition, in walk order.
inline std::vector<DraconianSequence> draconian_enumerate(const MinkowskiDecomposition& dec) {
  detail::require_integral_y(dec);
  std::vector<DraconianSequence> out;
  detail::DraconianWalker w(dec, [&](const std::vector<int>& a) { out.push_back(a); });
  for (int first = -1; first < static_cast<int>(dec.summands.size()); ++first) w.run_from(first);
  return out;
}

/// i(PF(u), t) from the draconian-sequence formula.
inline Polynomial ehrhart_polynomial(const UVector& u, int jobs = 1) {
  if (!u.is_integral()) throw Unsupported("Ehrhart polynomial needs integral u");
  const auto dec = minkowski_decomposition(u);
  detail::require_integral_y(dec);
  const int n = u.n();
  // C(t y + a - 1, a) for every (summand size, a)
  std::map<std::pair<int, int>, Polynomial> factor;
  for (const auto& [k, y] : dec.by_size())
    for (int a = 0; a <= n; ++a) factor[{k, a}] = binomial_poly(y.get_num(), a);
  const std::size_t m = dec.summands.size();
  auto parts = parallel_map<Polynomial>(
      m + 1,
      [&](std::size_t idx) {
        Polynomial acc;
        detail::DraconianWalker w(dec, [&](const std::vector<int>& a) {
          Polynomial term = Polynomial::constant(1);
          for (std::size_t j = 0; j < a.size(); ++j)
            if (a[j]) term *= factor.at({dec.summands[j].size(), a[j]});
          acc += term;
        });
        w.run_from(static_cast<int>(idx) - 1);
        return acc;
      },
      jobs);
  Polynomial out;
  for (const auto& p : parts) out += p;
  return out;
}

/// Volume via the top-degree draconian sequences; rational u allowed.
inline Rational volume(const UVector& u, int jobs = 1) {
  const auto dec = minkowski_decomposition(u);
  if (dec.summands.empty()) throw InvalidInput("empty Minkowski decomposition");
  const int n = u.n();
  const std::size_t m = dec.summands.size();
  auto parts = parallel_map<Rational>(
      m,
      [&](std::size_t idx) {
        Rational acc = 0;
        detail::DraconianWalker w(dec, [&](const std::vector<int>& a) {
          int total = 0;
          for (int x : a) total += x;
          if (total != n) return;
          Rational term = 1;
          for (std::size_t j = 0; j < a.size(); ++j)
            if (a[j]) {
              Rational p = 1;
              for (int e = 0; e < a[j]; ++e) p *= dec.summands[j].y;
              term *= p / Rational(factorial(a[j]));
            }
          acc += term;
        });
        w.run_from(static_cast<int>(idx));
        return acc;
      },
      jobs);
  Rational out = 0;
  for (const auto& p : parts) out += p;
  return out;
}

/// w_u(I) = sum of the |I| largest entries of u.
struct PolymatroidRank {
  UVector u;

  Rational operator()(std::uint64_t set) const { return top_sum(u, __builtin_popcountll(set)); }
  Rational operator()(const std::vector<int>& I) const {
    std::uint64_t s = 0;
    for (int i : I) {
      if (i < 1 || i > u.n()) throw InvalidInput("index outside [n]");
      s |= std::uint64_t{1} << i;
    }
    return (*this)(s);
  }

  /// Exhaustive check of w(A) + w(B) >= w(A u B) + w(A n B).
  bool is_submodular() const {
    if (u.n() > 12) throw Unsupported("exhaustive submodularity check is limited to n <= 12");
    const std::uint64_t full = ((std::uint64_t{1} << u.n()) - 1) << 1;
    for (std::uint64_t a = 0;; a = (a - full) & full) {
      for (std::uint64_t b = 0;; b = (b - full) & full) {
        if ((*this)(a) + (*this)(b) < (*this)(a | b) + (*this)(a & b)) return false;
        if (b == full) break;
      }
      if (a == full) break;
    }
    return true;
  }
};

inline PolymatroidRank polymatroid_rank(const UVector& u) { return PolymatroidRank{u}; }

}  // namespace pfpoly
