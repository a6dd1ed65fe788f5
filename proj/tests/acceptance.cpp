// One PASS/FAIL line per acceptance criterion. All comparisons are exact;
// the only tolerances are the wall-clock limits.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "pfpoly/check.hpp"
#include "pfpoly/ehrhart.hpp"
#include "pfpoly/enumerative.hpp"
#include "pfpoly/oracle.hpp"
#include "pfpoly/polytope.hpp"

using namespace pfpoly;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;  // summary on success, first failure otherwise

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  }
  void take(const check::Result& r, const std::string& where) { require(r.ok, r.name + " at " + where + ": " + r.detail); }
};

int failures = 0;

void criterion(int id, const char* title, double limit_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.ok = false;
    o.note = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::string timing = std::to_string(secs).substr(0, std::to_string(secs).find('.') + 3) + " s";
  if (limit_s > 0) {
    timing += " < " + std::to_string(static_cast<int>(limit_s)) + " s";
    if (secs >= limit_s && o.ok) {
      o.ok = false;
      o.note = "over the time limit";
    }
  }
  if (!o.ok) ++failures;
  std::printf("C%-2d %s  %s: %s (%s)\n", id, o.ok ? "PASS" : "FAIL", title, o.note.c_str(), timing.c_str());
  std::fflush(stdout);
}

UVector U(const std::string& s) { return UVector::parse(s); }

// every nondecreasing integral u of length n with entries in [0, top], u != 0
std::vector<UVector> integral_us(int n, int top) {
  std::vector<UVector> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int lo) {
    if (static_cast<int>(cur.size()) == n) {
      if (cur.back()) out.emplace_back(std::vector<Rational>(cur.begin(), cur.end()));
      return;
    }
    for (int x = lo; x <= top; ++x) {
      cur.push_back(x);
      rec(x);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

std::vector<UVector> integral_us_upto(int nmax, int top) {
  std::vector<UVector> out;
  for (int n = 1; n <= nmax; ++n)
    for (auto& u : integral_us(n, top)) out.push_back(u);
  return out;
}

// A_k(t) by counting descents over all permutations of [k]
Polynomial eulerian_brute(int k) {
  std::vector<int> s(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) s[static_cast<std::size_t>(i)] = i;
  std::vector<Rational> c(static_cast<std::size_t>(std::max(k, 1)), Rational(0));
  do {
    int d = 0;
    for (int i = 0; i + 1 < k; ++i) d += s[static_cast<std::size_t>(i)] > s[static_cast<std::size_t>(i + 1)];
    c[static_cast<std::size_t>(d)] += 1;
  } while (std::next_permutation(s.begin(), s.end()));
  return Polynomial(c);
}

std::vector<oracle::Inequality> inequalities(const UVector& u) {
  std::vector<oracle::Inequality> F;
  for (const auto& q : facet_description(u)) F.push_back({q.coeffs, q.rhs});
  return F;
}

}  // namespace

int main() {
  const int jobs = default_jobs();

  criterion(1, "vertex bijection", 30, [&] {
    Outcome o;
    const char* pts[] = {"0,0,4,4,4,6,8,8", "0,0,0,4,4,6,8,8", "0,0,0,0,4,6,8,8", "0,0,0,0,0,6,8,8",
                         "0,0,0,0,0,0,8,8", "0,0,0,0,0,0,0,8", "0,0,0,0,0,0,0,0"};
    std::set<Point> expect;
    for (const char* s : pts) {
      Point p;
      for (char ch : std::string(s))
        if (ch != ',') p.emplace_back(ch - '0');
      std::sort(p.begin(), p.end());
      do expect.insert(p);
      while (std::next_permutation(p.begin(), p.end()));
    }
    const auto V = vertices(U("0,0,4,4,4,6,8,8"), jobs);
    o.require(expect.size() == 4405, "permutation count " + std::to_string(expect.size()));
    o.require(std::vector<Point>(expect.begin(), expect.end()) == V, "vertices differ from the permutations");
    const auto us = integral_us_upto(4, 4);
    for (const auto& u : us) o.take(check::vertices_agree(u, true, jobs), u.to_string());
    o.note = o.ok ? "4405 vertices for (0,0,4,4,4,6,8,8); lattice sweep agrees for " + std::to_string(us.size()) + " u (n<=4, entries<=4)" : o.note;
    return o;
  });

  criterion(2, "normal fan", 60, [&] {
    Outcome o;
    int ms = 0;
    for (int n = 1; n <= 4; ++n) {
      const auto all = all_multiplicity_vectors(n);
      const int per = (10000 + static_cast<int>(all.size()) - 1) / static_cast<int>(all.size());
      for (const auto& m : all) {
        o.take(check::normal_fan_agrees(default_u(m), per, 7u + static_cast<unsigned>(ms)), default_u(m).to_string());
        ++ms;
      }
    }
    if (o.ok) o.note = std::to_string(ms) + " m (n<=4): witnesses unique, >=10^4 random points covered per n";
    return o;
  });

  criterion(3, "contraction characterization", 60, [&] {
    Outcome o;
    int ms = 0;
    for (int n = 1; n <= 4; ++n)
      for (const auto& m : all_multiplicity_vectors(n)) {
        o.take(check::contraction_agrees(m, jobs), default_u(m).to_string());
        ++ms;
      }
    const auto B = BinaryPartition::parse("({0,2,3},{1,6,7},{8},{4,5})");
    const auto C = BinaryPartition::parse("({1,2,5},{3,6}*,{7},{0,4}*,{8})");
    const auto D = BinaryPartition::parse("({2,3},{0,7}*,{6},{1,8}*,{4,5})");
    auto both = [&](const BinaryPartition& c, const BinaryPartition& b, bool expect, const char* what) {
      o.require(is_contraction(c, b) == expect, std::string("predicate on ") + what);
      o.require(oracle::contraction_search(preposet_of(c), preposet_of(b)) == expect, std::string("oracle on ") + what);
    };
    both(D, B, true, "(D,B)");
    both(C, B, false, "(C,B)");
    const auto top = SkewedBinaryPartition::parse("({0,2,3},{},{1,6,7},{8},{4,5})");
    const auto c1 = SkewedBinaryPartition::parse("({0,2,3},{},{6,7},{1,8}*,{4,5})");
    const auto d1 = SkewedBinaryPartition::parse("({2,3},{0,7}*,{6},{1,8}*,{4,5})");
    for (auto [c, b, expect, what] : {std::tuple{c1, top, true, "C<B"}, std::tuple{d1, c1, true, "D<C"},
                                      std::tuple{d1, top, true, "D<B"}, std::tuple{top, d1, false, "B<D"}}) {
      o.require(is_contraction(c, b) == expect, std::string("predicate on ") + what);
      o.require(oracle::contraction_search(preposet_of(c), preposet_of(b)) == expect, std::string("oracle on ") + what);
    }
    o.require(is_cover(c1, top) && is_cover(d1, c1) && !is_cover(d1, top), "figure cover steps");
    if (o.ok) o.note = "all pairs of SBP(m) for " + std::to_string(ms) + " m (n<=4) and the named example pairs";
    return o;
  });

  criterion(4, "face poset", 0, [&] {
    Outcome o;
    int ms = 0;
    for (int n = 1; n <= 4; ++n)
      for (const auto& m : all_multiplicity_vectors(n)) {
        o.take(check::face_lattice_agrees(default_u(m), jobs), default_u(m).to_string());
        ++ms;
      }
    const std::map<std::vector<int>, std::vector<long>> n2{{{0, 2}, {4, 4, 1}}, {{1, 1}, {3, 3, 1}}, {{0, 1, 1}, {5, 5, 1}}};
    for (const auto& [m, f] : n2) {
      const auto u = default_u(m);
      const auto V = oracle::extreme_points(check::detail::candidate_points(u));
      o.require(oracle::face_lattice_from_incidence(V, inequalities(u)).f_vector() == f, "oracle f-vector for n=2 at " + u.to_string());
      std::vector<long> g;
      for (const auto& x : f_vector(m)) g.push_back(x.get_si());
      o.require(g == f, "f_vector for n=2 at " + u.to_string());
    }
    if (o.ok) o.note = "graded isomorphism for " + std::to_string(ms) + " m (n<=4); n=2 f-vectors (4,4,1), (3,3,1), (5,5,1)";
    return o;
  });

  criterion(5, "facet minimality", 0, [&] {
    Outcome o;
    const auto us = integral_us_upto(4, 4);
    for (const auto& u : us) o.take(check::facets_agree(u), u.to_string());
    for (int n = 1; n <= 4; ++n)
      for (long d = 1; d <= 3; ++d) {
        using Key = std::pair<std::vector<Rational>, Rational>;
        std::set<Key> cube, simplex;
        for (int i = 0; i < n; ++i) {
          std::vector<Rational> e(static_cast<std::size_t>(n), Rational(0));
          e[static_cast<std::size_t>(i)] = -1;
          cube.insert({e, 0});
          simplex.insert({e, 0});
          e[static_cast<std::size_t>(i)] = 1;
          cube.insert({e, d});
        }
        simplex.insert({std::vector<Rational>(static_cast<std::size_t>(n), Rational(1)), d});
        std::vector<Rational> uc(static_cast<std::size_t>(n), Rational(d)), us_(static_cast<std::size_t>(n), Rational(0));
        us_.back() = d;
        for (auto [u, want, what] : {std::tuple{UVector(uc), cube, "cube"}, std::tuple{UVector(us_), simplex, "simplex"}}) {
          std::set<Key> got;
          for (const auto& q : facet_description(u, true)) got.insert({q.coeffs, q.rhs});
          o.require(got == want, std::string(what) + " facets at " + u.to_string());
        }
      }
    if (o.ok) o.note = std::to_string(us.size()) + " u (n<=4, entries<=4); cube and simplex facet sets exact for n<=4, d<=3";
    return o;
  });

  criterion(6, "h-polynomials", 120, [&] {
    Outcome o;
    int count = 0;
    for (int n = 1; n <= 6; ++n)
      for (const auto& m : all_multiplicity_vectors(n)) {
        if (!is_simple(m)) continue;
        o.take(check::h_polynomial_agrees(default_u(m), n <= 4, jobs), default_u(m).to_string());
        ++count;
      }
    const Polynomial t = Polynomial::monomial(1);
    for (int n = 1; n <= 6; ++n) {
      std::vector<Rational> stella, shifted, cube(static_cast<std::size_t>(n), Rational(1)), simplex(static_cast<std::size_t>(n), Rational(0));
      for (int i = 1; i <= n; ++i) stella.emplace_back(i);
      for (int i = 0; i < n; ++i) shifted.emplace_back(i);
      simplex.back() = 1;
      Polynomial a = Polynomial::constant(1);
      for (int k = 1; k <= n; ++k) a += Rational(binomial(n, k)) * t * eulerian_brute(k);
      o.require(h_polynomial(UVector(stella)) == a, "PF(1..n) closed form, n=" + std::to_string(n));
      if (n >= 2) {
        Polynomial b = Polynomial::constant(1) + t * eulerian_brute(n);
        for (int k = 1; k <= n - 2; ++k) b += Rational(binomial(n, k)) * t * eulerian_brute(k);
        o.require(h_polynomial(UVector(shifted)) == b, "PF(0..n-1) closed form, n=" + std::to_string(n));
      }
      o.require(h_polynomial(UVector(cube)) == Polynomial({1, 1}).pow(static_cast<unsigned>(n)), "cube, n=" + std::to_string(n));
      o.require(h_polynomial(UVector(simplex)) == Polynomial::geometric(0, n), "simplex, n=" + std::to_string(n));
    }
    if (o.ok) o.note = std::to_string(count) + " simple m (n<=6), oracle f-vectors for n<=4; closed forms for n<=6";
    return o;
  });

  criterion(7, "generalized Eulerian", 60, [&] {
    Outcome o;
    int count = 0;
    for (int p = 1; p <= 7; ++p)
      for (int q = 1; p + q <= 8; ++q) {
        o.require(gen_eulerian_T(p, q) == gen_eulerian_brute(t_poset(p, q)), "T(" + std::to_string(p) + "," + std::to_string(q) + ")");
        ++count;
      }
    for (int p = 1; p <= 7; ++p) o.require(gen_eulerian_brute(t_poset(p, 1)) == eulerian_brute(p + 1), "A(T(p,1)) = A_{p+1}, p=" + std::to_string(p));
    for (int q = 1; q <= 7; ++q) o.require(gen_eulerian_brute(t_poset(1, q)) == Polynomial::geometric(0, q), "A(T(1,q)), q=" + std::to_string(q));
    if (o.ok) o.note = std::to_string(count) + " pairs p+q<=8 against brute relabelings; both identities hold";
    return o;
  });

  std::vector<UVector> suite8 = integral_us_upto(4, 4);
  criterion(8, "Ehrhart", 120, [&] {
    Outcome o;
    int negative = 0;
    for (const auto& u : suite8) {
      const auto y = y_coefficients(u);
      if (std::any_of(y.begin(), y.end(), [](const auto& kv) { return kv.second < 0; })) ++negative;
      const auto p = ehrhart_polynomial(u, jobs);
      const auto F = inequalities(u);
      for (long t = 0; t <= 3; ++t)
        o.require(p.eval(t) == Rational(oracle::lattice_count(F, t)), "u=" + u.to_string() + " t=" + std::to_string(t));
    }
    o.require(ehrhart_polynomial(U("1,2")) == Polynomial({1, make_rational(7, 2), make_rational(7, 2)}), "PF(1,2)");
    for (int n = 1; n <= 4; ++n)
      for (long d = 1; d <= 3; ++d) {
        std::vector<Rational> cube(static_cast<std::size_t>(n), Rational(d)), simplex(static_cast<std::size_t>(n), Rational(0));
        simplex.back() = d;
        o.require(ehrhart_polynomial(UVector(cube)) == Polynomial({1, Rational(d)}).pow(static_cast<unsigned>(n)), "cube");
        Polynomial c = Polynomial::constant(1);
        for (int k = 1; k <= n; ++k) c *= make_rational(1, k) * Polynomial({Rational(k), Rational(d)});
        o.require(ehrhart_polynomial(UVector(simplex)) == c, "simplex");
      }
    if (o.ok) o.note = std::to_string(suite8.size()) + " u (n<=4, entries<=4; " + std::to_string(negative) + " with a negative y) match lattice counts for t<=3; closed forms exact";
    return o;
  });

  criterion(9, "volume", 0, [&] {
    Outcome o;
    for (const auto& u : suite8) o.require(ehrhart_polynomial(u, jobs)[u.n()] == volume(u, jobs), "leading coefficient at " + u.to_string());
    o.require(volume(U("1,2")) == make_rational(7, 2), "PF(1,2)");
    for (int n = 1; n <= 5; ++n)
      for (long d = 1; d <= 3; ++d) {
        std::vector<Rational> cube(static_cast<std::size_t>(n), Rational(d)), simplex(static_cast<std::size_t>(n), Rational(0));
        simplex.back() = d;
        Rational dn = 1;
        for (int i = 0; i < n; ++i) dn *= d;
        o.require(volume(UVector(cube)) == dn, "cube volume");
        o.require(volume(UVector(simplex)) == dn / Rational(factorial(n)), "simplex volume");
      }
    if (o.ok) o.note = "leading coefficient = volume on the criterion 8 suite; PF(1,2), cubes and simplices exact";
    return o;
  });

  criterion(10, "decompositions", 0, [&] {
    Outcome o;
    const auto us = integral_us_upto(3, 4);
    for (const auto& u : us) {
      const int n = u.n();
      const Point zero(static_cast<std::size_t>(n), Rational(0));
      std::vector<Point> acc{zero};
      for (const auto& term : minkowski_hypersimplex(u)) {
        if (term.coeff == 0) continue;
        std::vector<Rational> ones(static_cast<std::size_t>(n), Rational(0));
        for (int i = n - term.k; i < n; ++i) ones[static_cast<std::size_t>(i)] = 1;
        auto V = vertices(UVector(ones));
        for (auto& v : V)
          for (auto& x : v) x *= term.coeff;
        acc = oracle::minkowski_vertex_sum(acc, V);
      }
      o.require(acc == vertices(u), "hypersimplex sum at " + u.to_string());
      // P + sum of negative-y simplices = sum of positive-y simplices
      std::vector<Point> pos{zero}, neg = vertices(u);
      for (const auto& s : minkowski_decomposition(u).summands) {
        std::vector<Point> simplex{zero};
        for (int i : s.elements()) {
          Point e = zero;
          e[static_cast<std::size_t>(i - 1)] = s.y > 0 ? s.y : -s.y;
          simplex.push_back(e);
        }
        if (s.y > 0) pos = oracle::minkowski_vertex_sum(pos, simplex);
        else neg = oracle::minkowski_vertex_sum(neg, simplex);
      }
      o.require(pos == neg, "simplex sum at " + u.to_string());
    }
    for (int n = 1; n <= 6; ++n)
      for (long p = 0; p <= 3; ++p)
        for (long q = 0; q <= 3; ++q) {
          if (p == 0 && q == 0) continue;
          std::vector<Rational> v;
          for (int i = 0; i < n; ++i) v.emplace_back(p + i * q);
          if (v.back() == 0) continue;
          const auto y = y_coefficients(UVector(v));
          for (int k = 1; k <= n; ++k) o.require(y.at(k) == (k == 1 ? Rational(p) : k == 2 ? Rational(q) : Rational(0)), "arithmetic y pattern");
        }
    if (o.ok) o.note = "both decompositions rebuild vertices(u) for " + std::to_string(us.size()) + " u (n<=3, entries<=4); arithmetic y = (p,q,0,...)";
    return o;
  });

  criterion(11, "stellahedral coarsening", 0, [&] {
    Outcome o;
    int ms = 0;
    for (int n = 1; n <= 4; ++n)
      for (const auto& m : all_multiplicity_vectors(n)) {
        o.take(check::stellahedral_agrees(m, 1000, 11u + static_cast<unsigned>(ms)), default_u(m).to_string());
        ++ms;
      }
    if (o.ok) o.note = std::to_string(ms) + " m (n<=4), 10^3 samples per maximal cone";
    return o;
  });

  criterion(12, "classification", 0, [&] {
    Outcome o;
    int ms = 0;
    for (int n = 1; n <= 5; ++n)
      for (const auto& m : all_multiplicity_vectors(n)) {
        o.take(check::classification_agrees(default_u(m)), default_u(m).to_string());
        ++ms;
      }
    if (o.ok) o.note = std::to_string(ms) + " m (n<=5) against vertex degrees and facet sizes of the oracle face lattice";
    return o;
  });

  std::printf("%s: %d of 12 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
