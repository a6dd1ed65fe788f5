#pragma once

// Exact arithmetic shared by every module: rationals, dense univariate
// polynomials, points, and the f <-> h transform.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pfpoly {

/// Malformed or out-of-domain input (bad vector, bad partition, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input is well formed but the requested computation does not apply to it
/// (h-polynomial of a non-simple polytope, Ehrhart polynomial of a
/// non-integral one).
class Unsupported : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den = 1) {
  if (den == 0) throw InvalidInput("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Parses "p" or "p/q" (optional leading sign).
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto strip = [](std::string& x) {
    while (!x.empty() && (x.back() == ' ' || x.back() == '\t')) x.pop_back();
    std::size_t i = 0;
    while (i < x.size() && (x[i] == ' ' || x[i] == '\t')) ++i;
    x.erase(0, i);
  };
  strip(s);
  auto valid_int = [](const std::string& x) {
    std::size_t i = (!x.empty() && (x[0] == '-' || x[0] == '+')) ? 1 : 0;
    if (i == x.size()) return false;
    for (; i < x.size(); ++i)
      if (x[i] < '0' || x[i] > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw InvalidInput("not a rational number: '" + std::string(text) + "'");
  return make_rational(Integer(num), Integer(den));
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return out;
}

inline Integer factorial(long n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

using Point = std::vector<Rational>;

inline Rational dot(const Point& a, const Point& b) {
  if (a.size() != b.size()) throw InvalidInput("dimension mismatch in dot product");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

/// Dense univariate polynomial with exact rational coefficients, lowest
/// degree first. Canonical form has no trailing zero coefficient, so the
/// zero polynomial has an empty coefficient list and degree -1.
class Polynomial {
 public:
  static constexpr int kZeroDegree = -1;

  Polynomial() = default;
  Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }
  explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Polynomial constant(const Rational& c) { return Polynomial({c}); }
  static Polynomial monomial(int degree, const Rational& c = 1) {
    std::vector<Rational> v(static_cast<std::size_t>(degree) + 1, Rational(0));
    v.back() = c;
    return Polynomial(std::move(v));
  }
  /// 1 + t + ... + t^degree (empty when degree < 0).
  static Polynomial geometric(int lo, int hi) {
    if (hi < lo) return {};
    std::vector<Rational> v(static_cast<std::size_t>(hi) + 1, Rational(0));
    for (int j = std::max(lo, 0); j <= hi; ++j) v[static_cast<std::size_t>(j)] = 1;
    return Polynomial(std::move(v));
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  Rational operator[](int i) const {
    return (i >= 0 && i < static_cast<int>(coeffs_.size())) ? coeffs_[static_cast<std::size_t>(i)]
                                                             : Rational(0);
  }

  Rational eval(const Rational& t) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
  }

  /// p(t + shift), by Horner in the polynomial ring.
  Polynomial shifted(const Rational& shift) const {
    Polynomial acc;
    const Polynomial lin({shift, Rational(1)});
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * lin + constant(*it);
    return acc;
  }

  /// t^degree * p(1/t) for the given nominal degree.
  Polynomial reversed(int nominal_degree) const {
    std::vector<Rational> v(static_cast<std::size_t>(nominal_degree) + 1, Rational(0));
    for (int i = 0; i <= degree(); ++i) v[static_cast<std::size_t>(nominal_degree - i)] = (*this)[i];
    return Polynomial(std::move(v));
  }

  bool is_palindromic(int nominal_degree) const { return reversed(nominal_degree) == *this; }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[static_cast<int>(i)] + b[static_cast<int>(i)];
    return Polynomial(std::move(v));
  }
  friend Polynomial operator-(const Polynomial& a) {
    std::vector<Rational> v(a.coeffs_);
    for (auto& c : v) c = -c;
    return Polynomial(std::move(v));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(v));
  }
  friend Polynomial operator*(const Rational& s, const Polynomial& p) { return constant(s) * p; }
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  Polynomial pow(unsigned e) const {
    Polynomial out = constant(1);
    for (unsigned i = 0; i < e; ++i) out *= *this;
    return out;
  }

  std::vector<std::string> to_strings() const {
    std::vector<std::string> out;
    for (const auto& c : coeffs_) out.push_back(pfpoly::to_string(c));
    if (out.empty()) out.push_back("0");
    return out;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = 0; i <= degree(); ++i) {
      const Rational& c = coeffs_[static_cast<std::size_t>(i)];
      if (c == 0) continue;
      if (!s.empty()) s += (c < 0) ? " - " : " + ";
      else if (c < 0) s += "-";
      Rational a = abs(c);
      if (i == 0 || a != 1) s += pfpoly::to_string(a);
      if (i >= 1) s += (i == 1) ? "t" : "t^" + std::to_string(i);
    }
    return s;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

inline Polynomial poly_add(const Polynomial& p, const Polynomial& q) { return p + q; }
inline Polynomial poly_mul(const Polynomial& p, const Polynomial& q) { return p * q; }
inline Rational poly_eval(const Polynomial& p, const Rational& t) { return p.eval(t); }

/// f(t) = h(t + 1).
inline Polynomial f_from_h(const Polynomial& h) { return h.shifted(1); }

/// h(t) = f(t - 1).
inline Polynomial h_from_f(const Polynomial& f) { return f.shifted(-1); }

/// C(t*y + a - 1, a) as a degree-a polynomial in t, via the falling product
/// (ty + a - 1)(ty + a - 2)...(ty) / a!. Valid for any integer y.
inline Polynomial binomial_poly(const Integer& y, int a) {
  Polynomial out = Polynomial::constant(1);
  for (int k = 0; k < a; ++k) out *= Polynomial({Rational(k), Rational(y)});
  return make_rational(1, factorial(a)) * out;
}

}  // namespace pfpoly
