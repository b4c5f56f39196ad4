// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef RANKGAIN_EXACT_UNIPOLY_HPP
#define RANKGAIN_EXACT_UNIPOLY_HPP

#include <algorithm>
#include <initializer_list>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rankgain/error.hpp"
#include "rankgain/exact/rational.hpp"

namespace rankgain {

/// Dense univariate polynomial over Q. coeffs()[i] is the coefficient of x^i;
/// the leading coefficient is nonzero unless the polynomial is zero.
class UniPoly {
 public:
  static constexpr int kZeroDegree = -1;

  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  UniPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

  static UniPoly constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }
  static UniPoly monomial(const Rational& c, int deg) {
    std::vector<Rational> v(static_cast<std::size_t>(deg) + 1);
    v.back() = c;
    return UniPoly(std::move(v));
  }
  static UniPoly x() { return monomial(1, 1); }

  int degree() const { return c_.empty() ? kZeroDegree : static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
    return c_[static_cast<std::size_t>(i)];
  }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

  Rational operator()(const Rational& x) const {
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  UniPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return UniPoly(std::move(d));
  }

  UniPoly monic() const {
    if (is_zero()) return {};
    return *this * (Rational(1) / leading());
  }

  /// f(g(x)) by Horner.
  UniPoly compose(const UniPoly& g) const {
    UniPoly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * g + constant(*it);
    return acc;
  }

  UniPoly& operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  UniPoly& operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator-(const UniPoly& a) { return a * Rational(-1); }

  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(r));
  }
  friend UniPoly operator*(UniPoly a, const Rational& s) {
    for (auto& c : a.c_) c *= s;
    a.trim();
    return a;
  }
  friend UniPoly operator*(const Rational& s, UniPoly a) { return std::move(a) * s; }

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  /// Lowest-degree-first coefficient strings.
  std::vector<std::string> to_strings() const {
    std::vector<std::string> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(c.str());
    return out;
  }

  std::string str(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
      const Rational& c = c_[static_cast<std::size_t>(i)];
      if (c.is_zero()) continue;
      std::string term = c.str();
      if (i > 0) {
        if (c == Rational(1)) term.clear();
        else if (c == Rational(-1)) term = "-";
        else term += "*";
        term += var;
        if (i > 1) term += "^" + std::to_string(i);
      }
      if (!out.empty() && term[0] != '-') out += " + ";
      else if (!out.empty()) { out += " - "; term.erase(0, 1); }
      out += term;
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<Rational> c_;
};

inline UniPoly pow(const UniPoly& f, unsigned e) {
  UniPoly r = UniPoly::constant(1);
  UniPoly b = f;
  while (e > 0) {
    if (e & 1U) r = r * b;
    b = b * b;
    e >>= 1U;
  }
  return r;
}

/// Quotient and remainder over Q.
inline std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) fail(ErrorKind::DivisionByZero, "polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  int db = b.degree();
  int da = a.degree();
  if (da < db) return {UniPoly{}, a};
  std::vector<Rational> quo(static_cast<std::size_t>(da - db) + 1);
  Rational inv_lc = Rational(1) / b.leading();
  for (int i = da; i >= db; --i) {
    const Rational& top = rem[static_cast<std::size_t>(i)];
    if (top.is_zero()) continue;
    Rational q = top * inv_lc;
    quo[static_cast<std::size_t>(i - db)] = q;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= q * b.coeff(j);
  }
  return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

inline UniPoly operator%(const UniPoly& a, const UniPoly& b) { return divmod(a, b).second; }

/// Monic gcd; gcd(0, 0) = 0.
inline UniPoly gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

struct ExtGcd {
  UniPoly g;  // monic
  UniPoly s;  // s*a + t*b = g
  UniPoly t;
};

inline ExtGcd ext_gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly r0 = a, r1 = b;
  UniPoly s0 = UniPoly::constant(1), s1;
  UniPoly t0, t1 = UniPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::exchange(r1, std::move(r));
    UniPoly s2 = s0 - q * s1;
    s0 = std::exchange(s1, std::move(s2));
    UniPoly t2 = t0 - q * t1;
    t0 = std::exchange(t1, std::move(t2));
  }
  if (r0.is_zero()) return {UniPoly{}, UniPoly{}, UniPoly{}};
  Rational inv = Rational(1) / r0.leading();
  return {r0 * inv, s0 * inv, t0 * inv};
}

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
inline UniPoly pseudo_remainder(const UniPoly& a, const UniPoly& b) {
  int delta = a.degree() - b.degree();
  if (delta < 0) return a;
  return (a * pow(b.leading(), delta + 1)) % b;
}

/// Resultant by the subresultant pseudo-remainder sequence.
inline Rational resultant(UniPoly a, UniPoly b) {
  if (a.is_zero() || b.is_zero()) return Rational(0);
  Rational sign(1);
  if (a.degree() < b.degree()) {
    if ((a.degree() % 2 == 1) && (b.degree() % 2 == 1)) sign = -sign;
    std::swap(a, b);
  }
  if (b.degree() == 0) return sign * pow(b.leading(), a.degree());
  Rational g(1), h(1);
  while (true) {
    int delta = a.degree() - b.degree();
    UniPoly r = pseudo_remainder(a, b);
    if (r.is_zero()) return Rational(0);
    if ((a.degree() % 2 == 1) && (b.degree() % 2 == 1)) sign = -sign;
    a = std::move(b);
    b = r * (Rational(1) / (g * pow(h, delta)));
    g = a.leading();
    h = pow(h, 1 - delta) * pow(g, delta);
    if (b.degree() == 0) {
      h = pow(h, 1 - a.degree()) * pow(b.leading(), a.degree());
      return sign * h;
    }
  }
}

/// disc(f) = (-1)^(n(n-1)/2) Res(f, f') / lc(f).
inline Rational poly_discriminant(const UniPoly& f) {
  int n = f.degree();
  if (n < 2) fail(ErrorKind::InvalidInput, "discriminant needs degree >= 2");
  Rational r = resultant(f, f.derivative()) / f.leading();
  return ((n * (n - 1) / 2) % 2 == 0) ? r : -r;
}

/// Integer coefficients with gcd 1 and positive leading term, proportional to f.
inline std::vector<Integer> integer_primitive(const UniPoly& f) {
  Integer l = 1;
  for (const auto& c : f.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den_ref().get_mpz_t());
  std::vector<Integer> out;
  Integer g = 0;
  for (const auto& c : f.coeffs()) {
    Integer v = c.num() * (l / c.den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    out.push_back(v);
  }
  if (g == 0) return out;
  if (!out.empty() && out.back() < 0) g = -g;
  for (auto& v : out) v /= g;
  return out;
}

namespace detail {

inline std::vector<UniPoly> sturm_sequence(const UniPoly& f) {
  std::vector<UniPoly> seq{f, f.derivative()};
  while (!seq.back().is_zero()) {
    UniPoly r = seq[seq.size() - 2] % seq.back();
    seq.push_back(-r);
  }
  seq.pop_back();
  return seq;
}

inline int sign_changes(const std::vector<UniPoly>& seq, const Rational& x) {
  int changes = 0, last = 0;
  for (const auto& p : seq) {
    int s = p(x).sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

// Integer roots of a squarefree f inside (lo, hi], located by Sturm bisection.
inline void integer_roots_in(const UniPoly& f, const std::vector<UniPoly>& seq, const Integer& lo,
                             const Integer& hi, int v_lo, int v_hi, std::vector<Integer>& out) {
  if (v_lo - v_hi <= 0) return;
  if (hi - lo == 1) {
    if (f(Rational(hi)).is_zero()) out.push_back(hi);
    return;
  }
  Integer mid = lo + (hi - lo) / 2;
  int v_mid = sign_changes(seq, Rational(mid));
  integer_roots_in(f, seq, lo, mid, v_lo, v_mid, out);
  integer_roots_in(f, seq, mid, hi, v_mid, v_hi, out);
}

}  // namespace detail

/// All distinct rational roots, ascending.
inline std::vector<Rational> rational_roots(const UniPoly& f) {
  if (f.is_zero()) fail(ErrorKind::InvalidInput, "rational roots of the zero polynomial");
  std::set<Rational> roots;
  if (f.degree() <= 0) return {};
  UniPoly g = divmod(f, gcd(f, f.derivative())).first;
  if (g.coeff(0).is_zero()) {
    roots.insert(Rational(0));
    g = divmod(g, UniPoly::x()).first;
  }
  int n = g.degree();
  if (n >= 1) {
    // A rational root x = y / a_n with y an integer root of the monic
    // h(y) = a_n^(n-1) g(y / a_n).
    std::vector<Integer> a = integer_primitive(g);
    const Integer& lead = a.back();
    std::vector<Rational> hc(a.size());
    Integer scale = 1;
    for (int i = n - 1; i >= 0; --i) {
      hc[static_cast<std::size_t>(i)] = Rational(a[static_cast<std::size_t>(i)] * scale);
      scale *= lead;
    }
    hc.back() = Rational(1);
    UniPoly h(std::move(hc));
    Integer bound = 1;
    for (int i = 0; i < n; ++i) {
      Integer m = ::abs(h.coeff(i).num());
      if (m > bound) bound = m;
    }
    bound += 1;
    auto seq = detail::sturm_sequence(h);
    std::vector<Integer> ys;
    Integer lo = -bound;
    detail::integer_roots_in(h, seq, lo, bound, detail::sign_changes(seq, Rational(lo)),
                             detail::sign_changes(seq, Rational(bound)), ys);
    for (const auto& y : ys) roots.insert(Rational(y, lead));
  }
  return {roots.begin(), roots.end()};
}

}  // namespace rankgain

#endif  // RANKGAIN_EXACT_UNIPOLY_HPP
