// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef RANKGAIN_EXACT_BIPOLY_HPP
#define RANKGAIN_EXACT_BIPOLY_HPP

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rankgain/exact/rational.hpp"
#include "rankgain/exact/unipoly.hpp"

namespace rankgain {

using Exponent2 = std::pair<int, int>;

/// Sparse bivariate polynomial: (i, j) -> coefficient of u^i v^j. No zero
/// coefficients are stored.
class BiPoly {
 public:
  BiPoly() = default;

  static BiPoly term(const Rational& c, int i, int j) {
    BiPoly p;
    p.add_term(c, i, j);
    return p;
  }
  static BiPoly constant(const Rational& c) { return term(c, 0, 0); }
  static BiPoly u() { return term(1, 1, 0); }
  static BiPoly v() { return term(1, 0, 1); }

  /// Embeds a univariate polynomial in the first variable.
  static BiPoly from_first(const UniPoly& f) {
    BiPoly p;
    for (int i = 0; i <= f.degree(); ++i) p.add_term(f.coeff(i), i, 0);
    return p;
  }
  static BiPoly from_second(const UniPoly& f) {
    BiPoly p;
    for (int j = 0; j <= f.degree(); ++j) p.add_term(f.coeff(j), 0, j);
    return p;
  }

  void add_term(const Rational& c, int i, int j) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace({i, j}, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  const std::map<Exponent2, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coeff(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? Rational(0) : it->second;
  }

  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
    return d;
  }
  int degree_first() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.first);
    return d;
  }
  int degree_second() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.second);
    return d;
  }

  std::vector<Exponent2> support() const {
    std::vector<Exponent2> out;
    out.reserve(terms_.size());
    for (const auto& [e, c] : terms_) out.push_back(e);
    return out;
  }

  /// f(u, b) as a polynomial in u.
  UniPoly eval_second(const Rational& b) const {
    std::vector<Rational> c(static_cast<std::size_t>(std::max(degree_first(), 0)) + 1);
    for (const auto& [e, coef] : terms_) c[static_cast<std::size_t>(e.first)] += coef * pow(b, e.second);
    return UniPoly(std::move(c));
  }
  /// f(a, v) as a polynomial in v.
  UniPoly eval_first(const Rational& a) const {
    std::vector<Rational> c(static_cast<std::size_t>(std::max(degree_second(), 0)) + 1);
    for (const auto& [e, coef] : terms_) c[static_cast<std::size_t>(e.second)] += coef * pow(a, e.first);
    return UniPoly(std::move(c));
  }

  Rational operator()(const Rational& a, const Rational& b) const {
    Rational acc;
    for (const auto& [e, coef] : terms_) acc += coef * pow(a, e.first) * pow(b, e.second);
    return acc;
  }

  BiPoly& operator+=(const BiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(c, e.first, e.second);
    return *this;
  }
  BiPoly& operator-=(const BiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(-c, e.first, e.second);
    return *this;
  }
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ca * cb, ea.first + eb.first, ea.second + eb.second);
    return r;
  }
  friend BiPoly operator*(const BiPoly& a, const Rational& s) {
    BiPoly r;
    for (const auto& [e, c] : a.terms_) r.add_term(c * s, e.first, e.second);
    return r;
  }
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

  std::string str(const std::string& u = "u", const std::string& v = "v") const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      if (!out.empty()) out += " + ";
      out += it->second.str();
      if (it->first.first > 0) out += "*" + u + "^" + std::to_string(it->first.first);
      if (it->first.second > 0) out += "*" + v + "^" + std::to_string(it->first.second);
    }
    return out;
  }

 private:
  std::map<Exponent2, Rational> terms_;
};

inline BiPoly pow(const BiPoly& f, unsigned e) {
  BiPoly r = BiPoly::constant(1);
  BiPoly b = f;
  while (e > 0) {
    if (e & 1U) r = r * b;
    e >>= 1U;
    if (e > 0) b = b * b;
  }
  return r;
}

}  // namespace rankgain

#endif  // RANKGAIN_EXACT_BIPOLY_HPP
