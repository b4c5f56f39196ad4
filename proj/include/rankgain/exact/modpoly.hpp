// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef RANKGAIN_EXACT_MODPOLY_HPP
#define RANKGAIN_EXACT_MODPOLY_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "rankgain/error.hpp"
#include "rankgain/exact/modular.hpp"
#include "rankgain/exact/unipoly.hpp"

namespace rankgain {

/// Dense polynomial over Z/p, p a word-size prime. Coefficients lie in [0, p).
class ModPoly {
 public:
  ModPoly(std::vector<std::uint64_t> coeffs, std::uint64_t p) : c_(std::move(coeffs)), p_(p) {
    for (auto& c : c_) c %= p_;
    trim();
  }
  explicit ModPoly(std::uint64_t p) : p_(p) {}

  /// Reduction of a rational polynomial; absent when p divides a denominator.
  static std::optional<ModPoly> reduce(const UniPoly& f, std::uint64_t p) {
    std::vector<std::uint64_t> c;
    c.reserve(f.coeffs().size());
    for (const auto& q : f.coeffs()) {
      auto r = reduce_mod_p(q, p);
      if (!r) return std::nullopt;
      c.push_back(*r);
    }
    return ModPoly(std::move(c), p);
  }

  static ModPoly x(std::uint64_t p) { return ModPoly({0, 1}, p); }

  std::uint64_t prime() const { return p_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<std::uint64_t>& coeffs() const { return c_; }
  std::uint64_t leading() const { return c_.empty() ? 0 : c_.back(); }
  std::uint64_t coeff(int i) const {
    return (i < 0 || i >= static_cast<int>(c_.size())) ? 0 : c_[static_cast<std::size_t>(i)];
  }

  std::uint64_t operator()(std::uint64_t x) const {
    std::uint64_t acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = (mul_mod(acc, x, p_) + *it) % p_;
    return acc;
  }

  ModPoly monic() const {
    if (c_.empty()) return *this;
    std::uint64_t inv = inv_mod(leading(), p_);
    ModPoly r = *this;
    for (auto& c : r.c_) c = mul_mod(c, inv, p_);
    return r;
  }

  friend ModPoly operator+(const ModPoly& a, const ModPoly& b) {
    std::vector<std::uint64_t> r(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = (a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i))) % a.p_;
    return {std::move(r), a.p_};
  }
  friend ModPoly operator-(const ModPoly& a, const ModPoly& b) {
    std::vector<std::uint64_t> r(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i)
      r[i] = (a.coeff(static_cast<int>(i)) + a.p_ - b.coeff(static_cast<int>(i))) % a.p_;
    return {std::move(r), a.p_};
  }
  friend ModPoly operator*(const ModPoly& a, const ModPoly& b) {
    if (a.is_zero() || b.is_zero()) return ModPoly(a.p_);
    std::vector<std::uint64_t> r(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = (r[i + j] + mul_mod(a.c_[i], b.c_[j], a.p_)) % a.p_;
    return {std::move(r), a.p_};
  }
  friend bool operator==(const ModPoly& a, const ModPoly& b) { return a.p_ == b.p_ && a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<std::uint64_t> c_;
  std::uint64_t p_;
};

inline std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b) {
  if (b.is_zero()) fail(ErrorKind::DivisionByZero, "ModPoly division by zero");
  const std::uint64_t p = a.prime();
  std::vector<std::uint64_t> rem = a.coeffs();
  int db = b.degree(), da = a.degree();
  if (da < db) return {ModPoly(p), a};
  std::vector<std::uint64_t> quo(static_cast<std::size_t>(da - db) + 1, 0);
  std::uint64_t inv = inv_mod(b.leading(), p);
  for (int i = da; i >= db; --i) {
    std::uint64_t top = rem[static_cast<std::size_t>(i)];
    if (top == 0) continue;
    std::uint64_t q = mul_mod(top, inv, p);
    quo[static_cast<std::size_t>(i - db)] = q;
    for (int j = 0; j <= db; ++j) {
      auto& slot = rem[static_cast<std::size_t>(i - db + j)];
      slot = (slot + p - mul_mod(q, b.coeff(j), p)) % p;
    }
  }
  return {ModPoly(std::move(quo), p), ModPoly(std::move(rem), p)};
}

inline ModPoly operator%(const ModPoly& a, const ModPoly& b) { return divmod(a, b).second; }

inline ModPoly gcd(ModPoly a, ModPoly b) {
  while (!b.is_zero()) {
    ModPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// base^e mod f.
inline ModPoly pow_mod(ModPoly base, std::uint64_t e, const ModPoly& f) {
  ModPoly r({1}, f.prime());
  base = base % f;
  while (e > 0) {
    if (e & 1U) r = (r * base) % f;
    base = (base * base) % f;
    e >>= 1U;
  }
  return r % f;
}

/// Rabin's distinct-degree test: x^(p^n) = x mod f, and gcd(x^(p^(n/l)) - x, f) = 1
/// for every prime l dividing n = deg f.
inline bool irreducible_mod_p(const ModPoly& f) {
  const std::uint64_t p = f.prime();
  if (f.degree() < 1) fail(ErrorKind::InvalidInput, "irreducibility of a constant mod p");
  const int n = f.degree();
  if (n == 1) return true;
  const ModPoly x = ModPoly::x(p);
  // frob[k] = x^(p^k) mod f
  std::vector<ModPoly> frob{x % f};
  for (int k = 1; k <= n; ++k) frob.push_back(pow_mod(frob.back(), p, f));
  if (!((frob[static_cast<std::size_t>(n)] - x) % f).is_zero()) return false;
  for (int l = 2; l <= n; ++l) {
    if (n % l != 0 || !is_prime(static_cast<std::uint64_t>(l))) continue;
    ModPoly g = gcd(f, frob[static_cast<std::size_t>(n / l)] - x);
    if (g.degree() != 0) return false;
  }
  return true;
}

/// Irreducibility over F_p of the reduction of a rational polynomial.
inline bool irreducible_mod_p(const UniPoly& f, std::uint64_t p) {
  auto r = ModPoly::reduce(f, p);
  if (!r) fail(ErrorKind::InvalidInput, "p divides a coefficient denominator");
  if (r->degree() != f.degree()) fail(ErrorKind::InvalidInput, "p divides the leading coefficient");
  return irreducible_mod_p(*r);
}

/// Number of distinct roots in F_p, via deg gcd(x^p - x, f).
inline int distinct_root_count(const ModPoly& f) {
  if (f.degree() < 1) return 0;
  ModPoly xp = pow_mod(ModPoly::x(f.prime()), f.prime(), f);
  ModPoly g = gcd(f, xp - ModPoly::x(f.prime()));
  return g.degree();
}

/// Degree of the lowest-degree irreducible factor of a squarefree f.
inline int smallest_factor_degree(const ModPoly& f) {
  if (f.degree() < 1) fail(ErrorKind::InvalidInput, "constant polynomial has no factors");
  const ModPoly x = ModPoly::x(f.prime());
  ModPoly h = x % f;
  for (int d = 1; d < f.degree(); ++d) {
    h = pow_mod(h, f.prime(), f);
    if (gcd(f, h - x).degree() > 0) return d;
  }
  return f.degree();
}

}  // namespace rankgain

#endif  // RANKGAIN_EXACT_MODPOLY_HPP
