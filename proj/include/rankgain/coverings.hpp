// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef RANKGAIN_COVERINGS_HPP
#define RANKGAIN_COVERINGS_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "rankgain/error.hpp"
#include "rankgain/exact/bipoly.hpp"
#include "rankgain/exact/eisenstein.hpp"
#include "rankgain/exact/modular.hpp"
#include "rankgain/exact/rational.hpp"
#include "rankgain/exact/unipoly.hpp"

namespace rankgain {

// ---------------------------------------------------------------------------
// Superelliptic models y^p = x^r (x - 1)^s.

/// All n in [1, p-1] with 1 + n + n^2 = 0 mod p.
inline std::vector<std::uint64_t> solve_eq5(std::uint64_t p) {
  if (!is_prime(p)) fail(ErrorKind::InvalidInput, std::to_string(p) + " is not prime");
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 1; n < p; ++n)
    if ((1 + n + n * n) % p == 0) out.push_back(n);
  return out;
}

/// y^p = x^r (x - 1)^s with local monodromy residues (r, s, -(r + s)) mod p.
struct SuperellipticModel {
  std::uint64_t p = 0;
  std::uint64_t r = 0;
  std::uint64_t s = 0;
  std::uint64_t w0 = 0;
  std::uint64_t w1 = 0;
  std::uint64_t winf = 0;

  static SuperellipticModel make(std::uint64_t p, std::uint64_t r, std::uint64_t s) {
    if (p < 3 || !is_prime(p)) fail(ErrorKind::InvalidInput, "p must be an odd prime");
    if (r == 0 || s == 0) fail(ErrorKind::InvalidExponent, "exponents must be positive");
    if (r % p == 0 || s % p == 0 || (r + s) % p == 0)
      fail(ErrorKind::InvalidExponent, "r, s and r + s must be prime to p");
    SuperellipticModel m{p, r, s, r % p, s % p, (p - (r + s) % p) % p};
    if ((m.w0 + m.w1 + m.winf) % p != 0) fail(ErrorKind::IdentityFailure, "winding residues do not sum to 0");
    return m;
  }
};

/// y^p = x^n (x - 1), n a root of 1 + n + n^2 mod p.
inline SuperellipticModel model_from_n(std::uint64_t p, std::uint64_t n) {
  auto sols = solve_eq5(p);
  if (std::find(sols.begin(), sols.end(), n % p) == sols.end() || n == 0)
    fail(ErrorKind::InvalidExponent, "1 + n + n^2 != 0 mod p for n = " + std::to_string(n));
  return SuperellipticModel::make(p, n, 1);
}

// ---------------------------------------------------------------------------
// Triangle curve X^m Y + Y^m Z + Z^m X = 0.

using Exponent3 = std::array<int, 3>;

/// Sparse homogeneous-or-not polynomial in X, Y, Z.
class TriPoly {
 public:
  void add_term(const Rational& c, const Exponent3& e) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  const std::map<Exponent3, Rational>& terms() const { return terms_; }

  /// The polynomial after substituting (X, Y, Z) -> (Y, Z, X).
  TriPoly shifted() const {
    TriPoly r;
    for (const auto& [e, c] : terms_) r.add_term(c, {e[2], e[0], e[1]});
    return r;
  }

  TriPoly partial(int var) const {
    TriPoly r;
    for (const auto& [e, c] : terms_) {
      if (e[static_cast<std::size_t>(var)] == 0) continue;
      Exponent3 d = e;
      d[static_cast<std::size_t>(var)] -= 1;
      r.add_term(c * Rational(e[static_cast<std::size_t>(var)]), d);
    }
    return r;
  }

  template <class T>
  T evaluate(const std::array<T, 3>& pt, const T& zero, const T& one) const {
    T acc = zero;
    for (const auto& [e, c] : terms_) {
      T term = one;
      for (std::size_t k = 0; k < 3; ++k)
        for (int i = 0; i < e[k]; ++i) term = term * pt[k];
      acc = acc + term * scalar(c, one);
    }
    return acc;
  }

  /// Restriction to coordinate var = value (0 or 1), the remaining two
  /// variables becoming (first, second) of a BiPoly in their original order.
  BiPoly restrict(int var, int value) const {
    BiPoly r;
    for (const auto& [e, c] : terms_) {
      if (value == 0 && e[static_cast<std::size_t>(var)] > 0) continue;
      std::array<int, 2> rest{};
      std::size_t k = 0;
      for (std::size_t i = 0; i < 3; ++i)
        if (static_cast<int>(i) != var) rest[k++] = e[i];
      r.add_term(c, rest[0], rest[1]);
    }
    return r;
  }

  friend bool operator==(const TriPoly& a, const TriPoly& b) { return a.terms_ == b.terms_; }

 private:
  static Rational scalar(const Rational& c, const Rational&) { return c; }
  static EisensteinInt scalar(const Rational& c, const EisensteinInt&) { return {c, Rational(0)}; }

  std::map<Exponent3, Rational> terms_;
};

inline TriPoly triangle_polynomial(int m) {
  TriPoly f;
  f.add_term(1, {m, 1, 0});
  f.add_term(1, {0, m, 1});
  f.add_term(1, {1, 0, m});
  return f;
}

using EisensteinPoint = std::array<EisensteinInt, 3>;

/// All 2x2 minors vanish.
inline bool projectively_equal(const EisensteinPoint& a, const EisensteinPoint& b) {
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      if (!(a[i] * b[j] - a[j] * b[i]).is_zero()) return false;
  return true;
}

namespace detail {

// Given g1 = A(x) y + B(x), eliminate y from g by y = -B/A after clearing
// denominators: returns sum c_ij x^i (-B)^j A^(d - j), d = deg_y g.
inline UniPoly eliminate_linear(const BiPoly& g, const UniPoly& a_coef, const UniPoly& b_coef) {
  const int d = std::max(g.degree_second(), 0);
  UniPoly out;
  for (const auto& [e, c] : g.terms()) {
    UniPoly term = UniPoly::monomial(c, e.first) * pow(-b_coef, static_cast<unsigned>(e.second)) *
                   pow(a_coef, static_cast<unsigned>(d - e.second));
    out += term;
  }
  return out;
}

inline UniPoly coefficient_in_second(const BiPoly& g, int j) {
  std::vector<Rational> c(static_cast<std::size_t>(std::max(g.degree_first(), 0)) + 1);
  for (const auto& [e, coef] : g.terms())
    if (e.second == j) c[static_cast<std::size_t>(e.first)] += coef;
  return UniPoly(std::move(c));
}

}  // namespace detail

/// Nonsingularity of X^m Y + Y^m Z + Z^m X = 0 by showing the three partials
/// have no common projective zero. Charts: Z = 1 (eliminating y through the
/// X-partial, which is linear in y), then Z = 0 with X = 1, then (0:1:0).
inline bool triangle_nonsingular(int m) {
  const TriPoly f = triangle_polynomial(m);
  const std::array<TriPoly, 3> grad{f.partial(0), f.partial(1), f.partial(2)};

  // Z = 1.
  std::array<BiPoly, 3> aff{grad[0].restrict(2, 1), grad[1].restrict(2, 1), grad[2].restrict(2, 1)};
  if (aff[0].degree_second() != 1) fail(ErrorKind::InvalidInput, "X-partial is not linear in Y");
  UniPoly a = detail::coefficient_in_second(aff[0], 1);
  UniPoly b = detail::coefficient_in_second(aff[0], 0);
  if (gcd(a, b).degree() > 0) return false;
  UniPoly h1 = detail::eliminate_linear(aff[1], a, b);
  UniPoly h2 = detail::eliminate_linear(aff[2], a, b);
  UniPoly common = gcd(h1, h2);
  if (common.is_zero() || common.degree() > 0) return false;

  // Z = 0, X = 1: univariate in Y.
  UniPoly acc;
  for (const auto& g : grad) acc = gcd(acc, g.restrict(2, 0).eval_first(Rational(1)));
  if (acc.is_zero() || acc.degree() > 0) return false;

  // (0:1:0).
  const std::array<Rational, 3> pt{Rational(0), Rational(1), Rational(0)};
  bool all_zero = true;
  for (const auto& g : grad) all_zero = all_zero && g.evaluate(pt, Rational(0), Rational(1)).is_zero();
  return !all_zero;
}

struct TriangleReport {
  int m = 0;
  long p = 0;
  bool shift_invariant = false;
  bool fixed_points_fixed = false;
  bool fixed_points_on_curve = false;
  bool on_curve_matches_m_mod_3 = false;  // on curve iff m != 2 mod 3
  bool on_curve_matches_p_mod_3 = false;  // on curve iff p != 0 mod 3
  std::optional<bool> nonsingular;        // checked for m <= 6

  bool all_pass() const {
    return shift_invariant && fixed_points_fixed && on_curve_matches_m_mod_3 && on_curve_matches_p_mod_3 &&
           nonsingular.value_or(true);
  }
};

inline constexpr int kNonsingularCheckMaxM = 6;

inline TriangleReport triangle_checks(int m) {
  if (m < 2) fail(ErrorKind::InvalidInput, "m must be >= 2");
  TriangleReport r;
  r.m = m;
  r.p = static_cast<long>(m) * m - m + 1;
  const TriPoly f = triangle_polynomial(m);
  r.shift_invariant = f.shifted() == f;

  const EisensteinInt rho = EisensteinInt::rho();
  const EisensteinInt rho2 = rho * rho;
  const EisensteinInt one{Rational(1), Rational(0)};
  const EisensteinInt zero{};
  const std::array<EisensteinPoint, 2> fixed{EisensteinPoint{rho, rho2, one}, EisensteinPoint{rho2, rho, one}};
  auto shift = [](const EisensteinPoint& q) { return EisensteinPoint{q[1], q[2], q[0]}; };
  r.fixed_points_fixed = true;
  bool on0 = f.evaluate(fixed[0], zero, one).is_zero();
  bool on1 = f.evaluate(fixed[1], zero, one).is_zero();
  for (const auto& q : fixed) r.fixed_points_fixed = r.fixed_points_fixed && projectively_equal(shift(q), q);
  r.fixed_points_on_curve = on0 && on1;
  const bool consistent = on0 == on1;
  r.on_curve_matches_m_mod_3 = consistent && (r.fixed_points_on_curve == (m % 3 != 2));
  r.on_curve_matches_p_mod_3 = consistent && (r.fixed_points_on_curve == (r.p % 3 != 0));
  if (m <= kNonsingularCheckMaxM) r.nonsingular = triangle_nonsingular(m);
  return r;
}

// ---------------------------------------------------------------------------
// The map psi: (X:Y:Z) -> (X^m Y : Y^m Z : Z^m X) onto the line a + b + c = 0.

struct PsiReport {
  int m = 0;
  bool monomial_identity = false;    // a b^(m-1) / c^m = (Y/Z)^(m^2-m+1)
  bool line_substitution = false;    // a b^(m-1)/c^m = (-1)^(m-1) u^(m-1)(u-1) on a + b + c = 0
  bool sign_identity = false;        // v = (-1)^(m-1) Y/Z gives v^(m^2-m+1) = u^(m-1)(u-1)
  bool mobius_cycle = false;         // induced u -> 1/(1-u) cycles 0 -> 1 -> oo -> 0
  bool extension_on_line = false;    // images of (1:0:0), (0:1:0), (0:0:1) lie on a + b + c = 0
  bool extension_equivariant = false;
  bool extension_hits_branch_points = false;

  bool all_pass() const {
    return monomial_identity && line_substitution && sign_identity && mobius_cycle && extension_on_line &&
           extension_equivariant && extension_hits_branch_points;
  }
};

/// Point of P^1 as (num : den).
using P1Point = std::array<Rational, 2>;

inline bool p1_equal(const P1Point& a, const P1Point& b) { return a[0] * b[1] == a[1] * b[0]; }

/// (u:1) -> (M00 u + M01 : M10 u + M11)
using Mobius = std::array<std::array<Rational, 2>, 2>;

inline P1Point mobius_apply(const Mobius& m, const P1Point& x) {
  return {m[0][0] * x[0] + m[0][1] * x[1], m[1][0] * x[0] + m[1][1] * x[1]};
}

inline Mobius compose(const Mobius& a, const Mobius& b) {
  Mobius r{};
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return r;
}

/// Mobius map on u = -b/c induced by the cyclic shift (a, b, c) -> (b, c, a)
/// restricted to a = -b - c.
inline Mobius induced_mobius() {
  // Linear forms in (b, c); a = -b - c on the line. The shift gives
  // u' = -(new b)/(new c) = -c/a.
  using Form = std::array<Rational, 2>;
  const Form a{Rational(-1), Rational(-1)};
  const Form c{Rational(0), Rational(1)};
  const Form num{-c[0], -c[1]};
  // Rewrite in (N, D) = (-b, c), so u = N/D.
  auto to_nd = [](const Form& f) { return std::array<Rational, 2>{-f[0], f[1]}; };
  return {to_nd(num), to_nd(a)};
}

inline PsiReport psi_identities(int m) {
  if (m < 2) fail(ErrorKind::InvalidInput, "m must be >= 2");
  PsiReport r;
  r.m = m;
  const long p = static_cast<long>(m) * m - m + 1;

  // (i) exponent bookkeeping for a b^(m-1) c^(-m).
  const std::array<long, 3> ea{m, 1, 0}, eb{0, m, 1}, ec{1, 0, m};
  std::array<long, 3> total{};
  for (std::size_t k = 0; k < 3; ++k) total[k] = ea[k] + (m - 1) * eb[k] - m * ec[k];
  r.monomial_identity = total == std::array<long, 3>{0, p, -p};

  // (ii) numerators over the common denominator c^m, with a = -b - c and u = N/D, N = -b, D = c.
  const BiPoly bb = BiPoly::u();
  const BiPoly cc = BiPoly::v();
  const BiPoly aa = BiPoly::constant(-1) * bb - cc;
  const BiPoly lhs = aa * pow(bb, static_cast<unsigned>(m - 1));
  const BiPoly n = BiPoly::constant(-1) * bb;
  const BiPoly rhs = pow(n, static_cast<unsigned>(m - 1)) * (n - cc);
  const Rational sgn = (m - 1) % 2 == 0 ? Rational(1) : Rational(-1);
  r.line_substitution = lhs == rhs * sgn;

  // (iii) (-1)^((m-1) p) from v^p, times (-1)^(m-1) from (ii), must be +1.
  r.sign_identity = (((m - 1) * p + (m - 1)) % 2) == 0;

  // (iv) Mobius 3-cycle.
  const Mobius mob = induced_mobius();
  const P1Point zero{Rational(0), Rational(1)}, one{Rational(1), Rational(1)}, inf{Rational(1), Rational(0)};
  const Mobius cube = compose(mob, compose(mob, mob));
  const bool cube_scalar = cube[0][1].is_zero() && cube[1][0].is_zero() && cube[0][0] == cube[1][1];
  r.mobius_cycle = p1_equal(mobius_apply(mob, zero), one) && p1_equal(mobius_apply(mob, one), inf) &&
                   p1_equal(mobius_apply(mob, inf), zero) && cube_scalar;

  // (v) extension of psi to S.
  using Line = std::array<Rational, 3>;
  const std::array<Line, 3> s_images{Line{1, 0, -1}, Line{-1, 1, 0}, Line{0, -1, 1}};
  r.extension_on_line = std::all_of(s_images.begin(), s_images.end(),
                                    [](const Line& q) { return (q[0] + q[1] + q[2]).is_zero(); });
  // The shift sends e1 -> e3, e2 -> e1, e3 -> e2 and (a:b:c) -> (b:c:a).
  const std::array<std::size_t, 3> target{2, 0, 1};
  r.extension_equivariant = true;
  for (std::size_t i = 0; i < 3; ++i) {
    const Line& img = s_images[i];
    Line moved{img[1], img[2], img[0]};
    r.extension_equivariant = r.extension_equivariant && moved == s_images[target[i]];
  }
  std::vector<P1Point> us;
  for (const auto& q : s_images) us.push_back({-q[1], q[2]});
  r.extension_hits_branch_points = p1_equal(us[0], zero) && p1_equal(us[1], inf) && p1_equal(us[2], one);
  return r;
}

// ---------------------------------------------------------------------------
// Riemann-Hurwitz.

struct RamificationData {
  long degree = 1;
  long base_genus = 0;
  std::vector<std::vector<long>> points;  // ramification indices over each branch point
};

inline void validate(const RamificationData& d) {
  if (d.degree < 1 || d.base_genus < 0) fail(ErrorKind::InvalidInput, "degree >= 1 and base genus >= 0 required");
  for (const auto& pt : d.points) {
    long sum = 0;
    for (long e : pt) {
      if (e < 1) fail(ErrorKind::InvalidInput, "ramification indices must be >= 1");
      sum += e;
    }
    if (sum != d.degree) fail(ErrorKind::InvalidInput, "ramification indices over a point must sum to the degree");
  }
}

inline long ramification_total(const RamificationData& d) {
  long r = 0;
  for (const auto& pt : d.points)
    for (long e : pt) r += e - 1;
  return r;
}

/// g with 2g - 2 = degree (2 base_genus - 2) + sum (e - 1).
inline long rh_genus(const RamificationData& d) {
  validate(d);
  long two_g_minus_2 = d.degree * (2 * d.base_genus - 2) + ramification_total(d);
  if ((two_g_minus_2 + 2) % 2 != 0 || two_g_minus_2 < -2)
    fail(ErrorKind::InconsistentRamification, "2g - 2 = " + std::to_string(two_g_minus_2));
  return (two_g_minus_2 + 2) / 2;
}

/// Base genus solved from the cover genus; base_genus in d is ignored.
inline long rh_base_genus(long cover_genus, const RamificationData& d) {
  RamificationData probe = d;
  probe.base_genus = 0;
  validate(probe);
  long rhs = 2 * cover_genus - 2 - ramification_total(d);
  if (rhs % d.degree != 0) fail(ErrorKind::InconsistentRamification, "non-integral base genus");
  long t = rhs / d.degree + 2;
  if (t % 2 != 0 || t < 0) fail(ErrorKind::InconsistentRamification, "non-integral base genus");
  return t / 2;
}

/// Degree-p cyclic cover of P^1 totally ramified over 0, 1 and infinity.
inline RamificationData three_point_cover(long p) { return {p, 0, {{p}, {p}, {p}}}; }

/// Genus of X / <sigma>: (p - 1)/6 for p = 1 mod 6, 1 for p = 3. Cross-checked
/// by Riemann-Hurwitz for the degree-3 quotient map, ramified at the two
/// fixed points when p = 1 mod 6 and unramified when p = 3.
inline long quotient_genus(long p) {
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p)))
    fail(ErrorKind::InvalidInput, std::to_string(p) + " is not prime");
  long g;
  long fixed_points;
  if (p == 3) {
    g = 1;
    fixed_points = 0;
  } else if (p % 6 == 1) {
    g = (p - 1) / 6;
    fixed_points = 2;
  } else {
    fail(ErrorKind::NoAutomorphism, "no automorphism cycling 0, 1, oo for p = " + std::to_string(p));
  }
  const long cover = rh_genus(three_point_cover(p));
  RamificationData sigma{3, g, std::vector<std::vector<long>>(static_cast<std::size_t>(fixed_points), {3})};
  if (rh_genus(sigma) != cover || rh_base_genus(cover, sigma) != g)
    fail(ErrorKind::IdentityFailure, "Riemann-Hurwitz disagrees with the quotient genus formula");
  return g;
}

// ---------------------------------------------------------------------------
// A^p = B^p + C^p with |A|, |B|, |C| <= H.

struct FermatTriple {
  long a = 0, b = 0, c = 0;
  bool trivial() const { return a == 0 || b == 0 || c == 0; }
  friend auto operator<=>(const FermatTriple&, const FermatTriple&) = default;
};

struct FermatResult {
  unsigned p = 0;
  long bound = 0;
  std::vector<FermatTriple> solutions;  // lexicographic

  std::size_t nontrivial_count() const {
    return static_cast<std::size_t>(std::count_if(solutions.begin(), solutions.end(),
                                                  [](const FermatTriple& t) { return !t.trivial(); }));
  }
};

namespace detail {

using u128 = unsigned __int128;

inline u128 pow_u128(long base, unsigned e) {
  u128 r = 1;
  for (unsigned i = 0; i < e; ++i) r *= static_cast<u128>(base);
  return r;
}

// Nonnegative x <= y, z <= bound with x^p + y^p = z^p, for x in [x_lo, x_hi).
inline std::vector<std::array<long, 3>> fermat_base_range(const std::vector<u128>& pw, long x_lo, long x_hi) {
  std::vector<std::array<long, 3>> out;
  const long bound = static_cast<long>(pw.size()) - 1;
  for (long x = x_lo; x < x_hi; ++x) {
    long z = x;
    for (long y = x; y <= bound; ++y) {
      const u128 target = pw[static_cast<std::size_t>(x)] + pw[static_cast<std::size_t>(y)];
      if (z < y) z = y;
      while (z <= bound && pw[static_cast<std::size_t>(z)] < target) ++z;
      if (z > bound) break;
      if (pw[static_cast<std::size_t>(z)] == target) out.push_back({x, y, z});
    }
  }
  return out;
}

}  // namespace detail

/// Exhaustive search. Odd p makes every signed solution a permutation, up to
/// global sign, of a nonnegative x^p + y^p = z^p written as x^p + y^p + (-z)^p = 0.
inline FermatResult fermat_search(unsigned p, long bound, unsigned threads = 1) {
  if (p < 3 || p % 2 == 0) fail(ErrorKind::InvalidInput, "p must be an odd exponent >= 3");
  if (bound < 1) fail(ErrorKind::InvalidInput, "bound must be >= 1");
  // 2 * bound^p must fit in 127 bits.
  long double bits = static_cast<long double>(p) * std::log2(static_cast<long double>(bound)) + 1;
  if (bits >= 126) fail(ErrorKind::InvalidInput, "bound^p exceeds 126 bits");
  std::vector<detail::u128> pw(static_cast<std::size_t>(bound) + 1);
  for (long i = 0; i <= bound; ++i) pw[static_cast<std::size_t>(i)] = detail::pow_u128(i, p);

  threads = std::max(1U, threads);
  std::vector<std::vector<std::array<long, 3>>> parts(threads);
  {
    std::vector<std::thread> pool;
    const long chunk = (bound + 1 + static_cast<long>(threads) - 1) / static_cast<long>(threads);
    for (unsigned t = 0; t < threads; ++t) {
      long lo = static_cast<long>(t) * chunk, hi = std::min(bound + 1, lo + chunk);
      pool.emplace_back([&, t, lo, hi] { parts[t] = detail::fermat_base_range(pw, lo, std::max(lo, hi)); });
    }
    for (auto& th : pool) th.join();
  }

  std::set<FermatTriple> sols;
  for (const auto& part : parts) {
    for (const auto& base : part) {
      std::array<long, 3> zero_sum{base[0], base[1], -base[2]};
      std::sort(zero_sum.begin(), zero_sum.end());
      do {
        for (long sign : {1L, -1L}) {
          // A = t1, B = -t2, C = -t3 from t1^p + t2^p + t3^p = 0.
          sols.insert({sign * zero_sum[0], -sign * zero_sum[1], -sign * zero_sum[2]});
        }
      } while (std::next_permutation(zero_sum.begin(), zero_sum.end()));
    }
  }
  FermatResult res{p, bound, {sols.begin(), sols.end()}};
  return res;
}

}  // namespace rankgain

#endif  // RANKGAIN_COVERINGS_HPP
