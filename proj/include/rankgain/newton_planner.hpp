// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef RANKGAIN_NEWTON_PLANNER_HPP
#define RANKGAIN_NEWTON_PLANNER_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "rankgain/error.hpp"
#include "rankgain/exact/bipoly.hpp"
#include "rankgain/exact/irreducibility.hpp"
#include "rankgain/exact/rational.hpp"

namespace rankgain {

/// Exponent set of a bivariate polynomial with the part of its convex hull
/// that carries the maximizers of k1 i + k2 j for k1, k2 > 0.
struct NewtonPolygon {
  std::vector<Exponent2> points;  // sorted
  std::vector<Exponent2> hull;    // upper-right chain, from max i to max j

  static NewtonPolygon of(const BiPoly& f) {
    NewtonPolygon np;
    np.points = f.support();
    std::sort(np.points.begin(), np.points.end());
    np.hull = upper_right_chain(np.points);
    return np;
  }

  /// Every exponent attaining max k1 i + k2 j.
  std::vector<Exponent2> maximizers(long k1, long k2) const {
    std::vector<Exponent2> out;
    long best = 0;
    for (const auto& e : points) {
      long val = k1 * e.first + k2 * e.second;
      if (out.empty() || val > best) {
        best = val;
        out.assign(1, e);
      } else if (val == best) {
        out.push_back(e);
      }
    }
    return out;
  }

 private:
  static long cross(const Exponent2& o, const Exponent2& a, const Exponent2& b) {
    return static_cast<long>(a.first - o.first) * (b.second - o.second) -
           static_cast<long>(a.second - o.second) * (b.first - o.first);
  }

  static std::vector<Exponent2> upper_right_chain(const std::vector<Exponent2>& pts) {
    if (pts.size() <= 1) return pts;
    // Andrew's monotone chain, counterclockwise, collinear points dropped.
    std::vector<Exponent2> h(2 * pts.size());
    std::size_t k = 0;
    for (const auto& p : pts) {
      while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= 0) --k;
      h[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
      while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
      h[k++] = pts[i];
    }
    h.resize(k - 1);
    if (h.empty()) return pts;
    auto right = std::max_element(h.begin(), h.end(), [](const Exponent2& a, const Exponent2& b) {
      return a.first != b.first ? a.first < b.first : a.second < b.second;
    });
    auto top = std::max_element(h.begin(), h.end(), [](const Exponent2& a, const Exponent2& b) {
      return a.second != b.second ? a.second < b.second : a.first < b.first;
    });
    std::vector<Exponent2> chain;
    std::size_t i = static_cast<std::size_t>(right - h.begin());
    const std::size_t end = static_cast<std::size_t>(top - h.begin());
    while (true) {
      chain.push_back(h[i]);
      if (i == end) break;
      i = (i + 1) % h.size();
    }
    return chain;
  }
};

/// Coefficient of u^n vanishes and coefficient of u^(n-1) v does not. Then
/// (n-1, 1) is the unique maximizer of k1 i + k2 j whenever k1 > k2 > 0.
inline bool corner_check(const BiPoly& f, int n) {
  if (f.is_zero() || f.total_degree() != n)
    fail(ErrorKind::InvalidInput, "polynomial does not have total degree " + std::to_string(n));
  return f.coeff(n, 0).is_zero() && !f.coeff(n - 1, 1).is_zero();
}

struct Substitution {
  BiPoly g;  // in (s, t)
  int deg_t = -1;
};

/// g(s, t) = f(s + t^k1, b + t^k2).
inline Substitution substitute_st(const BiPoly& f, int k1, int k2, const Rational& b) {
  if (k1 < 1 || k2 < 1) fail(ErrorKind::InvalidInput, "k1, k2 must be positive");
  const BiPoly first = BiPoly::u() + BiPoly::term(1, 0, k1);
  const BiPoly second = BiPoly::constant(b) + BiPoly::term(1, 0, k2);
  std::vector<BiPoly> pf{BiPoly::constant(1)}, ps{BiPoly::constant(1)};
  for (int i = 1; i <= f.degree_first(); ++i) pf.push_back(pf.back() * first);
  for (int j = 1; j <= f.degree_second(); ++j) ps.push_back(ps.back() * second);
  Substitution out;
  for (const auto& [e, c] : f.terms())
    out.g += pf[static_cast<std::size_t>(e.first)] * ps[static_cast<std::size_t>(e.second)] * c;
  out.deg_t = out.g.degree_second();
  return out;
}

inline long predicted_degree(int n, int k1, int k2) { return static_cast<long>(k1) * (n - 1) + k2; }

/// N = n(n-1) + 1.
inline long min_universal_degree(int n) { return static_cast<long>(n) * (n - 1) + 1; }

struct DegreeSet {
  int n = 0;
  long d_max = 0;
  long universal = 0;           // N
  std::vector<long> achievable;  // ascending
  bool covers_tail = false;     // every d in [N, d_max] achievable
};

/// {k1 (n-1) + k2 : k1 > k2 >= 1} up to d_max.
inline DegreeSet plan_degrees(int n, long d_max) {
  if (n < 2) fail(ErrorKind::InvalidInput, "n must be >= 2");
  DegreeSet ds;
  ds.n = n;
  ds.d_max = d_max;
  ds.universal = min_universal_degree(n);
  std::set<long> got;
  for (long k1 = 2; predicted_degree(n, static_cast<int>(k1), 1) <= d_max; ++k1)
    for (long k2 = 1; k2 < k1; ++k2) {
      long d = predicted_degree(n, static_cast<int>(k1), static_cast<int>(k2));
      if (d <= d_max) got.insert(d);
    }
  ds.achievable.assign(got.begin(), got.end());
  ds.covers_tail = true;
  for (long d = ds.universal; d <= d_max; ++d) ds.covers_tail = ds.covers_tail && got.count(d) > 0;
  return ds;
}

/// First candidate b with f(v1, b) certified irreducible over Q.
inline std::optional<Rational> specialize_b(const BiPoly& f, const std::vector<Rational>& candidates) {
  if (f.degree_first() < 1) fail(ErrorKind::InvalidInput, "polynomial is constant in v1");
  for (const auto& b : candidates)
    if (certify_irreducible(f.eval_second(b)).irreducible()) return b;
  return std::nullopt;
}

/// Deterministic pseudorandom rationals with numerator in [-bound, bound] and
/// denominator in [1, bound].
inline std::vector<Rational> generic_b_candidates(std::uint64_t seed, std::size_t count, long bound = 50) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-bound, bound), den(1, bound);
  std::vector<Rational> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.emplace_back(Integer(num(rng)), Integer(den(rng)));
  return out;
}

struct DegreePlan {
  int n = 0;
  int k1 = 0;
  int k2 = 0;
  long d = 0;
  Rational b;
};

inline constexpr std::uint64_t kDefaultPlanSeed = 0x5eed;

/// Picks b from the seeded sequence so that the substituted polynomial has
/// the predicted t-degree and f(v1, b) is certified irreducible.
inline std::optional<DegreePlan> make_plan(const BiPoly& f, int n, int k1, int k2,
                                           std::uint64_t seed = kDefaultPlanSeed, std::size_t tries = 64) {
  if (!(k1 > k2 && k2 >= 1)) fail(ErrorKind::InvalidInput, "need k1 > k2 >= 1");
  if (!corner_check(f, n)) fail(ErrorKind::InvalidInput, "polynomial fails the corner conditions");
  const long d = predicted_degree(n, k1, k2);
  for (const auto& b : generic_b_candidates(seed, tries)) {
    if (substitute_st(f, k1, k2, b).deg_t != d) continue;
    if (!certify_irreducible(f.eval_second(b)).irreducible()) continue;
    return DegreePlan{n, k1, k2, d, b};
  }
  return std::nullopt;
}

/// deg_t of the substitution equals k1 (n-1) + k2 for every 1 <= k2 < k1 <= k1_max.
inline bool degree_law_holds(const BiPoly& f, int n, int k1_max, const Rational& b) {
  for (int k1 = 2; k1 <= k1_max; ++k1)
    for (int k2 = 1; k2 < k1; ++k2)
      if (substitute_st(f, k1, k2, b).deg_t != predicted_degree(n, k1, k2)) return false;
  return true;
}

/// v1^(n-1) v2 + v2^n + v1 + 1, which satisfies the corner conditions.
inline BiPoly sample_corner_polynomial(int n) {
  BiPoly f = BiPoly::term(1, n - 1, 1) + BiPoly::term(1, 0, n) + BiPoly::term(1, 1, 0) + BiPoly::constant(1);
  return f;
}

}  // namespace rankgain

#endif  // RANKGAIN_NEWTON_PLANNER_HPP
