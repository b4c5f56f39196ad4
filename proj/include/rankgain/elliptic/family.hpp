// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef RANKGAIN_ELLIPTIC_FAMILY_HPP
#define RANKGAIN_ELLIPTIC_FAMILY_HPP

#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rankgain/error.hpp"
#include "rankgain/elliptic/weierstrass.hpp"
#include "rankgain/exact/modpoly.hpp"
#include "rankgain/exact/quotient.hpp"
#include "rankgain/exact/rational.hpp"
#include "rankgain/exact/unipoly.hpp"

namespace rankgain {

/// Curve family y^2 + a1 xy + a3 y = x^3 + a4 x + a6 in which a3 and a6 are
/// fixed by a1 and a4 so that the cubic x^3 + (a4 - a1 t) x + (a6 - a3 t - t^2)
/// has discriminant u^2 (a4 - a1 t)^2 along the conic 1 = u^2 + 3 v^2.
struct FamilyParams {
  Rational a1;
  Rational a4;
  Rational a3;
  Rational a6;
};

inline FamilyParams derive_family(const Rational& a1, const Rational& a4);
inline WeierstrassCurve family_curve(const FamilyParams& params) {
  return WeierstrassCurve::make(params.a1, Rational(0), params.a3, params.a4, params.a6);
}

inline FamilyParams derive_family(const Rational& a1, const Rational& a4) {
  if (a1.is_zero() || a4.is_zero()) fail(ErrorKind::DegenerateFamily, "a1 and a4 must be nonzero");
  const Rational a1sq = a1 * a1;
  if (4 * a1sq * a1sq == Rational(27)) fail(ErrorKind::DegenerateFamily, "4 a1^4 = 27");
  FamilyParams fp;
  fp.a1 = a1;
  fp.a4 = a4;
  fp.a6 = a4 * a1sq / 27 - a4 / (4 * a1sq) - a4 * a4 / a1sq;
  fp.a3 = a1 * fp.a6 / a4 - a4 / a1;
  try {
    (void)family_curve(fp);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::SingularCurve) fail(ErrorKind::DegenerateFamily, "family curve is singular");
    throw;
  }
  return fp;
}

/// 256 (a1^4 + 54)^3 a1^4 / (4 a1^4 - 27)^3.
inline Rational family_j_closed_form(const Rational& a1) {
  Rational a = pow(a1, 4);
  return 256 * pow(a + 54, 3) * a / pow(4 * a - 27, 3);
}

/// Curve with the full b2..Delta, j formulary; fails if c4^3/Delta disagrees
/// with the closed form in a1.
inline WeierstrassCurve curve_invariants_j(const FamilyParams& params) {
  WeierstrassCurve e = family_curve(params);
  if (e.j != family_j_closed_form(params.a1))
    fail(ErrorKind::IdentityFailure, "j = " + e.j.str() + " differs from closed form " +
                                         family_j_closed_form(params.a1).str());
  return e;
}

struct Fiber {
  Rational s, t, u, v;
  UniPoly cubic;  // x^3 + (a4 - a1 t) x + (a6 - a3 t - t^2)
  Rational disc;
  Rational sqrt_disc;
};

inline UniPoly family_cubic(const FamilyParams& p, const Rational& t) {
  return UniPoly{p.a6 - p.a3 * t - t * t, p.a4 - p.a1 * t, Rational(0), Rational(1)};
}

/// Fiber over s: u = (1 - 3s^2)/(1 + 3s^2), v = 2s/(1 + 3s^2) and t solved from
/// v = 3(t/a1 + a6/a4 - 2 a1^2/27). The discriminant is computed by resultant and
/// must equal u^2 (a4 - a1 t)^2.
inline Fiber fiber_at_s(const FamilyParams& p, const Rational& s) {
  Fiber f;
  f.s = s;
  const Rational w = 1 + 3 * s * s;
  f.u = (1 - 3 * s * s) / w;
  f.v = 2 * s / w;
  if (f.u * f.u + 3 * f.v * f.v != Rational(1)) fail(ErrorKind::IdentityFailure, "u^2 + 3v^2 != 1");
  f.t = p.a1 * (f.v / 3 - p.a6 / p.a4 + 2 * p.a1 * p.a1 / 27);
  const Rational lin = p.a4 - p.a1 * f.t;
  if (lin.is_zero()) fail(ErrorKind::DegenerateFiber, "a4 - a1 t = 0 at s = " + s.str());
  f.cubic = family_cubic(p, f.t);
  f.disc = poly_discriminant(f.cubic);
  const Rational predicted = f.u * f.u * lin * lin;
  if (f.disc != predicted)
    fail(ErrorKind::IdentityFailure, "disc " + f.disc.str() + " != u^2 (a4 - a1 t)^2 = " + predicted.str());
  f.sqrt_disc = abs(f.u * lin);
  return f;
}

/// (0, a4/a1), checked on the curve and of exact order 3 (2P = -P, P != O).
inline FieldPoint rational_3_torsion(const FamilyParams& params) {
  WeierstrassCurve e = family_curve(params);
  FieldPoint p = FieldPoint::rational(e, Rational(0), params.a4 / params.a1);
  FieldPoint twice = group_law(p, p);
  if (p.is_infinity() || !(twice == negate(p)))
    fail(ErrorKind::IdentityFailure, "(0, a4/a1) is not of order 3");
  return p;
}

/// The point (theta, t) over L = Q[theta]/(fiber). Requires an irreducible fiber.
inline FieldPoint point_from_fiber(const FamilyParams& params, const Fiber& fiber) {
  if (!rational_roots(fiber.cubic).empty())
    fail(ErrorKind::RationalFiber, "fiber at s = " + fiber.s.str() + " has a rational root");
  Modulus m(fiber.cubic);
  return {family_curve(params), m,
          EcPoint<QuotientElem>::affine(QuotientElem::generator(m), QuotientElem(fiber.t, m))};
}

inline FieldPoint point_from_fiber(const FamilyParams& params, const Rational& s) {
  return point_from_fiber(params, fiber_at_s(params, s));
}

// ---------------------------------------------------------------------------
// Torsion bound by reduction.

struct PrimeReduction {
  std::uint64_t prime = 0;
  long trace = 0;            // a_p over F_p
  int residue_degree = 1;    // degree of a prime of L above p
  Integer group_order;       // #E(F_{p^d})
};

struct TorsionBound {
  std::uint64_t bound = 0;
  std::vector<PrimeReduction> reductions;
};

/// Primes usable for the reduction bound: good reduction for the curve, fiber
/// p-integral, p not dividing the fiber discriminant.
inline bool usable_torsion_prime(const WeierstrassCurve& e, const UniPoly& fiber, std::uint64_t p) {
  if (!good_reduction(e, p)) return false;
  auto r = ModPoly::reduce(fiber, p);
  if (!r || r->degree() != fiber.degree()) return false;
  return !divides(p, poly_discriminant(fiber).num_ref());
}

inline std::vector<std::uint64_t> default_torsion_primes(const WeierstrassCurve& e, const UniPoly& fiber,
                                                         std::size_t count = 2) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 5; out.size() < count; p += 2)
    if (is_prime(p) && usable_torsion_prime(e, fiber, p)) out.push_back(p);
  return out;
}

/// gcd over the given primes of #E(k_P), where k_P is the residue field of a
/// prime of L = Q[x]/(fiber) above p. Every torsion subgroup of E(L) injects
/// into each of these groups, so the result is a multiple of |E(L)_tors|.
inline TorsionBound torsion_bound(const WeierstrassCurve& e, const UniPoly& fiber,
                                  const std::vector<std::uint64_t>& primes) {
  if (fiber.degree() != 3) fail(ErrorKind::InvalidInput, "fiber must be a cubic");
  std::set<std::uint64_t> distinct(primes.begin(), primes.end());
  if (distinct.size() < 2 || distinct.size() != primes.size())
    fail(ErrorKind::InvalidPrime, "need at least two distinct primes");
  TorsionBound tb;
  Integer g = 0;
  for (auto p : primes) {
    if (!usable_torsion_prime(e, fiber, p))
      fail(ErrorKind::InvalidPrime, "prime " + std::to_string(p) + " is not of good reduction");
    PrimeReduction r;
    r.prime = p;
    r.trace = frobenius_trace(e, p);
    // Residue degree: 1 if the fiber has a root mod p; otherwise the fiber
    // is irreducible mod p and the prime above p is inert.
    r.residue_degree = distinct_root_count(*ModPoly::reduce(fiber, p)) > 0 ? 1 : fiber.degree();
    r.group_order = group_order_extension(r.trace, p, r.residue_degree);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), r.group_order.get_mpz_t());
    tb.reductions.push_back(std::move(r));
  }
  tb.bound = g.get_ui();
  return tb;
}

inline TorsionBound torsion_bound(const FamilyParams& params, const UniPoly& fiber,
                                  const std::vector<std::uint64_t>& primes) {
  return torsion_bound(family_curve(params), fiber, primes);
}

}  // namespace rankgain

#endif  // RANKGAIN_ELLIPTIC_FAMILY_HPP
