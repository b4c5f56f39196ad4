// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef RANKGAIN_ELLIPTIC_WEIERSTRASS_HPP
#define RANKGAIN_ELLIPTIC_WEIERSTRASS_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "rankgain/error.hpp"
#include "rankgain/exact/modpoly.hpp"
#include "rankgain/exact/modular.hpp"
#include "rankgain/exact/quotient.hpp"
#include "rankgain/exact/rational.hpp"

namespace rankgain {

/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over Q, with the standard
/// derived quantities. Construction rejects singular curves.
struct WeierstrassCurve {
  Rational a1, a2, a3, a4, a6;
  Rational b2, b4, b6, b8, c4, c6, disc, j;

  static WeierstrassCurve make(Rational a1, Rational a2, Rational a3, Rational a4, Rational a6) {
    WeierstrassCurve e{std::move(a1), std::move(a2), std::move(a3), std::move(a4), std::move(a6),
                       {}, {}, {}, {}, {}, {}, {}, {}};
    e.b2 = e.a1 * e.a1 + 4 * e.a2;
    e.b4 = 2 * e.a4 + e.a1 * e.a3;
    e.b6 = e.a3 * e.a3 + 4 * e.a6;
    e.b8 = e.a1 * e.a1 * e.a6 + 4 * e.a2 * e.a6 - e.a1 * e.a3 * e.a4 + e.a2 * e.a3 * e.a3 - e.a4 * e.a4;
    e.c4 = e.b2 * e.b2 - 24 * e.b4;
    e.c6 = -e.b2 * e.b2 * e.b2 + 36 * e.b2 * e.b4 - 216 * e.b6;
    e.disc = -e.b2 * e.b2 * e.b8 - 8 * e.b4 * e.b4 * e.b4 - 27 * e.b6 * e.b6 + 9 * e.b2 * e.b4 * e.b6;
    if (e.disc.is_zero()) fail(ErrorKind::SingularCurve, "discriminant vanishes");
    e.j = e.c4 * e.c4 * e.c4 / e.disc;
    return e;
  }

  friend bool operator==(const WeierstrassCurve& a, const WeierstrassCurve& b) {
    return a.a1 == b.a1 && a.a2 == b.a2 && a.a3 == b.a3 && a.a4 == b.a4 && a.a6 == b.a6;
  }
};

template <class F>
struct CurveCoeffs {
  F a1, a2, a3, a4, a6;
};

/// Point on a Weierstrass curve over a field F; the point at infinity is a
/// distinguished state rather than a coordinate value.
template <class F>
class EcPoint {
 public:
  static EcPoint infinity() { return EcPoint(); }
  static EcPoint affine(F x, F y) {
    EcPoint p;
    p.xy_.emplace(std::move(x), std::move(y));
    return p;
  }

  bool is_infinity() const { return !xy_.has_value(); }
  const F& x() const { return xy_->first; }
  const F& y() const { return xy_->second; }

  friend bool operator==(const EcPoint& a, const EcPoint& b) { return a.xy_ == b.xy_; }

 private:
  std::optional<std::pair<F, F>> xy_;
};

template <class F>
bool ec_on_curve(const CurveCoeffs<F>& c, const EcPoint<F>& p) {
  if (p.is_infinity()) return true;
  const F& x = p.x();
  const F& y = p.y();
  F lhs = y * y + c.a1 * x * y + c.a3 * y;
  F rhs = x * x * x + c.a2 * x * x + c.a4 * x + c.a6;
  return (lhs - rhs).is_zero();
}

template <class F>
EcPoint<F> ec_neg(const CurveCoeffs<F>& c, const EcPoint<F>& p) {
  if (p.is_infinity()) return p;
  return EcPoint<F>::affine(p.x(), -p.y() - c.a1 * p.x() - c.a3);
}

/// Chord-tangent addition for the general Weierstrass form.
template <class F>
EcPoint<F> ec_add(const CurveCoeffs<F>& c, const EcPoint<F>& p, const EcPoint<F>& q) {
  if (p.is_infinity()) return q;
  if (q.is_infinity()) return p;
  const F& x1 = p.x();
  const F& y1 = p.y();
  const F& x2 = q.x();
  const F& y2 = q.y();
  F dx = x2 - x1;
  std::optional<F> lambda, nu;
  if (!dx.is_zero()) {
    lambda = (y2 - y1) / dx;
    nu = (y1 * x2 - y2 * x1) / dx;
  } else {
    F denom = y1 + y1 + c.a1 * x1 + c.a3;
    if ((y1 + y2 + c.a1 * x2 + c.a3).is_zero() || denom.is_zero()) return EcPoint<F>::infinity();
    F x1sq = x1 * x1;
    lambda = (x1sq + x1sq + x1sq + (c.a2 + c.a2) * x1 + c.a4 - c.a1 * y1) / denom;
    nu = (-x1sq * x1 + c.a4 * x1 + c.a6 + c.a6 - c.a3 * y1) / denom;
  }
  F x3 = *lambda * *lambda + c.a1 * *lambda - c.a2 - x1 - x2;
  F y3 = -(*lambda + c.a1) * x3 - *nu - c.a3;
  return EcPoint<F>::affine(std::move(x3), std::move(y3));
}

/// k*P by double-and-add; negative k negates.
template <class F>
EcPoint<F> ec_mul(const CurveCoeffs<F>& c, long k, const EcPoint<F>& p) {
  if (k < 0) return ec_mul(c, -k, ec_neg(c, p));
  EcPoint<F> acc = EcPoint<F>::infinity();
  EcPoint<F> base = p;
  auto n = static_cast<unsigned long>(k);
  while (n > 0) {
    if (n & 1UL) acc = ec_add(c, acc, base);
    n >>= 1UL;
    if (n > 0) base = ec_add(c, base, base);
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Reduction mod p and naive point counting.

/// Good reduction of this model at p: p > 3, every a_i p-integral, p not dividing Delta.
inline bool good_reduction(const WeierstrassCurve& e, std::uint64_t p) {
  if (p <= 3 || !is_prime(p)) return false;
  for (const Rational* a : {&e.a1, &e.a2, &e.a3, &e.a4, &e.a6})
    if (divides(p, a->den_ref())) return false;
  return !divides(p, e.disc.num_ref());
}

inline CurveCoeffs<ModP> reduce_curve(const WeierstrassCurve& e, std::uint64_t p) {
  if (!good_reduction(e, p)) fail(ErrorKind::InvalidPrime, "bad reduction at " + std::to_string(p));
  auto r = [&](const Rational& q) { return ModP(*reduce_mod_p(q, p), p); };
  return {r(e.a1), r(e.a2), r(e.a3), r(e.a4), r(e.a6)};
}

/// #E(F_p) counted by completing the square: (2y + a1 x + a3)^2 = 4(x^3 + a2 x^2 + a4 x + a6) + (a1 x + a3)^2.
inline std::uint64_t count_points_mod_p(const WeierstrassCurve& e, std::uint64_t p) {
  CurveCoeffs<ModP> c = reduce_curve(e, p);
  std::uint64_t count = 1;  // infinity
  for (std::uint64_t xv = 0; xv < p; ++xv) {
    ModP x(xv, p);
    ModP lin = c.a1 * x + c.a3;
    ModP rhs = x * x * x + c.a2 * x * x + c.a4 * x + c.a6;
    ModP d = ModP(4, p) * rhs + lin * lin;
    count += static_cast<std::uint64_t>(1 + legendre(d.value(), p));
  }
  return count;
}

/// Frobenius trace a_p = p + 1 - #E(F_p).
inline long frobenius_trace(const WeierstrassCurve& e, std::uint64_t p) {
  return static_cast<long>(p) + 1 - static_cast<long>(count_points_mod_p(e, p));
}

/// a_{p,k} from a_{p,k} = a_p a_{p,k-1} - p a_{p,k-2}, a_{p,0} = 2.
inline Integer trace_power(long ap, std::uint64_t p, int k) {
  Integer prev = 2, cur = ap;
  if (k == 0) return prev;
  for (int i = 2; i <= k; ++i) {
    Integer next = Integer(ap) * cur - Integer(static_cast<unsigned long>(p)) * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// #E(F_{p^k}) = p^k + 1 - a_{p,k}.
inline Integer group_order_extension(long ap, std::uint64_t p, int k) {
  Integer pk;
  mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k));
  return pk + 1 - trace_power(ap, p, k);
}

inline std::optional<EcPoint<ModP>> reduce_point(const EcPoint<Rational>& pt, std::uint64_t p) {
  if (pt.is_infinity()) return EcPoint<ModP>::infinity();
  auto x = reduce_mod_p(pt.x(), p);
  auto y = reduce_mod_p(pt.y(), p);
  if (!x || !y) return std::nullopt;
  return EcPoint<ModP>::affine(ModP(*x, p), ModP(*y, p));
}

inline CurveCoeffs<Rational> rational_coeffs(const WeierstrassCurve& e) { return {e.a1, e.a2, e.a3, e.a4, e.a6}; }

// ---------------------------------------------------------------------------
// Points over a number field L = Q[x]/(m).

/// Point on a rational curve with coordinates in Q[x]/(m).
class FieldPoint {
 public:
  FieldPoint(WeierstrassCurve curve, Modulus modulus, EcPoint<QuotientElem> pt)
      : curve_(std::move(curve)), mod_(std::move(modulus)), pt_(std::move(pt)) {
    if (!ec_on_curve(coeffs(), pt_)) fail(ErrorKind::InvalidInput, "point is not on the curve");
  }

  static FieldPoint infinity(WeierstrassCurve curve, Modulus modulus) {
    return {std::move(curve), std::move(modulus), EcPoint<QuotientElem>::infinity()};
  }

  /// Q-rational point, carried over the modulus x.
  static FieldPoint rational(const WeierstrassCurve& curve, const Rational& x, const Rational& y) {
    Modulus m = Modulus::rationals();
    return {curve, m, EcPoint<QuotientElem>::affine(QuotientElem(x, m), QuotientElem(y, m))};
  }

  const WeierstrassCurve& curve() const { return curve_; }
  const Modulus& modulus() const { return mod_; }
  const EcPoint<QuotientElem>& point() const { return pt_; }
  bool is_infinity() const { return pt_.is_infinity(); }

  CurveCoeffs<QuotientElem> coeffs() const {
    auto lift = [&](const Rational& q) { return QuotientElem(q, mod_); };
    return {lift(curve_.a1), lift(curve_.a2), lift(curve_.a3), lift(curve_.a4), lift(curve_.a6)};
  }

  friend bool operator==(const FieldPoint& a, const FieldPoint& b) {
    return a.curve_ == b.curve_ && a.mod_ == b.mod_ && a.pt_ == b.pt_;
  }

 private:
  WeierstrassCurve curve_;
  Modulus mod_;
  EcPoint<QuotientElem> pt_;
};

inline void check_compatible(const FieldPoint& p, const FieldPoint& q) {
  if (!(p.curve() == q.curve())) fail(ErrorKind::IncompatiblePoints, "points lie on different curves");
  if (!(p.modulus() == q.modulus())) fail(ErrorKind::IncompatiblePoints, "points lie over different fields");
}

inline FieldPoint group_law(const FieldPoint& p, const FieldPoint& q) {
  check_compatible(p, q);
  return {p.curve(), p.modulus(), ec_add(p.coeffs(), p.point(), q.point())};
}

inline FieldPoint negate(const FieldPoint& p) { return {p.curve(), p.modulus(), ec_neg(p.coeffs(), p.point())}; }

inline FieldPoint scalar_mul(long k, const FieldPoint& p) {
  return {p.curve(), p.modulus(), ec_mul(p.coeffs(), k, p.point())};
}

namespace detail {

/// Multiple of the order of every torsion point of E(L), L = Q[x]/(m): the gcd
/// of #E(k_P) over the first `count` primes p > 3 where E has good reduction
/// and m stays squarefree of full degree, with k_P the residue field of a
/// prime of L above p.
inline Integer torsion_exponent_multiple(const WeierstrassCurve& e, const UniPoly& m, std::size_t count = 6) {
  const Rational disc = m.degree() >= 2 ? poly_discriminant(m) : Rational(1);
  Integer g = 0;
  std::size_t used = 0;
  for (std::uint64_t p = 5; used < count; p += 2) {
    if (!is_prime(p) || !good_reduction(e, p) || divides(p, disc.num_ref())) continue;
    auto r = ModPoly::reduce(m, p);
    if (!r || r->degree() != m.degree()) continue;
    Integer n = group_order_extension(frobenius_trace(e, p), p, smallest_factor_degree(*r));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    ++used;
  }
  return g;
}

inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace detail

/// Smallest k <= bound with k*P = O, if any. A torsion order divides the
/// reduction multiple, so only its divisors are tried.
inline std::optional<std::uint64_t> torsion_order_up_to(const FieldPoint& p, std::uint64_t bound) {
  if (p.is_infinity()) return bound >= 1 ? std::optional<std::uint64_t>(1) : std::nullopt;
  const Integer mult = detail::torsion_exponent_multiple(p.curve(), p.modulus().poly());
  if (!mult.fits_ulong_p()) fail(ErrorKind::InvalidInput, "torsion multiple exceeds a machine word");
  const auto c = p.coeffs();
  for (auto d : detail::divisors(mult.get_ui())) {
    if (d > bound) break;
    if (ec_mul(c, static_cast<long>(d), p.point()).is_infinity()) return d;
  }
  return std::nullopt;
}

/// True iff k*P != O for every 1 <= k <= bound. When bound is at least the
/// torsion order bound this certifies P has infinite order.
inline bool nontorsion_certificate(const FieldPoint& p, std::uint64_t bound) {
  if (bound < 1) fail(ErrorKind::InvalidInput, "bound must be positive");
  return !torsion_order_up_to(p, bound).has_value();
}

}  // namespace rankgain

#endif  // RANKGAIN_ELLIPTIC_WEIERSTRASS_HPP
