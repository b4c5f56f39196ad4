#include <gtest/gtest.h>

#include <array>
#include <random>

#include "rankgain/elliptic/family.hpp"
#include "rankgain/scan.hpp"
#include "test_oracles.hpp"

using namespace rankgain;

namespace {

Rational Q(long n, long d = 1) { return Rational(Integer(n), Integer(d)); }

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::InvalidInput;
}

// 37a1: y^2 + y = x^3 - x, E(Q) = Z generated by (0, 0).
WeierstrassCurve curve37() { return WeierstrassCurve::make(0, 0, 1, -1, 0); }

// Brute-force #E(F_p) over all pairs (x, y).
std::uint64_t count_by_pairs(const WeierstrassCurve& e, std::uint64_t p) {
  auto r = [&](const Rational& q) { return *reduce_mod_p(q, p); };
  const std::uint64_t a1 = r(e.a1), a2 = r(e.a2), a3 = r(e.a3), a4 = r(e.a4), a6 = r(e.a6);
  std::uint64_t n = 1;
  for (std::uint64_t x = 0; x < p; ++x)
    for (std::uint64_t y = 0; y < p; ++y) {
      std::uint64_t lhs = (y * y + a1 * x % p * y + a3 * y) % p;
      std::uint64_t rhs = (x * x % p * x + a2 * x % p * x + a4 * x + a6) % p;
      n += lhs == rhs;
    }
  return n;
}

// F_{p^3} as F_p[z]/(m) with m monic irreducible; used to count points directly.
struct Fp3 {
  std::uint64_t p;
  std::array<std::uint64_t, 3> m;  // z^3 = m0 + m1 z + m2 z^2

  using E = std::array<std::uint64_t, 3>;
  E add(const E& a, const E& b) const { return {(a[0] + b[0]) % p, (a[1] + b[1]) % p, (a[2] + b[2]) % p}; }
  E mul(const E& a, const E& b) const {
    std::array<std::uint64_t, 5> c{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    for (int k = 4; k >= 3; --k) {
      for (int i = 0; i < 3; ++i) c[k - 3 + i] = (c[k - 3 + i] + c[k] * m[i]) % p;
      c[k] = 0;
    }
    return {c[0], c[1], c[2]};
  }
  E scal(std::uint64_t s) const { return {s % p, 0, 0}; }
};

std::uint64_t count_over_fp3(const WeierstrassCurve& e, std::uint64_t p) {
  Fp3 f{p, {}};
  // z^3 - m2 z^2 - m1 z - m0 irreducible.
  bool found = false;
  for (std::uint64_t a = 0; a < p && !found; ++a)
    for (std::uint64_t b = 0; b < p && !found; ++b)
      for (std::uint64_t c = 1; c < p && !found; ++c) {
        std::vector<std::uint64_t> poly{(p - c) % p, (p - b) % p, (p - a) % p, 1};
        if (oracle::irreducible_by_search(poly, p)) {
          f.m = {c, b, a};
          found = true;
        }
      }
  auto r = [&](const Rational& q) { return f.scal(*reduce_mod_p(q, p)); };
  const auto a1 = r(e.a1), a2 = r(e.a2), a3 = r(e.a3), a4 = r(e.a4), a6 = r(e.a6);
  std::vector<Fp3::E> elems;
  for (std::uint64_t i = 0; i < p; ++i)
    for (std::uint64_t j = 0; j < p; ++j)
      for (std::uint64_t k = 0; k < p; ++k) elems.push_back({i, j, k});
  std::uint64_t n = 1;
  for (const auto& x : elems) {
    auto x2 = f.mul(x, x);
    auto rhs = f.add(f.add(f.mul(x2, x), f.mul(a2, x2)), f.add(f.mul(a4, x), a6));
    for (const auto& y : elems) {
      auto lhs = f.add(f.mul(y, y), f.add(f.mul(f.mul(a1, x), y), f.mul(a3, y)));
      n += lhs == rhs;
    }
  }
  return n;
}

EcPoint<Rational> pt(const Rational& x, const Rational& y) { return EcPoint<Rational>::affine(x, y); }

}  // namespace

TEST(Weierstrass, Invariants37a) {
  WeierstrassCurve e = curve37();
  EXPECT_EQ(e.disc, Rational(37));
  EXPECT_EQ(e.c4, Rational(48));
  EXPECT_EQ(e.j, Q(110592, 37));
  EXPECT_EQ(1728 * e.disc, e.c4 * e.c4 * e.c4 - e.c6 * e.c6);
  EXPECT_EQ(e.b2, e.a1 * e.a1 + 4 * e.a2);
  EXPECT_EQ(kind_of([] { WeierstrassCurve::make(0, 0, 0, 0, 0); }), ErrorKind::SingularCurve);
}

TEST(Weierstrass, KnownMultiples37a) {
  auto c = rational_coeffs(curve37());
  auto P = pt(0, 0);
  EXPECT_EQ(ec_mul(c, 2, P), pt(1, 0));
  EXPECT_EQ(ec_mul(c, 3, P), pt(-1, -1));
  EXPECT_EQ(ec_mul(c, 4, P), pt(2, -3));
  EXPECT_EQ(ec_mul(c, 5, P), pt(Q(1, 4), Q(-5, 8)));
  EXPECT_EQ(ec_mul(c, 6, P), pt(6, 14));
  EXPECT_TRUE(ec_add(c, P, ec_neg(c, P)).is_infinity());
  EXPECT_EQ(ec_add(c, P, EcPoint<Rational>::infinity()), P);
}

TEST(Weierstrass, GroupLawOverQ) {
  auto c = rational_coeffs(curve37());
  auto P = pt(0, 0);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> k(-9, 9);
  for (int i = 0; i < 50; ++i) {
    auto A = ec_mul(c, k(rng), P), B = ec_mul(c, k(rng), P), C = ec_mul(c, k(rng), P);
    ASSERT_TRUE(ec_on_curve(c, A));
    EXPECT_EQ(ec_add(c, A, B), ec_add(c, B, A));
    EXPECT_EQ(ec_add(c, ec_add(c, A, B), C), ec_add(c, A, ec_add(c, B, C)));
  }
}

TEST(Weierstrass, GroupLawOverCubicField) {
  FamilyParams fp = derive_family(1, 1);
  FieldPoint X = point_from_fiber(fp, Q(1));
  Modulus m = X.modulus();
  FieldPoint T(X.curve(), m,
               EcPoint<QuotientElem>::affine(QuotientElem(Rational(0), m), QuotientElem(fp.a4 / fp.a1, m)));
  std::vector<FieldPoint> pts{X, T, group_law(X, T), scalar_mul(2, X), negate(X)};
  std::mt19937_64 rng(9);
  for (int i = 0; i < 50; ++i) {
    const FieldPoint& a = pts[rng() % pts.size()];
    const FieldPoint& b = pts[rng() % pts.size()];
    const FieldPoint& d = pts[rng() % pts.size()];
    EXPECT_EQ(group_law(a, b), group_law(b, a));
    EXPECT_EQ(group_law(group_law(a, b), d), group_law(a, group_law(b, d)));
  }
  EXPECT_TRUE(group_law(X, negate(X)).is_infinity());
  EXPECT_EQ(group_law(X, FieldPoint::infinity(X.curve(), m)), X);
}

TEST(Weierstrass, IncompatiblePointsRejected) {
  FamilyParams fp = derive_family(1, 1);
  FieldPoint X = point_from_fiber(fp, Q(1));
  FieldPoint Y = point_from_fiber(fp, Q(2));
  EXPECT_EQ(kind_of([&] { group_law(X, Y); }), ErrorKind::IncompatiblePoints);
  FieldPoint T = rational_3_torsion(fp);
  FieldPoint other = FieldPoint::rational(curve37(), 0, 0);
  EXPECT_EQ(kind_of([&] { group_law(T, other); }), ErrorKind::IncompatiblePoints);
}

TEST(Weierstrass, ReductionCompatibility) {
  WeierstrassCurve e = curve37();
  auto c = rational_coeffs(e);
  auto P = pt(0, 0);
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<long> k(-12, 12);
  const std::vector<std::uint64_t> primes{5, 7, 11, 13, 17, 19, 23};
  int cases = 0;
  while (cases < 20) {
    std::uint64_t p = primes[rng() % primes.size()];
    auto A = ec_mul(c, k(rng), P), B = ec_mul(c, k(rng), P);
    auto ra = reduce_point(A, p), rb = reduce_point(B, p), rs = reduce_point(ec_add(c, A, B), p);
    if (!ra || !rb || !rs) continue;
    auto cp = reduce_curve(e, p);
    EXPECT_EQ(ec_add(cp, *ra, *rb), *rs) << "p=" << p;
    ++cases;
  }
}

TEST(PointCounting, MatchesPairEnumeration) {
  std::vector<WeierstrassCurve> curves{curve37(), family_curve(derive_family(1, 1)), family_curve(derive_family(2, 3)),
                                       WeierstrassCurve::make(1, -1, 1, -3, 5)};
  for (const auto& e : curves)
    for (auto p : primes_up_to(80)) {
      if (!good_reduction(e, p)) continue;
      EXPECT_EQ(count_points_mod_p(e, p), count_by_pairs(e, p)) << "p=" << p;
      long ap = frobenius_trace(e, p);
      EXPECT_LE(ap * ap, 4 * static_cast<long>(p));
    }
}

TEST(PointCounting, TraceRecursionMatchesCubicExtension) {
  for (const auto& e : {curve37(), family_curve(derive_family(1, 1))}) {
    for (std::uint64_t p : {5ULL, 7ULL, 11ULL}) {
      if (!good_reduction(e, p)) continue;
      Integer n = group_order_extension(frobenius_trace(e, p), p, 3);
      EXPECT_EQ(n, Integer(static_cast<unsigned long>(count_over_fp3(e, p)))) << "p=" << p;
    }
  }
}

TEST(PointCounting, SupersingularTrace) {
  EXPECT_EQ(trace_power(0, 11, 3), Integer(0));
  EXPECT_EQ(group_order_extension(0, 11, 3), Integer(11 * 11 * 11 + 1));
  EXPECT_EQ(trace_power(0, 11, 2), Integer(-22));
  EXPECT_EQ(trace_power(3, 7, 2), Integer(9 - 14));
  EXPECT_EQ(trace_power(3, 7, 3), Integer(27 - 3 * 7 * 3));
}

TEST(Family, DeriveExamples) {
  FamilyParams p = derive_family(1, 1);
  EXPECT_EQ(p.a6, Q(-131, 108));
  EXPECT_EQ(p.a3, Q(-239, 108));
  EXPECT_EQ(kind_of([] { derive_family(1, 0); }), ErrorKind::DegenerateFamily);
  EXPECT_EQ(kind_of([] { derive_family(0, 1); }), ErrorKind::DegenerateFamily);
}

TEST(Family, JInvariantExamples) {
  EXPECT_EQ(curve_invariants_j(derive_family(1, 1)).j, Q(-42592000, 12167));
  EXPECT_EQ(curve_invariants_j(derive_family(1, 2)).j, Q(-42592000, 12167));
  // 4 * 2^4 - 27 = 37.
  Rational a1_2 = Rational(256) * pow(Rational(70), 3) * 16 / pow(Rational(37), 3);
  EXPECT_EQ(curve_invariants_j(derive_family(2, 5)).j, a1_2);
}

TEST(Family, JIndependentOfA4) {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<long> n(-20, 20), d(1, 7);
  int done = 0;
  while (done < 25) {
    Rational a1(Integer(n(rng)), Integer(d(rng))), a4(Integer(n(rng)), Integer(d(rng)));
    Rational a4b(Integer(n(rng)), Integer(d(rng)));
    if (a1.is_zero() || a4.is_zero() || a4b.is_zero()) continue;
    FamilyParams p = derive_family(a1, a4);
    WeierstrassCurve e = family_curve(p);
    // Closed form evaluated here, independently of the library.
    Rational f = 4 * pow(a1, 4);
    Rational closed = 256 * pow(pow(a1, 4) + 54, 3) * pow(a1, 4) / pow(f - 27, 3);
    EXPECT_EQ(e.c4 * e.c4 * e.c4 / e.disc, closed);
    EXPECT_EQ(family_curve(derive_family(a1, a4b)).j, e.j);
    ++done;
  }
}

TEST(Family, FiberExamples) {
  FamilyParams p = derive_family(1, 1);
  Fiber f0 = fiber_at_s(p, 0);
  EXPECT_EQ(f0.u, Rational(1));
  EXPECT_EQ(f0.v, Rational(0));
  Fiber f1 = fiber_at_s(p, 1);
  EXPECT_EQ(f1.u, Q(-1, 2));
  EXPECT_EQ(f1.v, Q(1, 2));
  EXPECT_EQ(f1.t, Q(157, 108));
}

TEST(Family, FiberDiscriminantIdentity) {
  std::mt19937_64 rng(25);
  for (const auto& [a1, a4] : std::vector<std::pair<Rational, Rational>>{{1, 1}, {2, 3}, {Q(1, 2), Q(-5, 3)}, {-3, 7}}) {
    FamilyParams p = derive_family(a1, a4);
    for (const auto& s : enumerate_s(6)) {
      Fiber f;
      try {
        f = fiber_at_s(p, s);
      } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::DegenerateFiber);
        continue;
      }
      Rational lin = p.a4 - p.a1 * f.t;
      EXPECT_EQ(oracle::sylvester_resultant(f.cubic, f.cubic.derivative()) * Rational(-1), f.disc);
      EXPECT_EQ(f.disc, f.u * f.u * lin * lin);
      EXPECT_EQ(f.sqrt_disc * f.sqrt_disc, f.disc);
      EXPECT_EQ(f.u * f.u + 3 * f.v * f.v, Rational(1));
      if (rational_roots(f.cubic).empty()) {
        EXPECT_EQ(galois_class(f.cubic).galois_class, GaloisClass::C3);
      }
    }
  }
}

TEST(Family, DegenerateFiberRejected) {
  // a4 - a1 t = 0 at t = a4/a1; choose s so that t hits it: find by solving v.
  FamilyParams p = derive_family(1, 1);
  // t = 1 needs v/3 = 1 + a6 - 2/27, i.e. v = 3(1 - 131/108 - 8/108) = -31/36.
  // v = 2s/(1+3s^2) = -31/36 has no rational s (discriminant 36^2 - 3*31^2 < 0), so
  // test the guard through the public check on t directly.
  Rational t = p.a4 / p.a1;
  EXPECT_EQ(poly_discriminant(family_cubic(p, t)), Rational(0));
}

TEST(Family, ReducibleFiberScan) {
  FamilyParams p = derive_family(1, 1);
  int reducible = 0;
  for (const auto& s : enumerate_s(20)) {
    Fiber f = fiber_at_s(p, s);
    bool has_root = !rational_roots(f.cubic).empty();
    if (has_root) {
      ++reducible;
      EXPECT_EQ(kind_of([&] { point_from_fiber(p, f); }), ErrorKind::RationalFiber);
    } else {
      FieldPoint X = point_from_fiber(p, f);
      EXPECT_TRUE(ec_on_curve(X.coeffs(), X.point()));
      // The on-curve identity is fiber(theta) = 0 in L.
      QuotientElem th = QuotientElem::generator(X.modulus());
      QuotientElem val(Rational(0), X.modulus());
      for (int i = f.cubic.degree(); i >= 0; --i) val = val * th + QuotientElem(f.cubic.coeff(i), X.modulus());
      EXPECT_TRUE(val.is_zero());
    }
  }
  // Recorded outcome: count of reducible fibers for (1, 1) up to height 20.
  EXPECT_GE(reducible, 0);
  RecordProperty("reducible_fibers_height20", reducible);
}

TEST(Family, ThreeTorsion) {
  for (const auto& [a1, a4] : std::vector<std::pair<Rational, Rational>>{{1, 1}, {2, 3}, {Q(-1, 3), Q(5, 2)}}) {
    FieldPoint T = rational_3_torsion(derive_family(a1, a4));
    EXPECT_EQ(T.point().y().rep(), UniPoly::constant(a4 / a1));
    EXPECT_FALSE(T.is_infinity());
    EXPECT_FALSE(scalar_mul(2, T).is_infinity());
    EXPECT_TRUE(scalar_mul(3, T).is_infinity());
    EXPECT_EQ(group_law(T, T), negate(T));
    EXPECT_FALSE(nontorsion_certificate(T, 3));
    EXPECT_EQ(torsion_order_up_to(T, 10), 3U);
  }
  FieldPoint T = rational_3_torsion(derive_family(1, 1));
  EXPECT_FALSE(nontorsion_certificate(FieldPoint::infinity(T.curve(), T.modulus()), 1));
}

TEST(Family, TorsionBound) {
  FamilyParams p = derive_family(1, 1);
  WeierstrassCurve e = family_curve(p);
  int checked = 0;
  for (const auto& s : enumerate_s(8)) {
    Fiber f = fiber_at_s(p, s);
    if (!rational_roots(f.cubic).empty()) continue;
    auto primes = default_torsion_primes(e, f.cubic);
    ASSERT_EQ(primes.size(), 2U);
    TorsionBound tb = torsion_bound(p, f.cubic, primes);
    EXPECT_EQ(tb.bound % 3, 0U) << s;
    std::vector<std::uint64_t> swapped{primes[1], primes[0]};
    EXPECT_EQ(torsion_bound(p, f.cubic, swapped).bound, tb.bound);
    for (const auto& r : tb.reductions) {
      EXPECT_EQ(oracle::roots_mod_p(f.cubic, r.prime) > 0, r.residue_degree == 1);
    }
    FieldPoint X = point_from_fiber(p, f);
    EXPECT_TRUE(nontorsion_certificate(X, tb.bound));
    ++checked;
  }
  EXPECT_GT(checked, 5);
}

TEST(Family, NontorsionMatchesIncrementalOracle) {
  auto incremental = [](const FieldPoint& P, std::uint64_t bound) {
    FieldPoint acc = FieldPoint::infinity(P.curve(), P.modulus());
    for (std::uint64_t k = 1; k <= bound; ++k) {
      acc = group_law(acc, P);
      if (acc.is_infinity()) return false;
    }
    return true;
  };
  FamilyParams p = derive_family(1, 1);
  std::vector<FieldPoint> pts{rational_3_torsion(p), FieldPoint::rational(curve37(), 0, 0)};
  for (const auto& s : enumerate_s(3)) {
    Fiber f = fiber_at_s(p, s);
    if (rational_roots(f.cubic).empty()) pts.push_back(point_from_fiber(p, f));
  }
  // A Q-point of order 5 on 11a3: y^2 + y = x^3 - x^2.
  pts.push_back(FieldPoint::rational(WeierstrassCurve::make(0, -1, 1, 0, 0), 0, 0));
  for (const auto& P : pts)
    for (std::uint64_t b : {1ULL, 2ULL, 3ULL, 4ULL, 5ULL, 6ULL, 12ULL}) EXPECT_EQ(nontorsion_certificate(P, b), incremental(P, b));
  EXPECT_EQ(torsion_order_up_to(pts.back(), 10), 5U);
}

TEST(Family, TorsionBoundRejectsBadPrimes) {
  FamilyParams p = derive_family(1, 1);
  Fiber f = fiber_at_s(p, 1);
  EXPECT_EQ(kind_of([&] { torsion_bound(p, f.cubic, {3, 5}); }), ErrorKind::InvalidPrime);
  EXPECT_EQ(kind_of([&] { torsion_bound(p, f.cubic, {5}); }), ErrorKind::InvalidPrime);
  // Delta of the (1,1) curve has a denominator divisible by 2 and 3 only; find a numerator prime.
  WeierstrassCurve e = family_curve(p);
  std::uint64_t bad = 0;
  for (auto q : primes_up_to(5000))
    if (q > 3 && divides(q, e.disc.num())) {
      bad = q;
      break;
    }
  ASSERT_NE(bad, 0U);
  EXPECT_EQ(kind_of([&] { torsion_bound(p, f.cubic, {bad, 5}); }), ErrorKind::InvalidPrime);
}
