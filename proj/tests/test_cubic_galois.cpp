#include <gtest/gtest.h>

#include <random>

#include "rankgain/cubic_galois.hpp"
#include "test_oracles.hpp"

using namespace rankgain;

namespace {

UniPoly P(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return UniPoly(std::move(v));
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::InvalidInput;
}

// Splitting type from the number of roots in F_p: 3 roots split, 0 roots is
// irreducible for a cubic, 1 root is a linear times an irreducible quadratic.
SplitType oracle_split(const UniPoly& f, std::uint64_t p) {
  switch (oracle::roots_mod_p(f, p)) {
    case 3: return SplitType::SplitsCompletely;
    case 0: return SplitType::Irreducible;
    default: return SplitType::LinearTimesQuadratic;
  }
}

// Shanks' simplest cubic x^3 - a x^2 - (a + 3) x - 1, cyclic with discriminant (a^2 + 3a + 9)^2.
UniPoly shanks(long a) { return P({-1, -(a + 3), -a, 1}); }

}  // namespace

TEST(GaloisClass, Examples) {
  CubicField k = galois_class(P({1, -3, 0, 1}));
  EXPECT_EQ(k.galois_class, GaloisClass::C3);
  EXPECT_EQ(*k.sqrt_disc, Rational(9));
  CubicField s = galois_class(P({-2, 0, 0, 1}));
  EXPECT_EQ(s.galois_class, GaloisClass::S3);
  EXPECT_EQ(s.disc, Rational(-108));
  EXPECT_FALSE(s.sqrt_disc);
  EXPECT_EQ(kind_of([] { galois_class(P({0, -1, 0, 1})); }), ErrorKind::ReducibleCubic);
  EXPECT_EQ(kind_of([] { galois_class(P({1, 0, 1})); }), ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of([] { galois_class(P({1, -3, 0, 2})); }), ErrorKind::InvalidInput);
}

TEST(GaloisClass, ShiftInvariant) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> d(-30, 30), e(1, 9);
  const std::vector<UniPoly> base{P({1, -3, 0, 1}), P({-2, 0, 0, 1}), P({-1, -2, 1, 1}), shanks(5), P({1, 1, 0, 1})};
  for (const auto& f : base) {
    for (int i = 0; i < 10; ++i) {
      Rational c(Integer(d(rng)), Integer(e(rng)));
      UniPoly g = f.compose(UniPoly({c, Rational(1)}));
      CubicField a = galois_class(f), b = galois_class(g);
      EXPECT_EQ(a.galois_class, b.galois_class);
      EXPECT_EQ(a.disc, b.disc);
    }
  }
}

TEST(SplittingType, Examples) {
  EXPECT_EQ(splitting_type_mod_p(P({1, -3, 0, 1}), 17), oracle_split(P({1, -3, 0, 1}), 17));
  EXPECT_EQ(splitting_type_mod_p(P({1, -3, 0, 1}), 17), SplitType::SplitsCompletely);
  EXPECT_EQ(splitting_type_mod_p(P({-2, 0, 0, 1}), 7), SplitType::Irreducible);
  EXPECT_EQ(splitting_type_mod_p(P({1, -3, 0, 1}), 2), SplitType::Irreducible);
  EXPECT_EQ(kind_of([] { splitting_type_mod_p(P({1, -3, 0, 1}), 3); }), ErrorKind::RamifiedPrime);
}

TEST(SplittingType, MatchesRootCountOracle) {
  const std::vector<UniPoly> fs{P({1, -3, 0, 1}), P({-2, 0, 0, 1}), P({-1, -2, 1, 1}), P({1, 1, 0, 1}), shanks(7)};
  for (const auto& f : fs) {
    Rational d = poly_discriminant(f);
    for (auto p : primes_up_to(300)) {
      if (divides(p, d.num())) continue;
      EXPECT_EQ(splitting_type_mod_p(f, p), oracle_split(f, p)) << f.str() << " mod " << p;
    }
  }
}

TEST(SplittingType, CyclicNeverLinearTimesQuadratic) {
  for (long a = -10; a <= 10; ++a) {
    UniPoly f = shanks(a);
    CubicField k = galois_class(f);
    ASSERT_EQ(k.galois_class, GaloisClass::C3);
    for (auto p : primes_up_to(400)) {
      if (divides(p, k.disc.num())) continue;
      EXPECT_NE(splitting_type_mod_p(f, p), SplitType::LinearTimesQuadratic);
    }
  }
}

TEST(Distinctness, Examples) {
  CubicField a = galois_class(P({1, -3, 0, 1}));
  CubicField b = galois_class(P({-1, -2, 1, 1}));
  ASSERT_EQ(b.galois_class, GaloisClass::C3);
  EXPECT_EQ(b.disc, Rational(49));
  DisjointnessWitness w = distinctness_witness(a, b);
  ASSERT_TRUE(w.distinct());
  // The witness is the first prime, by brute force, where the types differ.
  std::uint64_t first = 0;
  for (auto p : primes_up_to(1000)) {
    if (divides(p, a.disc.num()) || divides(p, b.disc.num())) continue;
    if (oracle_split(a.defining, p) != oracle_split(b.defining, p)) {
      first = p;
      break;
    }
  }
  EXPECT_EQ(w.prime, first);

  DisjointnessWitness same = distinctness_witness(a, a, 500);
  EXPECT_FALSE(same.distinct());
  EXPECT_EQ(same.bound, 500U);

  CubicField s = galois_class(P({-2, 0, 0, 1}));
  EXPECT_EQ(kind_of([&] { distinctness_witness(a, s); }), ErrorKind::WrongClass);
}

TEST(Distinctness, WitnessReproduces) {
  for (long a = 0; a < 8; ++a) {
    for (long b = a + 1; b < 8; ++b) {
      CubicField ka = galois_class(shanks(a)), kb = galois_class(shanks(b));
      DisjointnessWitness w = distinctness_witness(ka, kb);
      if (!w.distinct()) continue;
      EXPECT_NE(splitting_type_mod_p(ka.defining, w.prime), splitting_type_mod_p(kb.defining, w.prime));
    }
  }
}

TEST(Distinctness, SoundWitnessOnRandomPairs) {
  // Shanks cubics with prime a^2 + 3a + 9 have that prime as conductor, so
  // distinct values give distinct fields.
  std::vector<long> good;
  for (long a = 0; a < 200; ++a)
    if (is_prime(static_cast<std::uint64_t>(a * a + 3 * a + 9))) good.push_back(a);
  ASSERT_GE(good.size(), 10U);
  std::mt19937_64 rng(19);
  int pairs = 0;
  while (pairs < 20) {
    long a = good[rng() % good.size()], b = good[rng() % good.size()];
    if (a == b) continue;
    DisjointnessWitness w = distinctness_witness(galois_class(shanks(a)), galois_class(shanks(b)), 200);
    EXPECT_TRUE(w.distinct()) << a << " vs " << b;
    ++pairs;
  }
}

TEST(Distinctness, ProfilesAgreeWithDirectScan) {
  CubicField a = galois_class(shanks(1)), b = galois_class(shanks(2)), c = galois_class(P({1, -3, 0, 1}));
  for (const auto* x : {&a, &b, &c})
    for (const auto* y : {&a, &b, &c}) {
      DisjointnessWitness direct = distinctness_witness(*x, *y, 300);
      DisjointnessWitness prof = compare_profiles(SplitProfile::of(*x, 300), SplitProfile::of(*y, 300));
      EXPECT_EQ(direct.verdict, prof.verdict);
      EXPECT_EQ(direct.prime, prof.prime);
    }
}
