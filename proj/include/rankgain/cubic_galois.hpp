// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef RANKGAIN_CUBIC_GALOIS_HPP
#define RANKGAIN_CUBIC_GALOIS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rankgain/error.hpp"
#include "rankgain/exact/modpoly.hpp"
#include "rankgain/exact/rational.hpp"
#include "rankgain/exact/unipoly.hpp"

namespace rankgain {

enum class GaloisClass { C3, S3 };

inline std::string to_string(GaloisClass g) { return g == GaloisClass::C3 ? "C3" : "S3"; }

/// Monic irreducible cubic over Q with its discriminant data. The class is C3
/// exactly when the discriminant is a rational square.
struct CubicField {
  UniPoly defining;
  Rational disc;
  std::optional<Rational> sqrt_disc;
  GaloisClass galois_class = GaloisClass::S3;
};

inline CubicField galois_class(const UniPoly& f) {
  if (f.degree() != 3) fail(ErrorKind::InvalidInput, "expected a cubic, got degree " + std::to_string(f.degree()));
  if (f.leading() != Rational(1)) fail(ErrorKind::InvalidInput, "cubic must be monic");
  Rational d = poly_discriminant(f);
  if (d.is_zero()) fail(ErrorKind::DegenerateCubic, "cubic " + f.str() + " has a repeated root");
  if (!rational_roots(f).empty()) fail(ErrorKind::ReducibleCubic, "cubic " + f.str() + " has a rational root");
  CubicField k{f, d, rational_is_square(d), GaloisClass::S3};
  if (k.sqrt_disc) k.galois_class = GaloisClass::C3;
  return k;
}

enum class SplitType { SplitsCompletely, Irreducible, LinearTimesQuadratic };

inline std::string to_string(SplitType s) {
  switch (s) {
    case SplitType::SplitsCompletely: return "splits";
    case SplitType::Irreducible: return "inert";
    case SplitType::LinearTimesQuadratic: return "linear-quadratic";
  }
  return "?";
}

namespace detail {

// Splitting type when f is p-integral and p does not divide disc; otherwise absent.
inline std::optional<SplitType> split_if_good(const UniPoly& f, const Rational& disc, std::uint64_t p) {
  if (divides(p, disc.num_ref())) return std::nullopt;
  auto r = ModPoly::reduce(f, p);
  if (!r || r->degree() != 3) return std::nullopt;
  switch (distinct_root_count(*r)) {
    case 3: return SplitType::SplitsCompletely;
    case 1: return SplitType::LinearTimesQuadratic;
    default: return SplitType::Irreducible;
  }
}

}  // namespace detail

inline SplitType splitting_type_mod_p(const UniPoly& f, std::uint64_t p) {
  if (f.degree() != 3 || f.leading() != Rational(1)) fail(ErrorKind::InvalidInput, "expected a monic cubic");
  if (!is_prime(p)) fail(ErrorKind::InvalidInput, std::to_string(p) + " is not prime");
  auto s = detail::split_if_good(f, poly_discriminant(f), p);
  if (!s) fail(ErrorKind::RamifiedPrime, std::to_string(p) + " divides the discriminant or a denominator");
  return *s;
}

/// Splitting types of one cubic at every prime up to a bound (absent where bad).
struct SplitProfile {
  std::uint64_t bound = 0;
  std::vector<std::uint64_t> primes;
  std::vector<std::optional<SplitType>> types;

  static SplitProfile of(const CubicField& k, std::uint64_t bound) {
    SplitProfile prof;
    prof.bound = bound;
    prof.primes = primes_up_to(bound);
    prof.types.reserve(prof.primes.size());
    for (auto p : prof.primes) prof.types.push_back(detail::split_if_good(k.defining, k.disc, p));
    return prof;
  }
};

struct DisjointnessWitness {
  enum class Verdict { DistinctFields, PresumedEqual };
  Verdict verdict = Verdict::PresumedEqual;
  std::uint64_t prime = 0;  // valid for DistinctFields
  std::uint64_t bound = 0;  // valid for PresumedEqual

  bool distinct() const { return verdict == Verdict::DistinctFields; }
};

inline constexpr std::uint64_t kDefaultDisjointnessBound = 1000;

/// First prime (smallest wins) at which two profiles disagree.
inline DisjointnessWitness compare_profiles(const SplitProfile& a, const SplitProfile& b) {
  const std::size_t n = std::min(a.types.size(), b.types.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.types[i] && b.types[i] && *a.types[i] != *b.types[i])
      return {DisjointnessWitness::Verdict::DistinctFields, a.primes[i], 0};
  }
  return {DisjointnessWitness::Verdict::PresumedEqual, 0, std::min(a.bound, b.bound)};
}

/// Proves two cyclic cubic fields non-isomorphic by a prime where their
/// splitting types differ. PresumedEqual is inconclusive.
inline DisjointnessWitness distinctness_witness(const CubicField& k1, const CubicField& k2,
                                                std::uint64_t bound = kDefaultDisjointnessBound) {
  if (k1.galois_class != GaloisClass::C3 || k2.galois_class != GaloisClass::C3)
    fail(ErrorKind::WrongClass, "distinctness witness needs two C3 fields");
  for (auto p : primes_up_to(bound)) {
    auto a = detail::split_if_good(k1.defining, k1.disc, p);
    if (!a) continue;
    auto b = detail::split_if_good(k2.defining, k2.disc, p);
    if (b && *a != *b) return {DisjointnessWitness::Verdict::DistinctFields, p, 0};
  }
  return {DisjointnessWitness::Verdict::PresumedEqual, 0, bound};
}

}  // namespace rankgain

#endif  // RANKGAIN_CUBIC_GALOIS_HPP
