// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef RANKGAIN_SCAN_HPP
#define RANKGAIN_SCAN_HPP

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "rankgain/cubic_galois.hpp"
#include "rankgain/elliptic/family.hpp"
#include "rankgain/elliptic/weierstrass.hpp"
#include "rankgain/error.hpp"

namespace rankgain {

struct ScanConfig {
  Rational a1{1};
  Rational a4{1};
  long s_height_max = 10;
  std::uint64_t witness_bound = kDefaultDisjointnessBound;
  std::size_t torsion_prime_count = 2;
  std::vector<std::uint64_t> torsion_primes;  // explicit list; overrides the count when nonempty
  unsigned threads = 0;                       // 0 = hardware concurrency

  void validate() const {
    if (s_height_max < 1) fail(ErrorKind::InvalidInput, "s_height_max must be >= 1");
    if (witness_bound < 2) fail(ErrorKind::InvalidInput, "witness_bound must be >= 2");
    if (torsion_primes.empty() && torsion_prime_count < 2)
      fail(ErrorKind::InvalidInput, "at least two torsion primes are required");
  }
};

/// Rationals a/b, gcd(a, b) = 1, b >= 1, max(|a|, b) <= max_height, ordered by
/// height and then by value.
inline std::vector<Rational> enumerate_s(long max_height) {
  std::vector<Rational> out;
  for (long h = 1; h <= max_height; ++h) {
    std::vector<Rational> level;
    for (long b = 1; b <= h; ++b) {
      for (long a = -h; a <= h; ++a) {
        if (std::max(std::labs(a), b) != h) continue;
        if (std::gcd(std::labs(a), b) != 1) continue;
        level.emplace_back(Integer(a), Integer(b));
      }
    }
    std::sort(level.begin(), level.end());
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

struct CertifiedWitness {
  std::size_t against = 0;  // index into the accepted list
  DisjointnessWitness witness;
};

/// Audit record for one fiber: a cyclic cubic field L with a point of E(L)
/// of infinite order and proofs that L differs from earlier accepted fields.
struct ExtensionCertificate {
  Rational s;
  Rational t;
  UniPoly fiber;
  Rational disc;
  Rational sqrt_disc;
  GaloisClass galois_class = GaloisClass::C3;
  FieldPoint point;
  std::uint64_t torsion_bound = 0;
  std::vector<PrimeReduction> reductions;
  std::uint64_t nontorsion_checked_to = 0;
  std::vector<CertifiedWitness> disjointness;
};

struct SkipRecord {
  Rational s;
  std::string reason;
};

struct ScanSummary {
  std::size_t fibers_tested = 0;
  std::size_t accepted = 0;
  std::size_t skipped_reducible = 0;
  std::size_t skipped_presumed_equal = 0;
  std::size_t skipped_degenerate = 0;
  std::size_t skipped_torsion = 0;
};

struct ScanResult {
  FamilyParams params;
  ScanConfig config;
  std::vector<ExtensionCertificate> certificates;
  std::vector<SkipRecord> skipped;
  ScanSummary summary;
};

namespace detail {

struct FiberOutcome {
  enum class Status { Candidate, Degenerate, Reducible, Torsion };
  Status status = Status::Degenerate;
  Rational s;
  std::string note;
  std::optional<Fiber> fiber;
  std::optional<CubicField> field;
  std::optional<FieldPoint> point;
  TorsionBound bound;
  SplitProfile profile;
};

inline FiberOutcome evaluate_fiber(const FamilyParams& params, const WeierstrassCurve& curve,
                                   const ScanConfig& cfg, const Rational& s) {
  FiberOutcome out;
  out.s = s;
  try {
    out.fiber = fiber_at_s(params, s);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::DegenerateFiber) throw;
    out.status = FiberOutcome::Status::Degenerate;
    out.note = "degenerate fiber";
    return out;
  }
  if (!rational_roots(out.fiber->cubic).empty()) {
    out.status = FiberOutcome::Status::Reducible;
    out.note = "fiber has a rational root";
    return out;
  }
  out.field = galois_class(out.fiber->cubic);
  if (out.field->galois_class != GaloisClass::C3)
    fail(ErrorKind::IdentityFailure, "square-discriminant fiber classified S3 at s = " + s.str());
  out.point = point_from_fiber(params, *out.fiber);
  std::vector<std::uint64_t> primes = cfg.torsion_primes;
  if (primes.empty()) primes = default_torsion_primes(curve, out.fiber->cubic, cfg.torsion_prime_count);
  out.bound = torsion_bound(curve, out.fiber->cubic, primes);
  if (auto k = torsion_order_up_to(*out.point, out.bound.bound)) {
    out.status = FiberOutcome::Status::Torsion;
    out.note = "point has order " + std::to_string(*k);
    return out;
  }
  out.profile = SplitProfile::of(*out.field, cfg.witness_bound);
  out.status = FiberOutcome::Status::Candidate;
  return out;
}

}  // namespace detail

/// Evaluates fibers concurrently, then accepts them serially in enumeration
/// order so the accepted set and its witnesses are deterministic.
inline ScanResult run_family_scan(const ScanConfig& cfg) {
  cfg.validate();
  ScanResult res;
  res.config = cfg;
  res.params = derive_family(cfg.a1, cfg.a4);
  const WeierstrassCurve curve = curve_invariants_j(res.params);
  const std::vector<Rational> svals = enumerate_s(cfg.s_height_max);

  std::vector<std::optional<detail::FiberOutcome>> outcomes(svals.size());
  std::vector<std::string> errors(svals.size());
  unsigned threads = cfg.threads == 0 ? std::max(1U, std::thread::hardware_concurrency()) : cfg.threads;
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(svals.size(), 1)));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < svals.size(); i = next++) {
      try {
        outcomes[i] = detail::evaluate_fiber(res.params, curve, cfg, svals[i]);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  for (std::size_t i = 0; i < svals.size(); ++i)
    if (!errors[i].empty()) fail(ErrorKind::IdentityFailure, "fiber s = " + svals[i].str() + ": " + errors[i]);

  std::vector<const SplitProfile*> accepted_profiles;
  for (auto& slot : outcomes) {
    detail::FiberOutcome& o = *slot;
    ++res.summary.fibers_tested;
    using Status = detail::FiberOutcome::Status;
    if (o.status == Status::Degenerate) {
      ++res.summary.skipped_degenerate;
      res.skipped.push_back({o.s, o.note});
      continue;
    }
    if (o.status == Status::Reducible) {
      ++res.summary.skipped_reducible;
      res.skipped.push_back({o.s, o.note});
      continue;
    }
    if (o.status == Status::Torsion) {
      ++res.summary.skipped_torsion;
      res.skipped.push_back({o.s, o.note});
      continue;
    }
    std::vector<CertifiedWitness> wits;
    bool distinct = true;
    for (std::size_t k = 0; k < accepted_profiles.size(); ++k) {
      DisjointnessWitness w = compare_profiles(o.profile, *accepted_profiles[k]);
      if (!w.distinct()) {
        distinct = false;
        res.skipped.push_back({o.s, "field presumed equal to accepted fiber " + std::to_string(k)});
        break;
      }
      wits.push_back({k, w});
    }
    if (!distinct) {
      ++res.summary.skipped_presumed_equal;
      continue;
    }
    ExtensionCertificate c{o.fiber->s,
                           o.fiber->t,
                           o.fiber->cubic,
                           o.fiber->disc,
                           o.fiber->sqrt_disc,
                           o.field->galois_class,
                           *o.point,
                           o.bound.bound,
                           o.bound.reductions,
                           o.bound.bound,
                           std::move(wits)};
    res.certificates.push_back(std::move(c));
    accepted_profiles.push_back(&o.profile);
  }
  res.summary.accepted = res.certificates.size();
  return res;
}

}  // namespace rankgain

#endif  // RANKGAIN_SCAN_HPP
