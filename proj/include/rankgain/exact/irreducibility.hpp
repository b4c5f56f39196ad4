// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef RANKGAIN_EXACT_IRREDUCIBILITY_HPP
#define RANKGAIN_EXACT_IRREDUCIBILITY_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "rankgain/exact/modpoly.hpp"
#include "rankgain/exact/unipoly.hpp"

namespace rankgain {

enum class Irreducibility { Irreducible, Reducible, Unknown };

struct IrreducibilityVerdict {
  Irreducibility verdict;
  std::optional<std::uint64_t> witness_prime;  // set when a mod-p witness decided it

  bool irreducible() const { return verdict == Irreducibility::Irreducible; }
};

inline constexpr std::uint64_t kDefaultWitnessPrimeBound = 200;

/// Irreducibility over Q. Degree <= 3 is decided by rational roots. Higher
/// degree is certified only by a prime p <= prime_bound, p not dividing the
/// leading coefficient of the primitive integer form, with f irreducible mod p;
/// otherwise the answer is Unknown.
inline IrreducibilityVerdict certify_irreducible(const UniPoly& f,
                                                 std::uint64_t prime_bound = kDefaultWitnessPrimeBound) {
  const int n = f.degree();
  if (n <= 0) return {Irreducibility::Reducible, std::nullopt};
  if (n == 1) return {Irreducibility::Irreducible, std::nullopt};
  if (!rational_roots(f).empty()) return {Irreducibility::Reducible, std::nullopt};
  if (n <= 3) return {Irreducibility::Irreducible, std::nullopt};
  if (gcd(f, f.derivative()).degree() > 0) return {Irreducibility::Reducible, std::nullopt};

  std::vector<Integer> a = integer_primitive(f);
  for (std::uint64_t p : primes_up_to(prime_bound)) {
    if (divides(p, a.back())) continue;
    std::vector<std::uint64_t> c;
    c.reserve(a.size());
    for (const auto& v : a) c.push_back(mod_u64(v, p));
    if (irreducible_mod_p(ModPoly(std::move(c), p))) return {Irreducibility::Irreducible, p};
  }
  return {Irreducibility::Unknown, std::nullopt};
}

}  // namespace rankgain

#endif  // RANKGAIN_EXACT_IRREDUCIBILITY_HPP
