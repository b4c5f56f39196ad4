// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef RANKGAIN_EXACT_MODULAR_HPP
#define RANKGAIN_EXACT_MODULAR_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "rankgain/error.hpp"
#include "rankgain/exact/rational.hpp"

namespace rankgain {

// Word-size modular helpers. Primes stay below 2^32 so every product fits in 64 bits.

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  if (bound < 2) return out;
  std::vector<bool> composite(bound + 1, false);
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return out;
}

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return (a * b) % p; }

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  base %= p;
  while (e > 0) {
    if (e & 1U) r = mul_mod(r, base, p);
    base = mul_mod(base, base, p);
    e >>= 1U;
  }
  return r;
}

inline std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) fail(ErrorKind::DivisionByZero, "inverse of 0 mod p");
  return pow_mod(a, p - 2, p);
}

/// Legendre symbol (a/p) for odd prime p, as -1, 0 or 1.
inline int legendre(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) return 0;
  return pow_mod(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

/// Image of q in Z/p; absent when p divides the denominator.
inline std::optional<std::uint64_t> reduce_mod_p(const Rational& q, std::uint64_t p) {
  std::uint64_t d = mod_u64(q.den_ref(), p);
  if (d == 0) return std::nullopt;
  return mul_mod(mod_u64(q.num_ref(), p), inv_mod(d, p), p);
}

/// Element of the prime field Z/p carrying its modulus.
class ModP {
 public:
  ModP() = default;
  ModP(std::uint64_t v, std::uint64_t p) : v_(v % p), p_(p) {}

  std::uint64_t value() const { return v_; }
  std::uint64_t prime() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  friend ModP operator+(const ModP& a, const ModP& b) { return {a.v_ + b.v_, a.p_}; }
  friend ModP operator-(const ModP& a, const ModP& b) { return {a.v_ + a.p_ - b.v_, a.p_}; }
  friend ModP operator-(const ModP& a) { return {a.p_ - a.v_, a.p_}; }
  friend ModP operator*(const ModP& a, const ModP& b) { return {mul_mod(a.v_, b.v_, a.p_), a.p_}; }
  friend ModP operator/(const ModP& a, const ModP& b) { return {mul_mod(a.v_, inv_mod(b.v_, a.p_), a.p_), a.p_}; }
  friend bool operator==(const ModP& a, const ModP& b) { return a.v_ == b.v_ && a.p_ == b.p_; }

 private:
  std::uint64_t v_ = 0;
  std::uint64_t p_ = 2;
};

}  // namespace rankgain

#endif  // RANKGAIN_EXACT_MODULAR_HPP
