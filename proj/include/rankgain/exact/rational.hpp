// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef RANKGAIN_EXACT_RATIONAL_HPP
#define RANKGAIN_EXACT_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "rankgain/error.hpp"

namespace rankgain {

using Integer = mpz_class;

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator. Zero is stored as 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(int v) : q_(v) {}                       // NOLINT(google-explicit-constructor)
  Rational(long v) : q_(v) {}                      // NOLINT(google-explicit-constructor)
  Rational(long long v) : q_(Integer(std::to_string(v))) {}  // NOLINT
  Rational(const Integer& v) : q_(v) {}            // NOLINT(google-explicit-constructor)

  Rational(const Integer& num, const Integer& den) {
    if (den == 0) fail(ErrorKind::DivisionByZero, "rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }

  /// Parses "n" or "n/d" in base 10.
  static Rational parse(std::string_view text) {
    std::string s(text);
    auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return Rational(Integer(s));
      return Rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
      fail(ErrorKind::InvalidInput, "malformed rational '" + s + "'");
    }
  }

  Integer num() const { return q_.get_num(); }
  Integer den() const { return q_.get_den(); }
  const mpz_class& num_ref() const { return q_.get_num(); }
  const mpz_class& den_ref() const { return q_.get_den(); }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  /// "num/den", with "/den" omitted when the denominator is 1.
  std::string str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
  }

  double to_double() const { return q_.get_d(); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) fail(ErrorKind::DivisionByZero, "rational division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    Rational r;
    r.q_ = -a.q_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class q_;
};

inline Rational abs(const Rational& q) { return q.sign() < 0 ? -q : q; }

/// q^e for any integer e; negative exponents invert.
inline Rational pow(const Rational& q, long e) {
  if (e < 0) return Rational(1) / pow(q, -e);
  Integer n, d;
  mpz_pow_ui(n.get_mpz_t(), q.num_ref().get_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), q.den_ref().get_mpz_t(), static_cast<unsigned long>(e));
  return Rational(n, d);
}

/// Height max(|num|, den).
inline Integer height(const Rational& q) {
  Integer n = ::abs(q.num());
  return n > q.den() ? n : q.den();
}

inline std::optional<Integer> integer_sqrt_exact(const Integer& n) {
  if (n < 0) return std::nullopt;
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

/// Nonnegative rational square root when one exists.
inline std::optional<Rational> rational_is_square(const Rational& q) {
  if (q.sign() < 0) return std::nullopt;
  auto n = integer_sqrt_exact(q.num());
  if (!n) return std::nullopt;
  auto d = integer_sqrt_exact(q.den());
  if (!d) return std::nullopt;
  return Rational(*n, *d);
}

inline std::uint64_t mod_u64(const Integer& n, std::uint64_t p) {
  return mpz_fdiv_ui(n.get_mpz_t(), static_cast<unsigned long>(p));
}

inline bool divides(std::uint64_t p, const Integer& n) { return mod_u64(n, p) == 0; }

}  // namespace rankgain

#endif  // RANKGAIN_EXACT_RATIONAL_HPP
