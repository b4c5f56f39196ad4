// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef RANKGAIN_EXACT_EISENSTEIN_HPP
#define RANKGAIN_EXACT_EISENSTEIN_HPP

#include <string>

#include "rankgain/exact/rational.hpp"

namespace rankgain {

/// a + b*rho in Q(rho), rho^2 + rho + 1 = 0.
struct EisensteinInt {
  Rational a;
  Rational b;

  static EisensteinInt rho() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return a.is_zero() && b.is_zero(); }

  friend EisensteinInt operator+(const EisensteinInt& x, const EisensteinInt& y) { return {x.a + y.a, x.b + y.b}; }
  friend EisensteinInt operator-(const EisensteinInt& x, const EisensteinInt& y) { return {x.a - y.a, x.b - y.b}; }
  friend EisensteinInt operator-(const EisensteinInt& x) { return {-x.a, -x.b}; }
  // (a + b rho)(c + d rho) = ac + (ad + bc) rho + bd rho^2, rho^2 = -1 - rho
  friend EisensteinInt operator*(const EisensteinInt& x, const EisensteinInt& y) {
    Rational bd = x.b * y.b;
    return {x.a * y.a - bd, x.a * y.b + x.b * y.a - bd};
  }
  friend bool operator==(const EisensteinInt& x, const EisensteinInt& y) { return x.a == y.a && x.b == y.b; }

  std::string str() const { return a.str() + " + " + b.str() + "*rho"; }
};

inline EisensteinInt pow(const EisensteinInt& z, unsigned e) {
  EisensteinInt r{Rational(1), Rational(0)};
  EisensteinInt base = z;
  while (e > 0) {
    if (e & 1U) r = r * base;
    base = base * base;
    e >>= 1U;
  }
  return r;
}

}  // namespace rankgain

#endif  // RANKGAIN_EXACT_EISENSTEIN_HPP
