// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef RANKGAIN_EXACT_QUOTIENT_HPP
#define RANKGAIN_EXACT_QUOTIENT_HPP

#include <utility>

#include "rankgain/error.hpp"
#include "rankgain/exact/irreducibility.hpp"
#include "rankgain/exact/unipoly.hpp"

namespace rankgain {

/// Monic modulus of Q[x]/(m), with its irreducibility decided once at
/// construction.
class Modulus {
 public:
  Modulus() : poly_(UniPoly::x()), irreducible_(true) {}

  /// Any nonconstant polynomial; it is made monic. Irreducibility is recorded
  /// only when certified.
  explicit Modulus(const UniPoly& m) : poly_(m.monic()) {
    if (m.degree() < 1) fail(ErrorKind::InvalidInput, "modulus must be nonconstant");
    irreducible_ = certify_irreducible(poly_).irreducible();
  }

  /// The modulus x, giving Q itself.
  static Modulus rationals() { return Modulus(); }

  const UniPoly& poly() const { return poly_; }
  int degree() const { return poly_.degree(); }
  bool is_field() const { return irreducible_; }

  friend bool operator==(const Modulus& a, const Modulus& b) { return a.poly_ == b.poly_; }

 private:
  UniPoly poly_;
  bool irreducible_ = false;
};

/// Residue class in Q[x]/(m). Arithmetic across different moduli is an error.
class QuotientElem {
 public:
  QuotientElem(UniPoly rep, Modulus modulus) : rep_(std::move(rep) % modulus.poly()), mod_(std::move(modulus)) {}
  QuotientElem(const Rational& c, Modulus modulus) : QuotientElem(UniPoly::constant(c), std::move(modulus)) {}

  /// Class of the variable x.
  static QuotientElem generator(const Modulus& m) { return {UniPoly::x(), m}; }

  const UniPoly& rep() const { return rep_; }
  const Modulus& modulus() const { return mod_; }
  bool is_zero() const { return rep_.is_zero(); }

  friend QuotientElem operator+(const QuotientElem& a, const QuotientElem& b) {
    check(a, b);
    return {a.rep_ + b.rep_, a.mod_};
  }
  friend QuotientElem operator-(const QuotientElem& a, const QuotientElem& b) {
    check(a, b);
    return {a.rep_ - b.rep_, a.mod_};
  }
  friend QuotientElem operator-(const QuotientElem& a) { return {-a.rep_, a.mod_}; }
  friend QuotientElem operator*(const QuotientElem& a, const QuotientElem& b) {
    check(a, b);
    return {a.rep_ * b.rep_, a.mod_};
  }
  friend QuotientElem operator*(const QuotientElem& a, const Rational& s) { return {a.rep_ * s, a.mod_}; }
  friend QuotientElem operator/(const QuotientElem& a, const QuotientElem& b);

  friend bool operator==(const QuotientElem& a, const QuotientElem& b) {
    return a.mod_ == b.mod_ && a.rep_ == b.rep_;
  }

 private:
  static void check(const QuotientElem& a, const QuotientElem& b) {
    if (!(a.mod_ == b.mod_)) fail(ErrorKind::IncompatibleModulus, "mixed-modulus arithmetic");
  }

  UniPoly rep_;
  Modulus mod_;
};

/// Inverse via the extended gcd of representative and modulus.
inline QuotientElem quotient_invert(const QuotientElem& z) {
  if (z.is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero in quotient ring");
  if (!z.modulus().is_field())
    fail(ErrorKind::ReducibleModulus, "modulus " + z.modulus().poly().str() + " is not certified irreducible");
  ExtGcd e = ext_gcd(z.rep(), z.modulus().poly());
  if (e.g.degree() != 0) fail(ErrorKind::ReducibleModulus, "representative shares a factor with the modulus");
  return {e.s, z.modulus()};
}

inline QuotientElem operator/(const QuotientElem& a, const QuotientElem& b) {
  QuotientElem::check(a, b);
  return a * quotient_invert(b);
}

}  // namespace rankgain

#endif  // RANKGAIN_EXACT_QUOTIENT_HPP
