// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef RANKGAIN_ERROR_HPP
#define RANKGAIN_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace rankgain {

enum class ErrorKind {
  InvalidInput,
  DivisionByZero,
  ReducibleModulus,
  IncompatibleModulus,
  ReducibleCubic,
  DegenerateCubic,
  RamifiedPrime,
  WrongClass,
  DegenerateFamily,
  SingularCurve,
  DegenerateFiber,
  RationalFiber,
  IncompatiblePoints,
  InvalidPrime,
  InvalidExponent,
  InconsistentRamification,
  NoAutomorphism,
  IdentityFailure,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "invalid-input";
    case ErrorKind::DivisionByZero: return "division-by-zero";
    case ErrorKind::ReducibleModulus: return "reducible-modulus";
    case ErrorKind::IncompatibleModulus: return "incompatible-modulus";
    case ErrorKind::ReducibleCubic: return "reducible-cubic";
    case ErrorKind::DegenerateCubic: return "degenerate-cubic";
    case ErrorKind::RamifiedPrime: return "ramified-prime";
    case ErrorKind::WrongClass: return "wrong-class";
    case ErrorKind::DegenerateFamily: return "degenerate-family";
    case ErrorKind::SingularCurve: return "singular-curve";
    case ErrorKind::DegenerateFiber: return "degenerate-fiber";
    case ErrorKind::RationalFiber: return "rational-fiber";
    case ErrorKind::IncompatiblePoints: return "incompatible-points";
    case ErrorKind::InvalidPrime: return "invalid-prime";
    case ErrorKind::InvalidExponent: return "invalid-exponent";
    case ErrorKind::InconsistentRamification: return "inconsistent-ramification";
    case ErrorKind::NoAutomorphism: return "no-automorphism";
    case ErrorKind::IdentityFailure: return "identity-failure";
  }
  return "unknown";
}

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace rankgain

#endif  // RANKGAIN_ERROR_HPP
