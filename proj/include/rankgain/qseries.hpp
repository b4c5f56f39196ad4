// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef RANKGAIN_QSERIES_HPP
#define RANKGAIN_QSERIES_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "rankgain/error.hpp"
#include "rankgain/exact/rational.hpp"
#include "rankgain/exact/unipoly.hpp"

namespace rankgain {

/// Truncated Laurent series sum_{e = valuation}^{order - 1} c_e q^e over Q,
/// exact modulo q^order.
class LaurentSeries {
 public:
  LaurentSeries() = default;
  LaurentSeries(int valuation, std::vector<Rational> coeffs, int order)
      : val_(valuation), order_(order), c_(std::move(coeffs)) {
    if (order_ < val_) fail(ErrorKind::InvalidInput, "order below valuation");
    c_.resize(static_cast<std::size_t>(order_ - val_));
  }

  /// Exact constant, carried to the given order.
  static LaurentSeries constant(const Rational& c, int order) {
    std::vector<Rational> v(static_cast<std::size_t>(std::max(order, 0)));
    if (!v.empty()) v[0] = c;
    return {0, std::move(v), std::max(order, 0)};
  }

  int valuation() const { return val_; }
  int order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational coeff(int e) const {
    if (e >= order_) fail(ErrorKind::InvalidInput, "coefficient q^" + std::to_string(e) + " beyond truncation");
    if (e < val_) return Rational(0);
    return c_[static_cast<std::size_t>(e - val_)];
  }

  /// Leading zeros removed; the truncation order is unchanged.
  LaurentSeries normalized() const {
    std::size_t k = 0;
    while (k < c_.size() && c_[k].is_zero()) ++k;
    if (k == c_.size()) return {order_, {}, order_};
    return {val_ + static_cast<int>(k), std::vector<Rational>(c_.begin() + static_cast<long>(k), c_.end()), order_};
  }

  LaurentSeries truncated(int order) const {
    int o = std::min(order, order_);
    if (o <= val_) return {o, {}, o};
    return {val_, std::vector<Rational>(c_.begin(), c_.begin() + (o - val_)), o};
  }

  /// Multiplication by q^m.
  LaurentSeries shifted(int m) const { return {val_ + m, c_, order_ + m}; }

  /// q -> q^k.
  LaurentSeries dilated(int k) const {
    if (k < 1) fail(ErrorKind::InvalidInput, "dilation factor must be positive");
    std::vector<Rational> v(static_cast<std::size_t>(k * (order_ - val_)));
    for (std::size_t i = 0; i < c_.size(); ++i) v[i * static_cast<std::size_t>(k)] = c_[i];
    return {k * val_, std::move(v), k * order_};
  }

  friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
    const int v = std::min(a.val_, b.val_);
    const int o = std::min(a.order_, b.order_);
    if (o <= v) return {o, {}, o};
    std::vector<Rational> c(static_cast<std::size_t>(o - v));
    for (int e = v; e < o; ++e) c[static_cast<std::size_t>(e - v)] = a.coeff(e) + b.coeff(e);
    return {v, std::move(c), o};
  }
  friend LaurentSeries operator-(const LaurentSeries& a) {
    LaurentSeries r = a;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (-b); }

  friend LaurentSeries operator+(const LaurentSeries& a, const Rational& c) {
    if (a.order_ <= 0) return a;
    return a + constant(c, a.order_);
  }
  friend LaurentSeries operator-(const LaurentSeries& a, const Rational& c) { return a + (-c); }

  friend LaurentSeries operator*(const LaurentSeries& x, const LaurentSeries& y) {
    const LaurentSeries a = x.normalized(), b = y.normalized();
    const int v = a.val_ + b.val_;
    const int o = std::min(a.val_ + b.order_, b.val_ + a.order_);
    if (o <= v) return {o, {}, o};
    std::vector<Rational> c(static_cast<std::size_t>(o - v));
    for (std::size_t i = 0; i < a.c_.size() && i < c.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size() && i + j < c.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return {v, std::move(c), o};
  }
  friend LaurentSeries operator*(const LaurentSeries& a, const Rational& s) {
    LaurentSeries r = a;
    for (auto& x : r.c_) x *= s;
    return r;
  }

  /// 1/a; needs a nonzero coefficient below the truncation order.
  LaurentSeries inverse() const {
    const LaurentSeries a = normalized();
    if (a.c_.empty() || a.c_[0].is_zero()) fail(ErrorKind::DivisionByZero, "series has no invertible leading term");
    const std::size_t n = a.c_.size();
    std::vector<Rational> inv(n);
    const Rational lead_inv = Rational(1) / a.c_[0];
    inv[0] = lead_inv;
    for (std::size_t k = 1; k < n; ++k) {
      Rational acc;
      for (std::size_t i = 1; i <= k; ++i) acc += a.c_[i] * inv[k - i];
      inv[k] = -acc * lead_inv;
    }
    return {-a.val_, std::move(inv), -a.val_ + static_cast<int>(n)};
  }

  friend bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
    if (a.order_ != b.order_) return false;
    for (int e = std::min(a.val_, b.val_); e < a.order_; ++e)
      if (a.coeff(e) != b.coeff(e)) return false;
    return true;
  }

  std::string str() const {
    std::string out;
    for (int e = val_; e < order_; ++e) {
      const Rational& c = c_[static_cast<std::size_t>(e - val_)];
      if (c.is_zero()) continue;
      if (!out.empty()) out += " + ";
      out += c.str();
      if (e != 0) out += "*q^" + std::to_string(e);
    }
    return (out.empty() ? "0" : out) + " + O(q^" + std::to_string(order_) + ")";
  }

 private:
  int val_ = 0;
  int order_ = 0;
  std::vector<Rational> c_;
};

inline LaurentSeries pow(const LaurentSeries& a, int e) {
  if (e < 0) return pow(a.inverse(), -e);
  LaurentSeries r = LaurentSeries::constant(1, a.normalized().order() - a.normalized().valuation());
  LaurentSeries base = a;
  bool first = true;
  while (e > 0) {
    if (e & 1) {
      r = first ? base : r * base;
      first = false;
    }
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return r;
}

/// prod_{n >= 1} (1 - q^n)^k modulo q^order.
inline LaurentSeries euler_pow(int k, int order) {
  if (order < 1) fail(ErrorKind::InvalidInput, "order must be >= 1");
  std::vector<Rational> c(static_cast<std::size_t>(order));
  c[0] = 1;
  const auto n_max = static_cast<std::size_t>(order);
  for (std::size_t n = 1; n < n_max; ++n) {
    for (int rep = 0; rep < std::abs(k); ++rep) {
      if (k > 0) {
        // multiply by (1 - q^n)
        for (std::size_t i = n_max; i-- > n;) c[i] -= c[i - n];
      } else {
        // multiply by 1/(1 - q^n) = 1 + q^n + q^2n + ...
        for (std::size_t i = n; i < n_max; ++i) c[i] += c[i - n];
      }
    }
  }
  return {0, std::move(c), order};
}

/// t = q^-1 prod (1 - q^n)^12 / (1 - q^3n)^12, the eta quotient (eta(z)/eta(3z))^12,
/// known through q^(order - 1).
inline LaurentSeries hauptmodul_t(int order) {
  if (order < 2) fail(ErrorKind::InvalidInput, "order must be >= 2");
  const LaurentSeries e = euler_pow(12, order + 1);
  return (e * e.dilated(3).inverse()).shifted(-1).truncated(order);
}

/// q-valuation of (eta(z)/eta(3z))^k, namely k (1 - 3) / 24.
inline Rational eta_quotient_valuation(int k) { return Rational(Integer(-2 * k), Integer(24)); }

/// 1 + 240 sum sigma_3(n) q^n.
inline LaurentSeries eisenstein_e4(int order) {
  std::vector<Rational> c(static_cast<std::size_t>(order));
  c[0] = 1;
  for (int n = 1; n < order; ++n) {
    Integer s = 0;
    for (int d = 1; d <= n; ++d)
      if (n % d == 0) s += Integer(d) * d * d;
    c[static_cast<std::size_t>(n)] = Rational(Integer(240 * s));
  }
  return {0, std::move(c), order};
}

/// Delta = q prod (1 - q^n)^24.
inline LaurentSeries modular_discriminant(int order) { return euler_pow(24, order - 1).shifted(1); }

/// j = E4^3 / Delta through q^(order - 1).
inline LaurentSeries j_series(int order) {
  if (order < 2) fail(ErrorKind::InvalidInput, "order must be >= 2");
  const LaurentSeries e4 = eisenstein_e4(order + 1);
  return (e4 * e4 * e4 * modular_discriminant(order + 2).inverse()).truncated(order);
}

struct SeriesMismatch {
  std::string check;
  int exponent = 0;
  Rational expected;
  Rational actual;
};

struct EtaIdentityReport {
  int order = 0;
  bool printed_coefficients_match = false;
  bool j_identity_match = false;
  bool closed_form_match = false;
  std::optional<SeriesMismatch> first_mismatch;
  int eta_exponent = 12;
  Rational printed_exponent_valuation;   // valuation at exponent 2
  Rational used_exponent_valuation;      // valuation at exponent 12

  bool all_pass() const { return printed_coefficients_match && j_identity_match && closed_form_match; }
};

/// q^-1 + 15 + 54q - 76q^2 - 243q^3 + 1188q^4, from exponent -1.
inline const std::vector<Rational>& printed_hauptmodul_coefficients() {
  static const std::vector<Rational> c{1, 15, 54, -76, -243, 1188};
  return c;
}

/// f = t + 27.
inline LaurentSeries shifted_hauptmodul(int order) { return hauptmodul_t(order) + Rational(27); }

/// f (f + 216)^3 / (f - 27)^3.
inline LaurentSeries j_from_hauptmodul(const LaurentSeries& f) {
  const LaurentSeries g = f + Rational(216);
  const LaurentSeries h = f - Rational(27);
  return f * pow(g, 3) * pow(h, -3);
}

/// 256 (a^4 + 54)^3 a^4 (4a^4 - 27)^3 versus f (f + 216)^3 (f - 27)^3 at f = 4a^4,
/// cross-multiplied.
inline bool closed_form_correspondence() {
  const UniPoly a4 = UniPoly::monomial(1, 4);
  const UniPoly lhs_num = Rational(256) * pow(a4 + UniPoly::constant(54), 3) * a4;
  const UniPoly lhs_den = pow(Rational(4) * a4 - UniPoly::constant(27), 3);
  const UniPoly f = UniPoly::x();
  const UniPoly rhs_num_f = f * pow(f + UniPoly::constant(216), 3);
  const UniPoly rhs_den_f = pow(f - UniPoly::constant(27), 3);
  const UniPoly sub = Rational(4) * a4;
  return lhs_num * rhs_den_f.compose(sub) == rhs_num_f.compose(sub) * lhs_den;
}

inline EtaIdentityReport verify_eta_identity(int order) {
  if (order < 6) fail(ErrorKind::InvalidInput, "order must be >= 6");
  EtaIdentityReport r;
  r.order = order;
  r.printed_exponent_valuation = eta_quotient_valuation(2);
  r.used_exponent_valuation = eta_quotient_valuation(12);

  const LaurentSeries f = shifted_hauptmodul(order);
  r.printed_coefficients_match = true;
  const auto& printed = printed_hauptmodul_coefficients();
  for (std::size_t i = 0; i < printed.size(); ++i) {
    const int e = static_cast<int>(i) - 1;
    if (f.coeff(e) != printed[i]) {
      r.printed_coefficients_match = false;
      if (!r.first_mismatch) r.first_mismatch = SeriesMismatch{"printed", e, printed[i], f.coeff(e)};
      break;
    }
  }

  const LaurentSeries composed = j_from_hauptmodul(f);
  const LaurentSeries j = j_series(order);
  r.j_identity_match = composed.order() >= order;
  for (int e = -1; e < order && r.j_identity_match; ++e) {
    if (composed.coeff(e) != j.coeff(e)) {
      r.j_identity_match = false;
      if (!r.first_mismatch) r.first_mismatch = SeriesMismatch{"j_identity", e, j.coeff(e), composed.coeff(e)};
    }
  }

  r.closed_form_match = closed_form_correspondence();
  if (!r.closed_form_match && !r.first_mismatch) r.first_mismatch = SeriesMismatch{"closed_form", 0, {}, {}};
  return r;
}

}  // namespace rankgain

#endif  // RANKGAIN_QSERIES_HPP
