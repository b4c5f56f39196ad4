#ifndef RANKGAIN_TEST_ORACLES_HPP
#define RANKGAIN_TEST_ORACLES_HPP

// Slow, independent reference computations used only by the tests.

#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

#include "rankgain/exact/unipoly.hpp"

namespace oracle {

using rankgain::Rational;
using rankgain::UniPoly;

inline bool is_square_long(long n) {
  if (n < 0) return false;
  long r = static_cast<long>(std::llround(std::sqrt(static_cast<double>(n))));
  for (long c = r - 2; c <= r + 2; ++c)
    if (c >= 0 && c * c == n) return true;
  return false;
}

/// Determinant of the Sylvester matrix by Gaussian elimination.
inline Rational sylvester_resultant(const UniPoly& a, const UniPoly& b) {
  const int m = a.degree(), n = b.degree();
  const int size = m + n;
  std::vector<std::vector<Rational>> s(static_cast<std::size_t>(size), std::vector<Rational>(static_cast<std::size_t>(size)));
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= m; ++i) s[r][r + i] = a.coeff(m - i);
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i) s[n + r][r + i] = b.coeff(n - i);
  Rational det(1);
  for (int col = 0; col < size; ++col) {
    int piv = -1;
    for (int r = col; r < size; ++r)
      if (!s[r][col].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) return Rational(0);
    if (piv != col) {
      std::swap(s[piv], s[col]);
      det = -det;
    }
    det *= s[col][col];
    for (int r = col + 1; r < size; ++r) {
      if (s[r][col].is_zero()) continue;
      Rational f = s[r][col] / s[col][col];
      for (int c = col; c < size; ++c) s[r][c] -= f * s[col][c];
    }
  }
  return det;
}

/// Remainder of a by b over F_p, b monic. Coefficients lowest degree first.
inline std::vector<std::uint64_t> rem_mod(std::vector<std::uint64_t> a, const std::vector<std::uint64_t>& b,
                                          std::uint64_t p) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db && !a.empty()) {
    std::uint64_t lead = a.back() % p;
    std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] = (a[shift + i] + (p - lead) * b[i]) % p;
    a.pop_back();
  }
  while (!a.empty() && a.back() % p == 0) a.pop_back();
  return a;
}

/// f monic of degree >= 1 over F_p is irreducible iff no monic factor of
/// degree 1..deg/2 divides it.
inline bool irreducible_by_search(const std::vector<std::uint64_t>& f, std::uint64_t p) {
  const int deg = static_cast<int>(f.size()) - 1;
  for (int d = 1; 2 * d <= deg; ++d) {
    std::vector<std::uint64_t> g(static_cast<std::size_t>(d) + 1, 0);
    g.back() = 1;
    bool found = false;
    std::function<void(int)> rec = [&](int i) {
      if (found) return;
      if (i == d) {
        if (rem_mod(f, g, p).empty()) found = true;
        return;
      }
      for (std::uint64_t v = 0; v < p; ++v) {
        g[static_cast<std::size_t>(i)] = v;
        rec(i + 1);
      }
    };
    rec(0);
    if (found) return false;
  }
  return true;
}

/// Number of roots of f (rational, p-integral) in F_p by direct evaluation.
inline int roots_mod_p(const UniPoly& f, std::uint64_t p) {
  int count = 0;
  for (std::uint64_t x = 0; x < p; ++x) {
    Rational v = f(Rational(static_cast<long>(x)));
    if (rankgain::divides(p, v.num())) ++count;
  }
  return count;
}

/// Coefficients of prod_{n>=1} (1 - q^n)^k up to q^(order-1), by expanding
/// each factor with the binomial series.
inline std::vector<Rational> euler_product(int k, int order) {
  std::vector<Rational> acc(static_cast<std::size_t>(order));
  acc[0] = Rational(1);
  for (int n = 1; n < order; ++n) {
    // (1 - q^n)^k = sum_j C(k, j) (-1)^j q^(nj), generalized binomial for k < 0.
    std::vector<Rational> factor(static_cast<std::size_t>(order));
    Rational binom(1);
    for (int j = 0; n * j < order; ++j) {
      factor[static_cast<std::size_t>(n * j)] = (j % 2 == 0) ? binom : -binom;
      binom = binom * Rational(static_cast<long>(k - j)) / Rational(static_cast<long>(j + 1));
    }
    std::vector<Rational> next(static_cast<std::size_t>(order));
    for (int i = 0; i < order; ++i)
      for (int j = 0; i + j < order; ++j) next[i + j] += acc[i] * factor[j];
    acc = std::move(next);
  }
  return acc;
}

}  // namespace oracle

#endif  // RANKGAIN_TEST_ORACLES_HPP
