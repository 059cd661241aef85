#pragma once

// Independent brute-force oracles for the test suite. These deliberately
// share nothing with the production kernels except the scalar layer: the
// Gram matrix is a plain nested vector, the coordinate bounds come from the
// inverse Gram computed here by Gauss-Jordan elimination, and norms are
// evaluated by the double loop straight from the definition.

#include <algorithm>
#include <utility>
#include <vector>

#include "latshell/scalar.hpp"

namespace latshell::oracle {

using Gram = std::vector<std::vector<Rational>>;

namespace detail {

inline Gram invert(const Gram& g) {
  size_t n = g.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n, 0));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) a[i][j] = g[i][j];
    a[i][n + i] = 1;
  }
  for (size_t k = 0; k < n; ++k) {
    size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) throw error("singular Gram matrix");
    std::swap(a[k], a[p]);
    Rational piv = a[k][k];
    for (size_t j = 0; j < 2 * n; ++j) a[k][j] /= piv;
    for (size_t i = 0; i < n; ++i) {
      if (i == k || a[i][k] == 0) continue;
      Rational f = a[i][k];
      for (size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  Gram inv(n, std::vector<Rational>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

inline Rational norm2(const Gram& g, const std::vector<long long>& x) {
  Rational s = 0;
  for (size_t i = 0; i < g.size(); ++i)
    for (size_t j = 0; j < g.size(); ++j) s += g[i][j] * x[i] * x[j];
  return s;
}

}  // namespace detail

/// All nonzero integer vectors with x^T G x in [r2_lo, r2_hi], found by
/// scanning the full box |x_i| <= B_i with B_i^2 <= r2_hi * (G^-1)_ii; the
/// bound is certified by Cauchy-Schwarz in the G-inner product, so the scan
/// is complete. Output is sorted lexicographically.
inline std::vector<std::pair<std::vector<long long>, Rational>> box_shell(const Gram& gram,
                                                                          const Rational& r2_lo,
                                                                          const Rational& r2_hi) {
  size_t n = gram.size();
  std::vector<std::pair<std::vector<long long>, Rational>> out;
  if (n == 0 || r2_hi < r2_lo) return out;
  Gram inv = detail::invert(gram);
  std::vector<long long> bound(n);
  for (size_t i = 0; i < n; ++i)
    bound[i] = rational_isqrt_floor(r2_hi * inv[i][i]).convert_to<long long>();

  std::vector<long long> x(n);
  for (size_t i = 0; i < n; ++i) x[i] = -bound[i];
  while (true) {
    bool zero = std::all_of(x.begin(), x.end(), [](long long v) { return v == 0; });
    if (!zero) {
      Rational n2 = detail::norm2(gram, x);
      if (n2 >= r2_lo && n2 <= r2_hi) out.emplace_back(x, n2);
    }
    size_t level = n;
    while (level > 0 && x[level - 1] == bound[level - 1]) {
      x[level - 1] = -bound[level - 1];
      --level;
    }
    if (level == 0) break;
    ++x[level - 1];
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Number of unordered pairs of minimal vectors at squared distance exactly
/// the minimal norm itself (both lengths assumed minimal by the caller).
inline long long naive_pair_scan(const std::vector<std::vector<long long>>& minimal,
                                 const Gram& gram, const Rational& dist2 = Rational(4)) {
  long long pairs = 0;
  for (size_t i = 0; i < minimal.size(); ++i)
    for (size_t j = i + 1; j < minimal.size(); ++j) {
      std::vector<long long> diff(minimal[i].size());
      for (size_t c = 0; c < diff.size(); ++c) diff[c] = minimal[i][c] - minimal[j][c];
      if (detail::norm2(gram, diff) == dist2) ++pairs;
    }
  return pairs;
}

/// Number of unordered triples of shell vectors that are mutually modulo-k
/// equivalent, by the literal cubic scan.
inline long long naive_triple_scan(const std::vector<std::vector<long long>>& shell, int k = 3) {
  auto equivalent = [k](const std::vector<long long>& a, const std::vector<long long>& b) {
    for (size_t c = 0; c < a.size(); ++c)
      if ((a[c] - b[c]) % k != 0) return false;
    return true;
  };
  long long triples = 0;
  for (size_t i = 0; i < shell.size(); ++i)
    for (size_t j = i + 1; j < shell.size(); ++j) {
      if (!equivalent(shell[i], shell[j])) continue;
      for (size_t l = j + 1; l < shell.size(); ++l)
        if (equivalent(shell[i], shell[l]) && equivalent(shell[j], shell[l])) ++triples;
    }
  return triples;
}

}  // namespace latshell::oracle
