#pragma once

// shared helpers for the suites: seeded random PD Gram matrices and
// conversion to the oracle's plain Gram representation

#include <random>

#include "latshell/lattice.hpp"
#include "latshell/oracle.hpp"

namespace latshell::testutil {

/// Random positive-definite rational Gram: G = M^T M / q with M a small
/// nonsingular integer matrix, so entries stay within [-5, 5].
inline RMat random_gram(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> entry(-1, 1), denom(1, 3);
  while (true) {
    std::vector<std::vector<int>> m(n, std::vector<int>(n));
    for (auto& row : m)
      for (auto& v : row) v = entry(rng);
    RMat g(n, n);
    Rational q(denom(rng));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Rational s = 0;
        for (int k = 0; k < n; ++k) s += m[k][i] * m[k][j];
        g(i, j) = s / q;
      }
    try {
      ldl(g);
      return g;
    } catch (const error&) {
      // singular draw, try again
    }
  }
}

inline oracle::Gram to_oracle_gram(const RMat& g) {
  oracle::Gram out(g.rows(), std::vector<Rational>(g.cols()));
  for (size_t i = 0; i < g.rows(); ++i)
    for (size_t j = 0; j < g.cols(); ++j) out[i][j] = g(i, j);
  return out;
}

}  // namespace latshell::testutil
