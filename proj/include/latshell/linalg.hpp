#pragma once

// Exact vectors and matrices over QuadScalar / Rational, Gram matrices,
// LDL^T factorization and determinants. Everything is a plain value type.

#include <optional>
#include <vector>

#include "latshell/scalar.hpp"

namespace latshell {

using QVec = std::vector<QuadScalar>;
using RVec = std::vector<Rational>;

template <class T>
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(size_t rows, size_t cols, const T& fill = T())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Mat identity(size_t n) {
    Mat m(n, n, T(0));
    for (size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static Mat from_rows(const std::vector<std::vector<T>>& rows) {
    if (rows.empty()) return Mat();
    Mat m(rows.size(), rows[0].size());
    for (size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw error("ragged matrix rows");
      for (size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  T& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> row(size_t i) const {
    return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }

  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = i + 1; j < cols_; ++j)
        if (!((*this)(i, j) == (*this)(j, i))) return false;
    return true;
  }

  friend bool operator==(const Mat& x, const Mat& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.data_ == y.data_;
  }

 private:
  size_t rows_, cols_;
  std::vector<T> data_;
};

using QMat = Mat<QuadScalar>;
using RMat = Mat<Rational>;

inline QMat to_qmat(const RMat& m) {
  QMat q(m.rows(), m.cols());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) q(i, j) = QuadScalar(m(i, j));
  return q;
}

inline QuadScalar dot(const QVec& x, const QVec& y) {
  if (x.size() != y.size()) throw error("dimension mismatch");
  QuadScalar s;
  for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

/// Gram matrix of basis rows. All pairwise inner products must be pure
/// rational; dependent rows are rejected.
inline RMat gram_of_basis(const QMat& basis);

// ---------------------------------------------------------------------------
// LDL^T factorization: G = L * diag(D) * L^T with L unit lower triangular.
// Succeeding is the positive-definiteness witness used everywhere else.
// ---------------------------------------------------------------------------

struct LDL {
  RMat L;  // unit lower triangular
  RVec D;  // strictly positive pivots

  size_t dim() const { return D.size(); }
};

inline LDL ldl(const RMat& gram) {
  if (!gram.is_symmetric()) throw error("ldl requires a symmetric matrix");
  size_t n = gram.rows();
  LDL f{RMat::identity(n), RVec(n, 0)};
  for (size_t j = 0; j < n; ++j) {
    Rational d = gram(j, j);
    for (size_t k = 0; k < j; ++k) d -= f.L(j, k) * f.L(j, k) * f.D[k];
    if (d <= 0) throw error("not positive definite (index " + std::to_string(j) + ")");
    f.D[j] = d;
    for (size_t i = j + 1; i < n; ++i) {
      Rational s = gram(i, j);
      for (size_t k = 0; k < j; ++k) s -= f.L(i, k) * f.L(j, k) * f.D[k];
      f.L(i, j) = s / d;
    }
  }
  return f;
}

inline RMat gram_of_basis(const QMat& basis) {
  size_t n = basis.rows();
  RMat g(n, n);
  for (size_t i = 0; i < n; ++i) {
    QVec ri = basis.row(i);
    for (size_t j = i; j < n; ++j) {
      QuadScalar p = dot(ri, basis.row(j));
      if (!p.is_rational())
        throw error("non-rational Gram entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
      g(i, j) = g(j, i) = p.rational();
    }
  }
  // a Gram of real rows is positive semidefinite, so a failed pivot can
  // only mean linear dependence
  try {
    ldl(g);
  } catch (const error&) {
    throw error("rank deficient");
  }
  return g;
}

inline bool ldl_reconstructs(const LDL& f, const RMat& gram) {
  size_t n = f.dim();
  if (gram.rows() != n || gram.cols() != n) return false;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j <= i; ++j) {
      Rational s = 0;
      for (size_t k = 0; k <= j; ++k) s += f.L(i, k) * f.L(j, k) * f.D[k];
      if (s != gram(i, j)) return false;
    }
  return true;
}

/// The quadratic form x^T G x for an integer coefficient vector.
inline Rational gram_norm2(const RMat& gram, const std::vector<long long>& x) {
  size_t n = gram.rows();
  Rational s = 0;
  for (size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    s += gram(i, i) * x[i] * x[i];
    for (size_t j = i + 1; j < n; ++j)
      if (x[j] != 0) s += 2 * gram(i, j) * x[i] * x[j];
  }
  return s;
}

// ---------------------------------------------------------------------------
// Determinants. Rational matrices go through fraction-free (Bareiss)
// elimination after clearing denominators; QuadScalar matrices use plain
// field elimination (only needed for small coordinate bases).
// ---------------------------------------------------------------------------

inline Rational det(const RMat& m) {
  if (m.rows() != m.cols()) throw error("determinant of non-square matrix");
  size_t n = m.rows();
  if (n == 0) return 1;

  // clear denominators row by row
  std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
  Rational scale = 1;
  for (size_t i = 0; i < n; ++i) {
    Int l = 1;
    for (size_t j = 0; j < n; ++j) l = boost::multiprecision::lcm(l, rat_den(m(i, j)));
    scale *= Rational(l);
    for (size_t j = 0; j < n; ++j) {
      Rational v = m(i, j) * l;
      a[i][j] = rat_num(v);
    }
  }

  // Bareiss one-step fraction-free elimination
  int sign = 1;
  Int prev = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return Rational(sign * a[n - 1][n - 1]) / scale;
}

inline QuadScalar det(const QMat& m) {
  if (m.rows() != m.cols()) throw error("determinant of non-square matrix");
  size_t n = m.rows();
  QMat a = m;
  QuadScalar result(1);
  for (size_t k = 0; k < n; ++k) {
    size_t p = k;
    while (p < n && a(p, k).is_zero()) ++p;
    if (p == n) return QuadScalar(0);
    if (p != k) {
      for (size_t j = 0; j < n; ++j) std::swap(a(p, j), a(k, j));
      result = -result;
    }
    result *= a(k, k);
    for (size_t i = k + 1; i < n; ++i) {
      QuadScalar f = a(i, k) / a(k, k);
      for (size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return result;
}

}  // namespace latshell
