#pragma once

// Exact shell enumeration. A depth-first search over basis coefficients with
// per-level interval bounds taken from the LDL^T factors; every interval
// endpoint is an exact integer floor/ceil of c +- sqrt(q), so the search is
// provably complete and boundary membership is decided exactly.

#include <algorithm>
#include <future>
#include <utility>
#include <vector>

#include "latshell/lattice.hpp"

namespace latshell {

struct ShellSpec {
  Rational r2_lo;  // >= 0
  Rational r2_hi;  // >= r2_lo; closed interval on both ends
};

/// All nonzero integer coefficient vectors with squared norm in the closed
/// range, sorted lexicographically, together with their exact norms.
struct ShellResult {
  ShellSpec spec;
  std::vector<std::vector<long long>> vectors;
  std::vector<Rational> norms2;

  size_t count() const { return vectors.size(); }

  bool contains(const std::vector<long long>& x) const {
    return std::binary_search(vectors.begin(), vectors.end(), x);
  }
};

namespace detail {

/// Largest integer k with k <= m + sqrt(q), q >= 0.
inline Int floor_plus_sqrt(const Rational& m, const Rational& q) {
  Int k = rfloor(m) + rational_isqrt_floor(q);
  auto below = [&](const Int& t) {
    Rational diff = Rational(t) - m;
    if (diff <= 0) return true;
    return diff * diff <= q;
  };
  while (below(k + 1)) ++k;
  while (!below(k)) --k;
  return k;
}

/// Smallest integer k with k >= m - sqrt(q), q >= 0.
inline Int ceil_minus_sqrt(const Rational& m, const Rational& q) {
  Int k = rceil(m) - rational_isqrt_floor(q);
  auto above = [&](const Int& t) {
    Rational diff = m - Rational(t);
    if (diff <= 0) return true;
    return diff * diff <= q;
  };
  while (above(k - 1)) --k;
  while (!above(k)) ++k;
  return k;
}

struct PointHit {
  std::vector<long long> x;
  Rational norm2;

  bool operator<(const PointHit& o) const { return x < o.x; }
};

// One DFS level. `shift[j] = x[j] - center[j]` for already-assigned levels
// j > level; `partial` is the accumulated sum of D_j y_j^2.
inline void enum_level(const LDL& f, const RVec& center, int level,
                       std::vector<long long>& x, RVec& shift, const Rational& partial,
                       const Rational& lo, const Rational& hi, std::vector<PointHit>& out,
                       const Int* root_lo, const Int* root_hi) {
  const int n = static_cast<int>(f.dim());
  Rational c = 0;
  for (int j = level + 1; j < n; ++j)
    if (f.L(j, level) != 0) c += f.L(j, level) * shift[j];
  Rational q = (hi - partial) / f.D[level];
  Rational m = center[level] - c;
  Int klo = ceil_minus_sqrt(m, q);
  Int khi = floor_plus_sqrt(m, q);
  if (level == n - 1) {
    if (root_lo && klo < *root_lo) klo = *root_lo;
    if (root_hi && khi > *root_hi) khi = *root_hi;
  }
  for (Int w = klo; w <= khi; ++w) {
    Rational y = Rational(w) - m;
    Rational t2 = partial + f.D[level] * y * y;
    x[level] = w.convert_to<long long>();
    shift[level] = Rational(w) - center[level];
    if (level == 0) {
      if (t2 >= lo) out.push_back({x, t2});
    } else {
      enum_level(f, center, level - 1, x, shift, t2, lo, hi, out, root_lo, root_hi);
    }
  }
}

/// All integer x with (x - center)^T G (x - center) in [lo, hi]. The
/// top-level coordinate range may be split across workers; the merged result
/// is re-sorted, so output is identical to the serial run.
inline std::vector<PointHit> enumerate_points(const LDL& f, const RVec& center,
                                              const Rational& lo, const Rational& hi,
                                              int workers) {
  std::vector<PointHit> out;
  const int n = static_cast<int>(f.dim());
  if (n == 0 || hi < 0 || hi < lo) return out;

  int top = n - 1;
  Rational qtop = hi / f.D[top];
  Int klo = ceil_minus_sqrt(center[top], qtop);
  Int khi = floor_plus_sqrt(center[top], qtop);
  if (khi < klo) return out;

  Int span = khi - klo + 1;
  int usable = workers;
  if (usable > span) usable = span.convert_to<int>();
  if (usable <= 1) {
    std::vector<long long> x(n, 0);
    RVec shift(n, 0);
    enum_level(f, center, top, x, shift, 0, lo, hi, out, nullptr, nullptr);
  } else {
    std::vector<std::pair<Int, Int>> chunks;
    Int step = span / usable, extra = span % usable, at = klo;
    for (int i = 0; i < usable; ++i) {
      Int len = step + (i < extra ? 1 : 0);
      chunks.emplace_back(at, at + len - 1);
      at += len;
    }
    std::vector<std::future<std::vector<PointHit>>> tasks;
    for (const auto& chunk : chunks) {
      Int a = chunk.first, b = chunk.second;
      tasks.push_back(std::async(std::launch::async, [&, a, b]() {
        std::vector<PointHit> part;
        std::vector<long long> x(n, 0);
        RVec shift(n, 0);
        enum_level(f, center, top, x, shift, 0, lo, hi, part, &a, &b);
        return part;
      }));
    }
    for (auto& t : tasks) {
      auto part = t.get();
      out.insert(out.end(), std::make_move_iterator(part.begin()),
                 std::make_move_iterator(part.end()));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool is_zero_vector(const std::vector<long long>& x) {
  return std::all_of(x.begin(), x.end(), [](long long v) { return v == 0; });
}

}  // namespace detail

/// The complete set of nonzero lattice vectors with squared norm in the
/// closed range [r2_lo, r2_hi].
inline ShellResult shell_vectors(const Lattice& l, const ShellSpec& spec, int workers = 1) {
  if (spec.r2_lo < 0) throw error("shell lower bound must be non-negative");
  if (spec.r2_hi < spec.r2_lo) throw error("shell bounds out of order");
  RVec center(l.rank(), 0);
  auto hits = detail::enumerate_points(l.factor(), center, spec.r2_lo, spec.r2_hi, workers);
  ShellResult res{spec, {}, {}};
  res.vectors.reserve(hits.size());
  res.norms2.reserve(hits.size());
  for (auto& h : hits) {
    if (detail::is_zero_vector(h.x)) continue;
    res.vectors.push_back(std::move(h.x));
    res.norms2.push_back(std::move(h.norm2));
  }
  return res;
}

/// Smallest nonzero squared norm and all vectors achieving it. The search
/// radius starts at the smallest diagonal Gram entry (which always contains
/// a basis vector) and is never empty.
inline std::pair<Rational, ShellResult> minimal_vectors(const Lattice& l, int workers = 1) {
  Rational r2 = l.gram()(0, 0);
  for (size_t i = 1; i < l.rank(); ++i)
    if (l.gram()(i, i) < r2) r2 = l.gram()(i, i);
  ShellResult ball = shell_vectors(l, {Rational(0), r2}, workers);
  Rational min2 = ball.norms2[0];
  for (const Rational& n2 : ball.norms2)
    if (n2 < min2) min2 = n2;
  ShellResult res{{min2, min2}, {}, {}};
  for (size_t i = 0; i < ball.count(); ++i)
    if (ball.norms2[i] == min2) {
      res.vectors.push_back(ball.vectors[i]);
      res.norms2.push_back(ball.norms2[i]);
    }
  return {min2, std::move(res)};
}

/// Number of vectors of squared norm exactly 4; requires the packing
/// normalization min norm^2 == 4.
inline long long kissing_count(const Lattice& l, int workers = 1) {
  auto [min2, res] = minimal_vectors(l, workers);
  if (min2 != 4)
    throw error("not a unit-ball packing lattice (min norm^2 = " + to_string(min2) +
                ", expected 4)");
  return static_cast<long long>(res.count());
}

/// Card of the shell [4, r2_hi]; requires min norm^2 >= 4.
inline long long generalized_kissing_count(const Lattice& l, const Rational& r2_hi,
                                           int workers = 1) {
  auto [min2, res] = minimal_vectors(l, workers);
  if (min2 < 4)
    throw error("not a unit-ball packing lattice (min norm^2 = " + to_string(min2) +
                ", expected >= 4)");
  return static_cast<long long>(shell_vectors(l, {Rational(4), r2_hi}, workers).count());
}

/// Number of lattice vectors v with (v - center)^T G (v - center) <= r2,
/// center given in basis coefficients. Includes a center-coincident point.
inline long long ball_count(const Lattice& l, const RVec& center, const Rational& r2,
                            int workers = 1) {
  if (r2 < 0) throw error("ball radius must be non-negative");
  if (center.size() != l.rank()) throw error("center dimension mismatch");
  auto hits = detail::enumerate_points(l.factor(), center, Rational(0), r2, workers);
  return static_cast<long long>(hits.size());
}

/// Number of nonzero vectors with norm^2 <= gamma2 * (minimal norm^2).
inline long long svp_shell_count(const Lattice& l, const Rational& gamma2, int workers = 1) {
  if (gamma2 < 1) throw error("approximation factor must be >= 1");
  auto [min2, res] = minimal_vectors(l, workers);
  return static_cast<long long>(shell_vectors(l, {min2, gamma2 * min2}, workers).count());
}

}  // namespace latshell
