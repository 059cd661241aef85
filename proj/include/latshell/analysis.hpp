#pragma once

// Structural analysis of shell sets: modulo-k equivalence classes, collinear
// quadruples, minimal-vector adjacency statistics, counting identities,
// bounds and exact packing densities.

#include <array>
#include <map>
#include <set>
#include <vector>

#include "latshell/gauge.hpp"

namespace latshell {

// ---------------------------------------------------------------------------
// Modulo-k equivalence. Two lattice vectors are equivalent iff (v - v')/k is
// again a lattice vector, i.e. coordinatewise congruence of the basis
// coefficients mod k.
// ---------------------------------------------------------------------------

struct ClassPartition {
  int k = 0;
  // residue tuple (entries in [0, k)) -> indices into the source vector list;
  // the residue-zero class is kept separately: it can never meet a shell of a
  // packing lattice and callers assert it stays empty
  std::map<std::vector<int>, std::vector<size_t>> classes;
  std::vector<size_t> zero_class;
  std::map<size_t, size_t> histogram;  // class size -> number of classes

  size_t largest_class() const {
    size_t m = 0;
    for (const auto& [size, cnt] : histogram)
      if (size > m) m = size;
    return m;
  }

  size_t member_total() const {
    size_t t = 0;
    for (const auto& [size, cnt] : histogram) t += size * cnt;
    return t;
  }
};

inline ClassPartition mod_classes(const std::vector<std::vector<long long>>& vectors, int k) {
  if (k < 2) throw error("modulus must be >= 2");
  ClassPartition p;
  p.k = k;
  for (size_t i = 0; i < vectors.size(); ++i) {
    std::vector<int> residue(vectors[i].size());
    bool zero = true;
    for (size_t j = 0; j < vectors[i].size(); ++j) {
      long long r = vectors[i][j] % k;
      if (r < 0) r += k;
      residue[j] = static_cast<int>(r);
      if (r != 0) zero = false;
    }
    if (zero)
      p.zero_class.push_back(i);
    else
      p.classes[residue].push_back(i);
  }
  for (const auto& [residue, members] : p.classes) ++p.histogram[members.size()];
  return p;
}

inline ClassPartition mod_classes(const ShellResult& shell, int k) {
  return mod_classes(shell.vectors, k);
}

inline ClassPartition mod_classes(const GaugeShell& shell, int k) {
  return mod_classes(shell.coeffs, k);
}

// ---------------------------------------------------------------------------
// Collinear quadruples induced by modulo-3 pairs. For v, v' in the same
// nonzero class the four points v, (2v+v')/3, (v+2v')/3, v' are collinear
// lattice points; in a shell with outer squared radius 12 they must carry the
// norm pattern (12, 4, 4, 12) with consecutive squared gaps 4, and the two
// interior points must lie in the shell. Any violation is an error.
// ---------------------------------------------------------------------------

struct CollinearQuadruple {
  std::array<std::vector<long long>, 4> points;
  std::array<Rational, 4> norms2;
};

inline std::vector<CollinearQuadruple> collinear_quadruples(const Lattice& l,
                                                            const ShellResult& shell,
                                                            const ClassPartition& partition) {
  if (partition.k != 3) throw error("collinear quadruples require a modulo-3 partition");
  if (shell.spec.r2_hi > 12) throw error("collinear quadruples require outer radius <= 12");
  std::vector<CollinearQuadruple> out;
  auto combine = [&](const std::vector<long long>& a, const std::vector<long long>& b,
                     long long wa, long long wb) {
    std::vector<long long> r(a.size());
    for (size_t j = 0; j < a.size(); ++j) {
      long long s = wa * a[j] + wb * b[j];
      if (s % 3 != 0) throw error("modulo-3 pair with non-divisible combination");
      r[j] = s / 3;
    }
    return r;
  };
  for (const auto& [residue, members] : partition.classes) {
    for (size_t i = 0; i < members.size(); ++i)
      for (size_t j = i + 1; j < members.size(); ++j) {
        const auto& v = shell.vectors[members[i]];
        const auto& w = shell.vectors[members[j]];
        CollinearQuadruple quad;
        quad.points = {v, combine(v, w, 2, 1), combine(v, w, 1, 2), w};
        for (int t = 0; t < 4; ++t) quad.norms2[t] = l.norm2(quad.points[t]);
        bool ok = quad.norms2[0] == 12 && quad.norms2[3] == 12 && quad.norms2[1] == 4 &&
                  quad.norms2[2] == 4;
        for (int t = 0; t + 1 < 4 && ok; ++t) {
          std::vector<long long> gap(v.size());
          for (size_t c = 0; c < v.size(); ++c) gap[c] = quad.points[t][c] - quad.points[t + 1][c];
          ok = l.norm2(gap) == 4;
        }
        ok = ok && shell.contains(quad.points[1]) && shell.contains(quad.points[2]);
        if (!ok) throw error("collinear quadruple violates the norm pattern (12,4,4,12)");
        out.push_back(std::move(quad));
      }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Minimal-vector adjacency. S(v) is the set of minimal vectors at squared
// distance exactly 4 from v, t(v) its cardinality.
// ---------------------------------------------------------------------------

struct AdjacencyStats {
  std::vector<std::pair<std::vector<long long>, long long>> t_values;  // lex order
  long long t_max = 0;
  long long t_second = 0;  // max of t over S(v0) for the first v0 achieving t_max
  long long sv2_count = 0;   // unordered minimal pairs at squared distance 4
  long long triple_count = 0;  // modulo-3 classes of size 3 in the [4,12] shell
  long long kissing = 0;
};

namespace detail {

struct PairScan {
  std::vector<long long> t;
  std::vector<std::vector<size_t>> adj;
  long long sv2 = 0;
};

inline PairScan pair_scan(const Lattice& l, const std::vector<std::vector<long long>>& vecs) {
  PairScan s{std::vector<long long>(vecs.size(), 0),
             std::vector<std::vector<size_t>>(vecs.size()), 0};
  std::vector<long long> diff(vecs.empty() ? 0 : vecs[0].size());
  for (size_t i = 0; i < vecs.size(); ++i)
    for (size_t j = i + 1; j < vecs.size(); ++j) {
      for (size_t c = 0; c < diff.size(); ++c) diff[c] = vecs[i][c] - vecs[j][c];
      if (l.norm2(diff) == 4) {
        ++s.t[i];
        ++s.t[j];
        s.adj[i].push_back(j);
        s.adj[j].push_back(i);
        ++s.sv2;
      }
    }
  return s;
}

inline ShellResult require_minimal4(const Lattice& l, int workers) {
  auto [min2, mv] = minimal_vectors(l, workers);
  if (min2 != 4)
    throw error("not a unit-ball packing lattice (min norm^2 = " + to_string(min2) +
                ", expected 4)");
  return mv;
}

}  // namespace detail

inline AdjacencyStats adjacency_stats(const Lattice& l, int workers = 1) {
  ShellResult mv = detail::require_minimal4(l, workers);
  detail::PairScan scan = detail::pair_scan(l, mv.vectors);
  AdjacencyStats s;
  s.kissing = static_cast<long long>(mv.count());
  s.sv2_count = scan.sv2;
  size_t first_max = 0;
  for (size_t i = 0; i < mv.count(); ++i) {
    if (scan.t[i] > s.t_max) {
      s.t_max = scan.t[i];
      first_max = i;
    }
    s.t_values.emplace_back(mv.vectors[i], scan.t[i]);
  }
  for (size_t j : scan.adj[first_max])
    if (scan.t[j] > s.t_second) s.t_second = scan.t[j];

  ShellResult shell12 = shell_vectors(l, {Rational(4), Rational(12)}, workers);
  ClassPartition classes = mod_classes(shell12, 3);
  auto it = classes.histogram.find(3);
  s.triple_count = it == classes.histogram.end() ? 0 : static_cast<long long>(it->second);
  return s;
}

/// 3^n - 1 + kappa^2 / 9, the shell-cardinality bound in terms of the
/// kissing number, as an exact rational.
inline Rational shell_bound_from_kissing(int n, long long kappa) {
  if (n < 1) throw error("dimension must be >= 1");
  if (kappa < 0) throw error("kissing number must be >= 0");
  Int p = boost::multiprecision::pow(Int(3), static_cast<unsigned>(n));
  return Rational(p - 1) + Rational(Int(kappa) * Int(kappa), 9);
}

/// Blichfeldt-style density bound (kappa + 1) / 2^n.
inline Rational blichfeldt_density_bound(long long kappa, int n) {
  return Rational(Int(kappa) + 1, boost::multiprecision::pow(Int(2), static_cast<unsigned>(n)));
}

// ---------------------------------------------------------------------------
// Packing density: body volume / covolume, covolume = sqrt(det Gram) taken
// exactly. When the determinant is not a rational square the squared density
// vol^2 / det is reported with exact == false.
// ---------------------------------------------------------------------------

struct DensityResult {
  bool exact;
  Rational value;
};

inline DensityResult density(const Lattice& l, const Rational& body_volume) {
  Rational d = det(l.gram());
  if (is_perfect_square(rat_num(d)) && is_perfect_square(rat_den(d)))
    return {true, body_volume / rational_sqrt_exact(d)};
  return {false, body_volume * body_volume / d};
}

// ---------------------------------------------------------------------------
// The triple/pair counting identity: the number of mutually equivalent
// triples in the [4,12] shell equals one third of the number of SV2 pairs,
// and every SV2 pair arises in exactly two triples.
// ---------------------------------------------------------------------------

struct TriplePairReport {
  long long triple_count = 0;
  long long sv2_count = 0;
  long long sum_t = 0;
  bool ratio_ok = false;       // triple_count == sv2_count / 3
  bool half_sum_ok = false;    // sv2_count == sum_t / 2
  bool incidence_ok = false;   // every SV2 pair lies in exactly two triples
  bool pass = false;
};

inline TriplePairReport triple_pair_identity(const Lattice& l, int workers = 1) {
  TriplePairReport rep;
  ShellResult mv = detail::require_minimal4(l, workers);
  detail::PairScan scan = detail::pair_scan(l, mv.vectors);
  rep.sv2_count = scan.sv2;
  for (long long t : scan.t) rep.sum_t += t;
  rep.half_sum_ok = rep.sum_t == 2 * rep.sv2_count;

  std::set<std::pair<std::vector<long long>, std::vector<long long>>> sv2;
  for (size_t i = 0; i < mv.count(); ++i)
    for (size_t j : scan.adj[i])
      if (i < j) sv2.insert({mv.vectors[i], mv.vectors[j]});

  // incidence of SV2 pairs in the six-interior-point configuration of each
  // mutually equivalent triple
  ShellResult shell12 = shell_vectors(l, {Rational(4), Rational(12)}, workers);
  ClassPartition classes = mod_classes(shell12, 3);
  auto it = classes.histogram.find(3);
  rep.triple_count = it == classes.histogram.end() ? 0 : static_cast<long long>(it->second);
  rep.ratio_ok = 3 * rep.triple_count == rep.sv2_count;

  std::map<std::pair<std::vector<long long>, std::vector<long long>>, long long> incidence;
  bool structure_ok = true;
  for (const auto& [residue, members] : classes.classes) {
    if (members.size() != 3) continue;
    std::vector<std::vector<long long>> mids;
    std::vector<bool> minimal;
    for (size_t a = 0; a < 3; ++a)
      for (size_t b = 0; b < 3; ++b) {
        if (a == b) continue;
        const auto& va = shell12.vectors[members[a]];
        const auto& vb = shell12.vectors[members[b]];
        std::vector<long long> mid(va.size());
        for (size_t c = 0; c < va.size(); ++c) {
          long long s = 2 * va[c] + vb[c];
          if (s % 3 != 0) structure_ok = false;
          mid[c] = s / 3;
        }
        minimal.push_back(l.norm2(mid) == 4);
        mids.push_back(std::move(mid));
      }
    long long pairs_here = 0;
    std::vector<long long> diff(l.rank());
    for (size_t a = 0; a < mids.size(); ++a)
      for (size_t b = a + 1; b < mids.size(); ++b) {
        if (!minimal[a] || !minimal[b]) continue;
        for (size_t c = 0; c < diff.size(); ++c) diff[c] = mids[a][c] - mids[b][c];
        if (l.norm2(diff) != 4) continue;
        auto key = mids[a] < mids[b] ? std::make_pair(mids[a], mids[b])
                                     : std::make_pair(mids[b], mids[a]);
        ++incidence[key];
        ++pairs_here;
      }
    if (pairs_here != 6) structure_ok = false;  // each triple carries six SV2 pairs
  }
  rep.incidence_ok = structure_ok && incidence.size() == sv2.size();
  if (rep.incidence_ok)
    for (const auto& [pair, cnt] : incidence)
      if (cnt != 2 || !sv2.count(pair)) {
        rep.incidence_ok = false;
        break;
      }
  rep.pass = rep.ratio_ok && rep.half_sum_ok && rep.incidence_ok;
  return rep;
}

// ---------------------------------------------------------------------------
// Cross-polytope shell structure: coordinatewise products of distinct
// non-antipodal modulo-2 equivalent gauge-shell vectors vanish, and a
// midpoint shared by two distinct pairs has all coordinates of absolute
// value 1/2.
// ---------------------------------------------------------------------------

struct OrthogonalityReport {
  bool pass = true;
  long long pairs_checked = 0;
  std::vector<long long> witness_a, witness_b;  // first failing pair, if any
};

inline OrthogonalityReport mod2_orthogonality(const Lattice& l, const Gauge& g, int workers = 1) {
  GaugeShell shell = gauge_shell(l, g, workers);
  ClassPartition classes = mod_classes(shell, 2);
  OrthogonalityReport rep;
  for (const auto& [residue, members] : classes.classes)
    for (size_t i = 0; i < members.size(); ++i)
      for (size_t j = i + 1; j < members.size(); ++j) {
        const auto& a = shell.coeffs[members[i]];
        const auto& b = shell.coeffs[members[j]];
        bool antipodal = true;
        for (size_t c = 0; c < a.size() && antipodal; ++c) antipodal = a[c] == -b[c];
        if (antipodal) continue;
        ++rep.pairs_checked;
        const QVec& pa = shell.ambient[members[i]];
        const QVec& pb = shell.ambient[members[j]];
        for (size_t c = 0; c < pa.size(); ++c)
          if (!(pa[c] * pb[c]).is_zero()) {
            if (rep.pass) {
              rep.pass = false;
              rep.witness_a = a;
              rep.witness_b = b;
            }
          }
      }
  return rep;
}

/// Checks that whenever two modulo-2 pairs of the gauge shell with no vector
/// in common (up to sign) have the same midpoint, that midpoint has all
/// coordinates of absolute value 1/2. Returns {property holds, number of
/// shared midpoints seen} so callers can assert non-vacuity.
inline std::pair<bool, long long> shared_midpoints_are_half(const Lattice& l, const Gauge& g,
                                                            int workers = 1) {
  GaugeShell shell = gauge_shell(l, g, workers);
  ClassPartition classes = mod_classes(shell, 2);
  const QuadScalar half(Rational(1, 2));
  // midpoint (in coefficient space, doubled to stay integral) -> pair list
  std::map<std::vector<long long>, std::vector<std::pair<size_t, size_t>>> by_midpoint;
  for (const auto& [residue, members] : classes.classes)
    for (size_t i = 0; i < members.size(); ++i)
      for (size_t j = i + 1; j < members.size(); ++j) {
        const auto& a = shell.coeffs[members[i]];
        const auto& b = shell.coeffs[members[j]];
        std::vector<long long> doubled(a.size());
        bool antipodal = true;
        for (size_t c = 0; c < a.size(); ++c) {
          doubled[c] = a[c] + b[c];
          if (doubled[c] != 0) antipodal = false;
        }
        if (antipodal) continue;
        by_midpoint[doubled].push_back({members[i], members[j]});
      }

  auto same_up_to_sign = [&](size_t x, size_t y) {
    if (shell.coeffs[x] == shell.coeffs[y]) return true;
    for (size_t c = 0; c < shell.coeffs[x].size(); ++c)
      if (shell.coeffs[x][c] != -shell.coeffs[y][c]) return false;
    return true;
  };

  long long shared = 0;
  for (const auto& [doubled, pairs] : by_midpoint) {
    bool disjoint_pairs = false;
    for (size_t p = 0; p < pairs.size() && !disjoint_pairs; ++p)
      for (size_t q = p + 1; q < pairs.size() && !disjoint_pairs; ++q) {
        auto [a1, a2] = pairs[p];
        auto [b1, b2] = pairs[q];
        disjoint_pairs = !same_up_to_sign(a1, b1) && !same_up_to_sign(a1, b2) &&
                         !same_up_to_sign(a2, b1) && !same_up_to_sign(a2, b2);
      }
    if (!disjoint_pairs) continue;
    ++shared;
    // ambient midpoint of the first pair
    const QVec& pa = shell.ambient[pairs[0].first];
    const QVec& pb = shell.ambient[pairs[0].second];
    for (size_t c = 0; c < pa.size(); ++c) {
      QuadScalar m = (pa[c] + pb[c]) * half;
      if (quad_cmp(quad_abs(m), half) != 0) return {false, shared};
    }
  }
  return {true, shared};
}

}  // namespace latshell
