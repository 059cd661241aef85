#pragma once

// Minkowski gauges for the supported convex bodies and gauge-based kissing
// counts. Candidate vectors come from a certified Euclidean outer bound
// (||v||_2^2 <= outer2 * gauge(v)^2 for all v), then an exact gauge filter
// decides membership; no tolerances anywhere.

#include <map>
#include <string>
#include <vector>

#include "latshell/enumerate.hpp"

namespace latshell {

class Gauge {
 public:
  enum class Kind { euclidean, cross_polytope, cuboctahedron, facet_max };

  /// Euclidean gauge; values are returned *squared* (sqrt of a rational is
  /// not representable), so thresholds must be squared by the caller.
  static Gauge euclidean() { return Gauge(Kind::euclidean, 0, {}, 1); }

  /// l1 gauge of the n-dimensional cross-polytope; ||v||_2 <= ||v||_1.
  static Gauge cross_polytope(int n) { return Gauge(Kind::cross_polytope, n, {}, 1); }

  /// Gauge of {|v1|+|v2|+|v3| <= 2, |vi| <= 1}: max(||v||_inf, ||v||_1 / 2).
  /// ||v||_2^2 <= ||v||_inf * ||v||_1 <= 2 * gauge(v)^2.
  static Gauge cuboctahedron() { return Gauge(Kind::cuboctahedron, 3, {}, 2); }

  /// max_j |f_j . v| over the given facet functionals; outer2 must satisfy
  /// ||v||_2^2 <= outer2 * gauge(v)^2 and is the caller's responsibility
  /// (it is still spot-checked on every enumerated candidate).
  static Gauge facet_max(std::vector<QVec> facets, const Rational& outer2) {
    if (facets.empty()) throw error("facet gauge needs at least one functional");
    int dim = static_cast<int>(facets[0].size());
    return Gauge(Kind::facet_max, dim, std::move(facets), outer2);
  }

  Kind kind() const { return kind_; }
  int dim() const { return dim_; }
  const Rational& outer2() const { return outer2_; }
  bool returns_squared() const { return kind_ == Kind::euclidean; }

  QuadScalar value(const QVec& v) const {
    switch (kind_) {
      case Kind::euclidean: {
        QuadScalar s;
        for (const auto& c : v) s += c * c;
        return s;  // squared
      }
      case Kind::cross_polytope: {
        if (static_cast<int>(v.size()) != dim_) throw error("gauge dimension mismatch");
        QuadScalar s;
        for (const auto& c : v) s += quad_abs(c);
        return s;
      }
      case Kind::cuboctahedron: {
        if (v.size() != 3) throw error("gauge dimension mismatch");
        QuadScalar linf, l1;
        for (const auto& c : v) {
          QuadScalar a = quad_abs(c);
          l1 += a;
          if (quad_cmp(a, linf) > 0) linf = a;
        }
        QuadScalar half_l1 = l1 * QuadScalar(Rational(1, 2));
        return quad_cmp(linf, half_l1) >= 0 ? linf : half_l1;
      }
      case Kind::facet_max: {
        QuadScalar best;
        for (const auto& f : facets_) {
          QuadScalar a = quad_abs(dot(f, v));
          if (quad_cmp(a, best) > 0) best = a;
        }
        return best;
      }
    }
    throw error("unreachable");
  }

 private:
  Gauge(Kind k, int dim, std::vector<QVec> facets, Rational outer2)
      : kind_(k), dim_(dim), facets_(std::move(facets)), outer2_(std::move(outer2)) {}

  Kind kind_;
  int dim_;
  std::vector<QVec> facets_;
  Rational outer2_;
};

inline QuadScalar gauge_value(const Gauge& g, const QVec& v) { return g.value(v); }

/// Coefficient vectors and ambient points of all lattice vectors with gauge
/// exactly 2, plus the packing verdict (no nonzero vector of gauge < 2).
struct GaugeShell {
  std::vector<std::vector<long long>> coeffs;  // lex sorted
  std::vector<QVec> ambient;                   // parallel to coeffs
  std::vector<Rational> norms2;                // Euclidean, parallel
  bool packing_ok = true;
  std::vector<long long> witness;  // a gauge < 2 vector when !packing_ok
};

namespace detail {

inline GaugeShell analyze_gauge(const Lattice& l, const Gauge& g, int workers) {
  if (g.kind() != Gauge::Kind::euclidean && !l.has_coords())
    throw error("gauge operations need ambient coordinates ('" + l.name() + "' is Gram-only)");
  GaugeShell out;
  ShellResult cand = shell_vectors(l, {Rational(0), g.outer2() * 4}, workers);
  const QuadScalar two(Rational(2));
  for (size_t i = 0; i < cand.count(); ++i) {
    int cmp;
    QVec p;
    if (g.kind() == Gauge::Kind::euclidean) {
      cmp = sign_of(Rational(cand.norms2[i] - 4));  // squared threshold
      if (cmp == 0 && l.has_coords()) p = l.ambient(cand.vectors[i]);
    } else {
      p = l.ambient(cand.vectors[i]);
      QuadScalar gv = g.value(p);
      // outer-bound certificate holds on every candidate
      QuadScalar slack = QuadScalar(g.outer2()) * gv * gv - QuadScalar(cand.norms2[i]);
      if (slack.sign() < 0) throw error("outer bound certificate violated for gauge");
      cmp = quad_cmp(gv, two);
    }
    if (cmp == 0) {
      out.coeffs.push_back(cand.vectors[i]);
      out.ambient.push_back(std::move(p));
      out.norms2.push_back(cand.norms2[i]);
    } else if (cmp < 0 && out.packing_ok) {
      out.packing_ok = false;
      out.witness = cand.vectors[i];
    }
  }
  return out;
}

}  // namespace detail

inline GaugeShell gauge_shell(const Lattice& l, const Gauge& g, int workers = 1) {
  return detail::analyze_gauge(l, g, workers);
}

struct PackingCheck {
  bool ok;
  std::vector<long long> witness;  // empty when ok
};

/// True iff every nonzero lattice vector has gauge >= 2; on failure the
/// witness is the lexicographically first offending vector.
inline PackingCheck is_packing_lattice(const Lattice& l, const Gauge& g, int workers = 1) {
  GaugeShell s = detail::analyze_gauge(l, g, workers);
  return {s.packing_ok, s.witness};
}

/// Count of gauge == 2 vectors with no packing precondition.
inline long long gauge_boundary_count(const Lattice& l, const Gauge& g, int workers = 1) {
  return static_cast<long long>(detail::analyze_gauge(l, g, workers).coeffs.size());
}

/// Count of lattice vectors with gauge exactly 2; errors when the lattice is
/// not a packing lattice of the gauge body.
inline long long gauge_kissing_count(const Lattice& l, const Gauge& g, int workers = 1) {
  GaugeShell s = detail::analyze_gauge(l, g, workers);
  if (!s.packing_ok) {
    std::string w;
    for (size_t i = 0; i < s.witness.size(); ++i)
      w += (i ? "," : "") + std::to_string(s.witness[i]);
    throw error("not a packing lattice of the gauge body (witness coefficients " + w + ")");
  }
  return static_cast<long long>(s.coeffs.size());
}

/// Cuboctahedron-gauge boundary counts for the three tetrahedron-related
/// candidate lattices. T_cubic is the only cuboctahedron packing among them,
/// so the others are reported as plain boundary counts.
inline std::map<std::string, long long> cuboctahedron_counts_for_tetrahedron(int workers = 1) {
  std::map<std::string, long long> out;
  for (const char* n : {"T_hex", "T_mid", "T_cubic"})
    out[n] = gauge_boundary_count(catalog(n), Gauge::cuboctahedron(), workers);
  return out;
}

}  // namespace latshell
