#pragma once

// The Lattice value type, the layered-gluing constructor and the named
// catalog. A lattice is given by an exact positive-definite rational Gram
// matrix, optionally with explicit ambient coordinates over Q(sqrt(d)).

#include <optional>
#include <string>
#include <vector>

#include "latshell/linalg.hpp"

namespace latshell {

class Lattice {
 public:
  Lattice(std::string name, RMat gram, std::optional<QMat> coords = std::nullopt)
      : name_(std::move(name)), gram_(std::move(gram)), coords_(std::move(coords)) {
    if (!gram_.is_symmetric()) throw error("Gram matrix must be symmetric");
    ldl_ = ldl(gram_);  // positive-definiteness witness
    if (coords_) {
      if (coords_->rows() != gram_.rows()) throw error("coordinate rows must match rank");
      if (!(gram_of_basis(*coords_) == gram_)) throw error("Gram does not match coordinates");
      for (size_t i = 0; i < coords_->rows(); ++i)
        for (size_t j = 0; j < coords_->cols(); ++j) {
          int d = (*coords_)(i, j).d();
          if (d == 1) continue;
          if (disc_ != 1 && disc_ != d) throw error("mixed surds in coordinates");
          disc_ = d;
        }
    }
  }

  const std::string& name() const { return name_; }
  size_t rank() const { return gram_.rows(); }
  const RMat& gram() const { return gram_; }
  const std::optional<QMat>& coords() const { return coords_; }
  int disc() const { return disc_; }
  const LDL& factor() const { return ldl_; }

  bool has_coords() const { return coords_.has_value(); }
  size_t ambient_dim() const { return coords_ ? coords_->cols() : 0; }

  /// Ambient point of an integer coefficient vector; requires coordinates.
  QVec ambient(const std::vector<long long>& x) const {
    if (!coords_) throw error("lattice '" + name_ + "' has no ambient coordinates");
    QVec p(coords_->cols(), QuadScalar(0));
    for (size_t i = 0; i < coords_->rows(); ++i) {
      if (x[i] == 0) continue;
      for (size_t j = 0; j < p.size(); ++j)
        p[j] += (*coords_)(i, j) * QuadScalar(Rational(x[i]));
    }
    return p;
  }

  Rational norm2(const std::vector<long long>& x) const { return gram_norm2(gram_, x); }

 private:
  std::string name_;
  RMat gram_;
  std::optional<QMat> coords_;
  int disc_ = 1;
  LDL ldl_;
};

/// Scales squared lengths by c2 > 0. Coordinates survive only when c2 is a
/// perfect rational square.
inline Lattice scale(const Lattice& l, const Rational& c2, std::string name = "") {
  if (c2 <= 0) throw error("scale factor must be positive");
  size_t n = l.rank();
  RMat g(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) g(i, j) = l.gram()(i, j) * c2;
  std::optional<QMat> coords;
  if (l.has_coords() && is_perfect_square(rat_num(c2)) && is_perfect_square(rat_den(c2))) {
    QuadScalar s{rational_sqrt_exact(c2)};
    QMat c(l.coords()->rows(), l.coords()->cols());
    for (size_t i = 0; i < c.rows(); ++i)
      for (size_t j = 0; j < c.cols(); ++j) c(i, j) = (*l.coords())(i, j) * s;
    coords = std::move(c);
  }
  if (name.empty()) name = "scaled(" + l.name() + ")";
  return Lattice(std::move(name), std::move(g), std::move(coords));
}

/// Gluing data for the layered constructor: the new generator's squared
/// length and its inner products with the base basis vectors.
struct GlueSpec {
  Rational self_norm2;
  RVec inner;
};

/// Extends a rank-n lattice to rank n+1 by adjoining a generator with the
/// given inner products. Result is Gram-only and must be positive definite.
inline Lattice layered(const Lattice& base, const GlueSpec& glue, std::string name = "") {
  size_t n = base.rank();
  if (glue.inner.size() != n) throw error("glue inner products must match base rank");
  RMat g(n + 1, n + 1);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) g(i, j) = base.gram()(i, j);
  for (size_t i = 0; i < n; ++i) g(i, n) = g(n, i) = glue.inner[i];
  g(n, n) = glue.self_norm2;
  if (name.empty()) name = "layered(" + base.name() + ")";
  return Lattice(std::move(name), std::move(g));  // constructor rejects non-PD
}

// ---------------------------------------------------------------------------
// Catalog
// ---------------------------------------------------------------------------

namespace detail {

inline QMat rational_rows(const std::vector<std::vector<Rational>>& rows) {
  QMat m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j) m(i, j) = QuadScalar(rows[i][j]);
  return m;
}

inline Lattice integer_lattice(int n) {
  if (n < 1) throw error("Z(n) needs n >= 1");
  return Lattice("Z" + std::to_string(n), RMat::identity(n),
                 QMat::identity(n));
}

// tridiagonal 2/-1 Gram; Gram-only by design
inline Lattice a_lattice(int n) {
  if (n < 1) throw error("A(n) needs n >= 1");
  RMat g(n, n);
  for (int i = 0; i < n; ++i) {
    g(i, i) = 2;
    if (i + 1 < n) g(i, i + 1) = g(i + 1, i) = -1;
  }
  return Lattice("A" + std::to_string(n), std::move(g));
}

// basis rows e1+e2, e2-e1, e3-e2, ..., en-e(n-1)
inline Lattice d_lattice(int n) {
  if (n < 2) throw error("D(n) needs n >= 2");
  std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n, 0));
  rows[0][0] = 1;
  rows[0][1] = 1;
  for (int i = 1; i < n; ++i) {
    rows[i][i - 1] = -1;
    rows[i][i] = 1;
  }
  QMat basis = rational_rows(rows);
  return Lattice("D" + std::to_string(n), gram_of_basis(basis), basis);
}

// Glues a generator (prefix, h) onto D(n) sitting in the first n ambient
// coordinates, where h is chosen so the generator has squared length 2.
// Only the rational prefix enters the inner products.
inline Lattice glue_over_d(int n, const RVec& prefix, const std::string& name) {
  Lattice base = d_lattice(n);
  Rational p2 = 0;
  for (const Rational& c : prefix) p2 += c * c;
  if (p2 >= 2) throw error("glue prefix too long");
  GlueSpec glue{Rational(2), RVec(n, 0)};
  for (int i = 0; i < n; ++i) {
    Rational s = 0;
    for (int j = 0; j < n; ++j) s += prefix[j] * (*base.coords())(i, j).rational();
    glue.inner[i] = s;
  }
  return layered(base, glue, name);
}

inline Lattice e_lattice(int n) {
  RVec prefix(n - 1, Rational(1, 2));
  return glue_over_d(n - 1, prefix, "E" + std::to_string(n));
}

inline Lattice dv_lattice(int n, const Rational& v) {
  if (v < 0 || v >= Rational(1, 2)) throw error("glue parameter must lie in [0, 1/2)");
  RVec prefix(n, Rational(1, 2));
  prefix[n - 1] = v;
  std::string name = "D" + std::to_string(n) + "v(" + to_string(v) + ")";
  return glue_over_d(n, prefix, name);
}

inline QMat quad_rows(const std::vector<std::vector<QuadScalar>>& rows) {
  return QMat::from_rows(rows);
}

}  // namespace detail

/// Named lattices. Any name may be prefixed with "sqrt2" for the variant
/// with doubled Gram. Parameterized families D5v/D6v accept the glue
/// parameter either via `params` or inline as "D5v(1/4)"; default is 1/4.
inline Lattice catalog(const std::string& name, const std::vector<Rational>& params = {});

inline std::vector<std::string> catalog_names() {
  return {"Z1",      "Z2",          "Z3",      "Z4",          "Z5",
          "A2",      "A3",          "A4",      "A5",          "A6",
          "A7",      "A8",          "D3",      "D4",          "D5",
          "D6",      "D7",          "D8",      "E6",          "E7",
          "E8",      "D5v",         "D6v",     "C3_densest",  "C3_case1",
          "C4_main", "C4_threepair", "C4_dense", "T_hex",     "T_mid",
          "T_cubic", "R23"};
}

inline Lattice catalog(const std::string& name, const std::vector<Rational>& params) {
  using detail::quad_rows;
  const Rational h(1, 2);

  if (name.rfind("sqrt2", 0) == 0)
    return scale(catalog(name.substr(5), params), 2, name);

  // inline parameter form "D5v(1/4)"
  if (auto open = name.find('('); open != std::string::npos && params.empty()) {
    if (name.back() != ')') throw error("unknown lattice '" + name + "'");
    std::string base = name.substr(0, open);
    Rational v = parse_rational(name.substr(open + 1, name.size() - open - 2));
    return catalog(base, {v});
  }

  auto from_rational_basis = [&name](const std::vector<std::vector<Rational>>& rows) {
    QMat basis = detail::rational_rows(rows);
    return Lattice(name, gram_of_basis(basis), basis);
  };

  if (name == "C3_densest")
    return from_rational_basis({{Rational(-2, 3), 1, Rational(1, 3)},
                                {Rational(1, 3), Rational(-2, 3), 1},
                                {1, Rational(1, 3), Rational(-2, 3)}});
  if (name == "C3_case1") return from_rational_basis({{2, 0, 0}, {1, 1, 0}, {1, 0, 1}});
  if (name == "C4_main")
    return from_rational_basis({{2, 0, 0, 0}, {1, 1, 0, 0}, {1, 0, 1, 0}, {h, h, h, h}});
  if (name == "C4_threepair")
    return from_rational_basis({{-h, -h, 1, 0}, {h, h, 1, 0}, {-h, h, h, -h}, {-h, h, -h, h}});
  if (name == "C4_dense") {
    const Rational q(1, 4), t(3, 4);
    return from_rational_basis({{-t, t, q, q}, {q, -t, t, q}, {q, q, -t, t}, {t, q, q, -t}});
  }
  if (name == "T_hex") {
    QMat basis = quad_rows({{QuadScalar(2), QuadScalar(0), QuadScalar(0)},
                            {QuadScalar(0), QuadScalar(2), QuadScalar(0)},
                            {QuadScalar(1), QuadScalar(0), QuadScalar(0, 1, 3)}});
    return Lattice(name, gram_of_basis(basis), basis);
  }
  if (name == "T_mid") {
    QMat basis = quad_rows({{QuadScalar(2), QuadScalar(0), QuadScalar(0)},
                            {QuadScalar(0), QuadScalar(2), QuadScalar(0)},
                            {QuadScalar(1), QuadScalar(1), QuadScalar(0, 1, 2)}});
    return Lattice(name, gram_of_basis(basis), basis);
  }
  if (name == "T_cubic") return from_rational_basis({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}});
  if (name == "R23") {
    const Rational f(4, 3);
    RMat g = RMat::from_rows({{4, -f, f}, {-f, 4, f}, {f, f, 4}});
    return Lattice(name, std::move(g));
  }
  if (name == "E6" || name == "E7" || name == "E8") return detail::e_lattice(name[1] - '0');
  if (name == "D5v" || name == "D6v") {
    Rational v = params.empty() ? Rational(1, 4) : params[0];
    return detail::dv_lattice(name[1] - '0', v);
  }

  if (name.size() >= 2 && std::isdigit(static_cast<unsigned char>(name[1]))) {
    int n = 0;
    try {
      size_t used = 0;
      n = std::stoi(name.substr(1), &used);
      if (used + 1 != name.size()) n = 0;
    } catch (const std::exception&) {
      n = 0;
    }
    if (n > 0) {
      switch (name[0]) {
        case 'Z': return detail::integer_lattice(n);
        case 'A': return detail::a_lattice(n);
        case 'D': return detail::d_lattice(n);
        default: break;
      }
    }
  }
  throw error("unknown lattice '" + name + "'");
}

}  // namespace latshell
