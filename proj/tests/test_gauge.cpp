#include <catch2/catch_amalgamated.hpp>

#include "latshell/gauge.hpp"

using namespace latshell;

namespace {

QVec qv(std::initializer_list<QuadScalar> xs) { return QVec(xs); }

}  // namespace

TEST_CASE("gauge values") {
  Gauge l1 = Gauge::cross_polytope(4);
  CHECK(gauge_value(l1, qv({QuadScalar(Rational(1, 2)), QuadScalar(Rational(1, 2)),
                            QuadScalar(Rational(1, 2)), QuadScalar(Rational(1, 2))})) ==
        QuadScalar(2));

  Gauge cub = Gauge::cuboctahedron();
  CHECK(gauge_value(cub, qv({QuadScalar(2), QuadScalar(0), QuadScalar(0)})) == QuadScalar(2));
  CHECK(gauge_value(cub, qv({QuadScalar(1), QuadScalar(1), QuadScalar(0)})) == QuadScalar(1));
  CHECK(gauge_value(cub, qv({QuadScalar(1), QuadScalar(1), QuadScalar(1)})) ==
        QuadScalar(Rational(3, 2)));
  CHECK(gauge_value(cub, qv({QuadScalar(1), QuadScalar(0), QuadScalar(0, 1, 3)})) ==
        QuadScalar(0, 1, 3));  // max(sqrt3, (1+sqrt3)/2)

  Gauge euclid = Gauge::euclidean();
  CHECK(euclid.returns_squared());
  CHECK(gauge_value(euclid, qv({QuadScalar(1), QuadScalar(0, 1, 2)})) == QuadScalar(3));

  CHECK_THROWS_AS(gauge_value(l1, qv({QuadScalar(1)})), error);
}

TEST_CASE("facet-max gauge reproduces the cuboctahedron") {
  // cube facets e_i plus the octahedron facets (+-1,+-1,+-1)/2
  const Rational h(1, 2);
  std::vector<QVec> facets = {
      qv({QuadScalar(1), QuadScalar(0), QuadScalar(0)}),
      qv({QuadScalar(0), QuadScalar(1), QuadScalar(0)}),
      qv({QuadScalar(0), QuadScalar(0), QuadScalar(1)}),
      qv({QuadScalar(h), QuadScalar(h), QuadScalar(h)}),
      qv({QuadScalar(h), QuadScalar(h), QuadScalar(-h)}),
      qv({QuadScalar(h), QuadScalar(-h), QuadScalar(h)}),
      qv({QuadScalar(h), QuadScalar(-h), QuadScalar(-h)}),
  };
  Gauge facet = Gauge::facet_max(facets, 2);
  Gauge cub = Gauge::cuboctahedron();
  Lattice cubic = catalog("T_cubic");
  ShellResult shell = shell_vectors(cubic, {Rational(1), Rational(16)});
  for (const auto& x : shell.vectors) {
    QVec p = cubic.ambient(x);
    REQUIRE(quad_cmp(gauge_value(facet, p), gauge_value(cub, p)) == 0);
  }
  CHECK(gauge_kissing_count(cubic, facet) == 18);
}

TEST_CASE("gauge kissing counts") {
  CHECK(gauge_kissing_count(catalog("C4_main"), Gauge::cross_polytope(4)) == 40);
  CHECK(gauge_kissing_count(catalog("C3_densest"), Gauge::cross_polytope(3)) == 14);
  CHECK(gauge_kissing_count(catalog("C3_case1"), Gauge::cross_polytope(3)) == 18);
  CHECK(gauge_kissing_count(catalog("C4_threepair"), Gauge::cross_polytope(4)) == 36);
  CHECK(gauge_kissing_count(catalog("C4_dense"), Gauge::cross_polytope(4)) == 26);
}

TEST_CASE("euclidean gauge agrees with the kissing count") {
  CHECK(gauge_kissing_count(catalog("sqrt2D4"), Gauge::euclidean()) == 24);
  CHECK(gauge_kissing_count(catalog("sqrt2E6"), Gauge::euclidean()) == 72);  // Gram-only is fine
}

TEST_CASE("packing detection") {
  CHECK(is_packing_lattice(catalog("T_cubic"), Gauge::cuboctahedron()).ok);
  CHECK(is_packing_lattice(catalog("C4_dense"), Gauge::cross_polytope(4)).ok);

  PackingCheck bad = is_packing_lattice(catalog("Z3"), Gauge::cuboctahedron());
  CHECK_FALSE(bad.ok);
  Lattice z3 = catalog("Z3");
  CHECK(quad_cmp(gauge_value(Gauge::cuboctahedron(), z3.ambient(bad.witness)), QuadScalar(2)) < 0);

  // T_hex and T_mid fail the cuboctahedron packing condition
  CHECK_FALSE(is_packing_lattice(catalog("T_hex"), Gauge::cuboctahedron()).ok);
  CHECK_FALSE(is_packing_lattice(catalog("T_mid"), Gauge::cuboctahedron()).ok);
  CHECK_THROWS_WITH(gauge_kissing_count(catalog("T_hex"), Gauge::cuboctahedron()),
                    Catch::Matchers::ContainsSubstring("witness"));

  // Gram-only lattices cannot take polytopal gauges
  CHECK_THROWS_WITH(gauge_kissing_count(catalog("R23"), Gauge::cross_polytope(3)),
                    Catch::Matchers::ContainsSubstring("Gram-only"));
}

TEST_CASE("tetrahedron candidate counts") {
  auto counts = cuboctahedron_counts_for_tetrahedron();
  CHECK(counts.at("T_cubic") == 18);
  CHECK(counts.at("T_hex") == 8);   // derived, pinned
  CHECK(counts.at("T_mid") == 8);   // derived, pinned
  CHECK(counts.at("T_hex") < 18);
  CHECK(counts.at("T_mid") < 18);
}

TEST_CASE("gauge symmetry and sandwich bounds", "[property]") {
  Gauge cub = Gauge::cuboctahedron();
  const QuadScalar two(Rational(2));
  for (const char* name : {"T_hex", "T_mid", "T_cubic"}) {
    Lattice l = catalog(name);
    ShellResult shell = shell_vectors(l, {Rational(1), Rational(12)});
    for (const auto& x : shell.vectors) {
      QVec p = l.ambient(x);
      QVec neg(p.size());
      for (size_t i = 0; i < p.size(); ++i) neg[i] = -p[i];
      QuadScalar g = gauge_value(cub, p);
      REQUIRE(quad_cmp(g, gauge_value(cub, neg)) == 0);
      // ||v||_2^2 / 2 <= gauge^2 <= ||v||_2^2
      Rational n2 = l.norm2(x);
      REQUIRE(quad_cmp(g * g, QuadScalar(n2 / 2)) >= 0);
      REQUIRE(quad_cmp(g * g, QuadScalar(n2)) <= 0);
    }
  }
}

TEST_CASE("homogeneity on sample vectors", "[property]") {
  Gauge l1 = Gauge::cross_polytope(3);
  Lattice dense = catalog("C3_densest");
  ShellResult shell = shell_vectors(dense, {Rational(1), Rational(10)});
  const QuadScalar three(Rational(3));
  for (size_t i = 0; i < shell.count(); i += 5) {
    QVec p = dense.ambient(shell.vectors[i]);
    QVec tripled(p.size());
    for (size_t c = 0; c < p.size(); ++c) tripled[c] = p[c] * three;
    REQUIRE(quad_cmp(gauge_value(l1, tripled), three * gauge_value(l1, p)) == 0);
    REQUIRE(gauge_value(l1, p).sign() > 0);
  }
}
