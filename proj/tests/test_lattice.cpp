#include <catch2/catch_amalgamated.hpp>

#include "latshell/enumerate.hpp"

using namespace latshell;

TEST_CASE("scaling") {
  CHECK(scale(catalog("A2"), 2).gram() == RMat::from_rows({{4, -2}, {-2, 4}}));
  Lattice d4 = catalog("D4");
  CHECK(scale(d4, 1).gram() == d4.gram());
  Lattice z3x4 = scale(catalog("Z3"), 4);
  CHECK(minimal_vectors(z3x4).first == 4);
  CHECK(z3x4.has_coords());  // 4 is a perfect square, coordinates survive
  CHECK((*z3x4.coords())(0, 0) == QuadScalar(2));
  CHECK_FALSE(scale(catalog("Z3"), 2).has_coords());
  CHECK_THROWS_AS(scale(d4, 0), error);
}

TEST_CASE("layered gluing") {
  // E-series construction: glue a half-vector generator over D(n)
  Lattice d5 = catalog("D5");
  GlueSpec glue{Rational(2), RVec{1, 0, 0, 0, 0}};
  Lattice e6 = layered(d5, glue);
  CHECK(e6.rank() == 6);
  CHECK(kissing_count(scale(e6, 2)) == 72);

  Lattice e8 = layered(catalog("D7"), GlueSpec{Rational(2), RVec{1, 0, 0, 0, 0, 0, 0}});
  CHECK(kissing_count(scale(e8, 2)) == 240);

  // parameterized glue over D5 with non-central last coordinate
  Lattice d5v = layered(d5, GlueSpec{Rational(2), RVec{1, 0, 0, 0, Rational(-1, 4)}});
  CHECK(kissing_count(scale(d5v, 2)) == 56);

  CHECK_THROWS_AS(layered(d5, GlueSpec{Rational(0), RVec{1, 0, 0, 0, 0}}), error);
  CHECK_THROWS_AS(layered(d5, GlueSpec{Rational(2), RVec{1, 0}}), error);
}

TEST_CASE("catalog entries") {
  CHECK(det(catalog("C4_main").gram()) == 1);
  CHECK(catalog("R23").gram() ==
        RMat::from_rows({{4, Rational(-4, 3), Rational(4, 3)},
                         {Rational(-4, 3), 4, Rational(4, 3)},
                         {Rational(4, 3), Rational(4, 3), 4}}));
  CHECK(minimal_vectors(catalog("R23")).first == 4);
  CHECK(catalog("A3").gram() == RMat::from_rows({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}));
  CHECK(catalog("sqrt2E8").rank() == 8);
  CHECK(catalog("D5v").name() == "D5v(1/4)");
  CHECK(catalog("D5v(1/8)").gram()(5, 4) == Rational(1, 8) - Rational(1, 2));
  CHECK(catalog("D5v", {Rational(1, 8)}).gram() == catalog("D5v(1/8)").gram());

  CHECK_THROWS_AS(catalog("nonsense"), error);
  CHECK_THROWS_AS(catalog("D5v(1/2)"), error);   // parameter range is [0, 1/2)
  CHECK_THROWS_AS(catalog("D5v(-1/4)"), error);
  CHECK_THROWS_AS(catalog("Z0"), error);
  CHECK_THROWS_AS(catalog("D1"), error);
}

TEST_CASE("catalog coordinates are consistent", "[property]") {
  for (const auto& name : catalog_names()) {
    Lattice l = catalog(name);
    if (!l.has_coords()) continue;
    REQUIRE(gram_of_basis(*l.coords()) == l.gram());
  }
}

TEST_CASE("sqrt2-scaled sphere lattices have minimal norm 4", "[property]") {
  for (const char* name : {"sqrt2A2", "sqrt2A3", "sqrt2A4", "sqrt2D4", "sqrt2D5", "sqrt2D6",
                           "sqrt2D7", "sqrt2E6", "sqrt2E7", "sqrt2E8", "sqrt2D5v", "sqrt2D6v"}) {
    REQUIRE(minimal_vectors(catalog(name)).first == 4);
  }
}

TEST_CASE("even unimodular cross-check of the layered E8") {
  Lattice e8 = catalog("E8");
  CHECK(det(e8.gram()) == 1);
  for (size_t i = 0; i < 8; ++i) {
    CHECK(rat_den(e8.gram()(i, i)) == 1);
    CHECK(rat_num(e8.gram()(i, i)) % 2 == 0);
  }
}
