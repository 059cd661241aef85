#include <catch2/catch_amalgamated.hpp>

#include "latshell/enumerate.hpp"
#include "latshell/oracle.hpp"
#include "test_util.hpp"

using namespace latshell;

namespace {

Lattice rank1(Rational g00) { return Lattice("rank1", RMat::from_rows({{g00}})); }

}  // namespace

TEST_CASE("one-dimensional shells") {
  ShellResult res = shell_vectors(rank1(4), {Rational(4), Rational(4)});
  CHECK(res.vectors == std::vector<std::vector<long long>>{{-1}, {1}});
  CHECK(res.norms2 == std::vector<Rational>{4, 4});

  ShellResult wide = shell_vectors(rank1(4), {Rational(4), Rational(16)});
  CHECK(wide.vectors == std::vector<std::vector<long long>>{{-2}, {-1}, {1}, {2}});

  CHECK(shell_vectors(rank1(4), {Rational(5), Rational(7)}).count() == 0);
  CHECK_THROWS_AS(shell_vectors(rank1(4), {Rational(-1), Rational(4)}), error);
  CHECK_THROWS_AS(shell_vectors(rank1(4), {Rational(4), Rational(2)}), error);
}

TEST_CASE("shell boundaries are closed on both ends") {
  // fractional bounds hitting exact norms
  Lattice l = catalog("R23");  // norms include 4, 16/3, 32/3
  CHECK(shell_vectors(l, {Rational(4), Rational(16, 3)}).count() ==
        shell_vectors(l, {Rational(4), Rational(16, 3) - Rational(1, 1000)}).count() + 6);
  CHECK(shell_vectors(l, {Rational(16, 3), Rational(16, 3)}).count() == 6);
}

TEST_CASE("minimal vectors") {
  auto [m_d4, mv_d4] = minimal_vectors(catalog("sqrt2D4"));
  CHECK(m_d4 == 4);
  CHECK(mv_d4.count() == 24);

  auto [m_a2, mv_a2] = minimal_vectors(catalog("sqrt2A2"));
  CHECK(m_a2 == 4);
  CHECK(mv_a2.count() == 6);

  auto [m_r23, mv_r23] = minimal_vectors(catalog("R23"));
  CHECK(m_r23 == 4);
  CHECK(mv_r23.count() == 8);
}

TEST_CASE("kissing counts") {
  CHECK(kissing_count(catalog("sqrt2E7")) == 126);
  CHECK(kissing_count(catalog("sqrt2D6")) == 60);
  CHECK(kissing_count(catalog("sqrt2D7")) == 84);
  CHECK_THROWS_WITH(kissing_count(catalog("Z3")),
                    Catch::Matchers::ContainsSubstring("min norm^2 = 1"));
}

TEST_CASE("generalized kissing counts") {
  CHECK(generalized_kissing_count(catalog("sqrt2D5"), 12) == 370);
  CHECK(generalized_kissing_count(catalog("sqrt2D6"), 12) == 856);
  CHECK(generalized_kissing_count(catalog("sqrt2E8"), 8) == 2400);
  CHECK_THROWS_AS(generalized_kissing_count(catalog("A2"), 12), error);  // min norm 2
}

TEST_CASE("sqrt2E8 layer structure") {
  Lattice e8 = catalog("sqrt2E8");
  CHECK(shell_vectors(e8, {Rational(4), Rational(4)}).count() == 240);
  CHECK(shell_vectors(e8, {Rational(8), Rational(8)}).count() == 2160);
  CHECK(shell_vectors(e8, {Rational(12), Rational(12)}).count() == 6720);
  CHECK(shell_vectors(e8, {Rational(5), Rational(7)}).count() == 0);
  CHECK(240 + 2160 + 6720 == generalized_kissing_count(e8, 12));
}

TEST_CASE("ball counts") {
  Lattice d4 = catalog("sqrt2D4");
  CHECK(ball_count(d4, RVec{1, 0, 2, -1}, 0) == 1);  // the center itself

  // interval count on a rank-1 lattice with half-integer center
  CHECK(ball_count(rank1(4), RVec{Rational(1, 2)}, 4) == 2);

  // relation to the shell count around the origin
  Rational r2(12);
  CHECK(ball_count(d4, RVec(4, 0), r2) ==
        1 + static_cast<long long>(shell_vectors(d4, {Rational(0), r2}).count()));

  CHECK_THROWS_AS(ball_count(d4, RVec{0, 0}, 4), error);
  CHECK_THROWS_AS(ball_count(d4, RVec(4, 0), Rational(-1)), error);
}

TEST_CASE("svp shell counts") {
  CHECK(svp_shell_count(catalog("sqrt2D4"), 1) == kissing_count(catalog("sqrt2D4")));
  CHECK(svp_shell_count(catalog("sqrt2D4"), 2) == 48);
  CHECK(svp_shell_count(catalog("sqrt2E8"), 3) == 9120);
  CHECK(svp_shell_count(catalog("A2"), 2) == 6);      // minimal norm 2; no vectors in (2, 4]
  CHECK(svp_shell_count(catalog("A2"), 3) == 6 + 6);  // second layer sits at norm 6
  CHECK_THROWS_AS(svp_shell_count(catalog("A2"), Rational(1, 2)), error);
}

TEST_CASE("negation closure and lexicographic order", "[property]") {
  std::mt19937_64 rng(51);
  for (int iter = 0; iter < 25; ++iter) {
    int n = 2 + iter % 3;
    Lattice l("random", testutil::random_gram(rng, n));
    ShellResult res = shell_vectors(l, {Rational(1), Rational(9)});
    REQUIRE(std::is_sorted(res.vectors.begin(), res.vectors.end()));
    for (size_t i = 0; i < res.count(); ++i) {
      std::vector<long long> neg(res.vectors[i]);
      for (auto& v : neg) v = -v;
      REQUIRE(res.contains(neg));
      REQUIRE(res.norms2[i] == l.norm2(res.vectors[i]));
    }
  }
}

TEST_CASE("shell monotonicity", "[property]") {
  std::mt19937_64 rng(52);
  for (int iter = 0; iter < 10; ++iter) {
    Lattice l("random", testutil::random_gram(rng, 3));
    ShellResult small = shell_vectors(l, {Rational(1), Rational(5)});
    ShellResult large = shell_vectors(l, {Rational(1), Rational(19, 2)});
    for (const auto& v : small.vectors) REQUIRE(large.contains(v));
    REQUIRE(small.count() <= large.count());
  }
}

TEST_CASE("scaling covariance", "[property]") {
  std::mt19937_64 rng(53);
  for (int iter = 0; iter < 10; ++iter) {
    Lattice l("random", testutil::random_gram(rng, 3));
    Lattice doubled = scale(l, 2);
    ShellResult base = shell_vectors(l, {Rational(1), Rational(8)});
    ShellResult covariant = shell_vectors(doubled, {Rational(2), Rational(16)});
    REQUIRE(base.vectors == covariant.vectors);
  }
}

TEST_CASE("worker split is invisible", "[property]") {
  Lattice e6 = catalog("sqrt2E6");
  ShellResult serial = shell_vectors(e6, {Rational(4), Rational(12)});
  for (int workers : {2, 3, 7}) {
    ShellResult par = shell_vectors(e6, {Rational(4), Rational(12)}, workers);
    REQUIRE(par.vectors == serial.vectors);
    REQUIRE(par.norms2 == serial.norms2);
  }
}

TEST_CASE("kernel matches the box oracle on random grams", "[property]") {
  std::mt19937_64 rng(54);
  for (int iter = 0; iter < 20; ++iter) {
    int n = 2 + iter % 3;
    RMat g = testutil::random_gram(rng, n);
    Lattice l("random", g);
    Rational hi(5 + iter % 7, 1 + iter % 2);
    ShellResult mine = shell_vectors(l, {Rational(1, 2), hi});
    auto box = oracle::box_shell(testutil::to_oracle_gram(g), Rational(1, 2), hi);
    REQUIRE(mine.count() == box.size());
    for (size_t i = 0; i < box.size(); ++i) {
      REQUIRE(mine.vectors[i] == box[i].first);
      REQUIRE(mine.norms2[i] == box[i].second);
    }
  }
}
