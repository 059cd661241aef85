#include <catch2/catch_amalgamated.hpp>
#include <cstdio>
#include <filesystem>

#include "latshell/gauge.hpp"
#include "latshell/io.hpp"

using namespace latshell;

namespace {

struct TempFile {
  std::string path;
  TempFile(const char* stem) {
    path = (std::filesystem::temp_directory_path() / stem).string();
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("save/load round trip") {
  for (const char* name : {"C4_main", "T_hex", "sqrt2E8", "R23", "D5v"}) {
    TempFile f("latshell_roundtrip.json");
    Lattice l = catalog(name);
    save_lattice(l, f.path);
    Lattice back = load_lattice(f.path);
    CHECK(back.gram() == l.gram());
    CHECK(back.has_coords() == l.has_coords());
    CHECK(back.disc() == l.disc());
    CHECK(back.name() == l.name());
  }
}

TEST_CASE("mismatched basis and gram name the offending entry") {
  json j;
  j["name"] = "broken";
  j["basis"] = json::array({json::array({"2", "0"}), json::array({"0", "2"})});
  j["gram"] = json::array({json::array({"5", "0"}), json::array({"0", "4"})});
  CHECK_THROWS_WITH(lattice_from_json(j), Catch::Matchers::ContainsSubstring("(0,0)"));

  j["gram"] = json::array({json::array({"4", "0"}), json::array({"0", "4"})});
  CHECK(lattice_from_json(j).rank() == 2);
}

TEST_CASE("gram-only files load for euclidean work but reject gauges") {
  json j = lattice_to_json(catalog("R23"));
  Lattice l = lattice_from_json(j);
  CHECK_FALSE(l.has_coords());
  CHECK(minimal_vectors(l).first == 4);
  CHECK_THROWS_AS(gauge_kissing_count(l, Gauge::cross_polytope(3)), error);
}

TEST_CASE("schema validation") {
  json j;
  j["name"] = "empty";
  CHECK_THROWS_WITH(lattice_from_json(j), Catch::Matchers::ContainsSubstring("at least one"));

  json bad_rank = lattice_to_json(catalog("Z2"));
  bad_rank["rank"] = 5;
  CHECK_THROWS_AS(lattice_from_json(bad_rank), error);

  json bad_disc = lattice_to_json(catalog("T_hex"));
  bad_disc["d"] = 2;
  CHECK_THROWS_AS(lattice_from_json(bad_disc), error);

  json not_pd;
  not_pd["gram"] = json::array({json::array({"1", "2"}), json::array({"2", "1"})});
  CHECK_THROWS_WITH(lattice_from_json(not_pd),
                    Catch::Matchers::ContainsSubstring("not positive definite"));

  CHECK_THROWS_AS(load_lattice("/nonexistent/nowhere.json"), error);
}

TEST_CASE("quadratic basis entries survive the text encoding") {
  json j = lattice_to_json(catalog("T_hex"));
  CHECK(j["basis"][2][2] == "sqrt(3)");
  Lattice back = lattice_from_json(j);
  CHECK(back.disc() == 3);
  CHECK((*back.coords())(2, 2) == QuadScalar(0, 1, 3));
}
