#include <catch2/catch_amalgamated.hpp>

#include "latshell/verify.hpp"

using namespace latshell;

TEST_CASE("filtered verify runs") {
  auto watson = run_verify({"watson.kiss.n", false, 1});
  REQUIRE(watson.size() == 7);
  CHECK(all_pass(watson));

  auto shell12 = run_verify({"shell12.n", false, 1});
  REQUIRE(shell12.size() == 7);
  CHECK(all_pass(shell12));
  CHECK(shell12.back().expected == "9120");

  auto none = run_verify({"nonexistent-prefix", false, 1});
  CHECK(none.empty());
  CHECK(all_pass(none));  // empty report counts as success
}

TEST_CASE("every case carries a source note") {
  auto cases = run_verify({"xpoly", false, 1});
  REQUIRE_FALSE(cases.empty());
  for (const auto& c : cases) {
    CHECK_FALSE(c.source.empty());
    CHECK_FALSE(c.description.empty());
  }
}

TEST_CASE("report ordering is stable and ids unique") {
  auto cases = run_verify({"cuboct", false, 2});
  REQUIRE_FALSE(cases.empty());
  for (size_t i = 1; i < cases.size(); ++i) REQUIRE(cases[i - 1].id < cases[i].id);
}

TEST_CASE("failures surface computation errors") {
  // r23 cases pass; simulate a failing comparison through the JSON emitters
  std::vector<VerifyCase> cases = {{"x.1", "demo", "src", "1", "2", false}};
  auto j = verify_json(cases);
  CHECK(j[0]["status"] == "fail");
  CHECK(verify_csv(cases).find("fail") != std::string::npos);
  CHECK(verify_table(cases).find("FAIL") != std::string::npos);
  CHECK_FALSE(all_pass(cases));
}

TEST_CASE("emitters are deterministic across worker counts") {
  auto serial = run_verify({"r23", false, 1});
  auto parallel = run_verify({"r23", false, 3});
  CHECK(verify_json(serial).dump(2) == verify_json(parallel).dump(2));
  CHECK(verify_csv(serial) == verify_csv(parallel));
}
