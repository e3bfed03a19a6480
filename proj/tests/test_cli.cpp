#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "doctest.h"
#include "ildtt/cli.hpp"

using namespace ildtt;

namespace {

const std::string kFixtures = std::string(ILDTT_SOURCE_DIR) + "/tests/fixtures";

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("check accepts the fixtures and reports a reused variable") {
  CHECK(run({"check", kFixtures + "/bang_sigma.ildtt"}).code == 0);
  auto r = run({"check", kFixtures + "/reject/reuse.ildtt"});
  CHECK(r.code == 1);
  CHECK(r.out.find("linear variable reused: x") != std::string::npos);
  CHECK(run({"check", kFixtures + "/reject/unused.ildtt"}).code == 1);
}

TEST_CASE("usage and IO errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"check", kFixtures + "/missing.ildtt"}).code == 2);
  CHECK(run({"norm", kFixtures + "/linear.ildtt"}).code == 2);  // no --term
  CHECK(run({"norm", "--term", "no_such_def", kFixtures + "/linear.ildtt"}).code == 2);
  CHECK(run({"verify-model", "--max-index", "0"}).code == 2);
  CHECK(run({"verify-model", "--fault", "no-such-fault"}).code == 2);
  CHECK(run({"check", "--step-limit", "0", kFixtures + "/linear.ildtt"}).code == 2);
}

TEST_CASE("norm prints the normal form and its trace") {
  auto r = run({"norm", "--term", "let_redex_aa", "--trace", kFixtures + "/homogeneous.ildtt"});
  CHECK(r.code == 0);
  CHECK(r.out.find("step 1 ⊗-C") != std::string::npos);
  CHECK(r.out.find("(y (*) x)") != std::string::npos);
}

TEST_CASE("the step limit is honoured from the flag and the environment") {
  auto args = std::vector<std::string>{"norm", "--term", "commuting_aa", kFixtures + "/homogeneous.ildtt"};
  CHECK(run(args).code == 0);
  auto limited = args;
  limited.insert(limited.begin() + 1, {"--step-limit", "1"});
  CHECK(run(limited).code == 1);
  setenv("ILDTT_STEP_LIMIT", "1", 1);
  CHECK(run(args).code == 1);
  unsetenv("ILDTT_STEP_LIMIT");
}

TEST_CASE("eval needs model bindings") {
  auto r = run({"eval", "--term", "bang_redex_aa", kFixtures + "/homogeneous.ildtt"});
  CHECK(r.code == 0);
  CHECK(r.out.find("bang_redex_aa a1: (a1 (*) a3)") != std::string::npos);
  auto path = std::filesystem::temp_directory_path() / "ildtt_unbound.ildtt";
  std::ofstream(path) << "type A.\nconst a : A.\ndef d : A := a.\n";
  auto u = run({"eval", "--term", "d", path.string()});
  CHECK(u.code == 1);
  CHECK(u.out.find("no model for A") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("JSON reports follow the schema and round-trip") {
  auto r = run({"verify-model", "--max-index", "2", "--max-fiber", "3", "--json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["command"] == "verify-model");
  CHECK(j["config"]["max_index"] == 2);
  REQUIRE(j["items"].is_array());
  CHECK_FALSE(j["items"].empty());
  for (const auto& i : j["items"]) {
    CHECK(i.contains("name"));
    CHECK(i["status"] == "pass");
    CHECK(i.contains("details"));
  }
  CHECK(nlohmann::json::parse(j.dump()) == j);

  auto f = run({"verify-model", "--max-index", "2", "--max-fiber", "3", "--fault", "collapse-tensor", "--json"});
  CHECK(f.code == 1);
  auto fj = nlohmann::json::parse(f.out);
  bool witnessed = false;
  for (const auto& i : fj["items"]) witnessed |= i["status"] == "fail" && i.contains("witness");
  CHECK(witnessed);
}
