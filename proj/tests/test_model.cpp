#include "doctest.h"
#include "ildtt/model.hpp"

using namespace ildtt::model;

TEST_CASE("Fam(Set*) passes every condition at small bounds") {
  ModelInstance m;
  Bounds b{2, 3};
  for (const auto& rep : verify_all(m, b)) {
    CAPTURE(rep.condition);
    CHECK(rep.pass);
    CHECK(rep.cases > 0);
  }
}

TEST_CASE("the terminal context alone passes vacuously") {
  ModelInstance m;
  auto rep = verify_comprehension(m, Bounds{0, 1});
  CHECK(rep.pass);
}

TEST_CASE("each fault is caught and its witness replays") {
  Bounds b{2, 3};
  for (auto fault : all_faults()) {
    FaultyInstance bad(fault);
    CAPTURE(fault_name(fault));
    bool caught = false;
    for (const auto& rep : verify_all(bad, b)) {
      if (rep.pass) continue;
      caught = true;
      REQUIRE(rep.witness);
      CHECK(replay_witness(bad, *rep.witness));
      CHECK_FALSE(replay_witness(ModelInstance{}, *rep.witness));
    }
    CHECK(caught);
  }
}

TEST_CASE("comprehension functor preserves identities") {
  ModelInstance m;
  auto s = ildtt::fam::index_set(2);
  auto a = ildtt::fam::const_fam(s, ildtt::fam::sized_set(3));
  std::map<Value, ildtt::fam::PointedMap> id;
  for (const auto& i : s) id[i] = ildtt::fam::identity_map(a.at(i));
  auto mid = comprehension_functor(m, a, a, id);
  for (const auto& [x, y] : mid.table) CHECK(x == y);
}
