#include <algorithm>

#include "doctest.h"
#include "ildtt/sweeps.hpp"

using namespace ildtt;

namespace {

const std::string kFixtures = std::string(ILDTT_SOURCE_DIR) + "/tests/fixtures";

}  // namespace

TEST_CASE("fixtures load and the negative ones are kept apart") {
  auto files = sweep::fixture_files(kFixtures);
  REQUIRE(files.size() >= 4);
  CHECK(std::is_sorted(files.begin(), files.end()));
  auto c = sweep::load_fixtures(files);
  CHECK(c.rejected.empty());
  CHECK(c.definitions >= 50);

  auto bad = sweep::load_fixtures(sweep::fixture_files(kFixtures + "/reject"));
  CHECK(bad.definitions == 0);
  CHECK(bad.rejected.size() >= 2);
}

TEST_CASE("opening lambdas moves binders into the context") {
  auto c = sweep::load_fixtures({kFixtures + "/homogeneous.ildtt"});
  auto it = std::find_if(c.entries.begin(), c.entries.end(),
                         [](const sweep::Entry& e) { return e.name.ends_with("pair_up"); });
  REQUIRE(it != c.entries.end());
  auto open = sweep::open_lambdas(*it, 2);
  CHECK(open.ctx.linear.size() == 2);
  CHECK(open.term->kind == TermKind::Lam);
}

TEST_CASE("the three sweeps pass on a small corpus") {
  auto c = sweep::load_fixtures({kFixtures + "/homogeneous.ildtt", kFixtures + "/linear.ildtt"});
  sweep::add_generated(c, 30, 5);
  CHECK(c.rejected.empty());

  std::vector<sweep::Step> steps;
  auto s = sweep::soundness(c, {{3}, 3}, &steps);
  INFO(s.summary);
  CHECK(s.pass);
  CHECK_FALSE(steps.empty());

  auto l = sweep::linearity(c, 100);
  INFO(l.summary);
  CHECK(l.pass);

  auto m = sweep::metatheory(c, steps);
  INFO(m.summary);
  CHECK(m.pass);
}

TEST_CASE("an unmet rejection count fails the linearity sweep") {
  auto c = sweep::load_fixtures({kFixtures + "/linear.ildtt"});
  auto l = sweep::linearity(c, 1000000);
  CHECK_FALSE(l.pass);
}
