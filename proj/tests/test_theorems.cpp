#include <fstream>
#include <sstream>

#include "doctest.h"
#include "ildtt/theorems.hpp"

using namespace ildtt::thm;

namespace {

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

TEST_CASE("fiber isomorphisms have the predicted sizes") {
  for (std::size_t a = 1; a <= 4; ++a)
    for (std::size_t b = 1; b <= 4; ++b) {
      CAPTURE(a);
      CAPTURE(b);
      auto pi = pi_vs_lolli(a, b);
      CHECK(pi.check.ok);
      CHECK(pi.lhs == ipow(b, a));
      CHECK(pi.rhs == ipow(b, a));
      auto sg = sigma_vs_tensor(a, b);
      CHECK(sg.check.ok);
      CHECK(sg.lhs == a * (b - 1) + 1);
      auto seely = bang_with_vs_tensor(a, b);
      CHECK(seely.check.ok);
      CHECK(seely.lhs == a * b + 1);
      auto pw = pi_two_vs_with(a, b);
      CHECK(pw.check.ok);
      CHECK(pw.lhs == a * b);
      auto sp = sigma_two_vs_plus(a, b);
      CHECK(sp.check.ok);
      CHECK(sp.rhs == a + b - 1);
    }
  CHECK(pi_vs_lolli(3, 4).lhs == 64);
  CHECK(sigma_vs_tensor(3, 4).rhs == 10);
  CHECK(bang_with_vs_tensor(2, 3).rhs == 7);
  CHECK(sigma_unit_vs_bang(3).lhs == 4);
  CHECK(bang_top_vs_unit().check.ok);
}

TEST_CASE("a one-point A makes both sides of the function isomorphism B") {
  auto c = pi_vs_lolli(1, 3);
  CHECK(c.lhs == 3);
  CHECK(c.rhs == 3);
}

TEST_CASE("every theorem item passes at small bounds") {
  for (const auto& it : run_all({2, 3}, 1)) {
    CAPTURE(it.name);
    CAPTURE(it.details);
    CHECK(it.pass);
  }
}

TEST_CASE("the embedded witness module is the fixture file") {
  std::ifstream in(std::string(ILDTT_SOURCE_DIR) + "/tests/fixtures/witnesses.ildtt");
  REQUIRE(in);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == witness_source());
}
