#include "doctest.h"
#include "ildtt/generator.hpp"
#include "ildtt/oracle.hpp"
#include "ildtt/parser.hpp"

using namespace ildtt;

TEST_CASE("generated terms check against their sampled context and type") {
  auto m = parse_module(gen::generator_source());
  Checker c(m.sig);
  gen::TermGenerator g(m.sig, 7);
  std::size_t terms = 0;
  for (std::size_t round = 0; round < 30; ++round) {
    auto s = g.sample(2, round % 5);
    CHECK(s.ctx.linear.size() <= 4);
    for (const auto& t : s.terms) {
      INFO(to_string(t));
      CHECK_NOTHROW(c.check_term(s.ctx, t, s.type));
      CHECK(partition_derivable(s.ctx, t));
      ++terms;
    }
  }
  CHECK(terms >= 30);
}

TEST_CASE("the generator is deterministic in its seed") {
  auto m = parse_module(gen::generator_source());
  gen::TermGenerator g1(m.sig, 99), g2(m.sig, 99);
  for (int i = 0; i < 5; ++i) {
    auto s1 = g1.sample(2, 3), s2 = g2.sample(2, 3);
    REQUIRE(s1.terms.size() == s2.terms.size());
    CHECK(alpha_eq(s1.type, s2.type));
    for (std::size_t k = 0; k < s1.terms.size(); ++k) CHECK(to_string(s1.terms[k]) == to_string(s2.terms[k]));
  }
}

TEST_CASE("fiber bounds and evaluation cost") {
  auto a = ty::base("A");
  CHECK(gen::fiber_bound(a, 4) == 4);
  CHECK(gen::fiber_bound(ty::tensor(a, a), 4) == 10);  // smash: 3*3 + base
  CHECK(gen::fiber_bound(ty::with(a, a), 4) == 16);
  CHECK(gen::fiber_bound(ty::plus(a, a), 4) == 7);     // wedge
  CHECK(gen::fiber_bound(ty::lolli(a, a), 4) == 64);   // base fixed, 3 free points
  CHECK(gen::eval_cost(tm::lvar("x"), 4) == 1);
}
