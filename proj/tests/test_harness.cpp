#include "doctest.h"
#include "ildtt/checker.hpp"
#include "ildtt/parser.hpp"

using namespace ildtt;

namespace {

Module mod() {
  return parse_module(R"(
    type A.
    type B.
    type C.
    type P (x : A).
    const a : A.
    const p (x : A) : P(x).
  )");
}

}  // namespace

TEST_CASE("derivations replay") {
  auto m = mod();
  Checker c(m.sig);
  DualContext ctx;
  ctx.intuitionistic.push_back({"u", ty::base("A")});
  ctx.linear.push_back({"w", ty::base("B")});
  auto t = parse_term("(lam (y : B) y) w (*) (bang u)", m.sig, {{"u", false}, {"w", true}});
  auto j = c.check_term(ctx, t, parse_type("B * !A", m.sig));
  CHECK(replay(j));
  auto broken = j;
  broken.type = parse_type("!A * B", m.sig);
  CHECK_FALSE(replay(broken));
}

TEST_CASE("weakening by a fresh variable") {
  auto m = mod();
  Checker c(m.sig);
  HarnessCase h;
  h.ctx.intuitionistic.push_back({"x", ty::base("A")});
  h.ctx.linear.push_back({"y", ty::base("B")});
  h.term = tm::lvar("y");
  h.type = ty::base("B");
  HarnessArgs args;
  args.transform = Transform::Weaken;
  args.var = "z";
  args.var_type = ty::base("C");
  args.position = 1;
  auto r = admissibility(c, h, args);
  CHECK(r.ok);
  CHECK(r.transformed.ctx.intuitionistic.size() == 2);
}

TEST_CASE("exchange respects dependency") {
  auto m = mod();
  Checker c(m.sig);
  HarnessCase h;
  h.ctx.intuitionistic.push_back({"x", ty::base("A")});
  h.ctx.intuitionistic.push_back({"v", ty::base("C")});
  h.ctx.intuitionistic.push_back({"q", ty::base("P", {tm::ivar("x")})});
  h.term = tm::star();
  h.type = ty::unit();
  HarnessArgs args;
  args.transform = Transform::ExchangeInt;
  args.position = 0;
  CHECK(admissibility(c, h, args).ok);
  args.position = 1;
  CHECK(admissibility(c, h, args).ok);
  h.ctx.intuitionistic.erase(h.ctx.intuitionistic.begin() + 1);
  args.position = 0;
  CHECK_THROWS_AS(admissibility(c, h, args), std::invalid_argument);
}

TEST_CASE("substituting a closed term for an intuitionistic variable") {
  auto m = mod();
  Checker c(m.sig);
  HarnessCase h;
  h.ctx.intuitionistic.push_back({"x", ty::base("A")});
  h.term = parse_term("bang (p(x))", m.sig, {{"x", false}});
  h.type = parse_type("!P(x)", m.sig, {{"x", false}});
  HarnessArgs args;
  args.transform = Transform::SubstIntTerm;
  args.var = "x";
  args.replacement = tm::constant("a");
  auto r = admissibility(c, h, args);
  CHECK(r.ok);
  CHECK(alpha_eq(r.transformed.type, parse_type("!P(a)", m.sig)));
}

TEST_CASE("linear substitution splices in the replacement context") {
  auto m = mod();
  Checker c(m.sig);
  HarnessCase h;
  h.ctx.linear.push_back({"y", ty::base("B")});
  h.ctx.linear.push_back({"x", ty::base("A")});
  h.term = parse_term("y (*) x", m.sig, {{"y", true}, {"x", true}});
  h.type = parse_type("B * A", m.sig);
  HarnessArgs args;
  args.transform = Transform::SubstLinTerm;
  args.var = "x";
  args.replacement_lin = {{"f", parse_type("C -o A", m.sig)}, {"c", ty::base("C")}};
  args.replacement = parse_term("f c", m.sig, {{"f", true}, {"c", true}});
  auto r = admissibility(c, h, args);
  CHECK(r.ok);
  CHECK(r.transformed.ctx.linear.size() == 3);
}

TEST_CASE("substitution into an equation") {
  auto m = mod();
  Checker c(m.sig);
  HarnessCase h;
  h.ctx.linear.push_back({"x", ty::base("A")});
  h.term = parse_term("(lam (z : A) z) x", m.sig, {{"x", true}});
  h.term2 = tm::lvar("x");
  h.type = ty::base("A");
  HarnessArgs args;
  args.transform = Transform::SubstLinTermEq;
  args.var = "x";
  args.replacement_lin = {{"w", ty::base("A")}};
  args.replacement = tm::lvar("w");
  CHECK(admissibility(c, h, args).ok);
}
