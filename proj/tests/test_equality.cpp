#include "doctest.h"
#include "ildtt/checker.hpp"
#include "ildtt/parser.hpp"

using namespace ildtt;

namespace {

Module mod() {
  return parse_module(R"(
    type A.
    type B.
    const a : A.
    const f : A -o B.
  )");
}

TermPtr elaborate(const Module& m, const DualContext& ctx, const std::string& text, const std::string& type,
                  std::vector<Binding> scope = {}) {
  Checker c(m.sig);
  return c.check_term(ctx, parse_term(text, m.sig, scope), parse_type(type, m.sig)).term;
}

}  // namespace

TEST_CASE("beta for linear functions") {
  auto m = mod();
  DualContext ctx;
  ctx.linear.push_back({"y", ty::base("A")});
  auto t = elaborate(m, ctx, "(lam (x : A) x) y", "A", {{"y", true}});
  auto nf = normalize(t);
  CHECK(alpha_eq(nf.term, tm::lvar("y")));
  REQUIRE(nf.trace.size() == 1);
  CHECK(nf.trace[0].rule == "⊸-C");
  CHECK(nf.trace[0].path.empty());
}

TEST_CASE("eta for linear functions") {
  auto m = mod();
  auto lhs = elaborate(m, {}, "f", "A -o B");
  auto rhs = elaborate(m, {}, "lam (x : A) f x", "A -o B");
  CHECK(judg_equal(lhs, rhs, ty::lolli(ty::base("A"), ty::base("B"))));
}

TEST_CASE("tt and ff are not identified") {
  CHECK_FALSE(judg_equal(tm::tt(), tm::ff(), ty::two()));
  CHECK(judg_equal(tm::tt(), tm::tt(), ty::two()));
}

TEST_CASE("any two terms of Top are equal") {
  CHECK(judg_equal(tm::unit(), tm::constant("a"), ty::top()));
}

TEST_CASE("pairs compare componentwise and projections reduce") {
  auto m = mod();
  auto t = elaborate(m, {}, "fst <a, unit>", "A");
  CHECK(alpha_eq(normalize(t).term, tm::constant("a")));
}

TEST_CASE("let over a bang pair reduces by substitution") {
  auto m = mod();
  auto t = elaborate(m, {}, "let bang a be !x in (bang x) (*) (bang x)", "!A * !A");
  auto nf = normalize(t).term;
  CHECK(alpha_eq(nf, tm::tensor(tm::bang(tm::constant("a")), tm::bang(tm::constant("a")))));
}

TEST_CASE("commuting conversion hoists a let out of a pair") {
  auto m = mod();
  DualContext ctx;
  ctx.linear.push_back({"p", parse_type("A * A", m.sig)});
  ctx.linear.push_back({"w", ty::base("B")});
  std::vector<Binding> scope{{"p", true}, {"w", true}};
  auto lhs = elaborate(m, ctx, "(let p be x (*) y in y (*) x) (*) w", "(A * A) * B", scope);
  auto rhs = elaborate(m, ctx, "let p be x (*) y in (y (*) x) (*) w", "(A * A) * B", scope);
  CHECK(judg_equal(lhs, rhs, parse_type("(A * A) * B", m.sig)));
}

TEST_CASE("uniqueness in a context: let p be !x in C[!x] is C[p]") {
  auto m = mod();
  DualContext ctx;
  ctx.linear.push_back({"p", parse_type("!A", m.sig)});
  ctx.linear.push_back({"w", ty::base("B")});
  std::vector<Binding> scope{{"p", true}, {"w", true}};
  auto lhs = elaborate(m, ctx, "let p be !x in (bang x) (*) w", "!A * B", scope);
  auto rhs = elaborate(m, ctx, "p (*) w", "!A * B", scope);
  CHECK(judg_equal(lhs, rhs, parse_type("!A * B", m.sig)));
}

TEST_CASE("the step limit is enforced") {
  auto m = mod();
  auto t = elaborate(m, {}, "fst <fst <a, unit>, unit>", "A");
  EqualityConfig cfg;
  cfg.step_limit = 1;
  CHECK_THROWS_AS(normalize(t, cfg), StepLimitExceeded);
  cfg.step_limit = 2;
  CHECK(normalize(t, cfg).trace.size() == 2);
}

TEST_CASE("hoisting a case whose branches share a binder name keeps it well scoped") {
  auto m = parse_module("type A.");
  const std::string type = "(A + A) -o (A + A) -o ((A * A) + (A * A))";
  auto t = elaborate(m, {}, R"(lam (s : A + A) lam (t : A + A)
      case s of inl x -> (case t of inl y -> inl (x (*) y) || inr y -> inr (y (*) x))
             || inr x -> (case t of inl y -> inr (x (*) y) || inr y -> inl (y (*) x)))", type);
  for (auto order : {HoistOrder::OutermostFirst, HoistOrder::InnermostFirst}) {
    auto nf = normalize(t, {}, order);
    CHECK(free_vars(nf.term).linear.empty());
    Checker c(m.sig);
    CHECK_NOTHROW(c.check_term({}, nf.term, parse_type(type, m.sig)));
  }
}
