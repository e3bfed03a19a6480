#include "doctest.h"
#include "ildtt/interpreter.hpp"
#include "ildtt/parser.hpp"

using namespace ildtt;
using namespace ildtt::sem;
namespace val = ildtt::fam::val;

namespace {

const char* kSource = R"(
  type A.
  type B.
  type P (x : A).
  const a : A.
  model A := pointed {a0*, a1, a2}.
  model B := pointed {b0*, b1}.
  model P := family { a0 => pointed {p*}, a1 => pointed {q0*, q1}, a2 => pointed {r0*, r1, r2} }.
  model a := a2.
)";

TermPtr checked(const Checker& c, const DualContext& ctx, const std::string& term, const std::string& type,
                std::vector<Binding> scope = {}) {
  auto t = parse_term(term, c.signature(), scope);
  auto a = parse_type(type, c.signature(), scope);
  return c.check_term(ctx, t, a).term;
}

}  // namespace

TEST_CASE("model bindings fix fibers and constants") {
  auto m = parse_module(kSource);
  Interpreter in(m.sig, {.use_bindings = true, .allow_random = false});
  CHECK(in.type_fiber(ty::base("A"), {}).size() == 3);
  CHECK(in.eval(tm::constant("a"), {}) == val::atom("a2"));
  CHECK(in.type_fiber(ty::base("P", {tm::constant("a")}), {}).size() == 3);
  CHECK(in.type_fiber(ty::base("P", {tm::ivar("x")}), Env{{{"x", val::star()}}, {}}).size() == 1);
  CHECK(in.label(val::star(), ty::base("A"), {}) == "a0");
  auto desc = in.describe_model();
  CHECK(desc.find("A := {a0*, a1, a2}") != std::string::npos);
  CHECK(desc.find("a := a2") != std::string::npos);
}

TEST_CASE("missing bindings are an error unless random choices are allowed") {
  auto m = parse_module("type C.");
  Interpreter strict(m.sig, {.use_bindings = true, .allow_random = false});
  CHECK_THROWS_AS(strict.type_fiber(ty::base("C"), {}), SemanticError);
  Interpreter r1(m.sig, {.seed = 7}), r2(m.sig, {.seed = 7});
  auto n = r1.type_fiber(ty::base("C"), {}).size();
  CHECK(n >= 1);
  CHECK(n <= 4);
  CHECK(r2.type_fiber(ty::base("C"), {}).size() == n);
}

TEST_CASE("booleans are distinct") {
  auto m = parse_module("");
  Interpreter in(m.sig);
  CHECK(in.eval(tm::tt(), {}) != in.eval(tm::ff(), {}));
  auto pick = tm::if_then("x", nullptr, tm::ff(), tm::star(), tm::star());
  CHECK(in.eval(pick, {}) == val::one());
}

TEST_CASE("the identity on A is the identity table") {
  auto m = parse_module(kSource);
  Checker c(m.sig);
  Interpreter in(m.sig, {.allow_random = false});
  auto id = checked(c, {}, "lam (y : A) y", "A -o A");
  std::vector<std::pair<fam::Value, fam::Value>> table;
  for (const char* l : {"a1", "a2"}) table.emplace_back(val::atom(l), val::atom(l));
  CHECK(in.eval(id, {}) == val::fun(table));
}

TEST_CASE("tensor denotes the smash product") {
  auto m = parse_module(kSource);
  Checker c(m.sig);
  Interpreter in(m.sig, {.allow_random = false});
  DualContext ctx;
  ctx.linear = {{"x", ty::base("A")}, {"y", ty::base("B")}};
  auto t = checked(c, ctx, "x (*) y", "A * B", {{"x", true}, {"y", true}});
  auto d = in.denote_term(ctx, t, parse_type("A * B", m.sig));
  REQUIRE(d.ctx.points.size() == 1);
  const auto& map = d.map.at(d.ctx.points[0]);
  CHECK(map.dom.size() == 3);
  for (const auto& e : map.dom.elems) CHECK(map(e) == e);
}

TEST_CASE("equations are compared pointwise") {
  auto m = parse_module(kSource);
  Checker c(m.sig);
  Interpreter in(m.sig, {.allow_random = false});
  DualContext ctx;
  ctx.linear = {{"x", ty::base("A")}};
  std::vector<Binding> sc = {{"x", true}};
  auto redex = checked(c, ctx, "(lam (y : A) y) x", "A", sc);
  auto x = checked(c, ctx, "x", "A", sc);
  auto r = check_equation(in, ctx, redex, x, ty::base("A"));
  CHECK(r.ok);
  CHECK(r.inputs == 2);

  auto l = checked(c, ctx, "inl x", "A + A", sc);
  auto rr = checked(c, ctx, "inr x", "A + A", sc);
  auto bad = check_equation(in, ctx, l, rr, parse_type("A + A", m.sig));
  CHECK_FALSE(bad.ok);
  CHECK(bad.detail.find("inl a1") != std::string::npos);
}

TEST_CASE("dependent terms land in their types") {
  auto m = parse_module("type A. type P (x : A).");
  Checker c(m.sig);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    Interpreter in(m.sig, {.seed = seed});
    DualContext ctx;
    ctx.intuitionistic = {{"x", ty::base("A")}};
    ctx.linear = {{"p", ty::base("P", {tm::ivar("x")})}};
    std::vector<Binding> sc = {{"x", false}, {"p", true}};
    auto t = checked(c, ctx, "(bang x) (*) p", "Sig (!z : !A) P(z)", sc);
    auto r = check_typing(in, ctx, t, parse_type("Sig (!z : !A) P(z)", m.sig, sc));
    CHECK(r.ok);
    auto pi = checked(c, {}, "lam (!z : !A) bang z", "Pi (!z : !A) !A");
    CHECK(check_typing(in, {}, pi, parse_type("Pi (!z : !A) !A", m.sig)).ok);
  }
}
