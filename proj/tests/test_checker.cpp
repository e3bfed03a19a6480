#include "doctest.h"
#include "ildtt/checker.hpp"
#include "ildtt/parser.hpp"

using namespace ildtt;

namespace {

const char* kPrelude = R"(
  type A.
  type B.
  type P (x : A).
  const a : A.
  const b : B.
)";

Module prelude(const std::string& extra = "") { return parse_module(std::string(kPrelude) + extra); }

ErrorKind rejection(const Checker& c, const DualContext& ctx, const TermPtr& t, const TypePtr& a) {
  try {
    c.check_term(ctx, t, a);
  } catch (const CheckError& e) {
    return e.kind;
  }
  FAIL("term was accepted");
  return ErrorKind::TypeMismatch;
}

}  // namespace

TEST_CASE("duplicating a linear variable is rejected with its name") {
  auto m = prelude();
  Checker c(m.sig);
  DualContext ctx;
  ctx.linear.push_back({"x", ty::base("A")});
  auto t = parse_term("x (*) x", m.sig, {{"x", true}});
  try {
    c.check_term(ctx, t, parse_type("A * A", m.sig));
    FAIL("accepted");
  } catch (const CheckError& e) {
    CHECK(e.kind == ErrorKind::LinearReused);
    CHECK(std::string(e.what()) == "linear variable reused: x");
    CHECK(e.variable == "x");
  }
}

TEST_CASE("dropping a linear variable is rejected") {
  auto m = prelude();
  Checker c(m.sig);
  DualContext ctx;
  ctx.linear.push_back({"x", ty::base("A")});
  CHECK(rejection(c, ctx, tm::star(), ty::unit()) == ErrorKind::LinearUnused);
}

TEST_CASE("top absorbs unused linear variables") {
  auto m = prelude();
  Checker c(m.sig);
  DualContext ctx;
  ctx.linear.push_back({"x", ty::base("A")});
  auto j = c.check_term(ctx, tm::unit(), ty::top());
  CHECK(j.rule == "⊤-I");
  auto pair = parse_term("<x, unit>", m.sig, {{"x", true}});
  CHECK_NOTHROW(c.check_term(ctx, pair, parse_type("A & Top", m.sig)));
}

TEST_CASE("additive branches must use the same resources") {
  auto m = prelude();
  Checker c(m.sig);
  DualContext ctx;
  ctx.linear.push_back({"x", ty::base("A")});
  ctx.linear.push_back({"y", ty::base("A")});
  auto bad = parse_term("<x, y>", m.sig, {{"x", true}, {"y", true}});
  CHECK(rejection(c, ctx, bad, parse_type("A & A", m.sig)) == ErrorKind::LinearUnused);
}

TEST_CASE("a dependent pair of banged terms") {
  auto m = prelude("def d : Pi (!x : !A) Sig (!y : !A) I := lam (!x : !A) ((bang x) (*) star).");
  Checker c(m.sig);
  auto j = c.check_definition(m.defs[0]);
  CHECK(j.rule == "Π-I");
  REQUIRE(j.term->kind == TermKind::PiLam);
  CHECK(j.term->kids[0]->kind == TermKind::SigmaPair);
}

TEST_CASE("intuitionistic variables may be used freely") {
  auto m = prelude("def d : Pi (!x : !A) !A * !A := lam (!x : !A) ((bang x) (*) (bang x)).");
  Checker c(m.sig);
  CHECK_NOTHROW(c.check_definition(m.defs[0]));
}

TEST_CASE("a linear variable is not available under bang") {
  auto m = prelude();
  Checker c(m.sig);
  DualContext ctx;
  ctx.linear.push_back({"x", ty::base("A")});
  auto t = parse_term("bang x", m.sig, {{"x", true}});
  CHECK(rejection(c, ctx, t, parse_type("!A", m.sig)) == ErrorKind::UnboundVariable);
}

TEST_CASE("type mismatches are reported") {
  auto m = prelude();
  Checker c(m.sig);
  CHECK(rejection(c, {}, tm::constant("a"), ty::base("B")) == ErrorKind::TypeMismatch);
}

TEST_CASE("refl needs judgementally equal endpoints") {
  auto m = prelude();
  Checker c(m.sig);
  DualContext ctx;
  ctx.intuitionistic.push_back({"u", ty::base("A")});
  auto good = ty::id(ty::base("A"), tm::ivar("u"), tm::ivar("u"));
  CHECK_NOTHROW(c.check_term(ctx, tm::refl(tm::ivar("u")), good));
  auto bad = ty::id(ty::base("A"), tm::ivar("u"), tm::constant("a"));
  CHECK(rejection(c, ctx, tm::refl(tm::ivar("u")), bad) == ErrorKind::EqualityFailure);
}

TEST_CASE("contexts reject duplicates and forward references") {
  auto m = prelude();
  Checker c(m.sig);
  DualContext dup;
  dup.intuitionistic.push_back({"u", ty::base("A")});
  dup.linear.push_back({"u", ty::base("B")});
  CHECK_THROWS_AS(c.check_context(dup), CheckError);
  DualContext fwd;
  fwd.intuitionistic.push_back({"p", ty::base("P", {tm::ivar("u")})});
  fwd.intuitionistic.push_back({"u", ty::base("A")});
  try {
    c.check_context(fwd);
    FAIL("accepted");
  } catch (const CheckError& e) {
    CHECK(e.kind == ErrorKind::IllFormedContext);
  }
  DualContext ok;
  ok.intuitionistic.push_back({"u", ty::base("A")});
  ok.linear.push_back({"p", ty::base("P", {tm::ivar("u")})});
  CHECK(c.check_context(ok).rule == "Lin-C-Ext");
}

TEST_CASE("eliminating 0 absorbs the remaining context") {
  auto m = prelude();
  Checker c(m.sig);
  DualContext ctx;
  ctx.linear.push_back({"z", ty::zero()});
  ctx.linear.push_back({"x", ty::base("A")});
  auto t = parse_term("false z", m.sig, {{"z", true}, {"x", true}});
  CHECK_NOTHROW(c.check_term(ctx, t, ty::base("B")));
}

TEST_CASE("case consumes the scrutinee once and each branch the rest") {
  auto m = prelude();
  Checker c(m.sig);
  DualContext ctx;
  ctx.linear.push_back({"s", parse_type("A + A", m.sig)});
  ctx.linear.push_back({"w", ty::base("B")});
  auto t = parse_term("case s of inl p -> p (*) w || inr q -> q (*) w", m.sig, {{"s", true}, {"w", true}});
  auto j = c.check_term(ctx, t, parse_type("A * B", m.sig));
  CHECK(j.rule == "⊕-E");
}

TEST_CASE("signatures are checked in order") {
  CHECK_NOTHROW(Checker(prelude().sig).check_signature());
  auto m = prelude("const c : P(b).");
  CHECK_THROWS_AS(Checker(m.sig).check_signature(), CheckError);
}
