#include "doctest.h"
#include "ildtt/oracle.hpp"
#include "ildtt/parser.hpp"

using namespace ildtt;

namespace {

Module mod() {
  return parse_module(R"(
    type A.
    const a : A.
  )");
}

DualContext two_a() {
  DualContext ctx;
  ctx.linear.push_back({"x", ty::base("A")});
  ctx.linear.push_back({"y", ty::base("A")});
  return ctx;
}

bool accepted(const Checker& c, const DualContext& ctx, const TermPtr& t) {
  try {
    c.check_term(ctx, t, t->elab);
    return true;
  } catch (const CheckError&) {
    return false;
  }
}

}  // namespace

TEST_CASE("the partition oracle on small terms") {
  auto ctx = two_a();
  auto x = tm::lvar("x"), y = tm::lvar("y");
  CHECK(partition_derivable(ctx, tm::tensor(x, y)));
  CHECK_FALSE(partition_derivable(ctx, tm::tensor(x, x)));
  CHECK_FALSE(partition_derivable(ctx, x));
  CHECK(partition_derivable(ctx, tm::with(tm::tensor(x, y), tm::tensor(y, x))));
  CHECK_FALSE(partition_derivable(ctx, tm::with(tm::tensor(x, y), x)));
  CHECK(partition_derivable(ctx, tm::unit()));
  CHECK(partition_derivable(ctx, tm::tensor(x, tm::unit())));
  // y is hidden under the bang
  CHECK_FALSE(partition_derivable(ctx, tm::tensor(x, tm::bang(y))));
}

TEST_CASE("linear variables are counted in the context and under binders") {
  auto t = tm::let_tensor(tm::lvar("x"), "u", "v", tm::tensor(tm::lvar("v"), tm::lvar("u")));
  DualContext ctx;
  ctx.linear.push_back({"x", ty::tensor(ty::base("A"), ty::base("A"))});
  CHECK(linear_variable_count(ctx, t) == 3);
}

TEST_CASE("every refuted mutant is rejected and every derivable one accepted") {
  auto m = mod();
  Checker c(m.sig);
  auto ctx = two_a();
  auto a = ty::tensor(ty::base("A"), ty::base("A"));
  auto t = c.check_term(ctx, parse_term("y (*) x", m.sig, {{"x", true}, {"y", true}}), a).term;
  auto ms = mutants(m.sig, ctx, t);
  std::size_t duplicates = 0, drops = 0;
  for (const auto& mu : ms) {
    INFO(mu.description);
    CHECK(accepted(c, mu.ctx, mu.term) == partition_derivable(mu.ctx, mu.term));
    CHECK_FALSE(partition_derivable(mu.ctx, mu.term));
    duplicates += mu.kind == MutationKind::Duplicate;
    drops += mu.kind != MutationKind::Duplicate;
  }
  // each occurrence can become the other variable or the constant
  CHECK(duplicates == 2);
  CHECK(drops >= 3);
}

TEST_CASE("closed inhabitants") {
  auto m = mod();
  CHECK(alpha_eq(closed_inhabitant(m.sig, ty::base("A")), tm::constant("a")));
  CHECK(closed_inhabitant(m.sig, ty::unit())->kind == TermKind::Star);
  CHECK(closed_inhabitant(m.sig, ty::zero()) == nullptr);
  auto p = closed_inhabitant(m.sig, ty::tensor(ty::base("A"), ty::top()));
  REQUIRE(p);
  CHECK(p->kind == TermKind::TensorPair);
}
