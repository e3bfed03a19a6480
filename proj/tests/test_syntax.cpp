#include "doctest.h"
#include "ildtt/syntax.hpp"

using namespace ildtt;

namespace {
TypePtr A() { return ty::base("A"); }
TypePtr B() { return ty::base("B"); }
}  // namespace

TEST_CASE("intuitionistic substitution replaces the variable itself") {
  auto r = subst_int(tm::ivar("x"), "x", tm::constant("a"));
  CHECK(alpha_eq(r, tm::constant("a")));
}

TEST_CASE("substitution leaves bound occurrences alone") {
  auto t = tm::pi_lam("x", A(), tm::ivar("x"));
  auto r = subst_int(t, "x", tm::constant("a"));
  CHECK(alpha_eq(r, t));
}

TEST_CASE("substitution under a sigma binder reaches free occurrences only") {
  auto s = ty::sigma("y", B(), ty::id(B(), tm::ivar("x"), tm::ivar("y")));
  auto r = subst_int(s, "x", tm::constant("c"));
  auto fv_before = free_vars(s);
  auto fv_after = free_vars(r);
  CHECK(fv_before.intuitionistic == std::set<std::string>{"x"});
  CHECK(fv_after.intuitionistic.empty());
  CHECK(alpha_eq(r, ty::sigma("y", B(), ty::id(B(), tm::constant("c"), tm::ivar("y")))));
}

TEST_CASE("substitution renames binders that would capture") {
  // (Sig (!y : !B) Id !B (x, y))[y/x] must not capture the substituted y
  auto s = ty::sigma("y", B(), ty::id(B(), tm::ivar("x"), tm::ivar("y")));
  auto r = subst_int(s, "x", tm::ivar("y"));
  REQUIRE(r->kind == TypeKind::Sigma);
  CHECK(r->name != "y");
  CHECK(free_vars(r).intuitionistic == std::set<std::string>{"y"});
  CHECK(alpha_eq(r, ty::sigma("w", B(), ty::id(B(), tm::ivar("y"), tm::ivar("w")))));
}

TEST_CASE("linear substitution") {
  auto r = subst_lin(tm::tensor(tm::lvar("x"), tm::lvar("y")), "x", tm::constant("a"));
  CHECK(alpha_eq(r, tm::tensor(tm::constant("a"), tm::lvar("y"))));

  auto s = subst_lin(tm::let_star(tm::lvar("x"), tm::lvar("y")), "y", tm::constant("b"));
  CHECK(alpha_eq(s, tm::let_star(tm::lvar("x"), tm::constant("b"))));

  // with-pairs share their linear context, so both components are hit
  auto w = subst_lin(tm::fst(tm::with(tm::lvar("x"), tm::lvar("x"))), "x", tm::constant("a"));
  CHECK(alpha_eq(w, tm::fst(tm::with(tm::constant("a"), tm::constant("a")))));
}

TEST_CASE("namespaces are separate") {
  // an intuitionistic substitution does not touch a linear variable of the same name
  auto t = tm::tensor(tm::lvar("x"), tm::bang(tm::ivar("x")));
  auto r = subst_int(t, "x", tm::constant("a"));
  CHECK(alpha_eq(r, tm::tensor(tm::lvar("x"), tm::bang(tm::constant("a")))));
}

TEST_CASE("alpha equivalence") {
  CHECK(alpha_eq(tm::lam("x", A(), tm::lvar("x")), tm::lam("y", A(), tm::lvar("y"))));
  CHECK_FALSE(alpha_eq(tm::lam("x", A(), tm::lvar("x")), tm::lam("x", A(), tm::unit())));
  CHECK_FALSE(alpha_eq(tm::lam("x", A(), tm::lvar("x")), tm::lam("x", B(), tm::lvar("x"))));
  auto u = ty::pi("x", A(), ty::sigma("y", A(), ty::unit()));
  auto v = ty::pi("y", A(), ty::sigma("x", A(), ty::unit()));
  CHECK(alpha_eq(u, v));
  // bound vs free must differ
  CHECK_FALSE(alpha_eq(tm::lam("x", A(), tm::lvar("x")), tm::lam("y", A(), tm::lvar("x"))));
}

TEST_CASE("free variables") {
  auto fv = free_vars(tm::tensor(tm::lvar("x"), tm::lvar("x")));
  CHECK(fv.linear.count("x") == 2);
  auto fb = free_vars(tm::bang(tm::ivar("a")));
  CHECK(fb.linear.empty());
  CHECK(fb.intuitionistic == std::set<std::string>{"a"});
  auto lt = tm::let_tensor(tm::lvar("t"), "x", "y", tm::app(tm::lvar("x"), tm::lvar("z")));
  auto fl = free_vars(lt);
  CHECK(fl.linear.count("t") == 1);
  CHECK(fl.linear.count("x") == 0);
  CHECK(fl.linear.count("y") == 0);
  CHECK(fl.linear.count("z") == 1);
}

TEST_CASE("substitution lemma on a sample") {
  // u[a/x][b/y] = u[b/y][a[b/y]/x] for x not free in b
  auto u = tm::tensor(tm::bang(tm::ivar("x")), tm::bang(tm::ivar("y")));
  auto a = tm::constant("f", {tm::ivar("y")});
  auto b = tm::constant("c");
  auto lhs = subst_int(subst_int(u, "x", a), "y", b);
  auto rhs = subst_int(subst_int(u, "y", b), "x", subst_int(a, "y", b));
  CHECK(alpha_eq(lhs, rhs));
}

TEST_CASE("printing renames shadowing binders") {
  auto inner = tm::pi_lam("x", A(), tm::bang(tm::ivar("x")));
  auto outer = tm::pi_lam("x", A(), tm::tensor(tm::bang(tm::ivar("x")), tm::app(inner, tm::star())));
  auto s = to_string(outer);
  CHECK(s.find("lam (!x1 : !A)") != std::string::npos);
}

TEST_CASE("case branches binding the same name are renamed consistently") {
  // case s of inl x -> x (*) y || inr x -> y (*) x, with y := x
  auto t = tm::case_of(tm::lvar("s"), "x", tm::tensor(tm::lvar("x"), tm::lvar("y")), "x",
                       tm::tensor(tm::lvar("y"), tm::lvar("x")));
  auto r = subst_lin(t, "y", tm::lvar("x"));
  auto expect = tm::case_of(tm::lvar("s"), "u", tm::tensor(tm::lvar("u"), tm::lvar("x")), "v",
                            tm::tensor(tm::lvar("x"), tm::lvar("v")));
  CHECK(alpha_eq(r, expect));
  auto lin = free_vars(r).linear;
  CHECK(std::set<std::string>(lin.begin(), lin.end()) == std::set<std::string>{"s", "x"});
}
