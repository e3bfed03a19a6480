#include "doctest.h"
#include "ildtt/parser.hpp"

using namespace ildtt;

TEST_CASE("definitions parse to the expected nodes") {
  auto m = parse_module("type A.\ndef id := lam (x : A) x.\ndef u := star.");
  REQUIRE(m.defs.size() == 2);
  const auto& id = m.defs[0].term;
  REQUIRE(id->kind == TermKind::Lam);
  CHECK(id->binders[0] == "x");
  CHECK(id->kids[0]->kind == TermKind::LinVar);
  CHECK(m.defs[1].term->kind == TermKind::Star);
}

TEST_CASE("unterminated input reports end of input") {
  try {
    parse_module("type A.\ndef f := lam (x");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(std::string(e.what()).find("end of input") != std::string::npos);
  }
}

TEST_CASE("declarations, models and comments") {
  auto m = parse_module(R"(
    -- a base type and a family over 2
    type A.
    type F (x : 2).
    const a : A.
    const c (x : A) : F(tt).
    model A := pointed { a0*, a1, a2 }.
    model F := family { tt => pointed { p*, q }, ff => pointed { r*, s, t } }.
    model a := a1.
  )");
  CHECK(m.sig.types.size() == 2);
  CHECK(m.sig.consts.size() == 2);
  REQUIRE(m.sig.models.size() == 3);
  const auto* ma = m.sig.find_model("A");
  REQUIRE(ma);
  CHECK(ma->is_type);
  CHECK(ma->entries[0].set.labels.size() == 3);
  CHECK(ma->entries[0].set.base == 0);
  const auto* mf = m.sig.find_model("F");
  REQUIRE(mf->entries.size() == 2);
  CHECK(mf->entries[1].key == std::vector<std::string>{"ff"});
  CHECK(m.sig.find_model("a")->entries[0].element == "a1");
}

TEST_CASE("type grammar") {
  auto m = parse_module("type A. type B (x : A).");
  auto t = parse_type("Pi (!x : !A) Sig (!y : !A) Id !A (x, y) * B(y)", m.sig);
  REQUIRE(t->kind == TypeKind::Pi);
  REQUIRE(t->rhs->kind == TypeKind::Sigma);
  REQUIRE(t->rhs->rhs->kind == TypeKind::Tensor);
  CHECK(t->rhs->rhs->lhs->kind == TypeKind::Id);
  CHECK(t->rhs->rhs->rhs->args[0]->kind == TermKind::IntVar);
  auto l = parse_type("A -o A -o I", m.sig);
  REQUIRE(l->kind == TypeKind::Lollipop);
  CHECK(l->rhs->kind == TypeKind::Lollipop);
  CHECK(parse_type("!A & Top + 0 * 2", m.sig)->kind == TypeKind::Plus);
  CHECK_THROWS_AS(parse_type("C", m.sig), ParseError);
}

TEST_CASE("term grammar") {
  auto m = parse_module("type A. type B.");
  std::vector<Binding> ctx = {{"p", true}, {"a", false}};
  auto lt = parse_term("let p be x (*) y in y (*) x", m.sig, ctx);
  REQUIRE(lt->kind == TermKind::LetTensor);
  CHECK(lt->kids[1]->kind == TermKind::TensorPair);
  CHECK(parse_term("let p be !x in bang x", m.sig, ctx)->kind == TermKind::LetBang);
  CHECK(parse_term("let p be !x (*) y in y", m.sig, ctx)->kind == TermKind::LetSigma);
  CHECK(parse_term("let p be star in star", m.sig, ctx)->kind == TermKind::LetStar);
  auto cs = parse_term("case p of inl x -> inr x || inr y -> inl y", m.sig, ctx);
  REQUIRE(cs->kind == TermKind::Case);
  CHECK(cs->kids[1]->kind == TermKind::Inr);
  auto li = parse_term("let (a, a, p) be (z, z, refl !z) in [u v. I] p", m.sig, ctx);
  REQUIRE(li->kind == TermKind::LetId);
  CHECK(li->kids[0]->kind == TermKind::IntVar);
  auto it = parse_term("if [x. I] tt then star else star", m.sig, ctx);
  REQUIRE(it->kind == TermKind::If);
  CHECK(it->annots[0]->kind == TypeKind::Unit);
  auto ap = parse_term("(lam (x : A) x) p", m.sig, ctx);
  CHECK(ap->kind == TermKind::App);
  CHECK(parse_term("<fst p, snd p>", m.sig, ctx)->kind == TermKind::WithPair);
  CHECK(parse_term("refl !a", m.sig, ctx)->kind == TermKind::Refl);
  CHECK(parse_term("!a (*) p", m.sig, ctx)->kids[0]->kind == TermKind::BangIntro);
  CHECK_THROWS_AS(parse_term("q", m.sig, ctx), ParseError);
}

TEST_CASE("printed terms parse back") {
  auto m = parse_module("type A. type B (x : A).");
  const char* samples[] = {
      "lam (!x : !A) lam (y : B(x)) let y be star in star",
      "lam (p : A * A) let p be x (*) y in y (*) x",
      "lam (!x : !A) (bang x) (*) star",
      "lam (p : A + A) case p of inl x -> inr x || inr y -> inl y",
      "lam (!x : !2) if [b. I & I] x then <star, star> else <star, star>",
      "lam (!x : !A) lam (!y : !A) lam (p : Id !A (x, y)) let (x, y, p) be (z, z, refl !z) in [u v. I] star",
      "lam (!x : !A) lam (!x : !A) bang x",
  };
  for (const char* src : samples) {
    auto t = parse_term(src, m.sig);
    auto again = parse_term(to_string(t), m.sig);
    CHECK_MESSAGE(alpha_eq(t, again), to_string(t));
  }
}
