#include <set>

#include "doctest.h"
#include "ildtt/fam.hpp"

using namespace ildtt::fam;

namespace {

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

TEST_CASE("cardinality laws") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t m = 1; m <= 4; ++m) {
      auto x = sized_set(n, "x"), y = sized_set(m, "y");
      CAPTURE(n);
      CAPTURE(m);
      CHECK(smash(x, y).size() == (n - 1) * (m - 1) + 1);
      CHECK(plus(x, y).size() == n + m - 1);
      CHECK(product({x, y}).size() == n * m);
      CHECK(hom(x, y).size() == ipow(m, n - 1));
      CHECK(bang(x).size() == n + 1);
    }
  CHECK(smash(sized_set(3), sized_set(4)).size() == 7);
  CHECK(hom(sized_set(3), sized_set(2)).size() == 4);
  CHECK(product({}).size() == 1);
  CHECK(smash(sized_set(3), point_set()).size() == 1);
}

TEST_CASE("I is a unit for smash") {
  auto x = sized_set(3);
  auto r = check_bijection(smash(x, unit_set()).elems, x.elems,
                           [](const Value& v) { return v.is_base() ? v : v.kids[0]; });
  CHECK(r.ok);
}

TEST_CASE("comprehension, sigma, pi and id on constant families") {
  auto s2 = index_set(2);
  auto a = const_fam(s2, sized_set(3, "a"));
  CHECK(comprehend(a).total.size() == 6);

  auto s1 = index_set(1);
  auto a1 = const_fam(s1, sized_set(3, "a"));
  auto c = comprehend(a1);
  auto b = const_fam(c.total, sized_set(4, "b"));
  const auto& s = s1[0];
  CHECK(sigma_fam(a1, b).at(s).size() == 3 * 3 + 1);
  CHECK(pi_fam(a1, b).at(s).size() == 64);
  auto bi = const_fam(c.total, unit_set());
  CHECK(sigma_fam(a1, bi).at(s).size() == 4);

  auto idf = id_fam(a1, bi);
  CHECK(idf.index.size() == 9);
  std::size_t diagonal = 0;
  for (const auto& pt : idf.index) diagonal += idf.at(pt).size() == 2;
  CHECK(diagonal == 3);
}

TEST_CASE("bang is sigma over the unit family") {
  auto s = index_set(2);
  auto a = make_fam(s, [&](const Value& i) { return sized_set(i == s[0] ? 2 : 4); });
  auto c = comprehend(a);
  auto sig = sigma_fam(a, const_fam(c.total, unit_set()));
  auto bg = bang_fam(a);
  for (const auto& i : s) {
    auto r = check_inverse(
        bg.at(i).elems, sig.at(i).elems,
        [](const Value& v) { return v.is_base() ? v : val::dep(v.kids[0], val::one()); },
        [](const Value& v) { return v.is_base() ? v : val::box(v.kids[0]); });
    CHECK(r.ok);
  }
}

TEST_CASE("monoidal closure: currying is a bijection") {
  auto x = sized_set(2, "x"), y = sized_set(3, "y"), z = sized_set(2, "z");
  auto left = all_pointed_maps(smash(x, y), z);
  auto right = all_pointed_maps(x, hom(y, z));
  CHECK(left.size() == right.size());
  std::set<Value> curried;
  for (const auto& f : left) {
    std::vector<std::pair<Value, Value>> outer;
    for (const auto& a : x.non_base()) {
      std::vector<std::pair<Value, Value>> inner;
      for (const auto& b : y.non_base()) inner.emplace_back(b, f(val::pair(a, b)));
      outer.emplace_back(a, val::fun(inner));
    }
    curried.insert(val::fun(outer));
  }
  CHECK(curried.size() == right.size());
}

TEST_CASE("smash distributes over wedge") {
  auto x = sized_set(3, "x"), y = sized_set(2, "y"), z = sized_set(3, "z");
  auto lhs = smash(x, plus(y, z));
  auto rhs = plus(smash(x, y), smash(x, z));
  auto r = check_bijection(lhs.elems, rhs.elems, [](const Value& v) {
    if (v.is_base()) return v;
    const auto& in = v.kids[1];
    return val::inj(in.label, val::pair(v.kids[0], in.kids[0]));
  });
  CHECK(r.ok);
}

TEST_CASE("reindexing is strictly functorial") {
  auto s = index_set(3), t = index_set(2, "t"), u = index_set(2, "u");
  auto a = make_fam(s, [&](const Value& i) { return sized_set(i == s[1] ? 4 : 2); });
  for (const auto& f : all_index_maps(t, s))
    for (const auto& g : all_index_maps(u, t)) CHECK(reindex(compose(g, f), a) == reindex(g, reindex(f, a)));
  CHECK(reindex(identity_index(s), a) == a);
}

TEST_CASE("a failed bijection carries a witness") {
  auto x = sized_set(3);
  auto r = check_bijection(x.elems, x.elems, [&](const Value&) { return x.elems[1]; });
  CHECK_FALSE(r.ok);
  REQUIRE(r.witness);
  CHECK(r.witness->is_base());
}
