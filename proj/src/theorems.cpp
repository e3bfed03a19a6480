#include "ildtt/theorems.hpp"

#include <functional>
#include <map>
#include <memory>

#include "ildtt/checker.hpp"
#include "ildtt/interpreter.hpp"
#include "ildtt/parser.hpp"

namespace ildtt::thm {

extern const char* const kWitnessSource;

const std::string& witness_source() {
  static const std::string s(kWitnessSource);
  return s;
}

namespace {

using fam::IndexSet;
using fam::PointedFam;
using fam::PointedSet;
using fam::Value;
namespace val = fam::val;
using Fn = std::function<Value(const Value&)>;

std::string sz(std::size_t n) { return std::to_string(n); }

// φ and ψ are mutually inverse, basepoint-preserving bijections l ≅ r.
fam::BijectionCheck iso(const PointedSet& l, const PointedSet& r, const Fn& phi, const Fn& psi) {
  auto c = fam::check_inverse(l.elems, r.elems, phi, psi);
  if (!c.ok) return c;
  auto back = fam::check_bijection(r.elems, l.elems, psi);
  if (!back.ok) return back;
  return c;
}

IsoCount count(const PointedSet& l, const PointedSet& r, const Fn& phi, const Fn& psi) {
  return {l.size(), r.size(), iso(l, r, phi, psi)};
}

// The explicit maps. Fiber-level versions take the fibers they need.

Value pi_to_lolli(const PointedSet& a, const Value& f) {
  std::vector<std::pair<Value, Value>> t;
  for (const auto& x : a.elems) t.emplace_back(val::box(x), fam::apply(f, x));
  return val::fun(std::move(t));
}

Value lolli_to_pi(const PointedSet& a, const Value& g) {
  std::vector<std::pair<Value, Value>> t;
  for (const auto& x : a.elems) t.emplace_back(x, fam::apply(g, val::box(x)));
  return val::fun(std::move(t));
}

Value sigma_to_tensor(const Value& p) {
  if (p.is_base()) return p;
  return val::pair(val::box(p.kids[0]), p.kids[1]);
}

Value tensor_to_sigma(const Value& q) {
  if (q.is_base()) return q;
  return val::dep(q.kids[0].kids[0], q.kids[1]);
}

Value bang_to_sigma(const Value& b) { return b.is_base() ? b : val::dep(b.kids[0], val::one()); }
Value sigma_to_bang(const Value& p) { return p.is_base() ? p : val::box(p.kids[0]); }

Value bang_top_to_unit(const Value& b) { return b.is_base() ? b : val::one(); }
Value unit_to_bang_top(const Value& u) { return u.is_base() ? u : val::box(val::star()); }

Value bang_with_split(const Value& b) {
  if (b.is_base()) return b;
  return val::pair(val::box(fam::project(b.kids[0], 0)), val::box(fam::project(b.kids[0], 1)));
}

Value bang_with_merge(const Value& q) {
  if (q.is_base()) return q;
  return val::box(val::tuple({q.kids[0].kids[0], q.kids[1].kids[0]}));
}

// Over 2: tt is the non-base point One, ff the basepoint.
Value pi_two_to_with(const Value& f) { return val::tuple({fam::apply(f, val::one()), fam::apply(f, val::star())}); }

Value with_to_pi_two(const Value& t) {
  return val::fun({{val::one(), fam::project(t, 0)}, {val::star(), fam::project(t, 1)}});
}

Value sigma_two_to_plus(const Value& p) {
  if (p.is_base()) return p;
  return val::inj(p.kids[0].is_base() ? "r" : "l", p.kids[1]);
}

Value plus_to_sigma_two(const Value& s) {
  if (s.is_base()) return s;
  return val::dep(s.label == "l" ? val::one() : val::star(), s.kids[0]);
}

// Sweep bookkeeping: the first failure becomes the item's witness.
struct Sweep {
  Item item;
  std::size_t families = 0;
  std::size_t maps = 0;

  void fail(const std::string& where, const fam::BijectionCheck& c) {
    if (!item.pass) return;
    item.pass = false;
    item.details = c.detail;
    item.witness = where + (c.witness ? "; element " + fam::to_string(*c.witness) : "") + ": " + c.detail;
  }
  void fail(const std::string& where, const std::string& msg) { fail(where, fam::BijectionCheck{false, msg, {}}); }
};

std::string fam_sizes(const PointedFam& a) {
  std::string out = "[";
  for (std::size_t i = 0; i < a.index.size(); ++i) out += (i ? "," : "") + sz(a.at(a.index[i]).size());
  return out + "]";
}

// Check a fiberwise isomorphism between families over the same index.
void check_fibers(Sweep& sw, const std::string& where, const PointedFam& l, const PointedFam& r,
                  const std::function<Fn(const Value&)>& phi, const std::function<Fn(const Value&)>& psi) {
  if (l.index != r.index) return sw.fail(where, "index sets differ");
  for (const auto& s : l.index) {
    auto c = iso(l.at(s), r.at(s), phi(s), psi(s));
    if (!c.ok) return sw.fail(where + ", s=" + fam::to_string(s), c);
  }
}

// Π/⊸ and Σ/⊗ sides over constant families a, b.
struct BangIndexSides {
  PointedFam pi, lolli, sigma, tensor;
};

BangIndexSides bang_index_sides(const PointedFam& a, const PointedFam& b) {
  auto c = fam::comprehend(a);
  auto bp = fam::reindex(c.p, b);
  BangIndexSides out;
  out.pi = fam::pi_fam(a, bp);
  out.sigma = fam::sigma_fam(a, bp);
  out.lolli = fam::make_fam(a.index, [&](const Value& s) { return fam::hom(fam::bang(a.at(s)), b.at(s)); });
  out.tensor = fam::tensor_fam(fam::bang_fam(a), b);
  return out;
}

std::vector<IndexSet> index_sets(std::size_t max) {
  std::vector<IndexSet> out;
  for (std::size_t n = 1; n <= max; ++n) out.push_back(fam::index_set(n));
  return out;
}

// The witness module, parsed and checked once per report.
struct Witnesses {
  Module m;
  std::unique_ptr<Checker> checker;
  std::map<std::string, CheckedJudgement> defs;
  std::map<std::string, std::string> errors;

  Witnesses() : m(parse_module(witness_source(), "witnesses.ildtt")) {
    checker = std::make_unique<Checker>(m.sig);
    for (const auto& d : m.defs) {
      try {
        defs.emplace(d.name, checker->check_definition(d));
      } catch (const CheckError& e) {
        errors.emplace(d.name, e.what());
      }
    }
  }

  Item typecheck(const std::string& name, const std::vector<std::string>& names) const {
    Item it{name, true, "", {}};
    for (const auto& n : names) {
      if (auto e = errors.find(n); e != errors.end()) {
        it.pass = false;
        it.details = n + ": " + e->second;
        it.witness = n;
        return it;
      }
      if (!defs.count(n)) {
        it.pass = false;
        it.details = "missing witness " + n;
        return it;
      }
    }
    it.details = "typechecked:";
    for (const auto& n : names) it.details += " " + n;
    return it;
  }

  // back ∘ there ≡ id, proved by judgEqual and confirmed in a random model.
  Item round_trip(const std::string& name, const std::string& there, const std::string& back,
                  std::uint64_t seed) const {
    Item it{name, true, "", {}};
    if (!defs.count(there) || !defs.count(back)) {
      it.pass = false;
      it.details = "witness does not typecheck";
      return it;
    }
    const auto& f = defs.at(there);
    const auto& g = defs.at(back);
    auto dom = f.type->lhs;
    DualContext ctx;
    ctx.linear.push_back({"v", dom});
    try {
      auto lhs = checker->check_term(ctx, tm::app(g.term, tm::app(f.term, tm::lvar("v"))), dom).term;
      auto rhs = checker->check_term(ctx, tm::lvar("v"), dom).term;
      if (!judg_equal(lhs, rhs, dom, checker->equality_config())) {
        it.pass = false;
        it.details = "judgEqual did not prove " + back + " (" + there + " v) = v";
        it.witness = to_string(normalize(lhs).term);
        return it;
      }
      sem::Interpreter in(m.sig, {.use_bindings = false, .allow_random = true, .seed = seed, .min_fiber = 2});
      auto r = sem::check_equation(in, ctx, lhs, rhs, dom);
      if (!r.ok) {
        it.pass = false;
        it.details = "denotations differ at seed " + sz(seed);
        it.witness = r.detail;
        return it;
      }
      it.details = back + " . " + there + " = id, proved; denotations agree on " + sz(r.inputs) + " inputs (seed " +
                   sz(seed) + ")";
    } catch (const std::exception& e) {
      it.pass = false;
      it.details = e.what();
    }
    return it;
  }
};

}  // namespace

IsoCount pi_vs_lolli(std::size_t a, std::size_t b) {
  auto A = fam::sized_set(a, "a"), B = fam::sized_set(b, "b");
  return count(fam::pi(A.elems, [&](const Value&) { return B; }), fam::hom(fam::bang(A), B),
               [&](const Value& f) { return pi_to_lolli(A, f); }, [&](const Value& g) { return lolli_to_pi(A, g); });
}

IsoCount sigma_vs_tensor(std::size_t a, std::size_t b) {
  auto A = fam::sized_set(a, "a"), B = fam::sized_set(b, "b");
  return count(fam::sigma(A.elems, [&](const Value&) { return B; }), fam::smash(fam::bang(A), B), sigma_to_tensor,
               tensor_to_sigma);
}

IsoCount sigma_unit_vs_bang(std::size_t a) {
  auto A = fam::sized_set(a, "a");
  return count(fam::sigma(A.elems, [](const Value&) { return fam::unit_set(); }), fam::bang(A), sigma_to_bang,
               bang_to_sigma);
}

IsoCount bang_top_vs_unit() {
  return count(fam::bang(fam::point_set()), fam::unit_set(), bang_top_to_unit, unit_to_bang_top);
}

IsoCount bang_with_vs_tensor(std::size_t a, std::size_t b) {
  auto A = fam::sized_set(a, "a"), B = fam::sized_set(b, "b");
  return count(fam::bang(fam::product({A, B})), fam::smash(fam::bang(A), fam::bang(B)), bang_with_split,
               bang_with_merge);
}

IsoCount pi_two_vs_with(std::size_t att, std::size_t aff) {
  auto T = fam::sized_set(att, "t"), F = fam::sized_set(aff, "f");
  auto fiber = [&](const Value& i) { return i.is_base() ? F : T; };
  return count(fam::pi(fam::unit_set().elems, fiber), fam::product({T, F}), pi_two_to_with, with_to_pi_two);
}

IsoCount sigma_two_vs_plus(std::size_t att, std::size_t aff) {
  auto T = fam::sized_set(att, "t"), F = fam::sized_set(aff, "f");
  auto fiber = [&](const Value& i) { return i.is_base() ? F : T; };
  return count(fam::sigma(fam::unit_set().elems, fiber), fam::plus(T, F), sigma_two_to_plus, plus_to_sigma_two);
}

std::vector<Item> check_bang_index(const Bounds& bounds, std::uint64_t seed) {
  Sweep pi{{"bang-index.pi-lolli", true, "", {}}}, sigma{{"bang-index.sigma-tensor", true, "", {}}};
  auto sets = index_sets(bounds.max_index);
  for (const auto& S : sets)
    for (std::size_t p = 1; p <= bounds.max_fiber; ++p)
      for (std::size_t q = 1; q <= bounds.max_fiber; ++q) {
        auto a = fam::const_fam(S, fam::sized_set(p, "a"));
        auto b = fam::const_fam(S, fam::sized_set(q, "b"));
        auto sides = bang_index_sides(a, b);
        std::string where = "|S|=" + sz(S.size()) + ", |A|=" + sz(p) + ", |B|=" + sz(q);
        ++pi.families;
        ++sigma.families;
        check_fibers(
            pi, where, sides.pi, sides.lolli,
            [&](const Value& s) { return [&, s](const Value& f) { return pi_to_lolli(a.at(s), f); }; },
            [&](const Value& s) { return [&, s](const Value& g) { return lolli_to_pi(a.at(s), g); }; });
        check_fibers(
            sigma, where, sides.sigma, sides.tensor, [](const Value&) { return Fn(sigma_to_tensor); },
            [](const Value&) { return Fn(tensor_to_sigma); });
        // Naturality: the bijections are given uniformly in s, so they are
        // natural once both sides commute with reindexing.
        for (const auto& S2 : sets)
          for (const auto& f : fam::all_index_maps(S2, S)) {
            auto moved = bang_index_sides(fam::reindex(f, a), fam::reindex(f, b));
            ++pi.maps;
            ++sigma.maps;
            std::string at = where + ", along a map from |S'|=" + sz(S2.size());
            if (!(fam::reindex(f, sides.pi) == moved.pi) || !(fam::reindex(f, sides.lolli) == moved.lolli))
              pi.fail(at, "not stable under reindexing");
            if (!(fam::reindex(f, sides.sigma) == moved.sigma) || !(fam::reindex(f, sides.tensor) == moved.tensor))
              sigma.fail(at, "not stable under reindexing");
          }
      }
  for (auto* sw : {&pi, &sigma}) {
    if (!sw->item.pass) continue;
    sw->item.details = sz(sw->families) + " constant families, natural along " + sz(sw->maps) + " index maps";
  }
  if (bounds.max_fiber >= 4) {
    auto c = pi_vs_lolli(3, 4);
    pi.item.details += "; |A|=3, |B|=4: " + sz(c.lhs) + " = " + sz(c.rhs);
    auto d = sigma_vs_tensor(3, 4);
    sigma.item.details += "; |A|=3, |B|=4: " + sz(d.lhs) + " = " + sz(d.rhs);
  }

  Witnesses w;
  return {pi.item,
          sigma.item,
          w.typecheck("bang-index.witnesses", {"pi_to_lolli", "lolli_to_pi", "sigma_to_tensor", "tensor_to_sigma"}),
          w.round_trip("bang-index.pi-roundtrip", "pi_to_lolli", "lolli_to_pi", seed),
          w.round_trip("bang-index.lolli-roundtrip", "lolli_to_pi", "pi_to_lolli", seed),
          w.round_trip("bang-index.sigma-roundtrip", "sigma_to_tensor", "tensor_to_sigma", seed),
          w.round_trip("bang-index.tensor-roundtrip", "tensor_to_sigma", "sigma_to_tensor", seed)};
}

std::vector<Item> check_bang_sigma(const Bounds& bounds, std::uint64_t seed) {
  Sweep sem{{"bang-sigma.semantic", true, "", {}}};
  Sweep fams{{"bang-sigma.families", true, "", {}}};
  for (const auto& S : index_sets(bounds.max_index))
    for (const auto& a : fam::all_fams(S, bounds.max_fiber, "a")) {
      auto c = fam::comprehend(a);
      auto sig = fam::sigma_fam(a, fam::const_fam(c.total, fam::unit_set()));
      auto bang = fam::bang_fam(a);
      std::string where = "A = " + fam_sizes(a);
      ++sem.families;
      ++fams.families;
      check_fibers(
          sem, where, sig, bang, [](const Value&) { return Fn(sigma_to_bang); },
          [](const Value&) { return Fn(bang_to_sigma); });
      if (sig.index != bang.index) fams.fail(where, "index sets differ");
      for (const auto& s : sig.index)
        if (sig.at(s).size() != bang.at(s).size())
          fams.fail(where + ", s=" + fam::to_string(s), sz(sig.at(s).size()) + " != " + sz(bang.at(s).size()));
    }
  if (sem.item.pass) {
    sem.item.details = sz(sem.families) + " families";
    if (bounds.max_fiber >= 3) {
      auto c = sigma_unit_vs_bang(3);
      sem.item.details += "; |A|=3: " + sz(c.lhs) + " = " + sz(c.rhs);
    }
  }
  if (fams.item.pass) fams.item.details = "bangFam(A) and sigmaFam(A, I) agree on " + sz(fams.families) + " families";

  Witnesses w;
  std::vector<Item> out = {sem.item, fams.item};
  out.push_back(w.typecheck("bang-sigma.intro", {"bang_intro", "bang_to_sigma"}));
  out.push_back(w.typecheck("bang-sigma.elim", {"sigma_to_bang"}));

  // sigma_to_bang (bang_intro !a) ≡ bang a
  Item comp{"bang-sigma.computation", true, "", {}};
  if (w.defs.count("sigma_to_bang") && w.defs.count("bang_intro")) {
    try {
      DualContext ctx;
      ctx.intuitionistic.push_back({"a", ty::base("A")});
      auto bang_a = ty::bang(ty::base("A"));
      auto lhs = w.checker
                     ->check_term(ctx,
                                  tm::app(w.defs.at("sigma_to_bang").term,
                                          tm::pi_app(w.defs.at("bang_intro").term, tm::ivar("a"))),
                                  bang_a)
                     .term;
      auto rhs = w.checker->check_term(ctx, tm::bang(tm::ivar("a")), bang_a).term;
      sem::Interpreter in(w.m.sig, {.use_bindings = false, .seed = seed, .min_fiber = 2});
      auto r = sem::check_equation(in, ctx, lhs, rhs, bang_a);
      comp.pass = judg_equal(lhs, rhs, bang_a) && r.ok;
      comp.details = comp.pass ? "elimination after introduction is bang a; " + sz(r.points) + " points agree"
                               : "not proved: " + to_string(normalize(lhs).term);
      if (!r.ok) comp.witness = r.detail;
    } catch (const std::exception& e) {
      comp.pass = false;
      comp.details = e.what();
    }
  } else {
    comp.pass = false;
    comp.details = "witness does not typecheck";
  }
  out.push_back(comp);
  out.push_back(w.round_trip("bang-sigma.uniqueness-sigma", "sigma_to_bang", "bang_to_sigma", seed));
  out.push_back(w.round_trip("bang-sigma.uniqueness-bang", "bang_to_sigma", "sigma_to_bang", seed));
  return out;
}

std::vector<Item> check_seely(const Bounds& bounds, std::uint64_t seed) {
  Item top{"seely.top", true, "", {}};
  auto t = bang_top_vs_unit();
  top.pass = t.check.ok;
  top.details = "|!Top| = " + sz(t.lhs) + " = |I| = " + sz(t.rhs);
  if (!t.check.ok) top.witness = t.check.detail;

  Sweep with{{"seely.with", true, "", {}}};
  for (std::size_t a = 1; a <= bounds.max_fiber; ++a)
    for (std::size_t b = 1; b <= bounds.max_fiber; ++b) {
      ++with.families;
      auto c = bang_with_vs_tensor(a, b);
      if (!c.check.ok) with.fail("|A|=" + sz(a) + ", |B|=" + sz(b), c.check);
    }
  if (with.item.pass) {
    with.item.details = sz(with.families) + " fiber pairs";
    if (bounds.max_fiber >= 3) {
      auto c = bang_with_vs_tensor(2, 3);
      with.item.details += "; |A|=2, |B|=3: " + sz(c.lhs) + " = " + sz(c.rhs);
    }
  }

  Witnesses w;
  return {top,
          with.item,
          w.typecheck("seely.witnesses", {"seely_split", "seely_merge", "seely_top_in", "seely_top_out"}),
          w.round_trip("seely.with-roundtrip", "seely_split", "seely_merge", seed),
          w.round_trip("seely.tensor-roundtrip", "seely_merge", "seely_split", seed),
          w.round_trip("seely.top-roundtrip", "seely_top_in", "seely_top_out", seed),
          w.round_trip("seely.unit-roundtrip", "seely_top_out", "seely_top_in", seed)};
}

std::vector<Item> check_two_index(const Bounds& bounds, std::uint64_t seed) {
  Sweep pi{{"two-index.pi-with", true, "", {}}}, sigma{{"two-index.sigma-plus", true, "", {}}};
  for (const auto& S : index_sets(bounds.max_index)) {
    auto two = fam::two_fam(S);
    auto c = fam::comprehend(two);
    for (const auto& a : fam::all_fams(c.total, bounds.max_fiber, "a")) {
      auto at = [&](const Value& s, bool tt) { return a.at(val::point({s, tt ? val::one() : val::star()})); };
      auto with = fam::make_fam(S, [&](const Value& s) { return fam::product({at(s, true), at(s, false)}); });
      auto plus = fam::make_fam(S, [&](const Value& s) { return fam::plus(at(s, true), at(s, false)); });
      std::string where = "A over S.2 = " + fam_sizes(a);
      ++pi.families;
      ++sigma.families;
      check_fibers(
          pi, where, fam::pi_fam(two, a), with, [](const Value&) { return Fn(pi_two_to_with); },
          [](const Value&) { return Fn(with_to_pi_two); });
      check_fibers(
          sigma, where, fam::sigma_fam(two, a), plus, [](const Value&) { return Fn(sigma_two_to_plus); },
          [](const Value&) { return Fn(plus_to_sigma_two); });
    }
  }
  for (auto* sw : {&pi, &sigma})
    if (sw->item.pass) sw->item.details = sz(sw->families) + " families over 2";
  if (bounds.max_fiber >= 3) {
    auto p = pi_two_vs_with(2, 3);
    pi.item.details += "; |A(tt)|=2, |A(ff)|=3: " + sz(p.lhs) + " = " + sz(p.rhs);
    auto s = sigma_two_vs_plus(2, 3);
    sigma.item.details += "; |A(tt)|=2, |A(ff)|=3: " + sz(s.lhs) + " = " + sz(s.rhs);
  }

  Witnesses w;
  return {pi.item,
          sigma.item,
          w.typecheck("two-index.witnesses", {"pi_to_with", "with_to_pi", "sigma_to_plus", "plus_to_sigma"}),
          w.round_trip("two-index.pi-roundtrip", "pi_to_with", "with_to_pi", seed),
          w.round_trip("two-index.with-roundtrip", "with_to_pi", "pi_to_with", seed),
          w.round_trip("two-index.sigma-roundtrip", "sigma_to_plus", "plus_to_sigma", seed),
          w.round_trip("two-index.plus-roundtrip", "plus_to_sigma", "sigma_to_plus", seed)};
}

std::vector<Item> check_consistency(std::uint64_t seed) {
  Signature sig;
  Checker checker(sig);
  auto two = ty::two();
  auto tt = checker.check_term({}, tm::tt(), two).term;
  auto ff = checker.check_term({}, tm::ff(), two).term;
  std::vector<Item> out;

  Item kernel{"consistency.kernel", !judg_equal(tt, ff, two), "", {}};
  kernel.details = kernel.pass ? "judgEqual does not prove tt = ff" : "judgEqual proved tt = ff";
  out.push_back(kernel);

  auto ntt = normalize(tt).term, nff = normalize(ff).term;
  Item nf{"consistency.normal-forms", !alpha_eq(ntt, nff), "", {}};
  nf.details = "normal forms " + to_string(ntt) + " and " + to_string(nff);
  out.push_back(nf);

  // tt and ff as pointed maps I → ⟦2⟧
  sem::Interpreter in(sig, {.seed = seed});
  auto dtt = in.denote_term({}, tt, two), dff = in.denote_term({}, ff, two);
  const auto& pt = dtt.ctx.points.at(0);
  const auto& mtt = dtt.map.at(pt);
  const auto& mff = dff.map.at(pt);
  Item semantic{"consistency.semantic", mtt.table != mff.table, "", {}};
  semantic.details = "on the non-base point of I: tt -> " + in.label(mtt(val::one()), two, {}) + ", ff -> " +
                     in.label(mff(val::one()), two, {});
  out.push_back(semantic);

  auto wrong = sem::check_equation(in, {}, tt, ff, two);
  Item fault{"consistency.wrong-equation", !wrong.ok, "", {}};
  fault.details = wrong.ok ? "the soundness check accepted tt = ff" : "the soundness check rejects tt = ff";
  if (!wrong.ok) fault.witness = wrong.detail;
  out.push_back(fault);
  return out;
}

std::vector<Item> check_separation(const Bounds& bounds) {
  Item bang{"separation.bang", true, "", {}};
  for (std::size_t n = 1; n <= bounds.max_fiber; ++n) {
    auto a = fam::sized_set(n);
    if (fam::bang(a).size() == a.size()) {
      bang.pass = false;
      bang.witness = "|A|=" + sz(n);
    }
  }
  auto two = fam::bang(fam::sized_set(2)).size();
  bang.details = "|!A| = |A|+1 for every |A| <= " + sz(bounds.max_fiber) + "; |A|=2: |!A|=" + sz(two);

  // A family over a two-point index set with different fibers is not
  // reindexed from the one-point set, so it is a genuine dependency.
  Item dep{"separation.dependency", true, "", {}};
  auto s = fam::index_set(2);
  auto p = fam::make_fam(s, [&](const Value& i) { return fam::sized_set(i == s[0] ? 1 : 2); });
  auto one = fam::index_set(1);
  auto bang_map = fam::IndexMap{s, one, {{s[0], one[0]}, {s[1], one[0]}}};
  for (std::size_t n = 1; n <= bounds.max_fiber; ++n)
    if (fam::reindex(bang_map, fam::const_fam(one, fam::sized_set(n))) == p) {
      dep.pass = false;
      dep.witness = "constant fiber of size " + sz(n);
    }
  dep.details = "family with fibers " + fam_sizes(p) + " is not constant";
  return {bang, dep};
}

std::vector<Item> run_all(const Bounds& b, std::uint64_t seed) {
  std::vector<Item> out;
  for (auto&& part : {check_bang_index(b, seed), check_bang_sigma(b, seed), check_seely(b, seed), check_two_index(b, seed),
                      check_consistency(seed), check_separation(b)})
    out.insert(out.end(), part.begin(), part.end());
  return out;
}

}  // namespace ildtt::thm
