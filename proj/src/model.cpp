#include "ildtt/model.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace ildtt::model {

namespace f = ildtt::fam;
namespace val = ildtt::fam::val;

// ---------------------------------------------------------------------------
// Fam(Set★)

PointedFam ModelInstance::reindex(const IndexMap& map, const PointedFam& a) const { return f::reindex(map, a); }
Comprehension ModelInstance::comprehend(const PointedFam& a) const { return f::comprehend(a); }

IndexMap ModelInstance::pair(const IndexMap& map, const PointedFam&, const std::map<Value, Value>& section) const {
  IndexMap g;
  g.dom = map.dom;
  for (const auto& s : map.dom) g.table[s] = val::point({map(s), section.at(s)});
  return g;
}

PointedSet ModelInstance::unit() const { return f::unit_set(); }
PointedSet ModelInstance::tensor(const PointedSet& x, const PointedSet& y) const { return f::smash(x, y); }
PointedFam ModelInstance::sigma(const PointedFam& a, const PointedFam& b) const { return f::sigma_fam(a, b); }
PointedFam ModelInstance::pi(const PointedFam& a, const PointedFam& b) const { return f::pi_fam(a, b); }
PointedFam ModelInstance::id(const PointedFam& a, const PointedFam& b) const { return f::id_fam(a, b); }
PointedFam ModelInstance::bang(const PointedFam& a) const { return f::bang_fam(a); }
PointedFam ModelInstance::sigma_along(const IndexMap& map, const PointedFam& x) const {
  return f::sigma_along(map, x);
}

PointedFam ModelInstance::tensor_fam(const PointedFam& a, const PointedFam& b) const {
  return f::make_fam(a.index, [&](const Value& s) { return tensor(a.at(s), b.at(s)); });
}

// ---------------------------------------------------------------------------
// fault injection

const char* fault_name(Fault fault) {
  switch (fault) {
    case Fault::None: return "none";
    case Fault::CorruptPairing: return "corrupt-pairing";
    case Fault::NonStrictReindex: return "non-strict-reindex";
    case Fault::CollapseTensor: return "collapse-tensor";
    case Fault::DropSigmaSummand: return "drop-sigma-summand";
    case Fault::DropPiSection: return "drop-pi-section";
    case Fault::InflateId: return "inflate-id";
    case Fault::DropBangBase: return "drop-bang-base";
  }
  return "?";
}

std::vector<Fault> all_faults() {
  return {Fault::CorruptPairing, Fault::NonStrictReindex, Fault::CollapseTensor, Fault::DropSigmaSummand,
          Fault::DropPiSection,  Fault::InflateId,        Fault::DropBangBase};
}

std::string FaultyInstance::describe() const { return std::string("Fam(Set*) with fault ") + fault_name(fault_); }

namespace {

PointedSet without_last(PointedSet x) {
  if (x.size() > 1) x.elems.pop_back();
  return x;
}

bool is_identity(const IndexMap& map) {
  if (map.dom != map.cod) return false;
  for (const auto& [a, b] : map.table)
    if (a != b) return false;
  return true;
}

}  // namespace

PointedFam FaultyInstance::reindex(const IndexMap& map, const PointedFam& a) const {
  auto out = ModelInstance::reindex(map, a);
  if (fault_ != Fault::NonStrictReindex || is_identity(map)) return out;
  // relabel to an isomorphic but unequal family
  for (auto& [s, x] : out.fiber) {
    std::vector<Value> elems;
    for (const auto& e : x.non_base()) elems.push_back(val::inj("'", e));
    x = f::make_set(std::move(elems));
  }
  return out;
}

IndexMap FaultyInstance::pair(const IndexMap& map, const PointedFam& a, const std::map<Value, Value>& section) const {
  auto g = ModelInstance::pair(map, a, section);
  if (fault_ != Fault::CorruptPairing || map.dom.empty()) return g;
  const Value& last = map.dom.back();
  g.table[last] = val::point({map(last), val::star()});
  return g;
}

PointedSet FaultyInstance::tensor(const PointedSet& x, const PointedSet& y) const {
  auto out = ModelInstance::tensor(x, y);
  if (fault_ == Fault::CollapseTensor && x.size() >= 3 && y.size() >= 3) return without_last(out);
  return out;
}

PointedFam FaultyInstance::sigma(const PointedFam& a, const PointedFam& b) const {
  auto out = ModelInstance::sigma(a, b);
  if (fault_ != Fault::DropSigmaSummand) return out;
  for (auto& [s, x] : out.fiber) x = without_last(x);
  return out;
}

PointedFam FaultyInstance::pi(const PointedFam& a, const PointedFam& b) const {
  auto out = ModelInstance::pi(a, b);
  if (fault_ != Fault::DropPiSection) return out;
  for (auto& [s, x] : out.fiber) x = without_last(x);
  return out;
}

PointedFam FaultyInstance::id(const PointedFam& a, const PointedFam& b) const {
  auto out = ModelInstance::id(a, b);
  if (fault_ != Fault::InflateId) return out;
  for (auto& [pt, x] : out.fiber)
    if (pt.kids[0].kids[1] != pt.kids[1]) x = f::unit_set();
  return out;
}

PointedFam FaultyInstance::bang(const PointedFam& a) const {
  auto out = ModelInstance::bang(a);
  if (fault_ != Fault::DropBangBase) return out;
  for (auto& [s, x] : out.fiber) {
    auto it = std::find(x.elems.begin(), x.elems.end(), val::box(val::star()));
    if (it != x.elems.end()) x.elems.erase(it);
  }
  return out;
}

// ---------------------------------------------------------------------------
// witnesses

namespace {

std::string list(const std::vector<std::size_t>& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out + "]";
}

}  // namespace

std::string to_string(const Witness& w) {
  std::ostringstream os;
  os << w.condition << ": " << w.message;
  if (!w.element.empty()) os << " at " << w.element;
  os << " (A " << list(w.a_sizes);
  if (!w.map.empty()) os << ", f " << list(w.map);
  if (!w.map2.empty()) os << ", g " << list(w.map2);
  if (!w.b_sizes.empty()) os << ", B " << list(w.b_sizes);
  if (!w.c_sizes.empty()) os << ", C " << list(w.c_sizes);
  os << ")";
  return os.str();
}

const std::vector<std::string>& condition_names() {
  static const std::vector<std::string> names{
      "comprehension",    "strictness",     "comprehension-functor", "frobenius",   "bc-sigma",
      "bc-pi",            "bc-id",          "sigma-adjunction",      "pi-adjunction", "id-adjunction",
      "lawvere",          "lawvere-strict", "bang-lawvere",
  };
  return names;
}

namespace {

struct CaseResult {
  bool ok = true;
  std::string element;
  std::string message;
};

CaseResult fail(std::string message, const std::string& element = {}) { return {false, element, std::move(message)}; }

CaseResult from(const f::BijectionCheck& r, const std::string& where) {
  if (r.ok) return {};
  return fail(where + ": " + r.detail, r.witness ? f::to_string(*r.witness) : "");
}

IndexSet idx(std::size_t n, const char* prefix) { return f::index_set(n, prefix); }

PointedFam sized_fam(const IndexSet& s, const std::vector<std::size_t>& sizes, const std::string& prefix) {
  PointedFam out;
  out.index = s;
  for (std::size_t i = 0; i < s.size(); ++i) out.fiber[s[i]] = f::sized_set(sizes.at(i), prefix);
  return out;
}

IndexMap map_of(const IndexSet& dom, const IndexSet& cod, const std::vector<std::size_t>& table) {
  IndexMap m{dom, cod, {}};
  for (std::size_t i = 0; i < dom.size(); ++i) m.table[dom[i]] = cod.at(table.at(i));
  return m;
}

/// Encoded fiber morphisms x → y: Fun(s ↦ Fun(e ↦ image)).
std::vector<Value> morphisms(const PointedFam& x, const PointedFam& y) {
  return f::pi(x.index, [&](const Value& s) { return f::hom(x.at(s), y.at(s)); }).elems;
}

Value at2(const Value& phi, const Value& s, const Value& e) { return f::apply(f::apply(phi, s), e); }

/// Shape-checked destructuring; a malformed element maps outside every codomain.
Value junk() { return val::atom("?"); }

Value encode_map(const IndexMap& g) {
  std::vector<std::pair<Value, Value>> t(g.table.begin(), g.table.end());
  return val::fun(std::move(t));
}

CaseResult check_comprehension(const ModelInstance& m, const Witness& w) {
  IndexSet s = idx(w.a_sizes.size(), "s"), t = idx(w.map.size(), "t");
  auto a = sized_fam(s, w.a_sizes, "a");
  auto fm = map_of(t, s, w.map);
  auto c = m.comprehend(a);
  auto af = m.reindex(fm, a);
  auto sections = f::pi(t, [&](const Value& x) { return af.at(x); }).elems;
  std::set<Value> images;
  for (const auto& sec : sections) {
    std::map<Value, Value> section;
    for (const auto& x : t) section[x] = f::apply(sec, x);
    auto g = m.pair(fm, a, section);
    for (const auto& x : t) {
      auto it = c.p.table.find(g(x));
      if (it == c.p.table.end()) return fail("pairing leaves the comprehension", f::to_string(sec));
      if (it->second != fm(x)) return fail("p after pairing differs from f", f::to_string(sec));
      if (c.v.at(g(x)) != section[x]) return fail("v reindexed along the pairing differs from a", f::to_string(sec));
    }
    if (!images.insert(encode_map(g)).second) return fail("pairing is not injective", f::to_string(sec));
  }
  // every map over f is a pairing
  std::size_t slice = 0;
  for (const auto& g : f::all_index_maps(t, c.total)) {
    bool over = true;
    for (const auto& x : t) over &= c.p(g(x)) == fm(x);
    if (!over) continue;
    ++slice;
    std::map<Value, Value> section;
    for (const auto& x : t) section[x] = c.v.at(g(x));
    if (encode_map(m.pair(fm, a, section)) != encode_map(g))
      return fail("pairing of v along g is not g", f::to_string(encode_map(g)));
  }
  if (slice != images.size()) return fail("slice and sections differ in size");
  return {};
}

CaseResult check_strictness(const ModelInstance& m, const Witness& w) {
  IndexSet s = idx(w.a_sizes.size(), "s"), t = idx(w.map.size(), "t"), u = idx(w.map2.size(), "u");
  auto a = sized_fam(s, w.a_sizes, "a");
  auto fm = map_of(t, s, w.map);
  auto gm = map_of(u, t, w.map2);
  if (!(m.reindex(f::identity_index(s), a) == a)) return fail("A{id} != A");
  if (!(m.reindex(f::compose(gm, fm), a) == m.reindex(gm, m.reindex(fm, a))))
    return fail("A{f after g} != A{f}{g}");
  return {};
}

CaseResult check_functor(const ModelInstance& m, const Witness& w) {
  IndexSet s = idx(w.a_sizes.size(), "s");
  auto a = sized_fam(s, w.a_sizes, "a");
  auto b = sized_fam(s, w.c_sizes, "b");
  auto ca = m.comprehend(a), cb = m.comprehend(b);
  auto decode = [&](const PointedFam& x, const PointedFam& y, const Value& phi) {
    std::map<Value, f::PointedMap> out;
    for (const auto& i : s) {
      f::PointedMap pm{x.at(i), y.at(i), {}};
      for (const auto& e : x.at(i).elems) pm.table[e] = at2(phi, i, e);
      out[i] = pm;
    }
    return out;
  };
  std::vector<std::pair<Value, Value>> ida;
  for (const auto& i : s) {
    std::vector<std::pair<Value, Value>> t;
    for (const auto& e : a.at(i).non_base()) t.emplace_back(e, e);
    ida.emplace_back(i, val::fun(t));
  }
  if (encode_map(comprehension_functor(m, a, a, decode(a, a, val::fun(ida)))) != encode_map(f::identity_index(ca.total)))
    return fail("M(id) is not the identity");
  auto ab = morphisms(a, b), bb = morphisms(b, b);
  for (const auto& phi : ab) {
    auto mphi = comprehension_functor(m, a, b, decode(a, b, phi));
    for (const auto& x : ca.total) {
      auto it = cb.p.table.find(mphi(x));
      if (it == cb.p.table.end() || it->second != ca.p(x)) return fail("p after M(a) differs from p", f::to_string(phi));
    }
    for (const auto& psi : bb) {
      std::vector<std::pair<Value, Value>> comp;
      for (const auto& i : s) {
        std::vector<std::pair<Value, Value>> t;
        for (const auto& e : a.at(i).non_base()) t.emplace_back(e, at2(psi, i, at2(phi, i, e)));
        comp.emplace_back(i, val::fun(t));
      }
      auto lhs = comprehension_functor(m, a, b, decode(a, b, val::fun(comp)));
      auto rhs = f::compose(mphi, comprehension_functor(m, b, b, decode(b, b, psi)));
      if (encode_map(lhs) != encode_map(rhs))
        return fail("M does not preserve composition", f::to_string(phi) + " then " + f::to_string(psi));
    }
  }
  return {};
}

CaseResult check_frobenius(const ModelInstance& m, const Witness& w) {
  IndexSet s = idx(w.a_sizes.size(), "s");
  auto a = sized_fam(s, w.a_sizes, "a");
  auto c = m.comprehend(a);
  auto b = sized_fam(c.total, w.b_sizes, "b");
  auto xi = sized_fam(s, w.c_sizes, "x");
  auto lhs = m.sigma(a, m.tensor_fam(m.reindex(c.p, xi), b));
  auto rhs = m.tensor_fam(xi, m.sigma(a, b));
  for (const auto& i : s) {
    auto r = f::check_bijection(lhs.at(i).elems, rhs.at(i).elems, [](const Value& e) {
      if (e.is_base()) return e;
      if (e.kind != Value::Kind::Dep || e.kids[1].kind != Value::Kind::Pair) return junk();
      const auto& pr = e.kids[1];
      return val::pair(pr.kids[0], val::dep(e.kids[0], pr.kids[1]));
    });
    if (auto res = from(r, "canonical map at " + f::to_string(i)); !res.ok) return res;
  }
  return {};
}

CaseResult check_bc(const ModelInstance& m, const Witness& w, const std::string& former) {
  IndexSet s = idx(w.a_sizes.size(), "s"), t = idx(w.map.size(), "t");
  auto a = sized_fam(s, w.a_sizes, "a");
  auto c = m.comprehend(a);
  auto b = sized_fam(c.total, w.b_sizes, "b");
  auto fm = map_of(t, s, w.map);
  auto af = m.reindex(fm, a);
  auto cf = m.comprehend(af);
  IndexMap q{cf.total, c.total, {}};
  for (const auto& pt : cf.total) q.table[pt] = val::point({fm(pt.kids[0]), pt.kids[1]});
  auto bq = m.reindex(q, b);
  PointedFam lhs, rhs;
  if (former == "sigma") {
    lhs = m.sigma(af, bq);
    rhs = m.reindex(fm, m.sigma(a, b));
  } else if (former == "pi") {
    lhs = m.pi(af, bq);
    rhs = m.reindex(fm, m.pi(a, b));
  } else {
    lhs = m.id(af, bq);
    auto base = m.id(a, b);
    IndexMap q2{lhs.index, base.index, {}};
    for (const auto& pt : lhs.index) q2.table[pt] = val::point({q(pt.kids[0]), pt.kids[1]});
    rhs = m.reindex(q2, base);
  }
  if (lhs.index != rhs.index) return fail("index sets differ");
  for (const auto& i : lhs.index) {
    auto r = f::check_bijection(lhs.at(i).elems, rhs.at(i).elems, [](const Value& e) { return e; });
    if (auto res = from(r, "canonical map at " + f::to_string(i)); !res.ok) return res;
  }
  return {};
}

CaseResult check_sigma_adjunction(const ModelInstance& m, const Witness& w) {
  IndexSet s = idx(w.a_sizes.size(), "s");
  auto a = sized_fam(s, w.a_sizes, "a");
  auto c = m.comprehend(a);
  auto b = sized_fam(c.total, w.b_sizes, "b");
  auto x = sized_fam(s, w.c_sizes, "c");
  auto lhs = morphisms(m.sigma(a, b), x);
  auto rhs = morphisms(b, m.reindex(c.p, x));
  auto r = f::check_bijection(lhs, rhs, [&](const Value& phi) {
    std::vector<std::pair<Value, Value>> out;
    for (const auto& pt : c.total) {
      std::vector<std::pair<Value, Value>> t;
      for (const auto& e : b.at(pt).non_base()) t.emplace_back(e, at2(phi, pt.kids[0], val::dep(pt.kids[1], e)));
      out.emplace_back(pt, val::fun(t));
    }
    return val::fun(out);
  });
  return from(r, "transpose");
}

CaseResult check_pi_adjunction(const ModelInstance& m, const Witness& w) {
  IndexSet s = idx(w.a_sizes.size(), "s");
  auto a = sized_fam(s, w.a_sizes, "a");
  auto c = m.comprehend(a);
  auto b = sized_fam(c.total, w.b_sizes, "b");
  auto x = sized_fam(s, w.c_sizes, "c");
  auto lhs = morphisms(m.reindex(c.p, x), b);
  auto rhs = morphisms(x, m.pi(a, b));
  auto r = f::check_bijection(lhs, rhs, [&](const Value& phi) {
    std::vector<std::pair<Value, Value>> out;
    for (const auto& i : s) {
      std::vector<std::pair<Value, Value>> t;
      for (const auto& e : x.at(i).non_base()) {
        std::vector<std::pair<Value, Value>> section;
        for (const auto& ai : a.at(i).elems) {
          auto pt = val::point({i, ai});
          section.emplace_back(ai, at2(phi, pt, e));
        }
        t.emplace_back(e, val::fun(section));
      }
      out.emplace_back(i, val::fun(t));
    }
    return val::fun(out);
  });
  return from(r, "transpose");
}

CaseResult check_id_adjunction(const ModelInstance& m, const Witness& w) {
  IndexSet s = idx(w.a_sizes.size(), "s");
  auto a = sized_fam(s, w.a_sizes, "a");
  auto c = m.comprehend(a);
  auto b = sized_fam(c.total, w.b_sizes, "b");
  auto idb = m.id(a, b);
  auto d = sized_fam(idb.index, w.c_sizes, "d");
  IndexMap diag{c.total, idb.index, {}};
  for (const auto& pt : c.total) diag.table[pt] = val::point({pt, pt.kids[1]});
  auto lhs = morphisms(idb, d);
  auto rhs = morphisms(b, m.reindex(diag, d));
  auto r = f::check_bijection(lhs, rhs, [&](const Value& phi) {
    std::vector<std::pair<Value, Value>> out;
    for (const auto& pt : c.total) {
      std::vector<std::pair<Value, Value>> t;
      for (const auto& e : b.at(pt).non_base()) t.emplace_back(e, at2(phi, diag(pt), e));
      out.emplace_back(pt, val::fun(t));
    }
    return val::fun(out);
  });
  return from(r, "transpose");
}

CaseResult check_lawvere(const ModelInstance& m, const Witness& w) {
  IndexSet s = idx(w.a_sizes.size(), "s"), t = idx(w.map.size(), "t");
  auto x = sized_fam(s, w.a_sizes, "x");
  auto fm = map_of(t, s, w.map);
  auto l = m.sigma_along(fm, f::const_fam(t, m.unit()));
  auto cx = m.comprehend(x);
  auto lhs = morphisms(l, x);
  std::vector<Value> rhs;
  for (const auto& g : f::all_index_maps(t, cx.total)) {
    bool over = true;
    for (const auto& y : t) over &= cx.p(g(y)) == fm(y);
    if (over) rhs.push_back(encode_map(g));
  }
  auto r = f::check_bijection(lhs, rhs, [&](const Value& phi) {
    std::vector<std::pair<Value, Value>> g;
    for (const auto& y : t) g.emplace_back(y, val::point({fm(y), at2(phi, fm(y), val::dep(y, val::one()))}));
    return val::fun(g);
  }, false);
  return from(r, "hom-set bijection");
}

CaseResult check_lawvere_strict(const ModelInstance& m, const Witness& w) {
  IndexSet s = idx(w.a_sizes.size(), "s"), t = idx(w.map.size(), "t"), u = idx(w.map2.size(), "u");
  auto fm = map_of(t, s, w.map);
  auto gm = map_of(u, s, w.map2);
  IndexSet pb;
  for (const auto& z : u)
    for (const auto& y : t)
      if (gm(z) == fm(y)) pb.push_back(val::point({z, y}));
  std::sort(pb.begin(), pb.end());
  IndexMap proj{pb, u, {}};
  for (const auto& pt : pb) proj.table[pt] = pt.kids[0];
  auto lhs = m.sigma_along(proj, f::const_fam(pb, m.unit()));
  auto rhs = m.reindex(gm, m.sigma_along(fm, f::const_fam(t, m.unit())));
  for (const auto& z : u) {
    auto r = f::check_bijection(lhs.at(z).elems, rhs.at(z).elems, [](const Value& e) {
      if (e.is_base()) return e;
      if (e.kind != Value::Kind::Dep || e.kids[0].kind != Value::Kind::Point) return junk();
      return val::dep(e.kids[0].kids[1], e.kids[1]);
    });
    if (auto res = from(r, "L commuting with reindexing at " + f::to_string(z)); !res.ok) return res;
  }
  return {};
}

CaseResult check_bang_lawvere(const ModelInstance& m, const Witness& w) {
  IndexSet s = idx(w.a_sizes.size(), "s");
  auto x = sized_fam(s, w.a_sizes, "x");
  auto lhs = m.bang(x);
  auto cx = m.comprehend(x);
  auto rhs = m.sigma_along(cx.p, f::const_fam(cx.total, m.unit()));
  for (const auto& i : s) {
    auto r = f::check_bijection(lhs.at(i).elems, rhs.at(i).elems, [&](const Value& e) {
      if (e.is_base()) return e;
      if (e.kind != Value::Kind::Box) return junk();
      return val::dep(val::point({i, e.kids[0]}), val::one());
    });
    if (auto res = from(r, "!X against L(M X) at " + f::to_string(i)); !res.ok) return res;
  }
  return {};
}

CaseResult dispatch(const ModelInstance& m, const Witness& w) {
  const auto& c = w.condition;
  if (c == "comprehension") return check_comprehension(m, w);
  if (c == "strictness") return check_strictness(m, w);
  if (c == "comprehension-functor") return check_functor(m, w);
  if (c == "frobenius") return check_frobenius(m, w);
  if (c == "bc-sigma") return check_bc(m, w, "sigma");
  if (c == "bc-pi") return check_bc(m, w, "pi");
  if (c == "bc-id") return check_bc(m, w, "id");
  if (c == "sigma-adjunction") return check_sigma_adjunction(m, w);
  if (c == "pi-adjunction") return check_pi_adjunction(m, w);
  if (c == "id-adjunction") return check_id_adjunction(m, w);
  if (c == "lawvere") return check_lawvere(m, w);
  if (c == "lawvere-strict") return check_lawvere_strict(m, w);
  if (c == "bang-lawvere") return check_bang_lawvere(m, w);
  throw std::invalid_argument("unknown condition: " + c);
}

/// A hook producing malformed data counts as a failure of the case.
CaseResult run_case(const ModelInstance& m, const Witness& w) {
  try {
    return dispatch(m, w);
  } catch (const std::out_of_range& e) {
    return fail(std::string("malformed instance data: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// parameter enumeration

using Sizes = std::vector<std::size_t>;

/// Every vector of length n with entries in [lo, hi].
std::vector<Sizes> vectors(std::size_t n, std::size_t lo, std::size_t hi) {
  std::vector<Sizes> out;
  Sizes cur(n, lo);
  for (;;) {
    out.push_back(cur);
    std::size_t i = 0;
    while (i < n && ++cur[i] > hi) cur[i++] = lo;
    if (i == n) break;
  }
  return out;
}

std::vector<Sizes> all_maps(std::size_t from, std::size_t to) {
  if (to == 0) return from == 0 ? std::vector<Sizes>{Sizes{}} : std::vector<Sizes>{};
  return vectors(from, 0, to - 1);
}

/// Families over a large index set: constant ones plus shifted cyclic patterns.
std::vector<Sizes> patterns(std::size_t n, std::size_t max_fiber) {
  std::vector<Sizes> out;
  for (std::size_t k = 1; k <= max_fiber; ++k) out.push_back(Sizes(n, k));
  for (std::size_t k = 0; k < max_fiber && max_fiber > 1; ++k) {
    Sizes v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = 1 + (i * 7 + k) % max_fiber;
    out.push_back(v);
  }
  return out;
}

std::size_t total_size(const Sizes& a) {
  std::size_t n = 0;
  for (auto k : a) n += k;
  return n;
}

/// Enumerate the cases of a condition; `emit` returns false to stop.
void enumerate(const std::string& cond, const Bounds& bd, const std::function<bool(const Witness&)>& emit) {
  const std::size_t K = bd.max_index, N = bd.max_fiber;
  Witness w;
  w.condition = cond;
  auto each_a = [&](std::size_t lo_s, std::size_t hi_s, std::size_t max_fiber, const std::function<bool()>& k) {
    for (std::size_t n = lo_s; n <= hi_s; ++n)
      for (const auto& a : vectors(n, 1, max_fiber)) {
        w.a_sizes = a;
        if (!k()) return false;
      }
    return true;
  };
  if (cond == "comprehension") {
    each_a(0, K, N, [&] {
      for (std::size_t m = 0; m <= K; ++m)
        for (const auto& fm : all_maps(m, w.a_sizes.size())) {
          w.map = fm;
          if (!emit(w)) return false;
        }
      return true;
    });
  } else if (cond == "strictness") {
    each_a(1, K, N, [&] {
      for (std::size_t m = 1; m <= K; ++m)
        for (const auto& fm : all_maps(m, w.a_sizes.size()))
          for (std::size_t l = 1; l <= K; ++l)
            for (const auto& gm : all_maps(l, m)) {
              w.map = fm;
              w.map2 = gm;
              if (!emit(w)) return false;
            }
      return true;
    });
  } else if (cond == "comprehension-functor") {
    std::size_t k = std::min<std::size_t>(K, 2), n = std::min<std::size_t>(N, 3);
    each_a(1, k, n, [&] {
      for (const auto& b : vectors(w.a_sizes.size(), 1, n)) {
        w.c_sizes = b;
        if (!emit(w)) return false;
      }
      return true;
    });
  } else if (cond == "frobenius") {
    each_a(1, K, N, [&] {
      for (const auto& b : patterns(total_size(w.a_sizes), N))
        for (std::size_t x = 1; x <= N; ++x) {
          w.b_sizes = b;
          w.c_sizes = Sizes(w.a_sizes.size(), x);
          if (!emit(w)) return false;
        }
      return true;
    });
  } else if (cond == "bc-sigma" || cond == "bc-pi" || cond == "bc-id") {
    each_a(1, K, N, [&] {
      for (const auto& b : patterns(total_size(w.a_sizes), N))
        for (std::size_t m = 1; m <= K; ++m)
          for (const auto& fm : all_maps(m, w.a_sizes.size())) {
            w.b_sizes = b;
            w.map = fm;
            if (!emit(w)) return false;
          }
      return true;
    });
  } else if (cond == "sigma-adjunction" || cond == "pi-adjunction" || cond == "id-adjunction") {
    // hom-set enumeration grows fast: smaller bounds
    std::size_t k = std::min<std::size_t>(K, 2), n = std::min<std::size_t>(N, 3), cmax = std::min<std::size_t>(N, 2);
    each_a(1, k, n, [&] {
      std::size_t pts = total_size(w.a_sizes);
      for (const auto& b : patterns(pts, n)) {
        w.b_sizes = b;
        if (cond == "id-adjunction") {
          std::size_t idpts = 0;
          for (auto ai : w.a_sizes) idpts += ai * ai;
          for (const auto& c : patterns(idpts, cmax)) {
            w.c_sizes = c;
            if (!emit(w)) return false;
          }
        } else {
          for (const auto& c : vectors(w.a_sizes.size(), 1, cmax)) {
            w.c_sizes = c;
            if (!emit(w)) return false;
          }
        }
      }
      return true;
    });
  } else if (cond == "lawvere") {
    each_a(1, K, N, [&] {
      for (std::size_t m = 0; m <= K; ++m)
        for (const auto& fm : all_maps(m, w.a_sizes.size())) {
          w.map = fm;
          if (!emit(w)) return false;
        }
      return true;
    });
  } else if (cond == "lawvere-strict") {
    for (std::size_t n = 1; n <= K; ++n) {
      w.a_sizes = Sizes(n, 1);
      for (std::size_t m = 0; m <= K; ++m)
        for (const auto& fm : all_maps(m, n))
          for (std::size_t l = 1; l <= K; ++l)
            for (const auto& gm : all_maps(l, n)) {
              w.map = fm;
              w.map2 = gm;
              if (!emit(w)) return;
            }
    }
  } else if (cond == "bang-lawvere") {
    each_a(1, K, N, [&] { return emit(w); });
  } else {
    throw std::invalid_argument("unknown condition: " + cond);
  }
}

}  // namespace

ConditionReport verify(const ModelInstance& m, const std::string& condition, const Bounds& bounds) {
  ConditionReport rep;
  rep.condition = condition;
  rep.instance = m.describe();
  rep.bounds = bounds;
  enumerate(condition, bounds, [&](const Witness& w) {
    ++rep.cases;
    auto r = run_case(m, w);
    if (r.ok) return true;
    rep.pass = false;
    Witness out = w;
    out.element = r.element;
    out.message = r.message;
    rep.witness = out;
    return false;
  });
  return rep;
}

ConditionReport verify_comprehension(const ModelInstance& m, const Bounds& b) { return verify(m, "comprehension", b); }
ConditionReport verify_frobenius(const ModelInstance& m, const Bounds& b) { return verify(m, "frobenius", b); }
ConditionReport verify_beck_chevalley(const ModelInstance& m, const std::string& former, const Bounds& b) {
  return verify(m, "bc-" + former, b);
}
ConditionReport verify_lawvere(const ModelInstance& m, const Bounds& b) { return verify(m, "lawvere", b); }

std::vector<ConditionReport> verify_all(const ModelInstance& m, const Bounds& bounds) {
  std::vector<ConditionReport> out;
  for (const auto& c : condition_names()) out.push_back(verify(m, c, bounds));
  return out;
}

bool replay_witness(const ModelInstance& m, const Witness& w) { return !run_case(m, w).ok; }

IndexMap comprehension_functor(const ModelInstance& m, const PointedFam& a, const PointedFam& b,
                               const std::map<Value, fam::PointedMap>& morphism) {
  auto ca = m.comprehend(a);
  std::map<Value, Value> section;
  for (const auto& pt : ca.total) section[pt] = morphism.at(ca.p(pt))(ca.v.at(pt));
  auto out = m.pair(ca.p, b, section);
  out.cod = m.comprehend(b).total;
  return out;
}

}  // namespace ildtt::model
