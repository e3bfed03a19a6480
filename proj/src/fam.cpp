#include "ildtt/fam.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ildtt::fam {

int compare(const Value& a, const Value& b) {
  if (a.kind != b.kind) return a.kind < b.kind ? -1 : 1;
  if (int c = a.label.compare(b.label)) return c < 0 ? -1 : 1;
  std::size_t n = std::min(a.kids.size(), b.kids.size());
  for (std::size_t i = 0; i < n; ++i)
    if (int c = compare(a.kids[i], b.kids[i])) return c;
  if (a.kids.size() != b.kids.size()) return a.kids.size() < b.kids.size() ? -1 : 1;
  return 0;
}

namespace {

std::string join(const std::vector<Value>& xs, std::size_t from, const char* sep) {
  std::string out;
  for (std::size_t i = from; i < xs.size(); ++i) {
    if (i > from) out += sep;
    out += to_string(xs[i]);
  }
  return out;
}

Value node(Value::Kind k, std::vector<Value> kids, std::string label = {}) {
  Value v;
  v.kind = k;
  v.label = std::move(label);
  v.kids = std::move(kids);
  return v;
}

}  // namespace

std::string to_string(const Value& v) {
  switch (v.kind) {
    case Value::Kind::Star: return "*";
    case Value::Kind::One: return "1";
    case Value::Kind::Atom: return v.label;
    case Value::Kind::Pair: return "(" + join(v.kids, 0, ",") + ")";
    case Value::Kind::Inj: return "in" + v.label + "(" + to_string(v.kids[0]) + ")";
    case Value::Kind::Tuple: return "<" + join(v.kids, 0, ",") + ">";
    case Value::Kind::Fun: {
      std::string out = "{";
      for (std::size_t i = 0; i + 1 < v.kids.size(); i += 2) {
        if (i) out += ";";
        out += to_string(v.kids[i]) + "->" + to_string(v.kids[i + 1]);
      }
      return out + "}";
    }
    case Value::Kind::Box: return "!" + to_string(v.kids[0]);
    case Value::Kind::Dep: return "[" + to_string(v.kids[0]) + "|" + to_string(v.kids[1]) + "]";
    case Value::Kind::Point: return "(" + join(v.kids, 0, ".") + ")";
  }
  return "?";
}

namespace val {

Value star() { return Value{}; }
Value one() { return node(Value::Kind::One, {}); }
Value atom(std::string label) { return node(Value::Kind::Atom, {}, std::move(label)); }

Value pair(Value x, Value y) {
  if (x.is_base() || y.is_base()) return star();
  return node(Value::Kind::Pair, {std::move(x), std::move(y)});
}

Value inj(std::string tag, Value x) {
  if (x.is_base()) return star();
  return node(Value::Kind::Inj, {std::move(x)}, std::move(tag));
}

Value tuple(std::vector<Value> xs) {
  if (std::all_of(xs.begin(), xs.end(), [](const Value& x) { return x.is_base(); })) return star();
  return node(Value::Kind::Tuple, std::move(xs));
}

Value fun(std::vector<std::pair<Value, Value>> table) {
  std::sort(table.begin(), table.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Value> kids;
  for (auto& [k, v] : table) {
    if (v.is_base()) continue;
    kids.push_back(std::move(k));
    kids.push_back(std::move(v));
  }
  if (kids.empty()) return star();
  return node(Value::Kind::Fun, std::move(kids));
}

Value box(Value x) { return node(Value::Kind::Box, {std::move(x)}); }

Value dep(Value i, Value x) {
  if (x.is_base()) return star();
  return node(Value::Kind::Dep, {std::move(i), std::move(x)});
}

Value point(std::vector<Value> xs) { return node(Value::Kind::Point, std::move(xs)); }

}  // namespace val

Value apply(const Value& f, const Value& x) {
  if (f.kind != Value::Kind::Fun) return val::star();
  for (std::size_t i = 0; i + 1 < f.kids.size(); i += 2)
    if (f.kids[i] == x) return f.kids[i + 1];
  return val::star();
}

Value project(const Value& t, std::size_t i) {
  if (t.kind != Value::Kind::Tuple || i >= t.kids.size()) return val::star();
  return t.kids[i];
}

bool PointedSet::contains(const Value& v) const { return std::binary_search(elems.begin(), elems.end(), v); }

PointedSet make_set(std::vector<Value> elems) {
  elems.push_back(val::star());
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  PointedSet out;
  out.elems = std::move(elems);
  return out;
}

PointedSet point_set() { return PointedSet{}; }
PointedSet unit_set() { return make_set({val::one()}); }

PointedSet sized_set(std::size_t n, const std::string& prefix) {
  std::vector<Value> xs;
  for (std::size_t i = 1; i < n; ++i) xs.push_back(val::atom(prefix + std::to_string(i)));
  return make_set(std::move(xs));
}

PointedSet smash(const PointedSet& x, const PointedSet& y) {
  std::vector<Value> out;
  for (const auto& a : x.non_base())
    for (const auto& b : y.non_base()) out.push_back(val::pair(a, b));
  return make_set(std::move(out));
}

PointedSet plus(const PointedSet& x, const PointedSet& y) {
  std::vector<Value> out;
  for (const auto& a : x.non_base()) out.push_back(val::inj("l", a));
  for (const auto& b : y.non_base()) out.push_back(val::inj("r", b));
  return make_set(std::move(out));
}

PointedSet wedge(const std::vector<PointedSet>& xs) {
  std::vector<Value> out;
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (const auto& a : xs[i].non_base()) out.push_back(val::inj(std::to_string(i), a));
  return make_set(std::move(out));
}

namespace {

/// Every choice of one element per slot.
void choices(const std::vector<const std::vector<Value>*>& slots, std::size_t i, std::vector<Value>& cur,
             const std::function<void(const std::vector<Value>&)>& emit) {
  if (i == slots.size()) {
    emit(cur);
    return;
  }
  for (const auto& x : *slots[i]) {
    cur.push_back(x);
    choices(slots, i + 1, cur, emit);
    cur.pop_back();
  }
}

}  // namespace

PointedSet product(const std::vector<PointedSet>& xs) {
  std::vector<const std::vector<Value>*> slots;
  for (const auto& x : xs) slots.push_back(&x.elems);
  std::vector<Value> out, cur;
  choices(slots, 0, cur, [&](const std::vector<Value>& c) { out.push_back(val::tuple(c)); });
  return make_set(std::move(out));
}

PointedSet pi(const std::vector<Value>& dom, const std::function<PointedSet(const Value&)>& fiber) {
  std::vector<PointedSet> fibers;
  for (const auto& i : dom) fibers.push_back(fiber(i));
  std::vector<const std::vector<Value>*> slots;
  for (const auto& f : fibers) slots.push_back(&f.elems);
  std::vector<Value> out, cur;
  choices(slots, 0, cur, [&](const std::vector<Value>& c) {
    std::vector<std::pair<Value, Value>> table;
    for (std::size_t k = 0; k < dom.size(); ++k) table.emplace_back(dom[k], c[k]);
    out.push_back(val::fun(std::move(table)));
  });
  return make_set(std::move(out));
}

PointedSet hom(const PointedSet& x, const PointedSet& y) {
  return pi(x.non_base(), [&](const Value&) { return y; });
}

PointedSet bang(const PointedSet& x) {
  std::vector<Value> out;
  for (const auto& a : x.elems) out.push_back(val::box(a));
  return make_set(std::move(out));
}

PointedSet sigma(const std::vector<Value>& dom, const std::function<PointedSet(const Value&)>& fiber) {
  std::vector<Value> out;
  for (const auto& i : dom)
    for (const auto& b : fiber(i).non_base()) out.push_back(val::dep(i, b));
  return make_set(std::move(out));
}

Value PointedMap::operator()(const Value& x) const {
  auto it = table.find(x);
  if (it == table.end()) throw std::out_of_range("pointed map undefined at " + to_string(x));
  return it->second;
}

PointedMap identity_map(const PointedSet& x) {
  PointedMap m{x, x, {}};
  for (const auto& a : x.elems) m.table[a] = a;
  return m;
}

PointedMap compose(const PointedMap& f, const PointedMap& g) {
  PointedMap m{f.dom, g.cod, {}};
  for (const auto& [a, b] : f.table) m.table[a] = g(b);
  return m;
}

std::vector<PointedMap> all_pointed_maps(const PointedSet& x, const PointedSet& y) {
  auto dom = x.non_base();
  std::vector<const std::vector<Value>*> slots(dom.size(), &y.elems);
  std::vector<PointedMap> out;
  std::vector<Value> cur;
  choices(slots, 0, cur, [&](const std::vector<Value>& c) {
    PointedMap m{x, y, {}};
    m.table[val::star()] = val::star();
    for (std::size_t k = 0; k < dom.size(); ++k) m.table[dom[k]] = c[k];
    out.push_back(std::move(m));
  });
  return out;
}

BijectionCheck check_bijection(const std::vector<Value>& dom, const std::vector<Value>& cod,
                               const std::function<Value(const Value&)>& f, bool pointed) {
  BijectionCheck r;
  std::set<Value> target(cod.begin(), cod.end());
  std::map<Value, Value> seen;
  for (const auto& x : dom) {
    Value y = f(x);
    if (pointed && x.is_base() && !y.is_base()) {
      r = {false, "basepoint not preserved", x};
      return r;
    }
    if (!target.count(y)) {
      r = {false, "image " + to_string(y) + " outside the codomain", x};
      return r;
    }
    auto [it, fresh] = seen.emplace(y, x);
    if (!fresh) {
      r = {false, "not injective: " + to_string(it->second) + " and " + to_string(x) + " both map to " + to_string(y),
           x};
      return r;
    }
  }
  if (seen.size() != target.size()) {
    for (const auto& y : target)
      if (!seen.count(y)) {
        r = {false, "not surjective: " + to_string(y) + " has no preimage", y};
        return r;
      }
  }
  r.detail = std::to_string(dom.size()) + " = " + std::to_string(target.size());
  return r;
}

BijectionCheck check_inverse(const std::vector<Value>& dom, const std::vector<Value>& cod,
                             const std::function<Value(const Value&)>& f,
                             const std::function<Value(const Value&)>& g) {
  auto r = check_bijection(dom, cod, f);
  if (!r.ok) return r;
  for (const auto& x : dom)
    if (g(f(x)) != x) return {false, "g(f(x)) != x", x};
  for (const auto& y : cod)
    if (f(g(y)) != y) return {false, "f(g(y)) != y", y};
  return r;
}

IndexSet index_set(std::size_t n, const std::string& prefix) {
  IndexSet s;
  for (std::size_t i = 0; i < n; ++i) s.push_back(val::atom(prefix + std::to_string(i)));
  std::sort(s.begin(), s.end());
  return s;
}

Value IndexMap::operator()(const Value& x) const {
  auto it = table.find(x);
  if (it == table.end()) throw std::out_of_range("index map undefined at " + to_string(x));
  return it->second;
}

IndexMap identity_index(const IndexSet& s) {
  IndexMap m{s, s, {}};
  for (const auto& x : s) m.table[x] = x;
  return m;
}

IndexMap compose(const IndexMap& f, const IndexMap& g) {
  IndexMap m{f.dom, g.cod, {}};
  for (const auto& [a, b] : f.table) m.table[a] = g(b);
  return m;
}

std::vector<IndexMap> all_index_maps(const IndexSet& dom, const IndexSet& cod) {
  std::vector<const std::vector<Value>*> slots(dom.size(), &cod);
  std::vector<IndexMap> out;
  std::vector<Value> cur;
  choices(slots, 0, cur, [&](const std::vector<Value>& c) {
    IndexMap m{dom, cod, {}};
    for (std::size_t k = 0; k < dom.size(); ++k) m.table[dom[k]] = c[k];
    out.push_back(std::move(m));
  });
  return out;
}

const PointedSet& PointedFam::at(const Value& s) const {
  auto it = fiber.find(s);
  if (it == fiber.end()) throw std::out_of_range("no fiber at " + to_string(s));
  return it->second;
}

bool operator==(const PointedFam& a, const PointedFam& b) {
  if (a.index != b.index) return false;
  for (const auto& s : a.index)
    if (a.at(s).elems != b.at(s).elems) return false;
  return true;
}

PointedFam make_fam(const IndexSet& s, const std::function<PointedSet(const Value&)>& fiber) {
  PointedFam f;
  f.index = s;
  for (const auto& x : s) f.fiber[x] = fiber(x);
  return f;
}

PointedFam const_fam(const IndexSet& s, const PointedSet& x) {
  return make_fam(s, [&](const Value&) { return x; });
}

PointedFam reindex(const IndexMap& f, const PointedFam& a) {
  return make_fam(f.dom, [&](const Value& s) { return a.at(f(s)); });
}

PointedFam tensor_fam(const PointedFam& a, const PointedFam& b) {
  return make_fam(a.index, [&](const Value& s) { return smash(a.at(s), b.at(s)); });
}

PointedFam bang_fam(const PointedFam& a) {
  return make_fam(a.index, [&](const Value& s) { return bang(a.at(s)); });
}

PointedFam two_fam(const IndexSet& s) { return const_fam(s, unit_set()); }

Comprehension comprehend(const PointedFam& a) {
  Comprehension c;
  for (const auto& s : a.index)
    for (const auto& x : a.at(s).elems) {
      Value pt = val::point({s, x});
      c.total.push_back(pt);
      c.p.table[pt] = s;
      c.v[pt] = x;
    }
  std::sort(c.total.begin(), c.total.end());
  c.p.dom = c.total;
  c.p.cod = a.index;
  c.a_p = reindex(c.p, a);
  return c;
}

PointedFam sigma_fam(const PointedFam& a, const PointedFam& b) {
  return make_fam(a.index, [&](const Value& s) {
    return sigma(a.at(s).elems, [&](const Value& x) { return b.at(val::point({s, x})); });
  });
}

PointedFam pi_fam(const PointedFam& a, const PointedFam& b) {
  return make_fam(a.index, [&](const Value& s) {
    return pi(a.at(s).elems, [&](const Value& x) { return b.at(val::point({s, x})); });
  });
}

PointedFam id_fam(const PointedFam& a, const PointedFam& b) {
  auto c = comprehend(a);
  auto cc = comprehend(c.a_p);
  return make_fam(cc.total, [&](const Value& pt) {
    const Value& inner = pt.kids[0];  // Point(s, x)
    const Value& x2 = pt.kids[1];
    return inner.kids[1] == x2 ? b.at(inner) : point_set();
  });
}

namespace {

std::vector<Value> preimage(const IndexMap& f, const Value& s) {
  std::vector<Value> out;
  for (const auto& [x, y] : f.table)
    if (y == s) out.push_back(x);
  return out;
}

}  // namespace

PointedFam sigma_along(const IndexMap& f, const PointedFam& x) {
  return make_fam(f.cod, [&](const Value& s) { return sigma(preimage(f, s), [&](const Value& t) { return x.at(t); }); });
}

PointedFam pi_along(const IndexMap& f, const PointedFam& x) {
  return make_fam(f.cod, [&](const Value& s) { return pi(preimage(f, s), [&](const Value& t) { return x.at(t); }); });
}

std::vector<PointedFam> all_fams(const IndexSet& s, std::size_t max_fiber, const std::string& prefix) {
  std::vector<PointedSet> sizes;
  for (std::size_t n = 1; n <= max_fiber; ++n) sizes.push_back(sized_set(n, prefix));
  std::vector<PointedFam> out;
  std::vector<std::size_t> pick(s.size(), 0);
  for (;;) {
    PointedFam f;
    f.index = s;
    for (std::size_t i = 0; i < s.size(); ++i) f.fiber[s[i]] = sizes[pick[i]];
    out.push_back(std::move(f));
    std::size_t i = 0;
    while (i < pick.size() && ++pick[i] == sizes.size()) pick[i++] = 0;
    if (i == pick.size()) break;
  }
  return out;
}

}  // namespace ildtt::fam
