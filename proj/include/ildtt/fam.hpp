#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ildtt::fam {

/// An element of a finite pointed set. Every pointed set built here uses
/// `Star` as its basepoint, so "is the basepoint" is a kind test.
///
///   Star          basepoint
///   One           the other point of I = 2★
///   Atom(label)   a point of a literal set
///   Pair(x, y)    smash product, x and y non-base
///   Inj(tag, x)   wedge summand `tag`, x non-base
///   Tuple(xs)     product, not all base
///   Fun(k0,v0,..) pointed map or section, sparse: only non-base values
///   Box(x)        !X, any x including the basepoint
///   Dep(i, x)     dependent wedge summand i, x non-base
///   Point(xs)     a point of an index set (context extension)
struct Value {
  enum class Kind : std::uint8_t { Star, One, Atom, Pair, Inj, Tuple, Fun, Box, Dep, Point };
  Kind kind = Kind::Star;
  std::string label;
  std::vector<Value> kids;

  bool is_base() const { return kind == Kind::Star; }
};

int compare(const Value& a, const Value& b);
inline bool operator==(const Value& a, const Value& b) { return compare(a, b) == 0; }
inline bool operator!=(const Value& a, const Value& b) { return compare(a, b) != 0; }
inline bool operator<(const Value& a, const Value& b) { return compare(a, b) < 0; }

/// Path-like canonical label.
std::string to_string(const Value& v);

namespace val {
Value star();
Value one();
Value atom(std::string label);
Value pair(Value x, Value y);  // Star if either side is
Value inj(std::string tag, Value x);
Value tuple(std::vector<Value> xs);  // Star if all are
Value fun(std::vector<std::pair<Value, Value>> table);  // drops base values
Value box(Value x);
Value dep(Value i, Value x);
Value point(std::vector<Value> xs);
}  // namespace val

/// Fun lookup; base arguments and missing keys give Star.
Value apply(const Value& f, const Value& x);
/// Tuple component; Star for the base tuple.
Value project(const Value& t, std::size_t i);

/// Finite pointed set: sorted, duplicate-free, elems[0] is Star.
struct PointedSet {
  std::vector<Value> elems{Value{}};

  std::size_t size() const { return elems.size(); }
  bool contains(const Value& v) const;
  std::vector<Value> non_base() const { return {elems.begin() + 1, elems.end()}; }
};

PointedSet make_set(std::vector<Value> elems);  // adds Star, sorts, dedups
PointedSet point_set();
PointedSet unit_set();
/// Star plus atoms prefix1 .. prefix(n-1).
PointedSet sized_set(std::size_t n, const std::string& prefix = "e");

PointedSet smash(const PointedSet& x, const PointedSet& y);
PointedSet plus(const PointedSet& x, const PointedSet& y);
PointedSet wedge(const std::vector<PointedSet>& xs);
PointedSet product(const std::vector<PointedSet>& xs);
PointedSet hom(const PointedSet& x, const PointedSet& y);
PointedSet bang(const PointedSet& x);
/// Dependent wedge: summand i is fiber(i) for every i in `dom`.
PointedSet sigma(const std::vector<Value>& dom, const std::function<PointedSet(const Value&)>& fiber);
/// Sections i ↦ element of fiber(i) for every i in `dom`.
PointedSet pi(const std::vector<Value>& dom, const std::function<PointedSet(const Value&)>& fiber);

struct PointedMap {
  PointedSet dom, cod;
  std::map<Value, Value> table;

  Value operator()(const Value& x) const;
};

PointedMap identity_map(const PointedSet& x);
PointedMap compose(const PointedMap& f, const PointedMap& g);  // g after f
/// Pointed maps x → y, as a list.
std::vector<PointedMap> all_pointed_maps(const PointedSet& x, const PointedSet& y);

/// Result of an elementwise bijection check.
struct BijectionCheck {
  bool ok = true;
  std::string detail;
  std::optional<Value> witness;
};

/// Is `f` a bijection from `dom` onto `cod`, preserving the basepoint
/// when `pointed`?
BijectionCheck check_bijection(const std::vector<Value>& dom, const std::vector<Value>& cod,
                               const std::function<Value(const Value&)>& f, bool pointed = true);
/// Does `g` invert `f` on both sides?
BijectionCheck check_inverse(const std::vector<Value>& dom, const std::vector<Value>& cod,
                             const std::function<Value(const Value&)>& f,
                             const std::function<Value(const Value&)>& g);

// Families over finite index sets.

using IndexSet = std::vector<Value>;  // sorted, duplicate-free

IndexSet index_set(std::size_t n, const std::string& prefix = "s");

struct IndexMap {
  IndexSet dom, cod;
  std::map<Value, Value> table;

  Value operator()(const Value& x) const;
};

IndexMap identity_index(const IndexSet& s);
IndexMap compose(const IndexMap& f, const IndexMap& g);  // g after f
std::vector<IndexMap> all_index_maps(const IndexSet& dom, const IndexSet& cod);

struct PointedFam {
  IndexSet index;
  std::map<Value, PointedSet> fiber;

  const PointedSet& at(const Value& s) const;
};

bool operator==(const PointedFam& a, const PointedFam& b);

PointedFam const_fam(const IndexSet& s, const PointedSet& x);
PointedFam make_fam(const IndexSet& s, const std::function<PointedSet(const Value&)>& fiber);
PointedFam reindex(const IndexMap& f, const PointedFam& a);
PointedFam tensor_fam(const PointedFam& a, const PointedFam& b);
PointedFam bang_fam(const PointedFam& a);
PointedFam two_fam(const IndexSet& s);

/// S.A with its projection and universal element.
struct Comprehension {
  IndexSet total;  // points Point(s, a)
  IndexMap p;
  PointedFam a_p;  // A{p}
  std::map<Value, Value> v;  // universal element of A{p}
};

Comprehension comprehend(const PointedFam& a);

/// Fiberwise dependent wedge and product over the comprehension of A.
PointedFam sigma_fam(const PointedFam& a, const PointedFam& b);
PointedFam pi_fam(const PointedFam& a, const PointedFam& b);
/// Over S.A.A{p}: B(s,a) on the diagonal, one point elsewhere.
PointedFam id_fam(const PointedFam& a, const PointedFam& b);
/// Left and right adjoints to reindexing along f.
PointedFam sigma_along(const IndexMap& f, const PointedFam& x);
PointedFam pi_along(const IndexMap& f, const PointedFam& x);

/// All fiber-size assignments s ↦ 1..max_fiber, as families.
std::vector<PointedFam> all_fams(const IndexSet& s, std::size_t max_fiber, const std::string& prefix = "e");

}  // namespace ildtt::fam
