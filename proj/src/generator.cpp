#include "ildtt/generator.hpp"

#include <algorithm>
#include <limits>

namespace ildtt::gen {

namespace {

constexpr std::size_t kCap = std::numeric_limits<std::size_t>::max() / 4;

std::size_t mul(std::size_t a, std::size_t b) { return a == 0 || b <= kCap / a ? a * b : kCap; }

std::size_t power(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < e && r < kCap; ++i) r = mul(r, b);
  return r;
}

TermPtr E(TermPtr t, TypePtr a) { return with_elab(t, std::move(a)); }

TypePtr A() { return ty::base("A"); }
TypePtr P(TermPtr x) { return ty::base("P", {std::move(x)}); }

// Generation work per term; exceeding it abandons the attempt.
constexpr std::size_t kBudget = 200;

// Atomic types a term of type `a` can deliver. ⊤ is recorded too, since a
// ⊤ position absorbs anything.
void leaves(const TypePtr& a, std::vector<TypePtr>& out) {
  switch (a->kind) {
    case TypeKind::Base:
    case TypeKind::Two:
    case TypeKind::Top:
      if (std::none_of(out.begin(), out.end(), [&](const TypePtr& b) { return alpha_eq(a, b); })) out.push_back(a);
      break;
    case TypeKind::Tensor:
    case TypeKind::With:
    case TypeKind::Plus:
      leaves(a->lhs, out);
      leaves(a->rhs, out);
      break;
    case TypeKind::Lollipop: leaves(a->rhs, out); break;
    case TypeKind::Sigma:
    case TypeKind::Pi: {
      std::vector<TypePtr> inner;
      leaves(a->rhs, inner);
      for (const auto& b : inner)
        if (!occurs_int(a->name, b)) leaves(b, out);
      break;
    }
    case TypeKind::Bang: leaves(a->lhs, out); break;
    default: break;
  }
}

bool has(const std::vector<TypePtr>& set, const TypePtr& a) {
  return std::any_of(set.begin(), set.end(), [&](const TypePtr& b) { return alpha_eq(a, b); });
}

// A variable of type `x` can be used up by a term whose deliverable atoms
// are `have`. I and !X are discarded by their eliminators.
bool fits_in(const TypePtr& x, const std::vector<TypePtr>& have) {
  switch (x->kind) {
    case TypeKind::Unit:
    case TypeKind::Bang:
    case TypeKind::Zero:
    case TypeKind::Sigma:
    case TypeKind::Pi:
    case TypeKind::Id: return true;
    case TypeKind::Tensor:
    case TypeKind::Plus: return fits_in(x->lhs, have) && fits_in(x->rhs, have);
    case TypeKind::With: return fits_in(x->lhs, have) || fits_in(x->rhs, have);
    case TypeKind::Lollipop: return fits_in(x->rhs, have);
    default: return has(have, x);
  }
}

bool fits(const TypePtr& x, const TypePtr& t) {
  std::vector<TypePtr> have;
  leaves(t, have);
  return has(have, ty::top()) || fits_in(x, have);
}

// Some term of type t can be built from the constants, Δ and the atoms
// delivered by Ξ. Multiplicities are ignored.
bool producible(const Signature& sig, const std::vector<TypePtr>& avail, const TypePtr& t) {
  switch (t->kind) {
    case TypeKind::Base:
      if (has(avail, t)) return true;
      return std::any_of(sig.consts.begin(), sig.consts.end(), [&](const ConstDecl& c) {
        return c.type->kind == TypeKind::Base && c.type->name == t->name &&
               (c.params.empty() ? alpha_eq(c.type, t) : c.params.size() == t->args.size());
      });
    case TypeKind::Zero: return has(avail, t);
    case TypeKind::Tensor:
    case TypeKind::With: return producible(sig, avail, t->lhs) && producible(sig, avail, t->rhs);
    case TypeKind::Plus: return producible(sig, avail, t->lhs) || producible(sig, avail, t->rhs);
    case TypeKind::Lollipop: {
      auto more = avail;
      leaves(t->lhs, more);
      return producible(sig, more, t->rhs);
    }
    case TypeKind::Bang: return producible(sig, avail, t->lhs);
    case TypeKind::Sigma: return producible(sig, avail, t->lhs) && producible(sig, avail, t->rhs);
    case TypeKind::Pi: return producible(sig, avail, t->rhs);
    default: return true;
  }
}

// Every variable of xi can be used up in a term of type t, where the
// results of the functions in xi count as deliverable too.
bool feasible(const Signature& sig, const std::vector<std::pair<std::string, TypePtr>>& d,
              const std::vector<std::pair<std::string, TypePtr>>& xi, const TypePtr& t) {
  std::vector<TypePtr> avail;
  for (const auto& [x, a] : d) avail.push_back(a);
  for (const auto& [x, a] : xi) {
    if (a->kind == TypeKind::Zero) return true;
    leaves(a, avail);
    if (a->kind == TypeKind::With || a->kind == TypeKind::Plus || a->kind == TypeKind::Tensor) {
      avail.push_back(a->lhs);
      avail.push_back(a->rhs);
    }
  }
  if (!producible(sig, avail, t)) return false;
  std::vector<TypePtr> have;
  leaves(t, have);
  if (has(have, ty::top())) return true;
  for (const auto& [x, a] : xi) {
    if (a->kind == TypeKind::Zero) return true;
    if (a->kind == TypeKind::Lollipop) leaves(a->lhs, have);
  }
  return std::all_of(xi.begin(), xi.end(), [&](const auto& e) { return fits_in(e.second, have); });
}

}  // namespace

const std::string& generator_source() {
  static const std::string src = R"(type A.
type B.
type C.
type P (x : A).
type Q (c : 2).
const a : A.
const b : B.
const p (x : A) : P(x).
const q (c : 2) : Q(c).
)";
  return src;
}

std::size_t fiber_bound(const TypePtr& a, std::size_t n) {
  switch (a->kind) {
    case TypeKind::Base: return n;
    case TypeKind::Unit:
    case TypeKind::Two:
    case TypeKind::Id: return 2;
    case TypeKind::Top:
    case TypeKind::Zero: return 1;
    case TypeKind::Tensor: return mul(fiber_bound(a->lhs, n) - 1, fiber_bound(a->rhs, n) - 1) + 1;
    case TypeKind::Lollipop: return power(fiber_bound(a->rhs, n), fiber_bound(a->lhs, n) - 1);
    case TypeKind::With: return mul(fiber_bound(a->lhs, n), fiber_bound(a->rhs, n));
    case TypeKind::Plus: return fiber_bound(a->lhs, n) + fiber_bound(a->rhs, n) - 1;
    case TypeKind::Bang: return fiber_bound(a->lhs, n) + 1;
    case TypeKind::Sigma: return mul(fiber_bound(a->lhs, n), fiber_bound(a->rhs, n) - 1) + 1;
    case TypeKind::Pi: return power(fiber_bound(a->rhs, n), fiber_bound(a->lhs, n));
  }
  return kCap;
}

std::size_t eval_cost(const TermPtr& t, std::size_t n) {
  std::size_t c = 1;
  for (std::size_t i = 0; i < t->kids.size(); ++i) {
    std::size_t k = eval_cost(t->kids[i], n);
    if (t->kind == TermKind::Lam) k = mul(k, fiber_bound(t->annots[0], n) - 1);
    if (t->kind == TermKind::PiLam) k = mul(k, fiber_bound(t->annots[0], n));
    c = std::min(kCap, c + k);
  }
  return c;
}

TermGenerator::TermGenerator(const Signature& sig, std::uint64_t seed, GenOptions opts)
    : sig_(sig), opts_(opts), rng_(seed) {}

std::size_t TermGenerator::pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

bool TermGenerator::coin(double p) { return std::bernoulli_distribution(p)(rng_); }

std::string TermGenerator::fresh(const char* stem) { return stem + std::to_string(++counter_); }

std::vector<TermGenerator::Zone> TermGenerator::split(const Zone& xi, std::size_t parts) {
  std::vector<Zone> out(parts);
  for (const auto& e : xi) out[pick(parts)].push_back(e);
  return out;
}

TypePtr TermGenerator::base_type(const Zone& d) {
  std::vector<TypePtr> pool{A(), ty::base("B"), ty::base("C"), P(tm::constant("a"))};
  for (const auto& [x, a] : d) {
    if (a->kind == TypeKind::Base && a->name == "A") pool.push_back(P(tm::ivar(x)));
    if (a->kind == TypeKind::Two) pool.push_back(ty::base("Q", {tm::ivar(x)}));
  }
  return pool[pick(pool.size())];
}

TypePtr TermGenerator::small_type(const Zone& d) {
  switch (pick(10)) {
    case 0: return ty::unit();
    case 1: return ty::tensor(base_type(d), base_type(d));
    case 2: return ty::plus(base_type(d), base_type(d));
    case 3: return ty::with(base_type(d), base_type(d));
    case 4: return ty::bang(base_type(d));
    case 5: return ty::lolli(base_type(d), base_type(d));
    default: return base_type(d);
  }
}

TypePtr TermGenerator::random_type(const Zone& d, int depth) {
  if (depth <= 0) return small_type(d);
  switch (pick(10)) {
    case 0: return ty::tensor(random_type(d, depth - 1), random_type(d, depth - 1));
    case 1: return ty::lolli(small_type(d), random_type(d, depth - 1));
    case 2: return ty::with(random_type(d, depth - 1), random_type(d, depth - 1));
    case 3: return ty::plus(random_type(d, depth - 1), random_type(d, depth - 1));
    case 4: return ty::bang(small_type(d));
    case 5: {
      std::string x = fresh("s");
      return ty::sigma(x, A(), coin(0.7) ? P(tm::ivar(x)) : base_type(d));
    }
    case 6: {
      std::string x = fresh("s");
      if (coin(0.5)) return ty::pi(x, ty::two(), ty::base("Q", {tm::ivar(x)}));
      return ty::pi(x, A(), P(tm::ivar(x)));
    }
    case 7: return ty::top();
    default: return small_type(d);
  }
}

TermPtr TermGenerator::closed(const Zone& d, const TypePtr& t, int fuel) { return gen(d, {}, t, std::min(fuel, 1)); }

TermPtr TermGenerator::gen(const Zone& d, const Zone& xi, const TypePtr& t, int fuel) {
  if (++work_ > kBudget || !feasible(sig_, d, xi, t)) throw Fail{};
  std::vector<int> order{0, 1};
  if (fuel > 0) {
    for (std::size_t i = 0; i < xi.size(); ++i) order.push_back(2);
    order.push_back(3);
  }
  std::shuffle(order.begin(), order.end(), rng_);
  std::vector<std::size_t> vars(xi.size());
  for (std::size_t i = 0; i < vars.size(); ++i) vars[i] = i;
  std::shuffle(vars.begin(), vars.end(), rng_);
  std::size_t next_var = 0;
  for (int s : order) {
    try {
      switch (s) {
        case 0: {
          if (xi.size() == 1 && alpha_eq(xi[0].second, t)) return E(tm::lvar(xi[0].first), t);
          if (!xi.empty()) break;
          std::vector<std::string> hits;
          for (const auto& [x, a] : d)
            if (alpha_eq(a, t)) hits.push_back(x);
          if (!hits.empty()) return E(tm::ivar(hits[pick(hits.size())]), t);
          break;
        }
        case 1: return intro(d, xi, t, fuel);
        case 2: return elim(d, xi, vars[next_var++], t, fuel);
        case 3: return redex(d, xi, t, fuel);
      }
    } catch (const Fail&) {
      if (work_ > kBudget) throw;
    }
  }
  throw Fail{};
}

TermPtr TermGenerator::intro(const Zone& d, const Zone& xi, const TypePtr& t, int fuel) {
  switch (t->kind) {
    case TypeKind::Unit:
      if (xi.empty()) return E(tm::star(), t);
      break;
    case TypeKind::Two:
      if (xi.empty()) return E(coin(0.5) ? tm::tt() : tm::ff(), t);
      break;
    case TypeKind::Base:
      if (!xi.empty()) break;
      for (const auto& c : sig_.consts) {
        if (c.params.empty() && alpha_eq(c.type, t)) return E(tm::constant(c.name), t);
        if (c.params.size() == 1 && t->args.size() == 1 && c.type->name == t->name)
          return E(tm::constant(c.name, {t->args[0]}), t);
      }
      break;
    case TypeKind::Tensor: {
      std::vector<Zone> parts(2);
      for (const auto& e : xi) {
        bool l = fits(e.second, t->lhs), r = fits(e.second, t->rhs);
        parts[l == r ? pick(2) : (l ? 0 : 1)].push_back(e);
      }
      return E(tm::tensor(gen(d, parts[0], t->lhs, fuel), gen(d, parts[1], t->rhs, fuel)), t);
    }
    case TypeKind::Lollipop: {
      std::string z = fresh("x");
      auto body = gen(d, [&] {
        auto inner = xi;
        inner.emplace_back(z, t->lhs);
        return inner;
      }(), t->rhs, fuel);
      return E(tm::lam(z, t->lhs, body), t);
    }
    case TypeKind::With: return E(tm::with(gen(d, xi, t->lhs, fuel), gen(d, xi, t->rhs, fuel)), t);
    case TypeKind::Plus:
      if (coin(0.5)) return E(tm::inl(gen(d, xi, t->lhs, fuel)), t);
      return E(tm::inr(gen(d, xi, t->rhs, fuel)), t);
    case TypeKind::Top: return E(tm::unit(), t);
    case TypeKind::Bang:
      if (xi.empty()) return E(tm::bang(closed(d, t->lhs, fuel)), t);
      break;
    case TypeKind::Sigma: {
      auto a = closed(d, t->lhs, fuel);
      return E(tm::sigma_pair(a, gen(d, xi, subst_int(t->rhs, t->name, a), fuel)), t);
    }
    case TypeKind::Pi: {
      std::string u = fresh("u");
      auto inner = d;
      inner.emplace_back(u, t->lhs);
      auto body = gen(inner, xi, subst_int(t->rhs, t->name, tm::ivar(u)), fuel);
      return E(tm::pi_lam(u, t->lhs, body), t);
    }
    case TypeKind::Id:
      if (xi.empty() && alpha_eq(t->args[0], t->args[1])) return E(tm::refl(t->args[0]), t);
      break;
    case TypeKind::Zero: break;
  }
  throw Fail{};
}

TermPtr TermGenerator::elim(const Zone& d, const Zone& xi, std::size_t y, const TypePtr& t, int fuel) {
  const auto& [name, u] = xi[y];
  Zone rest = xi;
  rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(y));
  auto var = E(tm::lvar(name), u);
  auto plus = [](Zone z, std::initializer_list<std::pair<std::string, TypePtr>> more) {
    z.insert(z.end(), more.begin(), more.end());
    return z;
  };
  // continue with the eliminated value `v : vt` bound to a fresh variable
  auto then = [&](const TermPtr& v, const TypePtr& vt, const Zone& others) -> TermPtr {
    if (others.empty() && alpha_eq(vt, t) && coin(0.6)) return v;
    std::string z = fresh("x");
    auto body = gen(d, plus(others, {{z, vt}}), t, fuel - 1);
    return E(tm::app(E(tm::lam(z, vt, body), ty::lolli(vt, t)), v), t);
  };
  switch (u->kind) {
    case TypeKind::Unit: return E(tm::let_star(var, gen(d, rest, t, fuel - 1)), t);
    case TypeKind::Tensor: {
      std::string p = fresh("x"), q = fresh("x");
      return E(tm::let_tensor(var, p, q, gen(d, plus(rest, {{p, u->lhs}, {q, u->rhs}}), t, fuel - 1)), t);
    }
    case TypeKind::Bang: {
      std::string x = fresh("u");
      return E(tm::let_bang(var, x, gen(plus(d, {{x, u->lhs}}), rest, t, fuel - 1)), t);
    }
    case TypeKind::Sigma: {
      std::string x = fresh("u"), q = fresh("x");
      auto body = gen(plus(d, {{x, u->lhs}}), plus(rest, {{q, subst_int(u->rhs, u->name, tm::ivar(x))}}), t, fuel - 1);
      return E(tm::let_sigma(var, x, q, body), t);
    }
    case TypeKind::Plus: {
      std::string p = fresh("x"), q = fresh("x");
      auto c = gen(d, plus(rest, {{p, u->lhs}}), t, fuel - 1);
      auto e = gen(d, plus(rest, {{q, u->rhs}}), t, fuel - 1);
      return E(tm::case_of(var, p, c, q, e), t);
    }
    case TypeKind::Zero: return E(tm::absurd(var), t);
    case TypeKind::Lollipop: {
      std::vector<Zone> parts(2);
      for (const auto& e : rest) parts[fits(e.second, u->lhs) && coin(0.3) ? 0 : 1].push_back(e);
      auto arg = gen(d, parts[0], u->lhs, fuel - 1);
      return then(E(tm::app(var, arg), u->rhs), u->rhs, parts[1]);
    }
    case TypeKind::With: {
      bool left = coin(0.5);
      auto side = left ? u->lhs : u->rhs;
      return then(E(left ? tm::fst(var) : tm::snd(var), side), side, rest);
    }
    case TypeKind::Pi: {
      auto a = closed(d, u->lhs, fuel);
      auto out = subst_int(u->rhs, u->name, a);
      return then(E(tm::pi_app(var, a), out), out, rest);
    }
    default: break;
  }
  throw Fail{};
}

TermPtr TermGenerator::redex(const Zone& d, const Zone& xi, const TypePtr& t, int fuel) {
  auto add = [](Zone z, const std::string& x, const TypePtr& a) {
    z.emplace_back(x, a);
    return z;
  };
  const int f = fuel - 1;
  switch (pick(9)) {
    case 0: {
      auto x = small_type(d);
      auto parts = split(xi, 2);
      auto arg = gen(d, parts[0], x, f);
      std::string z = fresh("x");
      auto body = gen(d, add(parts[1], z, x), t, f);
      return E(tm::app(E(tm::lam(z, x, body), ty::lolli(x, t)), arg), t);
    }
    case 1: {
      auto x = base_type(d), y = small_type(d);
      auto parts = split(xi, 3);
      auto pair = E(tm::tensor(gen(d, parts[0], x, f), gen(d, parts[1], y, f)), ty::tensor(x, y));
      std::string p = fresh("x"), q = fresh("x");
      return E(tm::let_tensor(pair, p, q, gen(d, add(add(parts[2], p, x), q, y), t, f)), t);
    }
    case 2: {
      auto x = base_type(d);
      auto a = closed(d, x, f);
      std::string u = fresh("u");
      return E(tm::let_bang(E(tm::bang(a), ty::bang(x)), u, gen(add(d, u, x), xi, t, f)), t);
    }
    case 3: {
      auto x = base_type(d), y = base_type(d);
      auto parts = split(xi, 2);
      bool left = coin(0.5);
      auto s = left ? tm::inl(gen(d, parts[0], x, f)) : tm::inr(gen(d, parts[0], y, f));
      std::string p = fresh("x"), q = fresh("x");
      auto c = gen(d, add(parts[1], p, x), t, f);
      auto e = gen(d, add(parts[1], q, y), t, f);
      return E(tm::case_of(E(s, ty::plus(x, y)), p, c, q, e), t);
    }
    case 4: {
      auto y = small_type(d);
      bool left = coin(0.5);
      auto main = gen(d, xi, t, f), other = gen(d, xi, y, f);
      if (left) return E(tm::fst(E(tm::with(main, other), ty::with(t, y))), t);
      return E(tm::snd(E(tm::with(other, main), ty::with(y, t))), t);
    }
    case 5: return E(tm::let_star(E(tm::star(), ty::unit()), gen(d, xi, t, f)), t);
    case 6: {
      auto c = closed(d, ty::two(), f);
      std::string z = fresh("u");
      return E(tm::if_then(z, t, c, gen(d, xi, t, f), gen(d, xi, t, f)), t);
    }
    case 7: {
      auto a = closed(d, A(), f);
      std::string s = fresh("s");
      auto sty = ty::sigma(s, A(), P(tm::ivar(s)));
      auto parts = split(xi, 2);
      auto pair = E(tm::sigma_pair(a, gen(d, parts[0], P(a), f)), sty);
      std::string u = fresh("u"), q = fresh("x");
      auto body = gen(add(d, u, A()), add(parts[1], q, P(tm::ivar(u))), t, f);
      return E(tm::let_sigma(pair, u, q, body), t);
    }
    default: {
      auto a = closed(d, A(), f);
      std::string u = fresh("u");
      auto parts = split(xi, 2);
      auto fn = E(tm::pi_lam(u, A(), gen(add(d, u, A()), parts[0], P(tm::ivar(u)), f)),
                  ty::pi(u, A(), P(tm::ivar(u))));
      auto arg = E(tm::pi_app(fn, a), P(a));
      std::string z = fresh("x");
      auto body = gen(d, add(parts[1], z, P(a)), t, f);
      return E(tm::app(E(tm::lam(z, P(a), body), ty::lolli(P(a), t)), arg), t);
    }
  }
}

Sample TermGenerator::sample(std::size_t count, std::size_t linear) {
  Sample s;
  for (int attempt = 0; attempt < 50; ++attempt) {
    Zone d;
    std::size_t nd = pick(opts_.max_int + 1);
    for (std::size_t i = 0; i < nd; ++i) {
      std::vector<TypePtr> pool{A(), ty::base("B"), ty::two(), ty::base("C")};
      for (const auto& [x, a] : d)
        if (a->kind == TypeKind::Base && a->name == "A") pool.push_back(P(tm::ivar(x)));
      d.emplace_back(fresh("c"), pool[pick(pool.size())]);
    }
    auto t = random_type(d, 2);
    if (fiber_bound(t) > 4096) continue;
    std::vector<TypePtr> ls;
    leaves(t, ls);
    auto leaf = [&] { return ls.empty() ? base_type(d) : ls[pick(ls.size())]; };
    Zone xi;
    std::size_t nl = std::min(linear, opts_.max_linear);
    std::size_t space = 1;
    for (std::size_t i = 0; i < nl; ++i) {
      TypePtr a;
      switch (ls.empty() ? pick(2) : pick(8)) {
        case 0: a = ty::unit(); break;
        case 1: a = ty::bang(base_type(d)); break;
        case 2: a = ty::tensor(leaf(), leaf()); break;
        case 3: a = ty::plus(leaf(), leaf()); break;
        case 4: a = ty::with(leaf(), base_type(d)); break;
        case 5: a = ty::lolli(coin(0.5) ? A() : ty::unit(), leaf()); break;
        default: a = leaf(); break;
      }
      space = mul(space, fiber_bound(a) - 1);
      xi.emplace_back(fresh("y"), a);
    }
    if (space > opts_.max_input_space) continue;
    s.ctx = DualContext{d, xi};
    s.type = t;
    s.terms.clear();
    for (std::size_t i = 0; i < 4 * count && s.terms.size() < count; ++i) {
      work_ = 0;
      try {
        auto term = gen(d, xi, t, opts_.fuel);
        if (eval_cost(term) <= opts_.max_eval_cost) s.terms.push_back(term);
      } catch (const Fail&) {
      }
    }
    if (!s.terms.empty()) return s;
  }
  return s;
}

}  // namespace ildtt::gen
