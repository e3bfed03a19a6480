#include "ildtt/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <tuple>

namespace ildtt {

namespace {

using Mask = std::uint64_t;

struct Scope {
  std::vector<std::pair<std::string, int>> vars;  // innermost last
  int next = 0;

  Scope bind(const std::vector<std::string>& names, Mask& add) const {
    Scope s = *this;
    for (const auto& n : names) {
      if (s.next >= 64) throw std::invalid_argument("partition oracle: more than 64 linear variables");
      add |= Mask{1} << s.next;
      s.vars.emplace_back(n, s.next++);
    }
    return s;
  }
  Scope hidden() const { return Scope{{}, next}; }
  int find(const std::string& x) const {
    for (auto it = vars.rbegin(); it != vars.rend(); ++it)
      if (it->first == x) return it->second;
    return -1;
  }
  std::string key() const {
    std::string k;
    for (const auto& [n, i] : vars) k += n + ":" + std::to_string(i) + ",";
    return k;
  }
};

class PartitionOracle {
 public:
  bool derive(const TermPtr& t, Mask s, const Scope& sc) {
    auto key = std::make_tuple(t.get(), s, sc.key());
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool r = rule(t, s, sc);
    memo_[key] = r;
    return r;
  }

 private:
  // Δ; · ⊢ t for a kid in an intuitionistic position.
  bool closed(const TermPtr& t, const Scope& sc) { return derive(t, 0, sc.hidden()); }

  // Some split s = s1 ⊎ s2 with p(s1) and q(s2).
  static bool split(Mask s, const std::function<bool(Mask)>& p, const std::function<bool(Mask)>& q) {
    for (Mask sub = s;; sub = (sub - 1) & s) {
      if (p(sub) && q(s & ~sub)) return true;
      if (sub == 0) return false;
    }
  }

  bool rule(const TermPtr& t, Mask s, const Scope& sc) {
    const auto& k = t->kids;
    const auto& b = t->binders;
    switch (t->kind) {
      case TermKind::LinVar: {
        int i = sc.find(t->name);
        return i >= 0 && s == (Mask{1} << i);
      }
      case TermKind::IntVar:
      case TermKind::Star:
      case TermKind::TT:
      case TermKind::FF: return s == 0;
      case TermKind::Const:
      case TermKind::BangIntro:
      case TermKind::Refl:
        if (s != 0) return false;
        for (const auto& kid : k)
          if (!closed(kid, sc)) return false;
        return true;
      case TermKind::UnitTop: return true;
      case TermKind::False:
        for (Mask sub = s;; sub = (sub - 1) & s) {
          if (derive(k[0], sub, sc)) return true;
          if (sub == 0) return false;
        }
      case TermKind::TensorPair:
      case TermKind::App:
      case TermKind::LetStar:
      case TermKind::LetBang:
        return split(
            s, [&](Mask m) { return derive(k[0], m, sc); }, [&](Mask m) { return derive(k[1], m, sc); });
      case TermKind::LetTensor:
      case TermKind::LetSigma: {
        Mask add = 0;
        auto inner = sc.bind(t->kind == TermKind::LetTensor ? b : std::vector<std::string>{b[1]}, add);
        return split(
            s, [&](Mask m) { return derive(k[0], m, sc); }, [&](Mask m) { return derive(k[1], m | add, inner); });
      }
      case TermKind::Lam: {
        Mask add = 0;
        auto inner = sc.bind({b[0]}, add);
        return derive(k[0], s | add, inner);
      }
      case TermKind::PiLam:
      case TermKind::Fst:
      case TermKind::Snd:
      case TermKind::Inl:
      case TermKind::Inr: return derive(k[0], s, sc);
      case TermKind::WithPair: return derive(k[0], s, sc) && derive(k[1], s, sc);
      case TermKind::Case: {
        Mask ax = 0, ay = 0;
        auto cx = sc.bind({b[0]}, ax);
        auto cy = sc.bind({b[1]}, ay);
        return split(
            s, [&](Mask m) { return derive(k[0], m, sc); },
            [&](Mask m) { return derive(k[1], m | ax, cx) && derive(k[2], m | ay, cy); });
      }
      case TermKind::SigmaPair: return closed(k[0], sc) && derive(k[1], s, sc);
      case TermKind::PiApp: return derive(k[0], s, sc) && closed(k[1], sc);
      case TermKind::If: return closed(k[0], sc) && derive(k[1], s, sc) && derive(k[2], s, sc);
      case TermKind::LetId:
        return closed(k[0], sc) && closed(k[1], sc) &&
               split(
                   s, [&](Mask m) { return derive(k[2], m, sc); }, [&](Mask m) { return derive(k[3], m, sc); });
    }
    return false;
  }

  std::map<std::tuple<const Term*, Mask, std::string>, bool> memo_;
};

std::size_t binder_count(const TermPtr& t) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < t->binders.size(); ++i)
    if (binder_is_linear(t->kind, i)) ++n;
  for (const auto& kid : t->kids) n += binder_count(kid);
  return n;
}

// Linear variables visible at each position, with their types.
using TypedScope = std::vector<std::pair<std::string, TypePtr>>;

struct Occurrence {
  std::vector<std::size_t> path;
  std::string name;
  TypePtr type;
  TypedScope scope;  // other visible linear variables
};

void occurrences(const TermPtr& t, TypedScope scope, std::vector<std::size_t>& path, std::vector<Occurrence>& out) {
  if (t->kind == TermKind::LinVar) {
    TypePtr type;
    TypedScope others;
    bool seen = false;
    for (auto it = scope.rbegin(); it != scope.rend(); ++it) {
      bool shadowed = false;
      for (auto jt = scope.rbegin(); jt != it; ++jt) shadowed = shadowed || jt->first == it->first;
      if (shadowed) continue;
      if (!seen && it->first == t->name) {
        type = it->second;
        seen = true;
      } else {
        others.push_back(*it);
      }
    }
    if (type) out.push_back({path, t->name, type, std::move(others)});
    return;
  }
  const auto& k = t->kids;
  for (std::size_t i = 0; i < k.size(); ++i) {
    TypedScope inner = scope;
    bool hidden = false;
    switch (t->kind) {
      case TermKind::Const:
      case TermKind::BangIntro:
      case TermKind::Refl: hidden = true; break;
      case TermKind::SigmaPair:
      case TermKind::If: hidden = i == 0; break;
      case TermKind::PiApp: hidden = i == 1; break;
      case TermKind::LetId: hidden = i < 2; break;
      case TermKind::Lam: inner.emplace_back(t->binders[0], t->annots[0]); break;
      case TermKind::LetTensor:
        if (i == 1 && k[0]->elab && k[0]->elab->kind == TypeKind::Tensor) {
          inner.emplace_back(t->binders[0], k[0]->elab->lhs);
          inner.emplace_back(t->binders[1], k[0]->elab->rhs);
        }
        break;
      case TermKind::LetSigma:
        if (i == 1 && k[0]->elab && k[0]->elab->kind == TypeKind::Sigma) {
          const auto& s = k[0]->elab;
          inner.emplace_back(t->binders[1], subst_int(s->rhs, s->name, tm::ivar(t->binders[0])));
        }
        break;
      case TermKind::Case:
        if (i > 0 && k[0]->elab && k[0]->elab->kind == TypeKind::Plus)
          inner.emplace_back(t->binders[i - 1], i == 1 ? k[0]->elab->lhs : k[0]->elab->rhs);
        break;
      default: break;
    }
    if (hidden) inner.clear();
    path.push_back(i);
    occurrences(k[i], std::move(inner), path, out);
    path.pop_back();
  }
}

TermPtr replace_at(const TermPtr& t, const std::vector<std::size_t>& path, std::size_t depth, const TermPtr& with) {
  if (depth == path.size()) return with;
  return with_kid(t, path[depth], replace_at(t->kids[path[depth]], path, depth + 1, with));
}

std::string path_string(const std::vector<std::size_t>& path) {
  std::string s;
  for (auto i : path) s += (s.empty() ? "" : ".") + std::to_string(i);
  return s.empty() ? "root" : s;
}

}  // namespace

bool partition_derivable(const DualContext& ctx, const TermPtr& t) {
  Scope sc;
  Mask all = 0;
  std::vector<std::string> names;
  for (const auto& [x, a] : ctx.linear) names.push_back(x);
  sc = sc.bind(names, all);
  PartitionOracle o;
  return o.derive(t, all, sc);
}

std::size_t linear_variable_count(const DualContext& ctx, const TermPtr& t) {
  return ctx.linear.size() + binder_count(t);
}

const char* mutation_name(MutationKind k) {
  switch (k) {
    case MutationKind::Duplicate: return "duplicate";
    case MutationKind::DropContext: return "drop-context";
    case MutationKind::DropOccurrence: return "drop-occurrence";
  }
  return "?";
}

TermPtr closed_inhabitant(const Signature& sig, const TypePtr& a) {
  switch (a->kind) {
    case TypeKind::Unit: return tm::star();
    case TypeKind::Two: return tm::tt();
    case TypeKind::Top: return with_elab(tm::unit(), a);
    case TypeKind::Base:
      for (const auto& c : sig.consts)
        if (c.params.empty() && alpha_eq(c.type, a)) return with_elab(tm::constant(c.name), a);
      return nullptr;
    case TypeKind::Bang: {
      auto x = closed_inhabitant(sig, a->lhs);
      return x ? with_elab(tm::bang(x), a) : nullptr;
    }
    case TypeKind::Tensor:
    case TypeKind::With: {
      auto x = closed_inhabitant(sig, a->lhs);
      auto y = closed_inhabitant(sig, a->rhs);
      if (!x || !y) return nullptr;
      return with_elab(a->kind == TypeKind::Tensor ? tm::tensor(x, y) : tm::with(x, y), a);
    }
    case TypeKind::Plus: {
      if (auto x = closed_inhabitant(sig, a->lhs)) return with_elab(tm::inl(x), a);
      if (auto y = closed_inhabitant(sig, a->rhs)) return with_elab(tm::inr(y), a);
      return nullptr;
    }
    default: return nullptr;
  }
}

std::vector<Mutant> mutants(const Signature& sig, const DualContext& ctx, const TermPtr& t) {
  std::vector<Mutant> out;
  std::vector<Occurrence> occs;
  std::vector<std::size_t> path;
  occurrences(t, ctx.linear, path, occs);
  for (const auto& o : occs) {
    for (const auto& [x, a] : o.scope) {
      if (!alpha_eq(a, o.type)) continue;
      auto v = with_elab(tm::lvar(x), o.type);
      out.push_back({MutationKind::Duplicate, ctx, replace_at(t, o.path, 0, v),
                     o.name + " -> " + x + " at " + path_string(o.path)});
    }
    if (auto c = closed_inhabitant(sig, o.type))
      out.push_back({MutationKind::DropOccurrence, ctx, replace_at(t, o.path, 0, c),
                     o.name + " -> " + to_string(c) + " at " + path_string(o.path)});
  }
  // one extra variable per distinct linear type, per nullary base type, and I
  std::vector<TypePtr> extra{ty::unit()};
  auto add = [&](const TypePtr& a) {
    if (std::none_of(extra.begin(), extra.end(), [&](const TypePtr& e) { return alpha_eq(e, a); })) extra.push_back(a);
  };
  for (const auto& [x, a] : ctx.linear) add(a);
  for (const auto& f : sig.types)
    if (f.params.empty()) add(ty::base(f.name));
  auto avoid = ctx.names();
  for (const auto& n : free_vars(t).linear) avoid.insert(n);
  std::string w = fresh_name("w", avoid);
  for (const auto& a : extra) {
    auto c = ctx.with_lin(w, a);
    out.push_back({MutationKind::DropContext, c, t, "unused " + w + " : " + to_string(a)});
  }
  return out;
}

}  // namespace ildtt
