#include "ildtt/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace ildtt {

namespace {

TypePtr make_type(TypeKind k, std::string name = {}, std::vector<TermPtr> args = {},
                  TypePtr lhs = nullptr, TypePtr rhs = nullptr) {
  auto t = std::make_shared<Type>();
  t->kind = k;
  t->name = std::move(name);
  t->args = std::move(args);
  t->lhs = std::move(lhs);
  t->rhs = std::move(rhs);
  return t;
}

TermPtr make_term(TermKind k, std::vector<TermPtr> kids = {}, std::vector<std::string> binders = {},
                  std::vector<TypePtr> annots = {}, std::string name = {}) {
  auto t = std::make_shared<Term>();
  t->kind = k;
  t->kids = std::move(kids);
  t->binders = std::move(binders);
  t->annots = std::move(annots);
  t->name = std::move(name);
  return t;
}

}  // namespace

namespace ty {
TypePtr base(std::string name, std::vector<TermPtr> args) {
  return make_type(TypeKind::Base, std::move(name), std::move(args));
}
TypePtr unit() { return make_type(TypeKind::Unit); }
TypePtr tensor(TypePtr a, TypePtr b) { return make_type(TypeKind::Tensor, {}, {}, a, b); }
TypePtr lolli(TypePtr a, TypePtr b) { return make_type(TypeKind::Lollipop, {}, {}, a, b); }
TypePtr top() { return make_type(TypeKind::Top); }
TypePtr with(TypePtr a, TypePtr b) { return make_type(TypeKind::With, {}, {}, a, b); }
TypePtr zero() { return make_type(TypeKind::Zero); }
TypePtr plus(TypePtr a, TypePtr b) { return make_type(TypeKind::Plus, {}, {}, a, b); }
TypePtr bang(TypePtr a) { return make_type(TypeKind::Bang, {}, {}, a); }
TypePtr sigma(std::string x, TypePtr a, TypePtr b) {
  return make_type(TypeKind::Sigma, std::move(x), {}, a, b);
}
TypePtr pi(std::string x, TypePtr a, TypePtr b) {
  return make_type(TypeKind::Pi, std::move(x), {}, a, b);
}
TypePtr id(TypePtr a, TermPtr left, TermPtr right) {
  return make_type(TypeKind::Id, {}, {std::move(left), std::move(right)}, a);
}
TypePtr two() { return make_type(TypeKind::Two); }
}  // namespace ty

namespace tm {
TermPtr ivar(std::string x) { return make_term(TermKind::IntVar, {}, {}, {}, std::move(x)); }
TermPtr lvar(std::string x) { return make_term(TermKind::LinVar, {}, {}, {}, std::move(x)); }
TermPtr constant(std::string c, std::vector<TermPtr> args) {
  return make_term(TermKind::Const, std::move(args), {}, {}, std::move(c));
}
TermPtr star() { return make_term(TermKind::Star); }
TermPtr let_star(TermPtr t, TermPtr body) { return make_term(TermKind::LetStar, {t, body}); }
TermPtr tensor(TermPtr a, TermPtr b) { return make_term(TermKind::TensorPair, {a, b}); }
TermPtr let_tensor(TermPtr t, std::string x, std::string y, TermPtr body) {
  return make_term(TermKind::LetTensor, {t, body}, {std::move(x), std::move(y)});
}
TermPtr lam(std::string x, TypePtr a, TermPtr body) {
  return make_term(TermKind::Lam, {body}, {std::move(x)}, {a});
}
TermPtr app(TermPtr f, TermPtr a) { return make_term(TermKind::App, {f, a}); }
TermPtr bang(TermPtr a) { return make_term(TermKind::BangIntro, {a}); }
TermPtr let_bang(TermPtr t, std::string x, TermPtr body) {
  return make_term(TermKind::LetBang, {t, body}, {std::move(x)});
}
TermPtr with(TermPtr a, TermPtr b) { return make_term(TermKind::WithPair, {a, b}); }
TermPtr fst(TermPtr t) { return make_term(TermKind::Fst, {t}); }
TermPtr snd(TermPtr t) { return make_term(TermKind::Snd, {t}); }
TermPtr unit() { return make_term(TermKind::UnitTop); }
TermPtr inl(TermPtr a) { return make_term(TermKind::Inl, {a}); }
TermPtr inr(TermPtr b) { return make_term(TermKind::Inr, {b}); }
TermPtr case_of(TermPtr t, std::string x, TermPtr c, std::string y, TermPtr d) {
  return make_term(TermKind::Case, {t, c, d}, {std::move(x), std::move(y)});
}
TermPtr absurd(TermPtr t) { return make_term(TermKind::False, {t}); }
TermPtr sigma_pair(TermPtr a, TermPtr b) { return make_term(TermKind::SigmaPair, {a, b}); }
TermPtr let_sigma(TermPtr t, std::string x, std::string y, TermPtr body) {
  return make_term(TermKind::LetSigma, {t, body}, {std::move(x), std::move(y)});
}
TermPtr pi_lam(std::string x, TypePtr a, TermPtr body) {
  return make_term(TermKind::PiLam, {body}, {std::move(x)}, {a});
}
TermPtr pi_app(TermPtr f, TermPtr a) { return make_term(TermKind::PiApp, {f, a}); }
TermPtr refl(TermPtr a) { return make_term(TermKind::Refl, {a}); }
TermPtr let_id(TermPtr a, TermPtr a2, TermPtr p, std::string z, std::string mx, std::string mx2,
               TypePtr motive, TermPtr body) {
  return make_term(TermKind::LetId, {a, a2, p, body}, {std::move(z), std::move(mx), std::move(mx2)},
                   {motive});
}
TermPtr tt() { return make_term(TermKind::TT); }
TermPtr ff() { return make_term(TermKind::FF); }
TermPtr if_then(std::string x, TypePtr motive, TermPtr t, TermPtr a_tt, TermPtr a_ff) {
  return make_term(TermKind::If, {t, a_tt, a_ff}, {std::move(x)}, {motive});
}
}  // namespace tm

TermPtr with_kid(const TermPtr& t, std::size_t i, TermPtr kid) {
  auto copy = std::make_shared<Term>(*t);
  copy->kids.at(i) = std::move(kid);
  return copy;
}

TermPtr with_elab(const TermPtr& t, TypePtr elab) {
  auto copy = std::make_shared<Term>(*t);
  copy->elab = std::move(elab);
  return copy;
}

bool binder_is_linear(TermKind kind, std::size_t k) {
  switch (kind) {
    case TermKind::LetTensor:
    case TermKind::Lam:
    case TermKind::Case:
      return true;
    case TermKind::LetSigma:
      return k == 1;
    default:
      return false;
  }
}

std::vector<Binding> kid_scope(const Term& t, std::size_t i) {
  const auto& b = t.binders;
  switch (t.kind) {
    case TermKind::LetTensor:
      if (i == 1) return {{b[0], true}, {b[1], true}};
      break;
    case TermKind::Lam:
      return {{b[0], true}};
    case TermKind::LetBang:
      if (i == 1) return {{b[0], false}};
      break;
    case TermKind::Case:
      if (i == 1) return {{b[0], true}};
      if (i == 2) return {{b[1], true}};
      break;
    case TermKind::LetSigma:
      if (i == 1) return {{b[0], false}, {b[1], true}};
      break;
    case TermKind::PiLam:
      return {{b[0], false}};
    case TermKind::LetId:
      if (i == 3) return {{b[0], false}};
      break;
    default:
      break;
  }
  return {};
}

std::vector<Binding> annot_scope(const Term& t, std::size_t) {
  if (t.kind == TermKind::LetId) return {{t.binders[1], false}, {t.binders[2], false}};
  if (t.kind == TermKind::If) return {{t.binders[0], false}};
  return {};
}

// ---------------------------------------------------------------------------
// free variables

namespace {

struct Scope {
  std::vector<Binding> stack;

  bool bound(const std::string& x, bool linear) const {
    for (auto it = stack.rbegin(); it != stack.rend(); ++it)
      if (it->name == x && it->linear == linear) return true;
    return false;
  }
};

void collect(const TermPtr& t, Scope& sc, FreeVars& out);

void collect(const TypePtr& a, Scope& sc, FreeVars& out) {
  if (!a) return;
  for (const auto& arg : a->args) collect(arg, sc, out);
  collect(a->lhs, sc, out);
  if (a->kind == TypeKind::Sigma || a->kind == TypeKind::Pi) {
    sc.stack.push_back({a->name, false});
    collect(a->rhs, sc, out);
    sc.stack.pop_back();
  } else {
    collect(a->rhs, sc, out);
  }
}

void collect(const TermPtr& t, Scope& sc, FreeVars& out) {
  if (!t) return;
  if (t->kind == TermKind::IntVar) {
    if (!sc.bound(t->name, false)) out.intuitionistic.insert(t->name);
    return;
  }
  if (t->kind == TermKind::LinVar) {
    if (!sc.bound(t->name, true)) out.linear.insert(t->name);
    return;
  }
  for (std::size_t i = 0; i < t->kids.size(); ++i) {
    auto scope = kid_scope(*t, i);
    for (auto& b : scope) sc.stack.push_back(b);
    collect(t->kids[i], sc, out);
    sc.stack.resize(sc.stack.size() - scope.size());
  }
  for (std::size_t j = 0; j < t->annots.size(); ++j) {
    auto scope = annot_scope(*t, j);
    for (auto& b : scope) sc.stack.push_back(b);
    collect(t->annots[j], sc, out);
    sc.stack.resize(sc.stack.size() - scope.size());
  }
}

}  // namespace

FreeVars free_vars(const TermPtr& t) {
  FreeVars out;
  Scope sc;
  collect(t, sc, out);
  return out;
}

FreeVars free_vars(const TypePtr& a) {
  FreeVars out;
  Scope sc;
  collect(a, sc, out);
  return out;
}

bool occurs_int(const std::string& x, const TermPtr& t) { return free_vars(t).intuitionistic.count(x) > 0; }
bool occurs_int(const std::string& x, const TypePtr& a) { return free_vars(a).intuitionistic.count(x) > 0; }
bool occurs_lin(const std::string& x, const TermPtr& t) { return free_vars(t).linear.count(x) > 0; }

namespace {

std::size_t count_int_in(const std::string& x, const TermPtr& t);

std::size_t count_int_in(const std::string& x, const TypePtr& a) {
  if (!a) return 0;
  std::size_t n = 0;
  for (const auto& arg : a->args) n += count_int_in(x, arg);
  n += count_int_in(x, a->lhs);
  if ((a->kind == TypeKind::Sigma || a->kind == TypeKind::Pi) && a->name == x) return n;
  return n + count_int_in(x, a->rhs);
}

std::size_t count_int_in(const std::string& x, const TermPtr& t) {
  if (!t) return 0;
  if (t->kind == TermKind::IntVar) return t->name == x ? 1 : 0;
  std::size_t n = 0;
  auto shadows = [&](const std::vector<Binding>& scope) {
    return std::any_of(scope.begin(), scope.end(),
                       [&](const Binding& b) { return !b.linear && b.name == x; });
  };
  for (std::size_t i = 0; i < t->kids.size(); ++i)
    if (!shadows(kid_scope(*t, i))) n += count_int_in(x, t->kids[i]);
  for (std::size_t j = 0; j < t->annots.size(); ++j)
    if (!shadows(annot_scope(*t, j))) n += count_int_in(x, t->annots[j]);
  return n;
}

}  // namespace

std::size_t count_int(const std::string& x, const TermPtr& t) { return count_int_in(x, t); }

std::string fresh_name(const std::string& hint, const std::set<std::string>& avoid) {
  std::string stem = hint.empty() ? "v" : hint;
  while (stem.size() > 1 && (std::isdigit(static_cast<unsigned char>(stem.back())) || stem.back() == '\''))
    stem.pop_back();
  if (!avoid.count(stem)) return stem;
  for (std::size_t i = 1;; ++i) {
    std::string candidate = stem + std::to_string(i);
    if (!avoid.count(candidate)) return candidate;
  }
}

// ---------------------------------------------------------------------------
// substitution

namespace {

void names_of(const Substitution& s, std::set<std::string>& out) {
  for (const auto& [k, v] : s.ints) {
    out.insert(k);
    auto fv = free_vars(v);
    out.insert(fv.intuitionistic.begin(), fv.intuitionistic.end());
    out.insert(fv.linear.begin(), fv.linear.end());
  }
  for (const auto& [k, v] : s.lins) {
    out.insert(k);
    auto fv = free_vars(v);
    out.insert(fv.intuitionistic.begin(), fv.intuitionistic.end());
    out.insert(fv.linear.begin(), fv.linear.end());
  }
}

bool captures(const Substitution& s, const Binding& b) {
  auto hit = [&](const TermPtr& v) {
    auto fv = free_vars(v);
    return b.linear ? fv.linear.count(b.name) > 0 : fv.intuitionistic.count(b.name) > 0;
  };
  for (const auto& [k, v] : s.ints)
    if (hit(v)) return true;
  for (const auto& [k, v] : s.lins)
    if (hit(v)) return true;
  return false;
}

/// Restrict `s` for the scope of `scope`, renaming binders that would capture.
/// `renamed` maps each binder to its (possibly new) name.
Substitution enter(const Substitution& s, const std::vector<Binding>& scope,
                   const std::map<std::pair<std::string, bool>, std::string>& renamed) {
  Substitution inner = s;
  for (const auto& b : scope) {
    auto& m = b.linear ? inner.lins : inner.ints;
    m.erase(b.name);
  }
  for (const auto& b : scope) {
    auto it = renamed.find({b.name, b.linear});
    if (it != renamed.end() && it->second != b.name) {
      auto& m = b.linear ? inner.lins : inner.ints;
      m[b.name] = b.linear ? tm::lvar(it->second) : tm::ivar(it->second);
    }
  }
  return inner;
}

}  // namespace

TypePtr substitute(const TypePtr& a, const Substitution& s) {
  if (!a || s.ints.empty()) return a;
  auto copy = std::make_shared<Type>(*a);
  for (auto& arg : copy->args) arg = substitute(arg, s);
  copy->lhs = substitute(a->lhs, s);
  if (a->kind == TypeKind::Sigma || a->kind == TypeKind::Pi) {
    Binding b{a->name, false};
    std::map<std::pair<std::string, bool>, std::string> renamed;
    Substitution probe = s;
    probe.ints.erase(a->name);
    if (!probe.ints.empty() && captures(probe, b)) {
      std::set<std::string> avoid;
      names_of(s, avoid);
      auto fv = free_vars(a->rhs);
      avoid.insert(fv.intuitionistic.begin(), fv.intuitionistic.end());
      copy->name = fresh_name(a->name, avoid);
      renamed[{a->name, false}] = copy->name;
    }
    copy->rhs = substitute(a->rhs, enter(s, {b}, renamed));
  } else {
    copy->rhs = substitute(a->rhs, s);
  }
  return copy;
}

TermPtr substitute(const TermPtr& t, const Substitution& s) {
  if (!t || s.empty()) return t;
  if (t->kind == TermKind::IntVar) {
    auto it = s.ints.find(t->name);
    return it == s.ints.end() ? t : it->second;
  }
  if (t->kind == TermKind::LinVar) {
    auto it = s.lins.find(t->name);
    return it == s.lins.end() ? t : it->second;
  }
  auto copy = std::make_shared<Term>(*t);
  if (t->elab) copy->elab = substitute(t->elab, s);
  // Decide renamings for this node's binders once; all scopes share them.
  std::map<std::pair<std::string, bool>, std::string> renamed;
  if (!t->binders.empty()) {
    std::set<std::string> avoid;
    bool computed = false;
    for (std::size_t k = 0; k < t->binders.size(); ++k) {
      Binding b{t->binders[k], binder_is_linear(t->kind, k)};
      Substitution probe = s;
      (b.linear ? probe.lins : probe.ints).erase(b.name);
      if (probe.empty() || !captures(probe, b)) continue;
      if (!computed) {
        names_of(s, avoid);
        auto fv = free_vars(t);
        avoid.insert(fv.intuitionistic.begin(), fv.intuitionistic.end());
        avoid.insert(fv.linear.begin(), fv.linear.end());
        avoid.insert(t->binders.begin(), t->binders.end());
        for (const auto& kid : t->kids) {
          auto kfv = free_vars(kid);
          avoid.insert(kfv.intuitionistic.begin(), kfv.intuitionistic.end());
          avoid.insert(kfv.linear.begin(), kfv.linear.end());
        }
        for (const auto& an : t->annots) {
          auto afv = free_vars(an);
          avoid.insert(afv.intuitionistic.begin(), afv.intuitionistic.end());
        }
        computed = true;
      }
      // case branches may reuse a name; their scopes are disjoint
      auto [it, added] = renamed.try_emplace({b.name, b.linear}, "");
      if (added) {
        it->second = fresh_name(b.name, avoid);
        avoid.insert(it->second);
      }
      copy->binders[k] = it->second;
    }
  }
  for (std::size_t i = 0; i < t->kids.size(); ++i)
    copy->kids[i] = substitute(t->kids[i], enter(s, kid_scope(*t, i), renamed));
  for (std::size_t j = 0; j < t->annots.size(); ++j)
    copy->annots[j] = substitute(t->annots[j], enter(s, annot_scope(*t, j), renamed));
  return copy;
}

TermPtr subst_int(const TermPtr& t, const std::string& x, const TermPtr& a) {
  Substitution s;
  s.ints[x] = a;
  return substitute(t, s);
}

TypePtr subst_int(const TypePtr& ty, const std::string& x, const TermPtr& a) {
  Substitution s;
  s.ints[x] = a;
  return substitute(ty, s);
}

TermPtr subst_lin(const TermPtr& t, const std::string& x, const TermPtr& a) {
  Substitution s;
  s.lins[x] = a;
  return substitute(t, s);
}

// ---------------------------------------------------------------------------
// alpha-equivalence: compare bound occurrences by binding depth

namespace {

struct AlphaEnv {
  std::vector<Binding> left, right;

  static long depth(const std::vector<Binding>& st, const std::string& x, bool linear) {
    for (std::size_t i = st.size(); i-- > 0;)
      if (st[i].name == x && st[i].linear == linear) return static_cast<long>(st.size() - i);
    return -1;
  }
};

bool alpha(const TermPtr& u, const TermPtr& v, AlphaEnv& env);

bool alpha(const TypePtr& u, const TypePtr& v, AlphaEnv& env) {
  if (!u || !v) return !u && !v;
  if (u->kind != v->kind || u->args.size() != v->args.size()) return false;
  if (u->kind == TypeKind::Base && u->name != v->name) return false;
  for (std::size_t i = 0; i < u->args.size(); ++i)
    if (!alpha(u->args[i], v->args[i], env)) return false;
  if (!alpha(u->lhs, v->lhs, env)) return false;
  if (u->kind == TypeKind::Sigma || u->kind == TypeKind::Pi) {
    env.left.push_back({u->name, false});
    env.right.push_back({v->name, false});
    bool ok = alpha(u->rhs, v->rhs, env);
    env.left.pop_back();
    env.right.pop_back();
    return ok;
  }
  return alpha(u->rhs, v->rhs, env);
}

bool alpha(const TermPtr& u, const TermPtr& v, AlphaEnv& env) {
  if (!u || !v) return !u && !v;
  if (u->kind != v->kind) return false;
  if (u->kind == TermKind::IntVar || u->kind == TermKind::LinVar) {
    bool lin = u->kind == TermKind::LinVar;
    long du = AlphaEnv::depth(env.left, u->name, lin);
    long dv = AlphaEnv::depth(env.right, v->name, lin);
    if (du < 0 && dv < 0) return u->name == v->name;
    return du == dv;
  }
  if (u->kind == TermKind::Const && u->name != v->name) return false;
  if (u->kids.size() != v->kids.size() || u->annots.size() != v->annots.size()) return false;
  for (std::size_t i = 0; i < u->kids.size(); ++i) {
    auto su = kid_scope(*u, i);
    auto sv = kid_scope(*v, i);
    env.left.insert(env.left.end(), su.begin(), su.end());
    env.right.insert(env.right.end(), sv.begin(), sv.end());
    bool ok = alpha(u->kids[i], v->kids[i], env);
    env.left.resize(env.left.size() - su.size());
    env.right.resize(env.right.size() - sv.size());
    if (!ok) return false;
  }
  for (std::size_t j = 0; j < u->annots.size(); ++j) {
    auto su = annot_scope(*u, j);
    auto sv = annot_scope(*v, j);
    env.left.insert(env.left.end(), su.begin(), su.end());
    env.right.insert(env.right.end(), sv.begin(), sv.end());
    bool ok = alpha(u->annots[j], v->annots[j], env);
    env.left.resize(env.left.size() - su.size());
    env.right.resize(env.right.size() - sv.size());
    if (!ok) return false;
  }
  return true;
}

}  // namespace

bool alpha_eq(const TermPtr& u, const TermPtr& v) {
  AlphaEnv env;
  return alpha(u, v, env);
}

bool alpha_eq(const TypePtr& u, const TypePtr& v) {
  AlphaEnv env;
  return alpha(u, v, env);
}

// ---------------------------------------------------------------------------
// printing in the surface grammar; binders that would shadow are renamed

namespace {

struct Printer {
  std::ostringstream out;
  std::set<std::string> taken;
  std::vector<std::pair<Binding, std::string>> names;  // binding -> printed name

  std::string lookup(const std::string& x, bool linear) const {
    for (auto it = names.rbegin(); it != names.rend(); ++it)
      if (it->first.name == x && it->first.linear == linear) return it->second;
    return x;
  }

  std::string bind(const Binding& b) {
    std::string shown = taken.count(b.name) ? fresh_name(b.name, taken) : b.name;
    taken.insert(shown);
    names.push_back({b, shown});
    return shown;
  }

  void unbind(std::size_t n) { names.resize(names.size() - n); }

  void type(const TypePtr& a) {
    switch (a->kind) {
      case TypeKind::Base:
        out << a->name;
        if (!a->args.empty()) {
          out << "(";
          for (std::size_t i = 0; i < a->args.size(); ++i) {
            if (i) out << ", ";
            term(a->args[i]);
          }
          out << ")";
        }
        return;
      case TypeKind::Unit: out << "I"; return;
      case TypeKind::Top: out << "Top"; return;
      case TypeKind::Zero: out << "0"; return;
      case TypeKind::Two: out << "2"; return;
      case TypeKind::Tensor: binary(a, " * "); return;
      case TypeKind::Lollipop: binary(a, " -o "); return;
      case TypeKind::With: binary(a, " & "); return;
      case TypeKind::Plus: binary(a, " + "); return;
      case TypeKind::Bang: out << "!"; type(a->lhs); return;
      case TypeKind::Sigma:
      case TypeKind::Pi: {
        out << (a->kind == TypeKind::Sigma ? "(Sig (!" : "(Pi (!");
        std::string x = bind({a->name, false});
        out << x << " : !";
        // the domain is outside the binder's scope
        names.pop_back();
        type(a->lhs);
        names.push_back({{a->name, false}, x});
        out << ") ";
        type(a->rhs);
        out << ")";
        unbind(1);
        return;
      }
      case TypeKind::Id:
        out << "Id !";
        type(a->lhs);
        out << " (";
        term(a->args[0]);
        out << ", ";
        term(a->args[1]);
        out << ")";
        return;
    }
  }

  void binary(const TypePtr& a, const char* op) {
    out << "(";
    type(a->lhs);
    out << op;
    type(a->rhs);
    out << ")";
  }

  void scoped(const TermPtr& body, const std::vector<Binding>& scope, const std::vector<std::string>& shown) {
    for (std::size_t k = 0; k < scope.size(); ++k) names.push_back({scope[k], shown[k]});
    term(body);
    unbind(scope.size());
  }

  void term(const TermPtr& t) {
    const auto& k = t->kids;
    switch (t->kind) {
      case TermKind::IntVar: out << lookup(t->name, false); return;
      case TermKind::LinVar: out << lookup(t->name, true); return;
      case TermKind::Const:
        out << t->name;
        if (!k.empty()) {
          out << "(";
          for (std::size_t i = 0; i < k.size(); ++i) {
            if (i) out << ", ";
            term(k[i]);
          }
          out << ")";
        }
        return;
      case TermKind::Star: out << "star"; return;
      case TermKind::UnitTop: out << "unit"; return;
      case TermKind::TT: out << "tt"; return;
      case TermKind::FF: out << "ff"; return;
      case TermKind::LetStar:
        out << "(let ";
        term(k[0]);
        out << " be star in ";
        term(k[1]);
        out << ")";
        return;
      case TermKind::TensorPair:
        out << "(";
        term(k[0]);
        out << " (*) ";
        term(k[1]);
        out << ")";
        return;
      case TermKind::SigmaPair:
        out << "((bang ";
        term(k[0]);
        out << ") (*) ";
        term(k[1]);
        out << ")";
        return;
      case TermKind::LetTensor:
      case TermKind::LetSigma: {
        out << "(let ";
        term(k[0]);
        auto scope = kid_scope(*t, 1);
        std::string x = bind(scope[0]);
        std::string y = bind(scope[1]);
        unbind(2);
        out << " be " << (t->kind == TermKind::LetSigma ? "!" : "") << x << " (*) " << y << " in ";
        scoped(k[1], scope, {x, y});
        out << ")";
        return;
      }
      case TermKind::LetBang: {
        out << "(let ";
        term(k[0]);
        auto scope = kid_scope(*t, 1);
        std::string x = bind(scope[0]);
        unbind(1);
        out << " be !" << x << " in ";
        scoped(k[1], scope, {x});
        out << ")";
        return;
      }
      case TermKind::Lam:
      case TermKind::PiLam: {
        bool pi = t->kind == TermKind::PiLam;
        auto scope = kid_scope(*t, 0);
        std::string x = bind(scope[0]);
        unbind(1);
        out << "(lam (" << (pi ? "!" : "") << x << " : " << (pi ? "!" : "");
        type(t->annots[0]);
        out << ") ";
        scoped(k[0], scope, {x});
        out << ")";
        return;
      }
      case TermKind::App:
        out << "(";
        term(k[0]);
        out << " ";
        term(k[1]);
        out << ")";
        return;
      case TermKind::PiApp:
        out << "(";
        term(k[0]);
        out << " (bang ";
        term(k[1]);
        out << "))";
        return;
      case TermKind::BangIntro:
        out << "(bang ";
        term(k[0]);
        out << ")";
        return;
      case TermKind::WithPair:
        out << "<";
        term(k[0]);
        out << ", ";
        term(k[1]);
        out << ">";
        return;
      case TermKind::Fst: unary("fst", k[0]); return;
      case TermKind::Snd: unary("snd", k[0]); return;
      case TermKind::Inl: unary("inl", k[0]); return;
      case TermKind::Inr: unary("inr", k[0]); return;
      case TermKind::False: unary("false", k[0]); return;
      case TermKind::Refl:
        out << "(refl !";
        term(k[0]);
        out << ")";
        return;
      case TermKind::Case: {
        out << "(case ";
        term(k[0]);
        auto sx = kid_scope(*t, 1);
        auto sy = kid_scope(*t, 2);
        std::string x = bind(sx[0]);
        unbind(1);
        out << " of inl " << x << " -> ";
        scoped(k[1], sx, {x});
        std::string y = bind(sy[0]);
        unbind(1);
        out << " || inr " << y << " -> ";
        scoped(k[2], sy, {y});
        out << ")";
        return;
      }
      case TermKind::LetId: {
        out << "(let (";
        term(k[0]);
        out << ", ";
        term(k[1]);
        out << ", ";
        term(k[2]);
        auto sz = kid_scope(*t, 3);
        auto sm = annot_scope(*t, 0);
        std::string z = bind(sz[0]);
        unbind(1);
        out << ") be (" << z << ", " << z << ", refl !" << z << ") in [";
        std::string mx = bind(sm[0]);
        std::string mx2 = bind(sm[1]);
        unbind(2);
        out << mx << " " << mx2 << ". ";
        scoped_type(t->annots[0], sm, {mx, mx2});
        out << "] ";
        scoped(k[3], sz, {z});
        out << ")";
        return;
      }
      case TermKind::If: {
        out << "(if ";
        if (t->annots[0]) {
          auto sm = annot_scope(*t, 0);
          std::string x = bind(sm[0]);
          unbind(1);
          out << "[" << x << ". ";
          scoped_type(t->annots[0], sm, {x});
          out << "] ";
        }
        term(k[0]);
        out << " then ";
        term(k[1]);
        out << " else ";
        term(k[2]);
        out << ")";
        return;
      }
    }
  }

  void scoped_type(const TypePtr& a, const std::vector<Binding>& scope, const std::vector<std::string>& shown) {
    for (std::size_t k = 0; k < scope.size(); ++k) names.push_back({scope[k], shown[k]});
    type(a);
    unbind(scope.size());
  }

  void unary(const char* kw, const TermPtr& a) {
    out << "(" << kw << " ";
    term(a);
    out << ")";
  }
};

}  // namespace

std::string to_string(const TypePtr& a) {
  if (!a) return "<null>";
  Printer p;
  auto fv = free_vars(a);
  p.taken.insert(fv.intuitionistic.begin(), fv.intuitionistic.end());
  p.type(a);
  return p.out.str();
}

std::string to_string(const TermPtr& t) {
  if (!t) return "<null>";
  Printer p;
  auto fv = free_vars(t);
  p.taken.insert(fv.intuitionistic.begin(), fv.intuitionistic.end());
  p.taken.insert(fv.linear.begin(), fv.linear.end());
  p.term(t);
  return p.out.str();
}

const char* kind_name(TermKind k) {
  switch (k) {
    case TermKind::IntVar: return "IntVar";
    case TermKind::LinVar: return "LinVar";
    case TermKind::Const: return "Const";
    case TermKind::Star: return "Star";
    case TermKind::LetStar: return "LetStar";
    case TermKind::TensorPair: return "TensorPair";
    case TermKind::LetTensor: return "LetTensor";
    case TermKind::Lam: return "Lam";
    case TermKind::App: return "App";
    case TermKind::BangIntro: return "BangIntro";
    case TermKind::LetBang: return "LetBang";
    case TermKind::WithPair: return "WithPair";
    case TermKind::Fst: return "Fst";
    case TermKind::Snd: return "Snd";
    case TermKind::UnitTop: return "UnitTop";
    case TermKind::Inl: return "Inl";
    case TermKind::Inr: return "Inr";
    case TermKind::Case: return "Case";
    case TermKind::False: return "False";
    case TermKind::SigmaPair: return "SigmaPair";
    case TermKind::LetSigma: return "LetSigma";
    case TermKind::PiLam: return "PiLam";
    case TermKind::PiApp: return "PiApp";
    case TermKind::Refl: return "Refl";
    case TermKind::LetId: return "LetId";
    case TermKind::TT: return "TT";
    case TermKind::FF: return "FF";
    case TermKind::If: return "If";
  }
  return "?";
}

std::size_t term_size(const TermPtr& t) {
  if (!t) return 0;
  std::size_t n = 1;
  for (const auto& k : t->kids) n += term_size(k);
  return n;
}

}  // namespace ildtt
