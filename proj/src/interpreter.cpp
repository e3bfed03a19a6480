#include "ildtt/interpreter.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

namespace ildtt::sem {

namespace {

using Kind = Value::Kind;

std::string lower(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

std::string key_string(const std::string& name, const std::vector<std::string>& key) {
  if (key.empty()) return name;
  std::string out = name + "(";
  for (std::size_t i = 0; i < key.size(); ++i) out += (i ? "," : "") + key[i];
  return out + ")";
}

Env with_int(const Env& env, const std::string& x, Value v) {
  Env out = env;
  out.ints[x] = std::move(v);
  return out;
}

Env with_lin(const Env& env, const std::string& x, Value v) {
  Env out = env;
  out.lins[x] = std::move(v);
  return out;
}

// Split an element of the left-nested smash of `n` fibers into components.
std::vector<Value> unsmash(const Value& e, std::size_t n) {
  std::vector<Value> parts(n);
  if (n == 0) return parts;
  Value cur = e;
  for (std::size_t i = n; i-- > 1;) {
    if (cur.kind != Kind::Pair) throw SemanticError("malformed linear input " + fam::to_string(e));
    parts[i] = cur.kids[1];
    Value rest = cur.kids[0];
    cur = rest;
  }
  parts[0] = cur;
  return parts;
}

}  // namespace

std::uint64_t fnv1a(const std::string& s, std::uint64_t h) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

Interpreter::Interpreter(const Signature& sig, ModelOptions opts) : sig_(sig), opts_(opts) {}

std::vector<std::string> Interpreter::key_of(const std::vector<Param>& params, const std::vector<TermPtr>& args,
                                             const Env& env) const {
  if (params.size() != args.size()) throw SemanticError("arity mismatch in model lookup");
  std::vector<std::string> key;
  Env penv;
  for (std::size_t i = 0; i < params.size(); ++i) {
    Value v = eval(args[i], env);
    key.push_back(label(v, params[i].type, penv));
    penv.ints[params[i].name] = std::move(v);
  }
  return key;
}

PointedSet Interpreter::family(const std::string& name, const std::vector<TermPtr>& args, const Env& env) const {
  const auto* decl = sig_.find_type(name);
  if (!decl) throw SemanticError("unknown type family " + name);
  auto key = key_of(decl->params, args, env);
  auto k = key_string(name, key);
  if (auto it = fibers_.find(k); it != fibers_.end()) return it->second;

  const ModelBinding* mb = opts_.use_bindings ? sig_.find_model(name) : nullptr;
  if (mb) {
    for (const auto& e : mb->entries) {
      if (e.key != key) continue;
      std::vector<Value> xs;
      for (std::size_t i = 0; i < e.set.labels.size(); ++i)
        if (i != e.set.base) xs.push_back(fam::val::atom(e.set.labels[i]));
      base_labels_[k] = e.set.labels[e.set.base];
      return fibers_[k] = fam::make_set(std::move(xs));
    }
  }
  if (!opts_.allow_random) throw SemanticError("no model for " + k);
  std::size_t lo = std::max<std::size_t>(opts_.min_fiber, 1);
  std::size_t hi = std::max(opts_.max_fiber, lo);
  std::size_t n = lo + fnv1a(k, fnv1a(std::to_string(opts_.seed))) % (hi - lo + 1);
  return fibers_[k] = fam::sized_set(n, lower(name));
}

Value Interpreter::constant(const TermPtr& t, const Env& env) const {
  const auto* decl = sig_.find_const(t->name);
  if (!decl) throw SemanticError("unknown constant " + t->name);
  auto key = key_of(decl->params, t->kids, env);
  auto k = key_string(t->name, key);
  if (auto it = consts_.find(k); it != consts_.end()) return it->second;

  Env penv;
  for (std::size_t i = 0; i < decl->params.size(); ++i) penv.ints[decl->params[i].name] = eval(t->kids[i], env);
  auto fiber = type_fiber(decl->type, penv);

  const ModelBinding* mb = opts_.use_bindings ? sig_.find_model(t->name) : nullptr;
  if (mb) {
    for (const auto& e : mb->entries) {
      if (e.key != key) continue;
      for (const auto& x : fiber.elems)
        if (label(x, decl->type, penv) == e.element) {
          const_labels_[k] = e.element;
          return consts_[k] = x;
        }
      throw SemanticError("model of " + k + ": no element labelled " + e.element);
    }
  }
  if (!opts_.allow_random) throw SemanticError("no model for " + k);
  const auto& x = fiber.elems[fnv1a(k, fnv1a("c" + std::to_string(opts_.seed))) % fiber.size()];
  const_labels_[k] = label(x, decl->type, penv);
  return consts_[k] = x;
}

PointedSet Interpreter::type_fiber(const TypePtr& a, const Env& env) const {
  switch (a->kind) {
    case TypeKind::Base: return family(a->name, a->args, env);
    case TypeKind::Unit:
    case TypeKind::Two: return fam::unit_set();
    case TypeKind::Top:
    case TypeKind::Zero: return fam::point_set();
    case TypeKind::Tensor: return fam::smash(type_fiber(a->lhs, env), type_fiber(a->rhs, env));
    case TypeKind::Lollipop: return fam::hom(type_fiber(a->lhs, env), type_fiber(a->rhs, env));
    case TypeKind::With: return fam::product({type_fiber(a->lhs, env), type_fiber(a->rhs, env)});
    case TypeKind::Plus: return fam::plus(type_fiber(a->lhs, env), type_fiber(a->rhs, env));
    case TypeKind::Bang: return fam::bang(type_fiber(a->lhs, env));
    case TypeKind::Sigma:
    case TypeKind::Pi: {
      auto dom = type_fiber(a->lhs, env);
      auto fiber = [&](const Value& i) { return type_fiber(a->rhs, with_int(env, a->name, i)); };
      return a->kind == TypeKind::Sigma ? fam::sigma(dom.elems, fiber) : fam::pi(dom.elems, fiber);
    }
    case TypeKind::Id: {
      Env ienv{env.ints, {}};
      return eval(a->args[0], ienv) == eval(a->args[1], ienv) ? fam::unit_set() : fam::point_set();
    }
  }
  throw SemanticError("unknown type former");
}

bool Interpreter::member(const Value& v, const TypePtr& a, const Env& env) const {
  if (v.is_base()) return true;
  const auto& k = v.kids;
  switch (a->kind) {
    case TypeKind::Base: return family(a->name, a->args, env).contains(v);
    case TypeKind::Unit:
    case TypeKind::Two: return v.kind == Kind::One;
    case TypeKind::Top:
    case TypeKind::Zero: return false;
    case TypeKind::Id: return type_fiber(a, env).contains(v);
    case TypeKind::Tensor:
      return v.kind == Kind::Pair && !k[0].is_base() && !k[1].is_base() && member(k[0], a->lhs, env) &&
             member(k[1], a->rhs, env);
    case TypeKind::With:
      return v.kind == Kind::Tuple && k.size() == 2 && member(k[0], a->lhs, env) && member(k[1], a->rhs, env);
    case TypeKind::Plus:
      return v.kind == Kind::Inj && (v.label == "l" || v.label == "r") && !k[0].is_base() &&
             member(k[0], v.label == "l" ? a->lhs : a->rhs, env);
    case TypeKind::Bang: return v.kind == Kind::Box && member(k[0], a->lhs, env);
    case TypeKind::Sigma:
      return v.kind == Kind::Dep && !k[1].is_base() && member(k[0], a->lhs, env) &&
             member(k[1], a->rhs, with_int(env, a->name, k[0]));
    case TypeKind::Lollipop:
    case TypeKind::Pi: {
      if (v.kind != Kind::Fun) return false;
      bool pi = a->kind == TypeKind::Pi;
      for (std::size_t i = 0; i + 1 < k.size(); i += 2) {
        if (!pi && k[i].is_base()) return false;
        if (!member(k[i], a->lhs, env)) return false;
        if (!member(k[i + 1], a->rhs, pi ? with_int(env, a->name, k[i]) : env)) return false;
      }
      return true;
    }
  }
  return false;
}

Value Interpreter::eval(const TermPtr& t, const Env& env) const {
  namespace v = fam::val;
  const auto& k = t->kids;
  const auto& b = t->binders;
  switch (t->kind) {
    case TermKind::IntVar: {
      auto it = env.ints.find(t->name);
      if (it == env.ints.end()) throw SemanticError("unbound intuitionistic variable " + t->name);
      return it->second;
    }
    case TermKind::LinVar: {
      auto it = env.lins.find(t->name);
      if (it == env.lins.end()) throw SemanticError("unbound linear variable " + t->name);
      return it->second;
    }
    case TermKind::Const: return constant(t, Env{env.ints, {}});
    case TermKind::Star:
    case TermKind::Refl:
    case TermKind::TT: return v::one();
    case TermKind::FF:
    case TermKind::UnitTop:
    case TermKind::False: return v::star();
    case TermKind::LetStar: {
      if (eval(k[0], env).is_base()) return v::star();
      return eval(k[1], env);
    }
    case TermKind::TensorPair: return v::pair(eval(k[0], env), eval(k[1], env));
    case TermKind::LetTensor: {
      auto p = eval(k[0], env);
      if (p.kind != Kind::Pair) return v::star();
      Env inner = env;
      inner.lins[b[0]] = p.kids[0];
      inner.lins[b[1]] = p.kids[1];
      return eval(k[1], inner);
    }
    case TermKind::Lam:
    case TermKind::PiLam: {
      bool pi = t->kind == TermKind::PiLam;
      auto dom = type_fiber(t->annots[0], env);
      std::vector<std::pair<Value, Value>> table;
      for (const auto& x : pi ? dom.elems : dom.non_base())
        table.emplace_back(x, eval(k[0], pi ? with_int(env, b[0], x) : with_lin(env, b[0], x)));
      return v::fun(std::move(table));
    }
    case TermKind::App:
    case TermKind::PiApp: return fam::apply(eval(k[0], env), eval(k[1], env));
    case TermKind::BangIntro: return v::box(eval(k[0], env));
    case TermKind::LetBang: {
      auto x = eval(k[0], env);
      if (x.kind != Kind::Box) return v::star();
      return eval(k[1], with_int(env, b[0], x.kids[0]));
    }
    case TermKind::WithPair: return v::tuple({eval(k[0], env), eval(k[1], env)});
    case TermKind::Fst: return fam::project(eval(k[0], env), 0);
    case TermKind::Snd: return fam::project(eval(k[0], env), 1);
    case TermKind::Inl: return v::inj("l", eval(k[0], env));
    case TermKind::Inr: return v::inj("r", eval(k[0], env));
    case TermKind::Case: {
      auto s = eval(k[0], env);
      if (s.kind != Kind::Inj) return v::star();
      bool left = s.label == "l";
      return eval(k[left ? 1 : 2], with_lin(env, b[left ? 0 : 1], s.kids[0]));
    }
    case TermKind::SigmaPair: return v::dep(eval(k[0], env), eval(k[1], env));
    case TermKind::LetSigma: {
      auto p = eval(k[0], env);
      if (p.kind != Kind::Dep) return v::star();
      Env inner = env;
      inner.ints[b[0]] = p.kids[0];
      inner.lins[b[1]] = p.kids[1];
      return eval(k[1], inner);
    }
    case TermKind::LetId: {
      if (eval(k[2], env).is_base()) return v::star();
      return eval(k[3], with_int(env, b[0], eval(k[0], env)));
    }
    case TermKind::If: return eval(k[eval(k[0], env).is_base() ? 2 : 1], env);
  }
  throw SemanticError("unknown term former");
}

std::string Interpreter::label(const Value& v, const TypePtr& a, const Env& env) const {
  switch (a->kind) {
    case TypeKind::Two: return v.is_base() ? "ff" : "tt";
    case TypeKind::Unit: return v.is_base() ? "bot" : "*";
    case TypeKind::Id: return v.is_base() ? "bot" : "refl";
    case TypeKind::Base: {
      if (!v.is_base()) return v.label;
      const auto* decl = sig_.find_type(a->name);
      if (decl) {
        auto it = base_labels_.find(key_string(a->name, key_of(decl->params, a->args, env)));
        if (it != base_labels_.end()) return it->second;
      }
      return "bot";
    }
    default: break;
  }
  if (v.is_base()) return "bot";
  switch (a->kind) {
    case TypeKind::Tensor:
      return "(" + label(v.kids[0], a->lhs, env) + " (*) " + label(v.kids[1], a->rhs, env) + ")";
    case TypeKind::Lollipop:
    case TypeKind::Pi: {
      std::string out = "{";
      for (std::size_t i = 0; i + 1 < v.kids.size(); i += 2) {
        Env inner = a->kind == TypeKind::Pi ? with_int(env, a->name, v.kids[i]) : env;
        out += (i ? ", " : "") + label(v.kids[i], a->lhs, env) + " -> " + label(v.kids[i + 1], a->rhs, inner);
      }
      return out + "}";
    }
    case TypeKind::With:
      return "<" + label(fam::project(v, 0), a->lhs, env) + ", " + label(fam::project(v, 1), a->rhs, env) + ">";
    case TypeKind::Plus: return (v.label == "l" ? "inl " : "inr ") + label(v.kids[0], v.label == "l" ? a->lhs : a->rhs, env);
    case TypeKind::Bang: return "!" + label(v.kids[0], a->lhs, env);
    case TypeKind::Sigma:
      return "(!" + label(v.kids[0], a->lhs, env) + " (*) " +
             label(v.kids[1], a->rhs, with_int(env, a->name, v.kids[0])) + ")";
    default: return fam::to_string(v);
  }
}

std::string Interpreter::describe_model() const {
  std::ostringstream out;
  for (const auto& [k, s] : fibers_) {
    out << k << " := {";
    auto base = base_labels_.find(k);
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i) out << ", ";
      if (i == 0)
        out << (base != base_labels_.end() ? base->second : "bot") << "*";
      else
        out << s.elems[i].label;
    }
    out << "}\n";
  }
  for (const auto& [k, v] : const_labels_) out << k << " := " << v << "\n";
  return out.str();
}

std::vector<Env> Interpreter::context_points(const DualContext& ctx) const {
  std::vector<Env> out{Env{}};
  for (const auto& [x, a] : ctx.intuitionistic) {
    std::vector<Env> next;
    for (const auto& e : out)
      for (const auto& v : type_fiber(a, e).elems) next.push_back(with_int(e, x, v));
    out = std::move(next);
  }
  return out;
}

std::vector<Env> Interpreter::linear_inputs(const DualContext& ctx, const Env& point) const {
  std::vector<Env> out{Env{point.ints, {}}};
  for (const auto& [x, a] : ctx.linear) {
    auto fiber = type_fiber(a, point);
    std::vector<Env> next;
    for (const auto& e : out)
      for (const auto& v : fiber.non_base()) next.push_back(with_lin(e, x, v));
    out = std::move(next);
  }
  return out;
}

ContextDenotation Interpreter::denote_context(const DualContext& ctx) const {
  ContextDenotation d;
  for (const auto& e : context_points(ctx)) {
    std::vector<Value> vs;
    for (const auto& [x, a] : ctx.intuitionistic) vs.push_back(e.ints.at(x));
    auto pt = fam::val::point(std::move(vs));
    d.points.push_back(pt);
    d.env[pt] = e;
  }
  std::sort(d.points.begin(), d.points.end());
  d.linear = fam::make_fam(d.points, [&](const Value& pt) {
    const auto& e = d.env.at(pt);
    if (ctx.linear.empty()) return fam::unit_set();
    auto acc = type_fiber(ctx.linear[0].second, e);
    for (std::size_t i = 1; i < ctx.linear.size(); ++i) acc = fam::smash(acc, type_fiber(ctx.linear[i].second, e));
    return acc;
  });
  return d;
}

PointedFam Interpreter::denote_type(const DualContext& ctx, const TypePtr& a) const {
  auto c = denote_context(ctx);
  return fam::make_fam(c.points, [&](const Value& pt) { return type_fiber(a, c.env.at(pt)); });
}

TermDenotation Interpreter::denote_term(const DualContext& ctx, const TermPtr& t, const TypePtr& a) const {
  TermDenotation d;
  d.ctx = denote_context(ctx);
  d.type = fam::make_fam(d.ctx.points, [&](const Value& pt) { return type_fiber(a, d.ctx.env.at(pt)); });
  for (const auto& pt : d.ctx.points) {
    PointedMap m{d.ctx.linear.at(pt), d.type.at(pt), {}};
    for (const auto& e : m.dom.elems) {
      if (e.is_base()) {
        m.table[e] = fam::val::star();
        continue;
      }
      Env env{d.ctx.env.at(pt).ints, {}};
      auto parts = unsmash(e, ctx.linear.size());
      for (std::size_t i = 0; i < parts.size(); ++i) env.lins[ctx.linear[i].first] = parts[i];
      m.table[e] = eval(t, env);
    }
    d.map.emplace(pt, std::move(m));
  }
  return d;
}

SoundnessResult check_equation(const Interpreter& in, const DualContext& ctx, const TermPtr& a, const TermPtr& b,
                               const TypePtr& type) {
  SoundnessResult r;
  for (const auto& pt : in.context_points(ctx)) {
    ++r.points;
    for (const auto& env : in.linear_inputs(ctx, pt)) {
      ++r.inputs;
      auto va = in.eval(a, env), vb = in.eval(b, env);
      if (va != vb) {
        r.ok = false;
        r.detail = "denotations differ: " + in.label(va, type, env) + " vs " + in.label(vb, type, env);
        for (const auto& [x, v] : env.ints) r.detail += "; " + x + " = " + fam::to_string(v);
        for (const auto& [x, v] : env.lins) r.detail += "; " + x + " = " + fam::to_string(v);
        return r;
      }
    }
  }
  return r;
}

SoundnessResult check_typing(const Interpreter& in, const DualContext& ctx, const TermPtr& t, const TypePtr& type) {
  SoundnessResult r;
  for (const auto& pt : in.context_points(ctx)) {
    ++r.points;
    auto inputs = in.linear_inputs(ctx, pt);
    if (!ctx.linear.empty()) {
      Env base{pt.ints, {}};
      for (const auto& [x, a] : ctx.linear) base.lins[x] = fam::val::star();
      inputs.push_back(std::move(base));
    }
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      ++r.inputs;
      auto v = in.eval(t, inputs[i]);
      bool base_input = !ctx.linear.empty() && i + 1 == inputs.size();
      if (!in.member(v, type, inputs[i]) || (base_input && !v.is_base())) {
        r.ok = false;
        r.detail = (base_input ? "basepoint not preserved: " : "value outside the type: ") + fam::to_string(v);
        return r;
      }
    }
  }
  return r;
}

}  // namespace ildtt::sem
