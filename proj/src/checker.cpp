#include "ildtt/checker.hpp"

#include <algorithm>

#include "checker_impl.hpp"

namespace ildtt {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::UnboundVariable: return "unbound";
    case ErrorKind::LinearUnused: return "unused";
    case ErrorKind::LinearReused: return "reused";
    case ErrorKind::TypeMismatch: return "mismatch";
    case ErrorKind::IllFormedContext: return "context";
    case ErrorKind::EqualityFailure: return "equality";
  }
  return "?";
}

CheckError::CheckError(ErrorKind kind_, std::string message, SourceSpan span_, std::string variable_,
                       std::string expected_, std::string actual_)
    : std::runtime_error(std::move(message)),
      kind(kind_),
      span(std::move(span_)),
      variable(std::move(variable_)),
      expected(std::move(expected_)),
      actual(std::move(actual_)) {}

TypePtr DualContext::find_int(const std::string& x) const {
  for (auto it = intuitionistic.rbegin(); it != intuitionistic.rend(); ++it)
    if (it->first == x) return it->second;
  return nullptr;
}

TypePtr DualContext::find_lin(const std::string& x) const {
  for (auto it = linear.rbegin(); it != linear.rend(); ++it)
    if (it->first == x) return it->second;
  return nullptr;
}

DualContext DualContext::with_int(std::string x, TypePtr a) const {
  DualContext c = *this;
  c.intuitionistic.emplace_back(std::move(x), std::move(a));
  return c;
}

DualContext DualContext::with_lin(std::string x, TypePtr a) const {
  DualContext c = *this;
  c.linear.emplace_back(std::move(x), std::move(a));
  return c;
}

std::set<std::string> DualContext::names() const {
  std::set<std::string> out;
  for (const auto& [x, a] : intuitionistic) out.insert(x);
  for (const auto& [x, a] : linear) out.insert(x);
  return out;
}

namespace detail {

CheckedJudgement make_judgement(std::string rule, TermPtr term, TypePtr type,
                                std::vector<CheckedJudgement> premises, const SourceSpan& span) {
  CheckedJudgement j;
  j.rule = std::move(rule);
  j.form = term ? "term" : "type";
  // every checked node records its type for the rewriting passes
  if (term && type && term->elab != type) term = with_elab(term, type);
  j.term = std::move(term);
  j.type = std::move(type);
  j.premises = std::move(premises);
  j.span = span;
  return j;
}

void CheckerImpl::load(const DualContext& ctx) {
  ints = ctx.intuitionistic;
  st = UsageState{};
  for (const auto& [x, a] : ctx.linear) st.lin.push_back({x, a, false});
}

void CheckerImpl::finish(const SourceSpan& span) {
  for (std::size_t i = st.hidden; i < st.lin.size(); ++i) {
    const auto& s = st.lin[i];
    if (!s.consumed && i >= st.slack)
      throw CheckError(ErrorKind::LinearUnused, "linear variable unused: " + s.name, span, s.name);
  }
}

TypePtr CheckerImpl::lookup_int(const std::string& x) const {
  for (auto it = ints.rbegin(); it != ints.rend(); ++it)
    if (it->first == x) return it->second;
  return nullptr;
}

bool CheckerImpl::equal(const TypePtr& a, const TypePtr& b) const {
  if (alpha_eq(a, b)) return true;
  return types_equal(a, b, eq_);
}

std::string CheckerImpl::fresh_int(const std::string& x) const {
  bool clash = lookup_int(x) != nullptr;
  if (!clash) return x;
  std::set<std::string> avoid;
  for (const auto& [n, a] : ints) avoid.insert(n);
  for (const auto& s : st.lin) avoid.insert(s.name);
  return fresh_name(x, avoid);
}

std::string CheckerImpl::fresh_lin(const std::string& x) const {
  bool clash = std::any_of(st.lin.begin(), st.lin.end(), [&](const LinSlot& s) { return s.name == x; });
  if (!clash) return x;
  std::set<std::string> avoid;
  for (const auto& [n, a] : ints) avoid.insert(n);
  for (const auto& s : st.lin) avoid.insert(s.name);
  return fresh_name(x, avoid);
}

void CheckerImpl::push_int(const std::string& x, TypePtr a) { ints.emplace_back(x, std::move(a)); }

void CheckerImpl::pop_int() { ints.pop_back(); }

void CheckerImpl::push_lin(const std::string& x, TypePtr a) { st.lin.push_back({x, std::move(a), false}); }

void CheckerImpl::pop_lin(const SourceSpan& span) {
  std::size_t i = st.lin.size() - 1;
  const auto& s = st.lin[i];
  if (!s.consumed && i >= st.slack)
    throw CheckError(ErrorKind::LinearUnused, "linear variable unused: " + s.name, span, s.name);
  st.lin.pop_back();
  st.slack = std::min(st.slack, st.lin.size());
}

CheckedJudgement CheckerImpl::intuitionistic(const std::function<CheckedJudgement()>& f) {
  auto saved_hidden = st.hidden;
  auto saved_slack = st.slack;
  st.hidden = st.lin.size();
  auto j = f();
  st.hidden = saved_hidden;
  st.slack = saved_slack;
  return j;
}

void CheckerImpl::additive(const std::function<void()>& left, const std::function<void()>& right,
                           const SourceSpan& span) {
  UsageState s0 = st;
  left();
  UsageState s1 = st;
  st = s0;
  right();
  UsageState s2 = st;
  UsageState out = s0;
  for (std::size_t i = 0; i < out.lin.size(); ++i) {
    bool c1 = s1.lin[i].consumed;
    bool c2 = s2.lin[i].consumed;
    if (c1 != c2) {
      bool absorbed = c1 ? i < s2.slack : i < s1.slack;
      if (!absorbed) {
        const auto& name = out.lin[i].name;
        throw CheckError(ErrorKind::LinearUnused,
                         "linear variable unused: " + name + " (used in only one branch)", span, name);
      }
    }
    out.lin[i].consumed = c1 || c2;
  }
  out.slack = std::min(s1.slack, s2.slack);
  st = out;
}

CheckedJudgement CheckerImpl::conv(CheckedJudgement j, const TypePtr& expected, const TermPtr& t) {
  if (alpha_eq(j.type, expected)) return j;
  if (!equal(j.type, expected))
    throw CheckError(ErrorKind::TypeMismatch,
                     "type mismatch: expected " + to_string(expected) + ", found " + to_string(j.type), t->span,
                     {}, to_string(expected), to_string(j.type));
  auto term = j.term;
  auto used = j.linear_used;
  auto out = make_judgement("Tm-Conv", term, expected, {std::move(j)}, t->span);
  out.linear_used = std::move(used);
  return out;
}

CheckedJudgement CheckerImpl::check(const TermPtr& t, const TypePtr& expected) {
  std::vector<bool> before;
  for (const auto& s : st.lin) before.push_back(s.consumed);
  auto j = check_node(t, expected);
  for (std::size_t i = 0; i < before.size() && i < st.lin.size(); ++i)
    if (!before[i] && st.lin[i].consumed) j.linear_used.push_back(st.lin[i].name);
  return j;
}

CheckedJudgement CheckerImpl::infer(const TermPtr& t) {
  std::vector<bool> before;
  for (const auto& s : st.lin) before.push_back(s.consumed);
  auto j = infer_node(t);
  for (std::size_t i = 0; i < before.size() && i < st.lin.size(); ++i)
    if (!before[i] && st.lin[i].consumed) j.linear_used.push_back(st.lin[i].name);
  return j;
}

// ---------------------------------------------------------------------------
// type formation

CheckedJudgement CheckerImpl::type(const TypePtr& a) {
  auto j = [&](const char* rule, TypePtr out, std::vector<CheckedJudgement> ps) {
    return make_judgement(rule, nullptr, std::move(out), std::move(ps), a->span);
  };
  switch (a->kind) {
    case TypeKind::Unit: return j("I-F", a, {});
    case TypeKind::Top: return j("⊤-F", a, {});
    case TypeKind::Zero: return j("0-F", a, {});
    case TypeKind::Two: return j("2-F", a, {});
    case TypeKind::Tensor:
    case TypeKind::Lollipop:
    case TypeKind::With:
    case TypeKind::Plus: {
      auto l = type(a->lhs);
      auto r = type(a->rhs);
      auto copy = std::make_shared<Type>(*a);
      copy->lhs = l.type;
      copy->rhs = r.type;
      const char* rule = a->kind == TypeKind::Tensor     ? "⊗-F"
                         : a->kind == TypeKind::Lollipop ? "⊸-F"
                         : a->kind == TypeKind::With     ? "&-F"
                                                         : "⊕-F";
      return j(rule, copy, {std::move(l), std::move(r)});
    }
    case TypeKind::Bang: {
      auto l = type(a->lhs);
      auto copy = std::make_shared<Type>(*a);
      copy->lhs = l.type;
      return j("!-F", copy, {std::move(l)});
    }
    case TypeKind::Sigma:
    case TypeKind::Pi: {
      auto dom = type(a->lhs);
      std::string x = fresh_int(a->name);
      TypePtr body = x == a->name ? a->rhs : subst_int(a->rhs, a->name, tm::ivar(x));
      push_int(x, dom.type);
      CheckedJudgement b;
      try {
        b = type(body);
      } catch (...) {
        pop_int();
        throw;
      }
      pop_int();
      auto copy = std::make_shared<Type>(*a);
      copy->name = x;
      copy->lhs = dom.type;
      copy->rhs = b.type;
      return j(a->kind == TypeKind::Sigma ? "Σ-F" : "Π-F", copy, {std::move(dom), std::move(b)});
    }
    case TypeKind::Id: {
      auto dom = type(a->lhs);
      auto l = intuitionistic([&] { return check(a->args[0], dom.type); });
      auto r = intuitionistic([&] { return check(a->args[1], dom.type); });
      auto copy = std::make_shared<Type>(*a);
      copy->lhs = dom.type;
      copy->args = {l.term, r.term};
      return j("Id-F", copy, {std::move(dom), std::move(l), std::move(r)});
    }
    case TypeKind::Base: {
      const auto* decl = sig_.find_type(a->name);
      if (!decl) throw CheckError(ErrorKind::UnboundVariable, "unknown type: " + a->name, a->span, a->name);
      if (decl->params.size() != a->args.size())
        throw CheckError(ErrorKind::TypeMismatch,
                         "type family " + a->name + " expects " + std::to_string(decl->params.size()) + " arguments",
                         a->span);
      Substitution s;
      std::vector<CheckedJudgement> ps;
      std::vector<TermPtr> args;
      for (std::size_t i = 0; i < a->args.size(); ++i) {
        auto pty = substitute(decl->params[i].type, s);
        auto arg = intuitionistic([&] { return check(a->args[i], pty); });
        s.ints[decl->params[i].name] = arg.term;
        args.push_back(arg.term);
        ps.push_back(std::move(arg));
      }
      auto copy = std::make_shared<Type>(*a);
      copy->args = std::move(args);
      return j("Ty-Const", copy, std::move(ps));
    }
  }
  throw CheckError(ErrorKind::TypeMismatch, "unknown type former", a->span);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// public interface

Checker::Checker(const Signature& sig, EqualityConfig eq) : sig_(sig), eq_(eq) {}

bool Checker::types_equal(const TypePtr& a, const TypePtr& b) const {
  return alpha_eq(a, b) || ildtt::types_equal(a, b, eq_);
}

CheckedJudgement Checker::check_signature() const {
  CheckedJudgement root;
  root.rule = "Sig";
  root.form = "ctxt";
  auto telescope = [&](const std::vector<Param>& params, detail::CheckerImpl& impl,
                       std::vector<CheckedJudgement>& out) {
    for (const auto& p : params) {
      if (impl.ints.size() && std::any_of(impl.ints.begin(), impl.ints.end(),
                                          [&](const auto& e) { return e.first == p.name; }))
        throw CheckError(ErrorKind::IllFormedContext, "duplicate parameter: " + p.name, {}, p.name);
      out.push_back(impl.type(p.type));
      impl.ints.emplace_back(p.name, p.type);
    }
  };
  for (const auto& d : sig_.types) {
    // only the declarations before d are visible
    Signature prefix;
    for (const auto& e : sig_.types) {
      if (&e == &d) break;
      prefix.types.push_back(e);
    }
    detail::CheckerImpl impl(prefix, eq_);
    telescope(d.params, impl, root.premises);
  }
  for (const auto& c : sig_.consts) {
    Signature prefix;
    prefix.types = sig_.types;
    for (const auto& e : sig_.consts) {
      if (&e == &c) break;
      prefix.consts.push_back(e);
    }
    detail::CheckerImpl impl(prefix, eq_);
    telescope(c.params, impl, root.premises);
    root.premises.push_back(impl.type(c.type));
  }
  return root;
}

CheckedJudgement Checker::check_context(const DualContext& ctx) const {
  detail::CheckerImpl impl(sig_, eq_);
  CheckedJudgement j;
  j.rule = "C-Emp";
  j.form = "ctxt";
  std::set<std::string> seen;
  auto declared_later = [&](const CheckError& e) {
    return std::any_of(ctx.intuitionistic.begin(), ctx.intuitionistic.end(),
                       [&](const auto& entry) { return entry.first == e.variable; }) ||
           std::any_of(ctx.linear.begin(), ctx.linear.end(),
                       [&](const auto& entry) { return entry.first == e.variable; });
  };
  auto extend = [&](const std::string& x, const TypePtr& a, const char* rule) {
    if (!seen.insert(x).second)
      throw CheckError(ErrorKind::IllFormedContext, "variable declared twice: " + x, {}, x);
    CheckedJudgement ty;
    try {
      ty = impl.type(a);
    } catch (const CheckError& e) {
      if (e.kind == ErrorKind::UnboundVariable && declared_later(e))
        throw CheckError(ErrorKind::IllFormedContext,
                         "type of " + x + " mentions " + e.variable + ", which is not an earlier intuitionistic variable",
                         e.span, e.variable);
      throw;
    }
    CheckedJudgement next;
    next.rule = rule;
    next.form = "ctxt";
    next.premises.push_back(std::move(j));
    next.premises.push_back(std::move(ty));
    j = std::move(next);
  };
  for (const auto& [x, a] : ctx.intuitionistic) {
    extend(x, a, "Int-C-Ext");
    impl.ints.emplace_back(x, a);
  }
  for (const auto& [x, a] : ctx.linear) extend(x, a, "Lin-C-Ext");
  return j;
}

CheckedJudgement Checker::check_type(const DualContext& ctx, const TypePtr& a) const {
  detail::CheckerImpl impl(sig_, eq_);
  impl.ints = ctx.intuitionistic;
  return impl.type(a);
}

CheckedJudgement Checker::check_term(const DualContext& ctx, const TermPtr& t, const TypePtr& a) const {
  check_context(ctx);
  detail::CheckerImpl impl(sig_, eq_);
  impl.load(ctx);
  auto ty = impl.type(a);
  auto j = impl.check(t, ty.type);
  impl.finish(t->span);
  return j;
}

CheckedJudgement Checker::infer_term(const DualContext& ctx, const TermPtr& t) const {
  check_context(ctx);
  detail::CheckerImpl impl(sig_, eq_);
  impl.load(ctx);
  auto j = impl.infer(t);
  impl.finish(t->span);
  return j;
}

CheckedJudgement Checker::check_definition(const Definition& d) const {
  DualContext empty;
  if (d.type) return check_term(empty, d.term, d.type);
  return infer_term(empty, d.term);
}

}  // namespace ildtt
