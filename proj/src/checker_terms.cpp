// Term rules of the checker: introduction forms are checked against a
// given type, elimination forms infer.

#include <algorithm>

#include "checker_impl.hpp"

namespace ildtt::detail {

namespace {

TermPtr rebuild(const TermPtr& t, std::vector<TermPtr> kids, std::vector<std::string> binders = {},
                std::vector<TypePtr> annots = {}) {
  auto copy = std::make_shared<Term>(*t);
  copy->kids = std::move(kids);
  if (!binders.empty()) copy->binders = std::move(binders);
  if (!annots.empty()) copy->annots = std::move(annots);
  return copy;
}

CheckError mismatch(const std::string& what, const TypePtr& expected, const TermPtr& t) {
  return CheckError(ErrorKind::TypeMismatch,
                    "type mismatch: " + what + (expected ? ", expected " + to_string(expected) : std::string()),
                    t->span, {}, expected ? to_string(expected) : std::string(), {});
}

CheckError cannot_infer(const TermPtr& t) {
  return CheckError(ErrorKind::TypeMismatch,
                    std::string("cannot infer a type for ") + kind_name(t->kind) + "; it needs an expected type",
                    t->span);
}

/// Rename an intuitionistic binder in `body` from x to y.
TermPtr rename_int(const TermPtr& body, const std::string& x, const std::string& y) {
  return x == y ? body : subst_int(body, x, tm::ivar(y));
}

TermPtr rename_lin(const TermPtr& body, const std::string& x, const std::string& y) {
  return x == y ? body : subst_lin(body, x, tm::lvar(y));
}

TypePtr rename_int(const TypePtr& body, const std::string& x, const std::string& y) {
  return x == y ? body : subst_int(body, x, tm::ivar(y));
}

}  // namespace

CheckedJudgement CheckerImpl::infer_node(const TermPtr& t) {
  const auto& k = t->kids;
  switch (t->kind) {
    case TermKind::IntVar: {
      auto a = lookup_int(t->name);
      if (!a) {
        throw CheckError(ErrorKind::UnboundVariable, "unbound variable: " + t->name, t->span, t->name);
      }
      return make_judgement("Int-Var", t, a, {}, t->span);
    }
    case TermKind::LinVar: {
      for (std::size_t i = st.lin.size(); i-- > 0;) {
        auto& s = st.lin[i];
        if (s.name != t->name) continue;
        if (i < st.hidden)
          throw CheckError(ErrorKind::UnboundVariable,
                           "unbound variable: " + t->name + " (linear variables are not available here)", t->span,
                           t->name);
        if (s.consumed)
          throw CheckError(ErrorKind::LinearReused, "linear variable reused: " + t->name, t->span, t->name);
        s.consumed = true;
        return make_judgement("Lin-Var", t, s.type, {}, t->span);
      }
      throw CheckError(ErrorKind::UnboundVariable, "unbound variable: " + t->name, t->span, t->name);
    }
    case TermKind::Const: return constant(t);
    case TermKind::Star: return make_judgement("I-I", t, ty::unit(), {}, t->span);
    case TermKind::TT: return make_judgement("2-I-tt", t, ty::two(), {}, t->span);
    case TermKind::FF: return make_judgement("2-I-ff", t, ty::two(), {}, t->span);
    case TermKind::UnitTop: return check_node(t, ty::top());
    case TermKind::TensorPair: {
      auto a = infer(k[0]);
      auto b = infer(k[1]);
      auto out = ty::tensor(a.type, b.type);
      auto term = rebuild(t, {a.term, b.term});
      return make_judgement("⊗-I", term, out, {std::move(a), std::move(b)}, t->span);
    }
    case TermKind::LetStar:
    case TermKind::LetTensor:
    case TermKind::LetBang:
    case TermKind::LetSigma: return let_like(t, nullptr);
    case TermKind::Case: return case_like(t, nullptr);
    case TermKind::If: return if_like(t, nullptr);
    case TermKind::LetId: return let_id(t, nullptr);
    case TermKind::WithPair: return with_pair(t, nullptr);
    case TermKind::Lam:
    case TermKind::PiLam: return lambda(t, t->elab);
    case TermKind::App:
    case TermKind::PiApp: return app(t);
    case TermKind::BangIntro: {
      auto a = intuitionistic([&] { return infer(k[0]); });
      auto term = rebuild(t, {a.term});
      auto out = ty::bang(a.type);
      return make_judgement("!-I", term, out, {std::move(a)}, t->span);
    }
    case TermKind::Fst:
    case TermKind::Snd: {
      auto p = infer(k[0]);
      if (p.type->kind != TypeKind::With)
        throw mismatch("projection from a term of type " + to_string(p.type), nullptr, t);
      bool first = t->kind == TermKind::Fst;
      auto out = first ? p.type->lhs : p.type->rhs;
      auto term = rebuild(t, {p.term});
      return make_judgement(first ? "&-E1" : "&-E2", term, out, {std::move(p)}, t->span);
    }
    case TermKind::Refl: {
      auto a = intuitionistic([&] { return infer(k[0]); });
      auto term = rebuild(t, {a.term});
      auto out = ty::id(a.type, a.term, a.term);
      return make_judgement("Id-I", term, out, {std::move(a)}, t->span);
    }
    case TermKind::Inl:
    case TermKind::Inr:
    case TermKind::False:
    case TermKind::SigmaPair:
      if (t->elab) return check_node(t, t->elab);
      throw cannot_infer(t);
  }
  throw cannot_infer(t);
}

CheckedJudgement CheckerImpl::check_node(const TermPtr& t, const TypePtr& expected) {
  const auto& k = t->kids;
  switch (t->kind) {
    case TermKind::TensorPair:
    case TermKind::SigmaPair: {
      if (expected->kind == TypeKind::Sigma) {
        TermPtr first = k[0];
        if (t->kind == TermKind::TensorPair) {
          if (first->kind != TermKind::BangIntro)
            throw mismatch("a dependent pair must have the form (bang a) (*) b", expected, t);
          first = first->kids[0];
        }
        auto a = intuitionistic([&] { return check(first, expected->lhs); });
        auto b = check(k[1], subst_int(expected->rhs, expected->name, a.term));
        auto term = tm::sigma_pair(a.term, b.term);
        auto copy = std::make_shared<Term>(*term);
        copy->span = t->span;
        return make_judgement("Σ-I", copy, expected, {std::move(a), std::move(b)}, t->span);
      }
      if (t->kind == TermKind::SigmaPair) throw mismatch("dependent pair", expected, t);
      if (expected->kind != TypeKind::Tensor) return conv(infer(t), expected, t);
      auto a = check(k[0], expected->lhs);
      auto b = check(k[1], expected->rhs);
      auto term = rebuild(t, {a.term, b.term});
      return make_judgement("⊗-I", term, expected, {std::move(a), std::move(b)}, t->span);
    }
    case TermKind::Lam:
    case TermKind::PiLam: return lambda(t, expected);
    case TermKind::BangIntro: {
      if (expected->kind != TypeKind::Bang) return conv(infer(t), expected, t);
      auto a = intuitionistic([&] { return check(k[0], expected->lhs); });
      auto term = rebuild(t, {a.term});
      return make_judgement("!-I", term, expected, {std::move(a)}, t->span);
    }
    case TermKind::WithPair: return with_pair(t, expected);
    case TermKind::UnitTop: {
      if (expected->kind != TypeKind::Top) throw mismatch("unit has type Top", expected, t);
      st.slack = st.lin.size();
      return make_judgement("⊤-I", with_elab(t, expected), expected, {}, t->span);
    }
    case TermKind::Inl:
    case TermKind::Inr: {
      if (expected->kind != TypeKind::Plus) throw mismatch("injection", expected, t);
      bool left = t->kind == TermKind::Inl;
      auto a = check(k[0], left ? expected->lhs : expected->rhs);
      auto term = with_elab(rebuild(t, {a.term}), expected);
      return make_judgement(left ? "⊕-I1" : "⊕-I2", term, expected, {std::move(a)}, t->span);
    }
    case TermKind::False: {
      auto z = check(k[0], ty::zero());
      st.slack = st.lin.size();
      auto term = with_elab(rebuild(t, {z.term}), expected);
      return make_judgement("0-E", term, expected, {std::move(z)}, t->span);
    }
    case TermKind::Refl: {
      if (expected->kind != TypeKind::Id) return conv(infer(t), expected, t);
      auto a = intuitionistic([&] { return check(k[0], expected->lhs); });
      for (const auto& side : expected->args) {
        if (!judg_equal(a.term, side, expected->lhs, eq_))
          throw CheckError(ErrorKind::EqualityFailure,
                           "cannot prove " + to_string(a.term) + " equal to " + to_string(side), t->span, {},
                           to_string(side), to_string(a.term));
      }
      auto term = rebuild(t, {a.term});
      return make_judgement("Id-I", term, expected, {std::move(a)}, t->span);
    }
    case TermKind::LetStar:
    case TermKind::LetTensor:
    case TermKind::LetBang:
    case TermKind::LetSigma: return let_like(t, expected);
    case TermKind::Case: return case_like(t, expected);
    case TermKind::If: return if_like(t, expected);
    case TermKind::LetId: return let_id(t, expected);
    case TermKind::App: {
      // a lambda applied on the spot is checked against its expected result
      if (k[0]->kind != TermKind::Lam) return conv(infer(t), expected, t);
      auto f = check(k[0], ty::lolli(k[0]->annots[0], expected));
      auto a = check(k[1], f.type->lhs);
      auto term = rebuild(t, {f.term, a.term});
      return make_judgement("⊸-E", term, expected, {std::move(f), std::move(a)}, t->span);
    }
    default: return conv(infer(t), expected, t);
  }
}

CheckedJudgement CheckerImpl::constant(const TermPtr& t) {
  const auto* decl = sig_.find_const(t->name);
  if (!decl) throw CheckError(ErrorKind::UnboundVariable, "unbound constant: " + t->name, t->span, t->name);
  if (decl->params.size() != t->kids.size())
    throw CheckError(ErrorKind::TypeMismatch,
                     "constant " + t->name + " expects " + std::to_string(decl->params.size()) + " arguments",
                     t->span);
  Substitution s;
  std::vector<CheckedJudgement> ps;
  std::vector<TermPtr> args;
  for (std::size_t i = 0; i < t->kids.size(); ++i) {
    auto pty = substitute(decl->params[i].type, s);
    auto arg = intuitionistic([&] { return check(t->kids[i], pty); });
    s.ints[decl->params[i].name] = arg.term;
    args.push_back(arg.term);
    ps.push_back(std::move(arg));
  }
  auto out = substitute(decl->type, s);
  return make_judgement("Const", rebuild(t, std::move(args)), out, std::move(ps), t->span);
}

CheckedJudgement CheckerImpl::lambda(const TermPtr& t, const TypePtr& expected) {
  bool pi = t->kind == TermKind::PiLam;
  if (expected && expected->kind != (pi ? TypeKind::Pi : TypeKind::Lollipop))
    return conv(infer(t), expected, t);
  auto dom = type(t->annots[0]);
  if (expected && !equal(dom.type, expected->lhs))
    throw mismatch("lambda domain " + to_string(dom.type), expected, t);
  const std::string& x0 = t->binders[0];
  std::string x = pi ? fresh_int(x0) : fresh_lin(x0);
  TermPtr body = pi ? rename_int(t->kids[0], x0, x) : rename_lin(t->kids[0], x0, x);
  CheckedJudgement b;
  if (pi) {
    push_int(x, dom.type);
    try {
      b = expected ? check(body, rename_int(expected->rhs, expected->name, x)) : infer(body);
    } catch (...) {
      pop_int();
      throw;
    }
    pop_int();
  } else {
    push_lin(x, dom.type);
    b = expected ? check(body, expected->rhs) : infer(body);
    pop_lin(t->span);
  }
  auto term = rebuild(t, {b.term}, {x}, {dom.type});
  TypePtr out = expected ? expected : (pi ? ty::pi(x, dom.type, b.type) : ty::lolli(dom.type, b.type));
  return make_judgement(pi ? "Π-I" : "⊸-I", term, out, {std::move(dom), std::move(b)}, t->span);
}

CheckedJudgement CheckerImpl::app(const TermPtr& t) {
  auto f = infer(t->kids[0]);
  if (f.type->kind == TypeKind::Lollipop && t->kind == TermKind::App) {
    auto a = check(t->kids[1], f.type->lhs);
    auto term = rebuild(t, {f.term, a.term});
    auto out = f.type->rhs;
    return make_judgement("⊸-E", term, out, {std::move(f), std::move(a)}, t->span);
  }
  if (f.type->kind == TypeKind::Pi) {
    TermPtr arg = t->kids[1];
    if (t->kind == TermKind::App) {
      if (arg->kind != TermKind::BangIntro)
        throw mismatch("argument of a dependent function must have the form (bang a)", nullptr, t);
      arg = arg->kids[0];
    }
    auto a = intuitionistic([&] { return check(arg, f.type->lhs); });
    auto out = subst_int(f.type->rhs, f.type->name, a.term);
    auto term = tm::pi_app(f.term, a.term);
    auto copy = std::make_shared<Term>(*term);
    copy->span = t->span;
    return make_judgement("Π-E", copy, out, {std::move(f), std::move(a)}, t->span);
  }
  throw mismatch("application of a term of type " + to_string(f.type), nullptr, t);
}

CheckedJudgement CheckerImpl::with_pair(const TermPtr& t, const TypePtr& expected) {
  if (expected && expected->kind != TypeKind::With) return conv(infer(t), expected, t);
  CheckedJudgement a, b;
  additive([&] { a = expected ? check(t->kids[0], expected->lhs) : infer(t->kids[0]); },
           [&] { b = expected ? check(t->kids[1], expected->rhs) : infer(t->kids[1]); }, t->span);
  auto term = rebuild(t, {a.term, b.term});
  TypePtr out = expected ? expected : ty::with(a.type, b.type);
  return make_judgement("&-I", term, out, {std::move(a), std::move(b)}, t->span);
}

CheckedJudgement CheckerImpl::let_like(const TermPtr& t, const TypePtr& expected) {
  auto scrut = infer(t->kids[0]);
  const auto& sty = scrut.type;
  const TermPtr& body0 = t->kids[1];
  CheckedJudgement b;
  std::vector<std::string> binders = t->binders;
  const char* rule = "";
  auto run_body = [&](const TermPtr& body) { b = expected ? check(body, expected) : infer(body); };
  switch (t->kind) {
    case TermKind::LetStar: {
      if (sty->kind != TypeKind::Unit) throw mismatch("let-star on " + to_string(sty), nullptr, t);
      rule = "I-E";
      run_body(body0);
      break;
    }
    case TermKind::LetTensor: {
      if (sty->kind != TypeKind::Tensor) throw mismatch("tensor pattern on " + to_string(sty), nullptr, t);
      rule = "⊗-E";
      const auto& b0 = t->binders[0];
      const auto& b1 = t->binders[1];
      std::string x = fresh_lin(b0);
      if (b0 == b1) {
        // the second binder shadows the first, which is then unreachable
        std::set<std::string> avoid = {b0};
        for (const auto& s : st.lin) avoid.insert(s.name);
        auto fv = free_vars(body0);
        avoid.insert(fv.linear.begin(), fv.linear.end());
        x = fresh_name(b0, avoid);
      }
      push_lin(x, sty->lhs);
      std::string y = fresh_lin(b1);
      push_lin(y, sty->rhs);
      TermPtr body = rename_lin(body0, b1, y);
      if (b0 != b1) body = rename_lin(body, b0, x);
      run_body(body);
      pop_lin(t->span);
      pop_lin(t->span);
      binders = {x, y};
      break;
    }
    case TermKind::LetBang:
    case TermKind::LetSigma: {
      bool sigma = t->kind == TermKind::LetSigma;
      if (sty->kind != (sigma ? TypeKind::Sigma : TypeKind::Bang))
        throw mismatch(std::string(sigma ? "dependent pair pattern" : "bang pattern") + " on " + to_string(sty),
                       nullptr, t);
      rule = sigma ? "Σ-E" : "!-E";
      std::string x = fresh_int(t->binders[0]);
      TermPtr body = rename_int(body0, t->binders[0], x);
      push_int(x, sty->lhs);
      try {
        if (sigma) {
          std::string y = fresh_lin(t->binders[1]);
          body = rename_lin(body, t->binders[1], y);
          push_lin(y, rename_int(sty->rhs, sty->name, x));
          run_body(body);
          pop_lin(t->span);
          binders = {x, y};
        } else {
          run_body(body);
          binders = {x};
        }
      } catch (...) {
        pop_int();
        throw;
      }
      pop_int();
      if (!expected && occurs_int(x, b.type))
        throw mismatch("the type of the let body depends on the bound variable " + x, nullptr, t);
      break;
    }
    default: break;
  }
  TypePtr out = expected ? expected : b.type;
  auto term = rebuild(t, {scrut.term, b.term}, binders);
  return make_judgement(rule, term, out, {std::move(scrut), std::move(b)}, t->span);
}

CheckedJudgement CheckerImpl::case_like(const TermPtr& t, const TypePtr& expected) {
  auto scrut = infer(t->kids[0]);
  if (scrut.type->kind != TypeKind::Plus) throw mismatch("case on " + to_string(scrut.type), nullptr, t);
  CheckedJudgement c, d;
  std::string x = fresh_lin(t->binders[0]);
  std::string y = fresh_lin(t->binders[1]);
  TypePtr result = expected;
  additive(
      [&] {
        push_lin(x, scrut.type->lhs);
        auto body = rename_lin(t->kids[1], t->binders[0], x);
        c = result ? check(body, result) : infer(body);
        pop_lin(t->span);
        if (!result) result = c.type;
      },
      [&] {
        push_lin(y, scrut.type->rhs);
        d = check(rename_lin(t->kids[2], t->binders[1], y), result);
        pop_lin(t->span);
      },
      t->span);
  auto term = rebuild(t, {scrut.term, c.term, d.term}, {x, y});
  return make_judgement("⊕-E", term, result, {std::move(scrut), std::move(c), std::move(d)}, t->span);
}

CheckedJudgement CheckerImpl::if_like(const TermPtr& t, const TypePtr& expected) {
  std::string x = fresh_int(t->binders[0]);
  TypePtr motive;
  CheckedJudgement mj;
  bool have_motive = t->annots[0] != nullptr;
  if (have_motive) {
    push_int(x, ty::two());
    try {
      mj = type(rename_int(t->annots[0], t->binders[0], x));
    } catch (...) {
      pop_int();
      throw;
    }
    pop_int();
    motive = mj.type;
  }
  auto scrut = intuitionistic([&] { return check(t->kids[0], ty::two()); });
  CheckedJudgement a, b;
  TypePtr branch_tt = have_motive ? subst_int(motive, x, tm::tt()) : expected;
  TypePtr branch_ff = have_motive ? subst_int(motive, x, tm::ff()) : expected;
  additive(
      [&] {
        a = branch_tt ? check(t->kids[1], branch_tt) : infer(t->kids[1]);
        if (!branch_tt) branch_tt = branch_ff = a.type;
      },
      [&] { b = check(t->kids[2], branch_ff); }, t->span);
  if (!have_motive) motive = branch_tt;
  TypePtr out = subst_int(motive, x, scrut.term);
  auto term = rebuild(t, {scrut.term, a.term, b.term}, {x}, {motive});
  std::vector<CheckedJudgement> ps;
  if (have_motive) ps.push_back(std::move(mj));
  ps.push_back(std::move(scrut));
  ps.push_back(std::move(a));
  ps.push_back(std::move(b));
  auto j = make_judgement("2-E", term, out, std::move(ps), t->span);
  if (expected) return conv(std::move(j), expected, t);
  return j;
}

CheckedJudgement CheckerImpl::let_id(const TermPtr& t, const TypePtr& expected) {
  const auto& k = t->kids;
  auto a = intuitionistic([&] { return infer(k[0]); });
  const TypePtr& dom = a.type;
  auto a2 = intuitionistic([&] { return check(k[1], dom); });
  // motive D over x, x' : A
  std::string mx = fresh_int(t->binders[1]);
  push_int(mx, dom);
  std::string mx2 = fresh_int(t->binders[2]);
  if (mx2 == mx) {
    std::set<std::string> avoid = {mx};
    for (const auto& [n, ty_] : ints) avoid.insert(n);
    mx2 = fresh_name(mx2, avoid);
  }
  push_int(mx2, dom);
  CheckedJudgement dj;
  try {
    TypePtr motive = t->annots[0];
    if (t->binders[1] == t->binders[2]) {
      motive = rename_int(motive, t->binders[2], mx2);
    } else {
      Substitution s;
      s.ints[t->binders[1]] = tm::ivar(mx);
      s.ints[t->binders[2]] = tm::ivar(mx2);
      motive = substitute(motive, s);
    }
    dj = type(motive);
  } catch (...) {
    pop_int();
    pop_int();
    throw;
  }
  pop_int();
  pop_int();
  auto p = check(k[2], ty::id(dom, a.term, a2.term));
  std::string z = fresh_int(t->binders[0]);
  auto body = rename_int(k[3], t->binders[0], z);
  Substitution sz;
  sz.ints[mx] = tm::ivar(z);
  sz.ints[mx2] = tm::ivar(z);
  TypePtr body_ty = substitute(dj.type, sz);
  push_int(z, dom);
  CheckedJudgement d;
  try {
    d = check(body, body_ty);
  } catch (...) {
    pop_int();
    throw;
  }
  pop_int();
  Substitution sa;
  sa.ints[mx] = a.term;
  sa.ints[mx2] = a2.term;
  TypePtr out = substitute(dj.type, sa);
  auto term = rebuild(t, {a.term, a2.term, p.term, d.term}, {z, mx, mx2}, {dj.type});
  auto j = make_judgement("Id-E", term, out, {std::move(dj), std::move(a), std::move(a2), std::move(p), std::move(d)},
                          t->span);
  if (expected) return conv(std::move(j), expected, t);
  return j;
}

}  // namespace ildtt::detail
