#include "ildtt/equality.hpp"

#include <cstdlib>
#include <functional>
#include <optional>

namespace ildtt {

StepLimitExceeded::StepLimitExceeded(std::size_t limit_)
    : std::runtime_error("normalization step limit exceeded (" + std::to_string(limit_) + " steps)"), limit(limit_) {}

std::size_t default_step_limit() {
  if (const char* env = std::getenv("ILDTT_STEP_LIMIT")) {
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 10000;
}

namespace {

bool is_let(TermKind k) {
  return k == TermKind::LetStar || k == TermKind::LetTensor || k == TermKind::LetBang || k == TermKind::LetSigma;
}

bool hoistable(TermKind k) { return is_let(k) || k == TermKind::Case || k == TermKind::False; }

int let_rank(TermKind k) {
  switch (k) {
    case TermKind::LetStar: return 0;
    case TermKind::LetTensor: return 1;
    case TermKind::LetBang: return 2;
    case TermKind::LetSigma: return 3;
    default: return 4;
  }
}

/// Positions of a linear program context: the hole may sit at kid `i` of `f`.
bool is_frame(const Term& f, std::size_t i) {
  switch (f.kind) {
    case TermKind::LetStar:
    case TermKind::LetTensor:
    case TermKind::LetBang:
    case TermKind::LetSigma: return i <= 1;
    case TermKind::Case: return i == 0;
    case TermKind::LetId: return i == 2;
    case TermKind::TensorPair:
    case TermKind::App: return i <= 1;
    case TermKind::SigmaPair: return i == 1;
    case TermKind::PiApp: return i == 0;
    case TermKind::Lam:
    case TermKind::PiLam:
    case TermKind::Fst:
    case TermKind::Snd:
    case TermKind::Inl:
    case TermKind::Inr:
    case TermKind::False: return i == 0;
    default: return false;
  }
}

bool binds_free_var(const std::vector<Binding>& scope, const FreeVars& fv) {
  for (const auto& b : scope) {
    if (b.linear ? fv.linear.count(b.name) > 0 : fv.intuitionistic.count(b.name) > 0) return true;
  }
  return false;
}

bool is_ivar(const TermPtr& t, const std::string& x) { return t->kind == TermKind::IntVar && t->name == x; }
bool is_lvar(const TermPtr& t, const std::string& x) { return t->kind == TermKind::LinVar && t->name == x; }

std::set<std::string> all_free(const TermPtr& t) {
  auto fv = free_vars(t);
  std::set<std::string> out = fv.intuitionistic;
  out.insert(fv.linear.begin(), fv.linear.end());
  return out;
}

/// Deterministic name-independent key used to order independent lets.
std::string canonical_key(const TermPtr& t) {
  std::size_t counter = 0;
  std::function<TermPtr(const TermPtr&)> canon = [&](const TermPtr& u) -> TermPtr {
    if (!u) return u;
    auto copy = std::make_shared<Term>(*u);
    Term probe = *u;
    for (std::size_t k = 0; k < probe.binders.size(); ++k) probe.binders[k] = "\x01" + std::to_string(k);
    for (std::size_t k = 0; k < u->binders.size(); ++k) {
      std::string fresh = "_b" + std::to_string(counter++);
      bool lin = binder_is_linear(u->kind, k);
      for (std::size_t i = 0; i < u->kids.size(); ++i) {
        for (const auto& b : kid_scope(probe, i)) {
          if (b.name == probe.binders[k]) {
            copy->kids[i] = lin ? subst_lin(copy->kids[i], u->binders[k], tm::lvar(fresh))
                                : subst_int(copy->kids[i], u->binders[k], tm::ivar(fresh));
          }
        }
      }
      copy->binders[k] = fresh;
    }
    for (auto& kid : copy->kids) kid = canon(kid);
    return copy;
  };
  return to_string(canon(t));
}

class Rewriter {
 public:
  Rewriter(const EqualityConfig& cfg, HoistOrder order) : cfg_(cfg), order_(order) {}

  NormalForm run(TermPtr t) {
    NormalForm nf;
    std::size_t steps = 0;
    for (;;) {
      std::vector<std::size_t> path;
      std::string rule;
      auto next = search(t, path, rule);
      if (!next) break;
      if (++steps > cfg_.step_limit) throw StepLimitExceeded(cfg_.step_limit);
      if (cfg_.record_trace) nf.trace.push_back({rule, path, t, next});
      t = next;
    }
    nf.term = t;
    return nf;
  }

 private:
  TermPtr search(const TermPtr& t, std::vector<std::size_t>& path, std::string& rule) {
    if (order_ == HoistOrder::OutermostFirst)
      if (auto r = at_root(t, rule)) return r;
    for (std::size_t i = 0; i < t->kids.size(); ++i) {
      path.push_back(i);
      if (auto r = search(t->kids[i], path, rule)) return with_kid(t, i, r);
      path.pop_back();
    }
    if (order_ == HoistOrder::InnermostFirst)
      if (auto r = at_root(t, rule)) return r;
    return nullptr;
  }

  TermPtr at_root(const TermPtr& t, std::string& rule) {
    if (auto r = beta(t, rule)) return r;
    if (auto r = eta(t, rule)) return r;
    if (auto r = contract(t, rule)) return r;
    if (auto r = hoist(t, rule)) return r;
    return nullptr;
  }

  static TermPtr beta(const TermPtr& t, std::string& rule) {
    const auto& k = t->kids;
    switch (t->kind) {
      case TermKind::LetStar:
        if (k[0]->kind == TermKind::Star) {
          rule = "I-C";
          return k[1];
        }
        break;
      case TermKind::LetTensor:
        if (k[0]->kind == TermKind::TensorPair) {
          rule = "⊗-C";
          Substitution s;
          if (t->binders[0] != t->binders[1]) s.lins[t->binders[0]] = k[0]->kids[0];
          s.lins[t->binders[1]] = k[0]->kids[1];
          return substitute(k[1], s);
        }
        break;
      case TermKind::App:
        if (k[0]->kind == TermKind::Lam) {
          rule = "⊸-C";
          return subst_lin(k[0]->kids[0], k[0]->binders[0], k[1]);
        }
        break;
      case TermKind::LetBang:
        if (k[0]->kind == TermKind::BangIntro) {
          rule = "!-C";
          return subst_int(k[1], t->binders[0], k[0]->kids[0]);
        }
        break;
      case TermKind::Fst:
      case TermKind::Snd:
        if (k[0]->kind == TermKind::WithPair) {
          rule = "&-C";
          return k[0]->kids[t->kind == TermKind::Fst ? 0 : 1];
        }
        break;
      case TermKind::Case:
        if (k[0]->kind == TermKind::Inl) {
          rule = "⊕-C";
          return subst_lin(k[1], t->binders[0], k[0]->kids[0]);
        }
        if (k[0]->kind == TermKind::Inr) {
          rule = "⊕-C";
          return subst_lin(k[2], t->binders[1], k[0]->kids[0]);
        }
        break;
      case TermKind::LetSigma:
        if (k[0]->kind == TermKind::SigmaPair) {
          rule = "Σ-C";
          Substitution s;
          s.ints[t->binders[0]] = k[0]->kids[0];
          s.lins[t->binders[1]] = k[0]->kids[1];
          return substitute(k[1], s);
        }
        break;
      case TermKind::PiApp:
        if (k[0]->kind == TermKind::PiLam) {
          rule = "Π-C";
          return subst_int(k[0]->kids[0], k[0]->binders[0], k[1]);
        }
        break;
      case TermKind::LetId:
        if (k[2]->kind == TermKind::Refl) {
          rule = "Id-C";
          return subst_int(k[3], t->binders[0], k[0]);
        }
        break;
      case TermKind::If:
        if (k[0]->kind == TermKind::TT) {
          rule = "2-C";
          return k[1];
        }
        if (k[0]->kind == TermKind::FF) {
          rule = "2-C";
          return k[2];
        }
        break;
      default: break;
    }
    return nullptr;
  }

  static TermPtr eta(const TermPtr& t, std::string& rule) {
    const auto& k = t->kids;
    const auto& b = t->binders;
    switch (t->kind) {
      case TermKind::LetStar:
        if (k[1]->kind == TermKind::Star) {
          rule = "I-U";
          return k[0];
        }
        break;
      case TermKind::LetTensor:
        if (b[0] != b[1] && k[1]->kind == TermKind::TensorPair && is_lvar(k[1]->kids[0], b[0]) &&
            is_lvar(k[1]->kids[1], b[1])) {
          rule = "⊗-U";
          return k[0];
        }
        break;
      case TermKind::LetBang:
        if (k[1]->kind == TermKind::BangIntro && is_ivar(k[1]->kids[0], b[0])) {
          rule = "!-U";
          return k[0];
        }
        break;
      case TermKind::LetSigma:
        if (k[1]->kind == TermKind::SigmaPair && is_ivar(k[1]->kids[0], b[0]) && is_lvar(k[1]->kids[1], b[1])) {
          rule = "Σ-U";
          return k[0];
        }
        break;
      case TermKind::WithPair:
        if (k[0]->kind == TermKind::Fst && k[1]->kind == TermKind::Snd && alpha_eq(k[0]->kids[0], k[1]->kids[0])) {
          rule = "&-U";
          return k[0]->kids[0];
        }
        break;
      case TermKind::Case:
        if (k[1]->kind == TermKind::Inl && is_lvar(k[1]->kids[0], b[0]) && k[2]->kind == TermKind::Inr &&
            is_lvar(k[2]->kids[0], b[1])) {
          rule = "⊕-U";
          return k[0];
        }
        break;
      case TermKind::False:
        if (t->elab && t->elab->kind == TypeKind::Zero) {
          rule = "0-U";
          return k[0];
        }
        break;
      case TermKind::Lam:
        if (k[0]->kind == TermKind::App && is_lvar(k[0]->kids[1], b[0]) && !occurs_lin(b[0], k[0]->kids[0])) {
          rule = "⊸-U";
          return k[0]->kids[0];
        }
        break;
      case TermKind::PiLam:
        if (k[0]->kind == TermKind::PiApp && is_ivar(k[0]->kids[1], b[0]) && !occurs_int(b[0], k[0]->kids[0])) {
          rule = "Π-U";
          return k[0]->kids[0];
        }
        break;
      case TermKind::LetId:
        if (k[3]->kind == TermKind::Refl && is_ivar(k[3]->kids[0], b[0])) {
          rule = "Id-U";
          return k[2];
        }
        break;
      case TermKind::If: {
        bool constant_motive = !t->annots[0] || !occurs_int(b[0], t->annots[0]);
        if (!constant_motive) break;
        if (alpha_eq(k[1], k[2])) {
          rule = "2-U";
          return k[1];
        }
        if (k[1]->kind == TermKind::TT && k[2]->kind == TermKind::FF) {
          rule = "2-U";
          return k[0];
        }
        break;
      }
      default: break;
    }
    return nullptr;
  }

  /// Path to the first node under `t` satisfying `pred`, descending only
  /// through linear program context positions that do not capture `fv`.
  static std::optional<std::vector<std::size_t>> frame_path(const TermPtr& t, const FreeVars& fv,
                                                            const std::function<bool(const TermPtr&)>& pred) {
    if (pred(t)) return std::vector<std::size_t>{};
    for (std::size_t i = 0; i < t->kids.size(); ++i) {
      if (!is_frame(*t, i) || binds_free_var(kid_scope(*t, i), fv)) continue;
      if (auto p = frame_path(t->kids[i], fv, pred)) {
        p->insert(p->begin(), i);
        return p;
      }
    }
    return std::nullopt;
  }

  static TermPtr replace_at(const TermPtr& t, const std::vector<std::size_t>& path, std::size_t depth,
                            const TermPtr& with) {
    if (depth == path.size()) return with;
    return with_kid(t, path[depth], replace_at(t->kids[path[depth]], path, depth + 1, with));
  }

  /// let t be p in C[p] ≡ C[t] for a linear program context C: the
  /// uniqueness rules combined with the commuting conversions.
  static TermPtr contract(const TermPtr& t, std::string& rule) {
    if (!is_let(t->kind)) return nullptr;
    const auto& scrut = t->kids[0];
    const auto& body = t->kids[1];
    const auto& b = t->binders;
    auto fv = free_vars(scrut);
    std::function<bool(const TermPtr&)> pred;
    switch (t->kind) {
      case TermKind::LetStar:
        pred = [](const TermPtr& u) { return u->kind == TermKind::Star; };
        break;
      case TermKind::LetBang:
        if (count_int(b[0], body) != 1) return nullptr;
        pred = [&](const TermPtr& u) { return u->kind == TermKind::BangIntro && is_ivar(u->kids[0], b[0]); };
        break;
      case TermKind::LetTensor: {
        if (b[0] == b[1]) return nullptr;
        auto lin = free_vars(body).linear;
        if (lin.count(b[0]) != 1 || lin.count(b[1]) != 1) return nullptr;
        pred = [&](const TermPtr& u) {
          return u->kind == TermKind::TensorPair && is_lvar(u->kids[0], b[0]) && is_lvar(u->kids[1], b[1]);
        };
        break;
      }
      case TermKind::LetSigma: {
        if (count_int(b[0], body) != 1 || free_vars(body).linear.count(b[1]) != 1) return nullptr;
        pred = [&](const TermPtr& u) {
          return u->kind == TermKind::SigmaPair && is_ivar(u->kids[0], b[0]) && is_lvar(u->kids[1], b[1]);
        };
        break;
      }
      default: return nullptr;
    }
    auto path = frame_path(body, fv, pred);
    if (!path || path->empty()) return nullptr;  // the empty context is the plain -U rule
    rule = "CommCut-U";
    return replace_at(body, *path, 0, scrut);
  }

  /// Rename the binders of eliminator `e` away from `avoid`.
  static TermPtr freshen(const TermPtr& e, std::set<std::string> avoid) {
    auto copy = std::make_shared<Term>(*e);
    auto fe = all_free(e);
    avoid.insert(fe.begin(), fe.end());
    avoid.insert(e->binders.begin(), e->binders.end());
    // binders may share a name (case branches), so scopes are probed by index
    Term probe = *e;
    for (std::size_t k = 0; k < probe.binders.size(); ++k) probe.binders[k] = "\x01" + std::to_string(k);
    for (std::size_t k = 0; k < e->binders.size(); ++k) {
      const std::string old = copy->binders[k];
      std::string fresh = fresh_name(old + "_", avoid);
      avoid.insert(fresh);
      bool lin = binder_is_linear(e->kind, k);
      for (std::size_t i = 0; i < copy->kids.size(); ++i) {
        bool bound_here = false;
        for (const auto& sb : kid_scope(probe, i)) bound_here |= sb.name == probe.binders[k];
        if (!bound_here) continue;
        copy->kids[i] =
            lin ? subst_lin(copy->kids[i], old, tm::lvar(fresh)) : subst_int(copy->kids[i], old, tm::ivar(fresh));
      }
      copy->binders[k] = fresh;
    }
    return copy;
  }

  static TermPtr hoist(const TermPtr& f, std::string& rule) {
    for (std::size_t i = 0; i < f->kids.size(); ++i) {
      if (!is_frame(*f, i)) continue;
      const auto& e = f->kids[i];
      if (!hoistable(e->kind)) continue;
      bool body_position = is_let(f->kind) && i == 1;
      if (body_position && is_let(e->kind)) {
        int re = let_rank(e->kind), rf = let_rank(f->kind);
        if (re > rf) continue;
        if (re == rf && !(canonical_key(e->kids[0]) < canonical_key(f->kids[0]))) continue;
      }
      if (binds_free_var(kid_scope(*f, i), free_vars(e->kids[0]))) continue;
      if (e->kind == TermKind::False) {
        if (!f->elab) continue;
        rule = "CommCut";
        return with_elab(tm::absurd(e->kids[0]), f->elab);
      }
      std::set<std::string> avoid = all_free(f);
      avoid.insert(f->binders.begin(), f->binders.end());
      auto fresh = freshen(e, avoid);
      rule = "CommCut";
      if (e->kind == TermKind::Case) {
        auto out = tm::case_of(fresh->kids[0], fresh->binders[0], with_kid(f, i, fresh->kids[1]), fresh->binders[1],
                               with_kid(f, i, fresh->kids[2]));
        return f->elab ? with_elab(out, f->elab) : out;
      }
      auto out = with_kid(fresh, 1, with_kid(f, i, fresh->kids[1]));
      auto copy = std::make_shared<Term>(*out);
      copy->elab = f->elab;
      return copy;
    }
    return nullptr;
  }

  const EqualityConfig& cfg_;
  HoistOrder order_;
};

TermPtr typed(TermPtr t, TypePtr a) { return with_elab(std::move(t), std::move(a)); }

class Comparer {
 public:
  Comparer(const EqualityConfig& cfg, HoistOrder order) : cfg_(cfg), order_(order) {}

  TermPtr norm(const TermPtr& t) {
    EqualityConfig c = cfg_;
    c.record_trace = false;
    return normalize(t, c, order_).term;
  }

  bool equal(const TermPtr& u, const TermPtr& v, const TypePtr& a) {
    if (a->kind == TypeKind::Top) return true;
    if (alpha_eq(u, v)) return true;
    std::set<std::string> avoid = all_free(u);
    auto fv = all_free(v);
    avoid.insert(fv.begin(), fv.end());
    switch (a->kind) {
      case TypeKind::Lollipop: {
        std::string x = fresh_name("eta", avoid);
        auto arg = typed(tm::lvar(x), a->lhs);
        return equal(norm(typed(tm::app(u, arg), a->rhs)), norm(typed(tm::app(v, arg), a->rhs)), a->rhs);
      }
      case TypeKind::Pi: {
        std::string x = fresh_name("eta", avoid);
        auto arg = typed(tm::ivar(x), a->lhs);
        auto body = subst_int(a->rhs, a->name, tm::ivar(x));
        return equal(norm(typed(tm::pi_app(u, arg), body)), norm(typed(tm::pi_app(v, arg), body)), body);
      }
      case TypeKind::With:
        return equal(norm(typed(tm::fst(u), a->lhs)), norm(typed(tm::fst(v), a->lhs)), a->lhs) &&
               equal(norm(typed(tm::snd(u), a->rhs)), norm(typed(tm::snd(v), a->rhs)), a->rhs);
      default: break;
    }
    if (structural(u, v, a, avoid)) return true;
    return eta_variable(u, v, a, avoid) || eta_variable(v, u, a, avoid) || split_bool(u, v, a);
  }

 private:
  bool structural(const TermPtr& u, const TermPtr& v, const TypePtr& a, std::set<std::string> avoid) {
    if (u->kind != v->kind) return false;
    const auto& ku = u->kids;
    const auto& kv = v->kids;
    switch (u->kind) {
      case TermKind::TensorPair:
        if (a->kind != TypeKind::Tensor) break;
        return equal(ku[0], kv[0], a->lhs) && equal(ku[1], kv[1], a->rhs);
      case TermKind::SigmaPair:
        if (a->kind != TypeKind::Sigma) break;
        return equal(ku[0], kv[0], a->lhs) && equal(ku[1], kv[1], subst_int(a->rhs, a->name, ku[0]));
      case TermKind::BangIntro:
        if (a->kind != TypeKind::Bang) break;
        return equal(ku[0], kv[0], a->lhs);
      case TermKind::Inl:
      case TermKind::Inr:
        if (a->kind != TypeKind::Plus) break;
        return equal(ku[0], kv[0], u->kind == TermKind::Inl ? a->lhs : a->rhs);
      case TermKind::LetStar:
      case TermKind::LetTensor:
      case TermKind::LetBang:
      case TermKind::LetSigma:
      case TermKind::Case: {
        if (!alpha_eq(ku[0], kv[0])) return false;
        // bring both sides to common binder names
        Substitution su, sv;
        std::vector<std::string> names;
        for (std::size_t k = 0; k < u->binders.size(); ++k) {
          std::string x = fresh_name("c", avoid);
          avoid.insert(x);
          bool lin = binder_is_linear(u->kind, k);
          (lin ? su.lins : su.ints)[u->binders[k]] = lin ? tm::lvar(x) : tm::ivar(x);
          (lin ? sv.lins : sv.ints)[v->binders[k]] = lin ? tm::lvar(x) : tm::ivar(x);
        }
        if (u->kind == TermKind::Case) {
          Substitution lu, lv, ru, rv;
          lu.lins[u->binders[0]] = su.lins[u->binders[0]];
          lv.lins[v->binders[0]] = sv.lins[v->binders[0]];
          ru.lins[u->binders[1]] = su.lins[u->binders[1]];
          rv.lins[v->binders[1]] = sv.lins[v->binders[1]];
          return equal(substitute(ku[1], lu), substitute(kv[1], lv), a) &&
                 equal(substitute(ku[2], ru), substitute(kv[2], rv), a);
        }
        return equal(substitute(ku[1], su), substitute(kv[1], sv), a);
      }
      default: break;
    }
    return false;
  }

  // Uniqueness for a positive eliminator whose scrutinee is a linear
  // variable: let v be p(x..) in b ≡ w  iff  b ≡ w[p(x..)/v].
  bool eta_variable(const TermPtr& u, const TermPtr& w, const TypePtr& a, std::set<std::string> avoid) {
    if (!is_let(u->kind) && u->kind != TermKind::Case) return false;
    const auto& scrut = u->kids[0];
    if (scrut->kind != TermKind::LinVar || !scrut->elab) return false;
    const TypePtr& st = scrut->elab;
    std::vector<std::string> names;
    for (std::size_t k = 0; k < u->binders.size(); ++k) {
      names.push_back(fresh_name("p", avoid));
      avoid.insert(names.back());
    }
    auto rename = [&](const TermPtr& body, std::size_t k) {
      Substitution s;
      bool lin = binder_is_linear(u->kind, k);
      (lin ? s.lins : s.ints)[u->binders[k]] = lin ? tm::lvar(names[k]) : tm::ivar(names[k]);
      return substitute(body, s);
    };
    auto against = [&](const TermPtr& body, const TermPtr& pattern) {
      return equal(norm(body), norm(subst_lin(w, scrut->name, typed(pattern, st))), a);
    };
    switch (u->kind) {
      case TermKind::LetStar:
        if (st->kind != TypeKind::Unit) return false;
        return against(u->kids[1], tm::star());
      case TermKind::LetBang:
        if (st->kind != TypeKind::Bang) return false;
        return against(rename(u->kids[1], 0), tm::bang(typed(tm::ivar(names[0]), st->lhs)));
      case TermKind::LetTensor: {
        if (st->kind != TypeKind::Tensor) return false;
        auto body = rename(rename(u->kids[1], 0), 1);
        return against(body, tm::tensor(typed(tm::lvar(names[0]), st->lhs), typed(tm::lvar(names[1]), st->rhs)));
      }
      case TermKind::LetSigma: {
        if (st->kind != TypeKind::Sigma) return false;
        auto body = rename(rename(u->kids[1], 0), 1);
        auto first = typed(tm::ivar(names[0]), st->lhs);
        auto second = typed(tm::lvar(names[1]), subst_int(st->rhs, st->name, first));
        return against(body, tm::sigma_pair(first, second));
      }
      case TermKind::Case: {
        if (st->kind != TypeKind::Plus) return false;
        return against(rename(u->kids[1], 0), tm::inl(typed(tm::lvar(names[0]), st->lhs))) &&
               against(rename(u->kids[2], 1), tm::inr(typed(tm::lvar(names[1]), st->rhs)));
      }
      default: return false;
    }
  }

  // Boolean uniqueness: for a free x : 2 that some `if` scrutinises,
  // u ≡ v iff both instances x := tt and x := ff agree.
  bool split_bool(const TermPtr& u, const TermPtr& v, const TypePtr& a) {
    std::set<std::string> xs;
    if_scrutinees(u, {}, xs);
    if_scrutinees(v, {}, xs);
    for (const auto& x : xs) {
      bool ok = true;
      for (const auto& b : {tm::tt(), tm::ff()}) {
        auto val = typed(b, ty::two());
        if (!equal(norm(subst_int(u, x, val)), norm(subst_int(v, x, val)), subst_int(a, x, val))) {
          ok = false;
          break;
        }
      }
      if (ok) return true;
    }
    return false;
  }

  static void if_scrutinees(const TermPtr& t, std::set<std::string> bound, std::set<std::string>& out) {
    if (t->kind == TermKind::If && t->kids[0]->kind == TermKind::IntVar && !bound.count(t->kids[0]->name))
      out.insert(t->kids[0]->name);
    for (std::size_t i = 0; i < t->kids.size(); ++i) {
      auto inner = bound;
      for (const auto& b : kid_scope(*t, i))
        if (!b.linear) inner.insert(b.name);
      if_scrutinees(t->kids[i], std::move(inner), out);
    }
  }

  const EqualityConfig& cfg_;
  HoistOrder order_;
};

TermPtr normalize_embedded(const TermPtr& t, const EqualityConfig& cfg) {
  EqualityConfig c = cfg;
  c.record_trace = false;
  return normalize(t, c).term;
}

}  // namespace

NormalForm normalize(const TermPtr& t, const EqualityConfig& cfg, HoistOrder order) {
  Rewriter r(cfg, order);
  return r.run(t);
}

TypePtr normalize_type(const TypePtr& a, const EqualityConfig& cfg) {
  if (!a) return a;
  auto copy = std::make_shared<Type>(*a);
  for (auto& arg : copy->args) arg = normalize_embedded(arg, cfg);
  copy->lhs = normalize_type(a->lhs, cfg);
  copy->rhs = normalize_type(a->rhs, cfg);
  return copy;
}

bool types_equal(const TypePtr& a, const TypePtr& b, const EqualityConfig& cfg) {
  if (alpha_eq(a, b)) return true;
  return alpha_eq(normalize_type(a, cfg), normalize_type(b, cfg));
}

bool judg_equal(const TermPtr& a, const TermPtr& b, const TypePtr& type, const EqualityConfig& cfg) {
  if (alpha_eq(a, b)) return true;
  const HoistOrder orders[] = {HoistOrder::OutermostFirst, HoistOrder::InnermostFirst};
  EqualityConfig c = cfg;
  c.record_trace = false;
  std::vector<TermPtr> na, nb;
  for (auto o : orders) {
    na.push_back(normalize(a, c, o).term);
    nb.push_back(normalize(b, c, o).term);
  }
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      Comparer cmp(c, orders[i]);
      if (cmp.equal(na[i], nb[j], type)) return true;
    }
  return false;
}

}  // namespace ildtt
