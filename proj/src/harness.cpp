#include <algorithm>
#include <stdexcept>

#include "ildtt/checker.hpp"

namespace ildtt {

const char* transform_name(Transform t) {
  switch (t) {
    case Transform::Weaken: return "Int-Weak";
    case Transform::ExchangeInt: return "Int-Exch";
    case Transform::ExchangeLin: return "Lin-Exch";
    case Transform::SubstIntType: return "Int-Ty-Subst";
    case Transform::SubstIntTypeEq: return "Int-Ty-Subst-Eq";
    case Transform::SubstIntTerm: return "Int-Tm-Subst";
    case Transform::SubstIntTermEq: return "Int-Tm-Subst-Eq";
    case Transform::SubstLinTerm: return "Lin-Tm-Subst";
    case Transform::SubstLinTermEq: return "Lin-Tm-Subst-Eq";
  }
  return "?";
}

namespace {

bool same_type(const TypePtr& a, const TypePtr& b) { return a && b && (alpha_eq(a, b) || types_equal(a, b)); }

std::vector<const CheckedJudgement*> term_premises(const CheckedJudgement& j) {
  std::vector<const CheckedJudgement*> out;
  for (const auto& p : j.premises)
    if (p.form == "term") out.push_back(&p);
  return out;
}

/// The conclusion type determined by the premises, for rules where it is.
TypePtr rebuilt_type(const CheckedJudgement& j) {
  auto ps = term_premises(j);
  const std::string& r = j.rule;
  if (r == "I-I") return ty::unit();
  if (r == "2-I-tt" || r == "2-I-ff") return ty::two();
  if (r == "⊤-I") return ty::top();
  if (r == "⊗-I" && ps.size() == 2) return ty::tensor(ps[0]->type, ps[1]->type);
  if (r == "&-I" && ps.size() == 2) return ty::with(ps[0]->type, ps[1]->type);
  if (r == "!-I" && ps.size() == 1) return ty::bang(ps[0]->type);
  if (r == "⊸-I" && ps.size() == 1 && j.premises.size() == 2)
    return ty::lolli(j.premises[0].type, ps[0]->type);
  if (r == "⊸-E" && ps.size() == 2 && ps[0]->type->kind == TypeKind::Lollipop) return ps[0]->type->rhs;
  if ((r == "&-E1" || r == "&-E2") && ps.size() == 1 && ps[0]->type->kind == TypeKind::With)
    return r == "&-E1" ? ps[0]->type->lhs : ps[0]->type->rhs;
  if (r == "Π-E" && ps.size() == 2 && ps[0]->type->kind == TypeKind::Pi)
    return subst_int(ps[0]->type->rhs, ps[0]->type->name, ps[1]->term);
  if (r == "Id-I" && ps.size() == 1) return ty::id(ps[0]->type, ps[0]->term, ps[0]->term);
  return nullptr;
}

/// Premise types the conclusion type determines, as (premise, expected).
bool premises_fit(const CheckedJudgement& j) {
  auto ps = term_premises(j);
  const std::string& r = j.rule;
  const auto& a = j.type;
  if ((r == "⊕-I1" || r == "⊕-I2") && ps.size() == 1)
    return a->kind == TypeKind::Plus && same_type(ps[0]->type, r == "⊕-I1" ? a->lhs : a->rhs);
  if (r == "Σ-I" && ps.size() == 2)
    return a->kind == TypeKind::Sigma && same_type(ps[0]->type, a->lhs) &&
           same_type(ps[1]->type, subst_int(a->rhs, a->name, ps[0]->term));
  if (r == "Tm-Conv" && ps.size() == 1) return alpha_eq(ps[0]->term, j.term) && same_type(ps[0]->type, a);
  return true;
}

}  // namespace

bool replay(const CheckedJudgement& j) {
  for (const auto& p : j.premises)
    if (!replay(p)) return false;
  if (j.form != "term") return true;
  if (!j.term || !j.type) return false;
  if (auto t = rebuilt_type(j); t && !same_type(t, j.type)) return false;
  if (!premises_fit(j)) return false;
  // the term premises are the immediate subterms, in order
  auto ps = term_premises(j);
  if (j.rule == "Tm-Conv") return true;
  std::size_t k = 0;
  for (const auto* p : ps) {
    while (k < j.term->kids.size() && !alpha_eq(j.term->kids[k], p->term)) ++k;
    if (k == j.term->kids.size()) return false;
    ++k;
  }
  return true;
}

namespace {

using Zone = std::vector<std::pair<std::string, TypePtr>>;

std::size_t index_of(const Zone& z, const std::string& x) {
  for (std::size_t i = 0; i < z.size(); ++i)
    if (z[i].first == x) return i;
  return z.size();
}

void recheck(const Checker& c, const HarnessCase& h) {
  if (h.term) {
    c.check_term(h.ctx, h.term, h.type);
    if (h.term2) {
      c.check_term(h.ctx, h.term2, h.type);
      if (!judg_equal(h.term, h.term2, h.type, c.equality_config()))
        throw CheckError(ErrorKind::EqualityFailure,
                         "equality not preserved: " + to_string(h.term) + " vs " + to_string(h.term2));
    }
    return;
  }
  c.check_type(h.ctx, h.type);
  if (h.type2) {
    c.check_type(h.ctx, h.type2);
    if (!c.types_equal(h.type, h.type2))
      throw CheckError(ErrorKind::EqualityFailure,
                       "type equality not preserved: " + to_string(h.type) + " vs " + to_string(h.type2));
  }
}

/// Substitute a for the intuitionistic x at position i throughout.
HarnessCase subst_int_case(const HarnessCase& h, std::size_t i, const TermPtr& a) {
  HarnessCase out = h;
  const std::string x = h.ctx.intuitionistic[i].first;
  out.ctx.intuitionistic.erase(out.ctx.intuitionistic.begin() + static_cast<std::ptrdiff_t>(i));
  for (std::size_t k = i; k < out.ctx.intuitionistic.size(); ++k)
    out.ctx.intuitionistic[k].second = subst_int(out.ctx.intuitionistic[k].second, x, a);
  for (auto& [y, b] : out.ctx.linear) b = subst_int(b, x, a);
  if (out.term) out.term = subst_int(out.term, x, a);
  if (out.term2) out.term2 = subst_int(out.term2, x, a);
  if (out.type) out.type = subst_int(out.type, x, a);
  if (out.type2) out.type2 = subst_int(out.type2, x, a);
  return out;
}

void require(bool cond, const std::string& what) {
  if (!cond) throw std::invalid_argument(what);
}

}  // namespace

HarnessResult admissibility(const Checker& checker, const HarnessCase& c, const HarnessArgs& args) {
  const bool is_term = args.transform != Transform::SubstIntType && args.transform != Transform::SubstIntTypeEq;
  const bool is_eq = args.transform == Transform::SubstIntTypeEq || args.transform == Transform::SubstIntTermEq ||
                     args.transform == Transform::SubstLinTermEq;
  if (args.transform != Transform::Weaken && args.transform != Transform::ExchangeInt &&
      args.transform != Transform::ExchangeLin) {
    require(is_term == static_cast<bool>(c.term), "judgement form does not match the substitution rule");
    require(is_eq == (is_term ? c.term2 != nullptr : c.type2 != nullptr), "equation expected exactly for -Eq rules");
  }
  try {
    recheck(checker, c);
  } catch (const CheckError& e) {
    throw std::invalid_argument(std::string("premise judgement does not check: ") + e.what());
  }

  HarnessResult r;
  r.transformed = c;
  auto& out = r.transformed;
  auto& ints = out.ctx.intuitionistic;
  auto& lins = out.ctx.linear;
  switch (args.transform) {
    case Transform::Weaken: {
      require(args.var_type != nullptr, "weakening needs a type");
      require(!c.ctx.names().count(args.var), "weakening variable is not fresh");
      std::size_t pos = std::min(args.position, ints.size());
      Zone prefix(ints.begin(), ints.begin() + static_cast<std::ptrdiff_t>(pos));
      try {
        checker.check_type(DualContext{prefix, {}}, args.var_type);
      } catch (const CheckError& e) {
        throw std::invalid_argument(std::string("weakening type is ill-formed: ") + e.what());
      }
      ints.insert(ints.begin() + static_cast<std::ptrdiff_t>(pos), {args.var, args.var_type});
      break;
    }
    case Transform::ExchangeInt: {
      require(args.position + 1 < ints.size(), "exchange position out of range");
      require(!occurs_int(ints[args.position].first, ints[args.position + 1].second),
              "exchanged entries are dependent");
      std::swap(ints[args.position], ints[args.position + 1]);
      break;
    }
    case Transform::ExchangeLin:
      require(args.position + 1 < lins.size(), "exchange position out of range");
      std::swap(lins[args.position], lins[args.position + 1]);
      break;
    case Transform::SubstIntType:
    case Transform::SubstIntTypeEq:
    case Transform::SubstIntTerm:
    case Transform::SubstIntTermEq: {
      std::size_t i = index_of(c.ctx.intuitionistic, args.var);
      require(i < c.ctx.intuitionistic.size(), "substituted variable is not intuitionistic");
      require(is_term || c.ctx.linear.empty(), "type judgements have an empty linear zone");
      Zone prefix(c.ctx.intuitionistic.begin(), c.ctx.intuitionistic.begin() + static_cast<std::ptrdiff_t>(i));
      try {
        checker.check_term(DualContext{prefix, {}}, args.replacement, c.ctx.intuitionistic[i].second);
      } catch (const CheckError& e) {
        throw std::invalid_argument(std::string("replacement does not check: ") + e.what());
      }
      out = subst_int_case(c, i, args.replacement);
      break;
    }
    case Transform::SubstLinTerm:
    case Transform::SubstLinTermEq: {
      std::size_t i = index_of(c.ctx.linear, args.var);
      require(i < c.ctx.linear.size(), "substituted variable is not linear");
      try {
        checker.check_term(DualContext{c.ctx.intuitionistic, args.replacement_lin}, args.replacement,
                           c.ctx.linear[i].second);
      } catch (const CheckError& e) {
        throw std::invalid_argument(std::string("replacement does not check: ") + e.what());
      }
      for (const auto& [y, b] : args.replacement_lin) {
        (void)b;
        require(y == args.var || !c.ctx.names().count(y), "replacement context clashes with the judgement");
      }
      // Ξ' takes the place of x, which is Lin-Tm-Subst up to Lin-Exch
      lins.erase(lins.begin() + static_cast<std::ptrdiff_t>(i));
      lins.insert(lins.begin() + static_cast<std::ptrdiff_t>(i), args.replacement_lin.begin(),
                  args.replacement_lin.end());
      out.term = subst_lin(c.term, args.var, args.replacement);
      if (c.term2) out.term2 = subst_lin(c.term2, args.var, args.replacement);
      break;
    }
  }
  try {
    recheck(checker, out);
  } catch (const CheckError& e) {
    r.ok = false;
    r.defect = std::string(transform_name(args.transform)) + ": " + e.what();
  } catch (const StepLimitExceeded& e) {
    r.ok = false;
    r.defect = std::string(transform_name(args.transform)) + ": " + e.what();
  }
  return r;
}

}  // namespace ildtt
