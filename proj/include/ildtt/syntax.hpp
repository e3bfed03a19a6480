#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace ildtt {

struct SourceSpan {
  std::string file;
  std::size_t begin = 0;
  std::size_t end = 0;
};

struct Type;
struct Term;
using TypePtr = std::shared_ptr<const Type>;
using TermPtr = std::shared_ptr<const Term>;

enum class TypeKind {
  Base,
  Unit,
  Tensor,
  Lollipop,
  Top,
  With,
  Zero,
  Plus,
  Bang,
  Sigma,
  Pi,
  Id,
  Two,
};

/// A type expression. Types only ever mention intuitionistic variables.
///
/// Field use per kind:
///   Base      name = family, args = intuitionistic arguments
///   binary    lhs, rhs
///   Bang      lhs
///   Sigma/Pi  name = bound variable, lhs = domain, rhs = body
///   Id        lhs = domain, args = {left, right}
struct Type {
  TypeKind kind = TypeKind::Unit;
  std::string name;
  std::vector<TermPtr> args;
  TypePtr lhs;
  TypePtr rhs;
  SourceSpan span;
};

enum class TermKind {
  IntVar,
  LinVar,
  Const,
  Star,
  LetStar,
  TensorPair,
  LetTensor,
  Lam,
  App,
  BangIntro,
  LetBang,
  WithPair,
  Fst,
  Snd,
  UnitTop,
  Inl,
  Inr,
  Case,
  False,
  SigmaPair,
  LetSigma,
  PiLam,
  PiApp,
  Refl,
  LetId,
  TT,
  FF,
  If,
};

/// A term. Layout of `kids`, `binders` and `annots` per kind:
///
///   Const       name, kids = args
///   LetStar     kids = {t, body}
///   TensorPair  kids = {a, b}
///   LetTensor   kids = {t, body}, binders = {x, y} (linear, scope body)
///   Lam         kids = {body}, binders = {x} (linear), annots = {A}
///   App         kids = {f, a}
///   BangIntro   kids = {a}
///   LetBang     kids = {t, body}, binders = {x} (intuitionistic)
///   WithPair    kids = {a, b}
///   Fst/Snd     kids = {t}
///   Inl/Inr     kids = {a}
///   Case        kids = {t, c, d}, binders = {x, y} (linear; x in c, y in d)
///   False       kids = {t}
///   SigmaPair   kids = {a, b} (a intuitionistic)
///   LetSigma    kids = {t, body}, binders = {x, y} (x intuitionistic, y linear)
///   PiLam       kids = {body}, binders = {x} (intuitionistic), annots = {A}
///   PiApp       kids = {f, a} (a intuitionistic)
///   Refl        kids = {a}
///   LetId       kids = {a, a', p, d}, binders = {z, x, x'}, annots = {D}
///               z scopes d; x, x' scope the motive D
///   If          kids = {t, a_tt, a_ff}, binders = {x}, annots = {A}
///               x scopes the motive A
///
/// `elab` is the type the checker assigned to the node. Rewrites that need
/// a type (false hoisting, 0-uniqueness) read it. Substitution updates it;
/// alpha-equivalence ignores it.
struct Term {
  TermKind kind = TermKind::Star;
  std::string name;
  std::vector<std::string> binders;
  std::vector<TermPtr> kids;
  std::vector<TypePtr> annots;
  TypePtr elab;
  SourceSpan span;
};

namespace ty {
TypePtr base(std::string name, std::vector<TermPtr> args = {});
TypePtr unit();
TypePtr tensor(TypePtr a, TypePtr b);
TypePtr lolli(TypePtr a, TypePtr b);
TypePtr top();
TypePtr with(TypePtr a, TypePtr b);
TypePtr zero();
TypePtr plus(TypePtr a, TypePtr b);
TypePtr bang(TypePtr a);
TypePtr sigma(std::string x, TypePtr a, TypePtr b);
TypePtr pi(std::string x, TypePtr a, TypePtr b);
TypePtr id(TypePtr a, TermPtr left, TermPtr right);
TypePtr two();
}  // namespace ty

namespace tm {
TermPtr ivar(std::string x);
TermPtr lvar(std::string x);
TermPtr constant(std::string c, std::vector<TermPtr> args = {});
TermPtr star();
TermPtr let_star(TermPtr t, TermPtr body);
TermPtr tensor(TermPtr a, TermPtr b);
TermPtr let_tensor(TermPtr t, std::string x, std::string y, TermPtr body);
TermPtr lam(std::string x, TypePtr a, TermPtr body);
TermPtr app(TermPtr f, TermPtr a);
TermPtr bang(TermPtr a);
TermPtr let_bang(TermPtr t, std::string x, TermPtr body);
TermPtr with(TermPtr a, TermPtr b);
TermPtr fst(TermPtr t);
TermPtr snd(TermPtr t);
TermPtr unit();
TermPtr inl(TermPtr a);
TermPtr inr(TermPtr b);
TermPtr case_of(TermPtr t, std::string x, TermPtr c, std::string y, TermPtr d);
TermPtr absurd(TermPtr t);
TermPtr sigma_pair(TermPtr a, TermPtr b);
TermPtr let_sigma(TermPtr t, std::string x, std::string y, TermPtr body);
TermPtr pi_lam(std::string x, TypePtr a, TermPtr body);
TermPtr pi_app(TermPtr f, TermPtr a);
TermPtr refl(TermPtr a);
TermPtr let_id(TermPtr a, TermPtr a2, TermPtr p, std::string z, std::string mx,
               std::string mx2, TypePtr motive, TermPtr body);
TermPtr tt();
TermPtr ff();
TermPtr if_then(std::string x, TypePtr motive, TermPtr t, TermPtr a_tt, TermPtr a_ff);
}  // namespace tm

// Copy-and-modify helpers for the rewriting passes.
TermPtr with_kid(const TermPtr& t, std::size_t i, TermPtr kid);
TermPtr with_elab(const TermPtr& t, TypePtr elab);

/// A bound variable together with the namespace it lives in.
struct Binding {
  std::string name;
  bool linear = false;
};

/// Binders of `t` whose scope contains kid `i`.
std::vector<Binding> kid_scope(const Term& t, std::size_t i);
/// Binders of `t` whose scope contains annotation `j`.
std::vector<Binding> annot_scope(const Term& t, std::size_t j);
/// Whether binder `k` of a term of kind `kind` is linear.
bool binder_is_linear(TermKind kind, std::size_t k);

struct FreeVars {
  std::set<std::string> intuitionistic;
  std::multiset<std::string> linear;
};

FreeVars free_vars(const TermPtr& t);
FreeVars free_vars(const TypePtr& a);
bool occurs_int(const std::string& x, const TermPtr& t);
bool occurs_int(const std::string& x, const TypePtr& a);
std::size_t count_int(const std::string& x, const TermPtr& t);
bool occurs_lin(const std::string& x, const TermPtr& t);

/// Simultaneous capture-avoiding substitution for both namespaces.
struct Substitution {
  std::map<std::string, TermPtr> ints;
  std::map<std::string, TermPtr> lins;
  bool empty() const { return ints.empty() && lins.empty(); }
};

TermPtr substitute(const TermPtr& t, const Substitution& s);
TypePtr substitute(const TypePtr& a, const Substitution& s);

/// t[a/x] for an intuitionistic x. `a` must have no free linear variables.
TermPtr subst_int(const TermPtr& t, const std::string& x, const TermPtr& a);
TypePtr subst_int(const TypePtr& ty, const std::string& x, const TermPtr& a);
/// t[a/x] for a linear x.
TermPtr subst_lin(const TermPtr& t, const std::string& x, const TermPtr& a);

bool alpha_eq(const TermPtr& u, const TermPtr& v);
bool alpha_eq(const TypePtr& u, const TypePtr& v);

/// A name based on `hint` that is not in `avoid`.
std::string fresh_name(const std::string& hint, const std::set<std::string>& avoid);

std::string to_string(const TypePtr& a);
std::string to_string(const TermPtr& t);
const char* kind_name(TermKind k);
std::size_t term_size(const TermPtr& t);

}  // namespace ildtt
