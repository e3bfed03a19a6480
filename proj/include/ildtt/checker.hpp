#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ildtt/equality.hpp"
#include "ildtt/signature.hpp"

namespace ildtt {

enum class ErrorKind {
  UnboundVariable,
  LinearUnused,
  LinearReused,
  TypeMismatch,
  IllFormedContext,
  EqualityFailure,
};

/// Short machine name: "unbound", "unused", "reused", "mismatch", "context", "equality".
const char* error_kind_name(ErrorKind k);

class CheckError : public std::runtime_error {
 public:
  CheckError(ErrorKind kind, std::string message, SourceSpan span = {}, std::string variable = {},
             std::string expected = {}, std::string actual = {});

  ErrorKind kind;
  SourceSpan span;
  std::string variable;
  std::string expected;
  std::string actual;
};

struct DualContext {
  std::vector<std::pair<std::string, TypePtr>> intuitionistic;
  std::vector<std::pair<std::string, TypePtr>> linear;

  TypePtr find_int(const std::string& x) const;
  TypePtr find_lin(const std::string& x) const;
  DualContext with_int(std::string x, TypePtr a) const;
  DualContext with_lin(std::string x, TypePtr a) const;
  /// All names in both zones.
  std::set<std::string> names() const;
};

/// A derivation node. `form` is "ctxt", "type" or "term"; for term
/// judgements `term` is the elaborated term and `type` its type.
struct CheckedJudgement {
  std::string rule;
  std::string form;
  TermPtr term;
  TypePtr type;
  std::vector<std::string> linear_used;
  std::vector<CheckedJudgement> premises;
  SourceSpan span;
};

/// Rebuild the conclusion of a term judgement from its term premises and
/// compare it with the recorded one.
bool replay(const CheckedJudgement& j);

class Checker {
 public:
  explicit Checker(const Signature& sig, EqualityConfig eq = {});

  /// Every declaration well-formed over the preceding ones.
  CheckedJudgement check_signature() const;
  CheckedJudgement check_context(const DualContext& ctx) const;
  CheckedJudgement check_type(const DualContext& ctx, const TypePtr& a) const;
  CheckedJudgement check_term(const DualContext& ctx, const TermPtr& t, const TypePtr& a) const;
  CheckedJudgement infer_term(const DualContext& ctx, const TermPtr& t) const;

  /// Check a module definition in the empty context.
  CheckedJudgement check_definition(const Definition& d) const;

  bool types_equal(const TypePtr& a, const TypePtr& b) const;

  const Signature& signature() const { return sig_; }
  const EqualityConfig& equality_config() const { return eq_; }

 private:
  const Signature& sig_;
  EqualityConfig eq_;
};

// Admissibility harness for the structural rules.

enum class Transform {
  Weaken,
  ExchangeInt,
  ExchangeLin,
  SubstIntType,
  SubstIntTypeEq,
  SubstIntTerm,
  SubstIntTermEq,
  SubstLinTerm,
  SubstLinTermEq,
};

const char* transform_name(Transform t);

/// A judgement to transform. With `term` null it is `type` type (or
/// type ≡ type2); otherwise term : type (or term ≡ term2 : type).
struct HarnessCase {
  DualContext ctx;
  TermPtr term;
  TypePtr type;
  TermPtr term2;
  TypePtr type2;
};

struct HarnessArgs {
  Transform transform = Transform::Weaken;
  std::string var;           // weakening name, or the variable substituted for
  TypePtr var_type;          // type of the weakening variable
  std::size_t position = 0;  // insertion / exchange position
  TermPtr replacement;       // the substituted term
  /// Linear context of a linear replacement; it takes the place of `var`.
  std::vector<std::pair<std::string, TypePtr>> replacement_lin;
};

struct HarnessResult {
  bool ok = true;
  HarnessCase transformed;
  std::string defect;  // kernel defect report when !ok
};

/// Apply a structural transform to a derivable judgement and re-check it.
/// Throws std::invalid_argument when the case or the arguments are ill-typed.
HarnessResult admissibility(const Checker& checker, const HarnessCase& c, const HarnessArgs& args);

}  // namespace ildtt
