#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ildtt/checker.hpp"
#include "ildtt/fam.hpp"

namespace ildtt::sem {

using fam::IndexSet;
using fam::PointedFam;
using fam::PointedMap;
using fam::PointedSet;
using fam::Value;

class SemanticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Values of the variables at one point of ⟦Δ⟧ and one linear input.
struct Env {
  std::map<std::string, Value> ints;
  std::map<std::string, Value> lins;
};

/// How declarations without a model binding are interpreted.
struct ModelOptions {
  bool use_bindings = true;   // honour `model` declarations of the signature
  bool allow_random = true;   // pick seeded random fibers and elements otherwise
  std::uint64_t seed = 0;
  std::size_t min_fiber = 1;  // random fibers have min_fiber..max_fiber points
  std::size_t max_fiber = 4;
};

/// ⟦Δ⟧ as an index set of Point(v1, .., vn), with the pointed family ⟦Ξ⟧
/// over it. The linear fiber is the left-nested smash of the Ξ fibers
/// (I when Ξ is empty).
struct ContextDenotation {
  IndexSet points;
  std::map<Value, Env> env;  // intuitionistic part of each point
  PointedFam linear;
};

/// A term Δ; Ξ ⊢ t : A as a fiberwise pointed map ⟦Ξ⟧ → ⟦A⟧.
struct TermDenotation {
  ContextDenotation ctx;
  PointedFam type;
  std::map<Value, PointedMap> map;
};

/// Interpretation of a signature in Fam(Set★). Terms are evaluated after
/// elaboration by the checker.
class Interpreter {
 public:
  explicit Interpreter(const Signature& sig, ModelOptions opts = {});

  PointedSet type_fiber(const TypePtr& a, const Env& env) const;
  /// v ∈ ⟦A⟧ at env, decided by the shape of v without enumerating ⟦A⟧.
  bool member(const Value& v, const TypePtr& a, const Env& env) const;
  Value eval(const TermPtr& t, const Env& env) const;

  /// All points of ⟦Δ⟧ for the intuitionistic zone of `ctx`.
  std::vector<Env> context_points(const DualContext& ctx) const;
  /// All linear inputs with every Ξ component away from the basepoint,
  /// added to `point`.
  std::vector<Env> linear_inputs(const DualContext& ctx, const Env& point) const;

  ContextDenotation denote_context(const DualContext& ctx) const;
  PointedFam denote_type(const DualContext& ctx, const TypePtr& a) const;
  TermDenotation denote_term(const DualContext& ctx, const TermPtr& t, const TypePtr& a) const;

  /// Readable rendering of an element of ⟦A⟧ at `env`.
  std::string label(const Value& v, const TypePtr& a, const Env& env) const;
  /// The fibers and constants chosen so far, one per line.
  std::string describe_model() const;

  const Signature& signature() const { return sig_; }
  const ModelOptions& options() const { return opts_; }

 private:
  PointedSet family(const std::string& name, const std::vector<TermPtr>& args, const Env& env) const;
  Value constant(const TermPtr& t, const Env& env) const;
  std::vector<std::string> key_of(const std::vector<Param>& params, const std::vector<TermPtr>& args,
                                   const Env& env) const;

  const Signature& sig_;
  ModelOptions opts_;
  mutable std::map<std::string, PointedSet> fibers_;
  mutable std::map<std::string, std::string> base_labels_;
  mutable std::map<std::string, Value> consts_;
  mutable std::map<std::string, std::string> const_labels_;
};

/// Outcome of comparing two denotations pointwise.
struct SoundnessResult {
  bool ok = true;
  std::size_t points = 0;
  std::size_t inputs = 0;
  std::string detail;  // first disagreement
};

/// ⟦a⟧ = ⟦b⟧ at every point of ⟦Δ⟧ and every linear input.
SoundnessResult check_equation(const Interpreter& in, const DualContext& ctx, const TermPtr& a, const TermPtr& b,
                               const TypePtr& type);
/// ⟦t⟧ lands in ⟦A⟧ and sends the basepoint of ⟦Ξ⟧ to the basepoint.
SoundnessResult check_typing(const Interpreter& in, const DualContext& ctx, const TermPtr& t, const TypePtr& type);

/// 64-bit FNV-1a.
std::uint64_t fnv1a(const std::string& s, std::uint64_t h = 0xcbf29ce484222325ULL);

}  // namespace ildtt::sem
