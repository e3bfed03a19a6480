#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ildtt/checker.hpp"

namespace ildtt {

/// Declarative linearity check: some partition of Ξ, chosen independently
/// at every multiplicative rule, derives `t`. Only the linear zone is
/// examined; the term is assumed well-typed otherwise. Memoized on
/// (subterm, subset), so contexts of up to 64 linear variables are accepted.
bool partition_derivable(const DualContext& ctx, const TermPtr& t);

/// Linear variables in Ξ plus linear binders in `t`.
std::size_t linear_variable_count(const DualContext& ctx, const TermPtr& t);

enum class MutationKind {
  Duplicate,       // an occurrence of y replaced by another in-scope x of the same type
  DropContext,     // an extra, unused linear variable appended to Ξ
  DropOccurrence,  // an occurrence of y replaced by a closed term of its type
};

const char* mutation_name(MutationKind k);

struct Mutant {
  MutationKind kind;
  DualContext ctx;
  TermPtr term;
  std::string description;
};

/// Every single-step mutant of an elaborated term Δ;Ξ ⊢ t. The type is
/// unchanged, so only the linear discipline can reject a mutant.
std::vector<Mutant> mutants(const Signature& sig, const DualContext& ctx, const TermPtr& t);

/// A closed term of type `a` built from unit, booleans and nullary
/// constants, or null.
TermPtr closed_inhabitant(const Signature& sig, const TypePtr& a);

}  // namespace ildtt
