#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "ildtt/checker.hpp"
#include "ildtt/equality.hpp"

namespace ildtt::sweep {

/// A checked judgement Δ;Ξ ⊢ term : type from a fixture or the generator.
struct Entry {
  std::string name;
  std::shared_ptr<const Module> module;
  DualContext ctx;
  TermPtr term;  // elaborated
  TypePtr type;
  bool generated = false;
  int group = -1;  // generated entries sharing a context and type
};

struct Corpus {
  std::vector<Entry> entries;
  std::size_t definitions = 0;        // fixture definitions that checked
  std::vector<std::string> rejected;  // fixture definitions that did not
};

/// Check every definition of every file. Each checked definition enters
/// closed and, when it starts with lambdas, with up to `max_linear` of them
/// opened into the context.
Corpus load_fixtures(const std::vector<std::string>& files, std::size_t max_linear = 4);

/// All *.ildtt files directly inside `dir`, sorted.
std::vector<std::string> fixture_files(const std::string& dir);

/// Add `count` checked random terms with at most 4 linear variables.
/// Terms the checker rejects are reported in `rejected`.
void add_generated(Corpus& c, std::size_t count, std::uint64_t seed);

/// Strip leading λ and Π-λ binders of a closed entry into its context.
Entry open_lambdas(const Entry& e, std::size_t max_linear);

struct Report {
  bool pass = true;
  std::string summary;
  std::vector<std::string> failures;  // the first few

  void fail(std::string what);
};

/// A rewrite step emitted while normalizing an entry.
struct Step {
  const Entry* entry;
  RewriteStep step;
};

struct SoundnessOptions {
  std::vector<std::uint64_t> seeds{11, 23, 37};
  std::size_t max_fiber = 4;
};

/// Every pair accepted by judg_equal has pointwise-equal denotations under
/// each random model. Candidate pairs: a term against its normal forms in
/// both hoisting orders, each rewrite step, a root η-expansion, and
/// terms of one generated group against each other. Steps go to `steps`.
Report soundness(const Corpus& c, const SoundnessOptions& opts, std::vector<Step>* steps = nullptr);

/// Mutants of the fixture entries: the ones the partition oracle refutes
/// must be rejected as reused/unused, and the checker agrees with the
/// oracle on every mutant and every corpus term.
Report linearity(const Corpus& c, std::size_t required_rejections);

/// Weakening, exchange and the substitution rules over the fixture
/// entries, and subject reduction for every recorded step.
Report metatheory(const Corpus& c, const std::vector<Step>& steps);

}  // namespace ildtt::sweep
