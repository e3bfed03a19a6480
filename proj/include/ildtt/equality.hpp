#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ildtt/syntax.hpp"

namespace ildtt {

/// One rewrite. `before` and `after` are whole terms; `path` locates the
/// redex as a sequence of kid indices from the root.
struct RewriteStep {
  std::string rule;
  std::vector<std::size_t> path;
  TermPtr before;
  TermPtr after;
};

class StepLimitExceeded : public std::runtime_error {
 public:
  explicit StepLimitExceeded(std::size_t limit);
  std::size_t limit;
};

/// Default step limit: ILDTT_STEP_LIMIT if set to a positive integer, else 10000.
std::size_t default_step_limit();

enum class HoistOrder { OutermostFirst, InnermostFirst };

struct EqualityConfig {
  std::size_t step_limit = default_step_limit();
  bool record_trace = true;
};

struct NormalForm {
  TermPtr term;
  std::vector<RewriteStep> trace;
};

/// Rewrite `t` to normal form with the computation rules, the oriented
/// uniqueness rules and outward commuting conversions.
NormalForm normalize(const TermPtr& t, const EqualityConfig& cfg = {},
                     HoistOrder order = HoistOrder::OutermostFirst);

/// Normalize the terms embedded in a type.
TypePtr normalize_type(const TypePtr& a, const EqualityConfig& cfg = {});

/// Sound, incomplete test for a ≡ a' : A. `false` means "not proved".
bool judg_equal(const TermPtr& a, const TermPtr& b, const TypePtr& type, const EqualityConfig& cfg = {});

bool types_equal(const TypePtr& a, const TypePtr& b, const EqualityConfig& cfg = {});

}  // namespace ildtt
