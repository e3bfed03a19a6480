#pragma once

#include <functional>

#include "ildtt/checker.hpp"

namespace ildtt::detail {

struct LinSlot {
  std::string name;
  TypePtr type;
  bool consumed = false;
};

/// Leftover state threaded through a checking pass. Slots below `slack`
/// may be left unconsumed (a ⊤-I or 0-E node absorbed them); slots below
/// `hidden` are out of reach (we are inside a premise with empty linear zone).
struct UsageState {
  std::vector<LinSlot> lin;
  std::size_t slack = 0;
  std::size_t hidden = 0;
};

class CheckerImpl {
 public:
  CheckerImpl(const Signature& sig, const EqualityConfig& eq) : sig_(sig), eq_(eq) {}

  void load(const DualContext& ctx);
  void finish(const SourceSpan& span);

  CheckedJudgement type(const TypePtr& a);
  CheckedJudgement check(const TermPtr& t, const TypePtr& expected);
  CheckedJudgement infer(const TermPtr& t);

  std::vector<std::pair<std::string, TypePtr>> ints;
  UsageState st;

 private:
  CheckedJudgement check_node(const TermPtr& t, const TypePtr& expected);
  CheckedJudgement infer_node(const TermPtr& t);

  CheckedJudgement conv(CheckedJudgement j, const TypePtr& expected, const TermPtr& t);
  CheckedJudgement intuitionistic(const std::function<CheckedJudgement()>& f);
  void additive(const std::function<void()>& left, const std::function<void()>& right, const SourceSpan& span);

  // binders
  std::string fresh_int(const std::string& x) const;
  std::string fresh_lin(const std::string& x) const;
  void push_int(const std::string& x, TypePtr a);
  void pop_int();
  void push_lin(const std::string& x, TypePtr a);
  void pop_lin(const SourceSpan& span);

  TypePtr lookup_int(const std::string& x) const;
  bool equal(const TypePtr& a, const TypePtr& b) const;

  CheckedJudgement constant(const TermPtr& t);
  CheckedJudgement let_like(const TermPtr& t, const TypePtr& expected);
  CheckedJudgement case_like(const TermPtr& t, const TypePtr& expected);
  CheckedJudgement if_like(const TermPtr& t, const TypePtr& expected);
  CheckedJudgement let_id(const TermPtr& t, const TypePtr& expected);
  CheckedJudgement with_pair(const TermPtr& t, const TypePtr& expected);
  CheckedJudgement app(const TermPtr& t);
  CheckedJudgement lambda(const TermPtr& t, const TypePtr& expected);

  const Signature& sig_;
  const EqualityConfig& eq_;
};

CheckedJudgement make_judgement(std::string rule, TermPtr term, TypePtr type,
                                std::vector<CheckedJudgement> premises, const SourceSpan& span);

}  // namespace ildtt::detail
