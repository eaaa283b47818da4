#pragma once

#include <optional>
#include <string_view>

#include "orbitforce/word.hpp"

namespace orbitforce {

/// The four reduction rules: LL->L, RR->R, LR->e, RL->e. Together with tail
/// formation (dropping a prefix) they generate the whole derivation relation.
enum class RuleKind : unsigned char { LLtoL, RRtoR, LRtoEmpty, RLtoEmpty };

/// "LL->L", "RR->R", "LR->e" or "RL->e".
std::string_view rule_name(RuleKind kind) noexcept;

/// One rule application; position is the 0-based index of the first letter
/// of the two-letter window it rewrites.
struct ReductionRule {
  RuleKind kind;
  std::size_t position;

  friend bool operator==(const ReductionRule&, const ReductionRule&) = default;
};

/// The rule matching the window at `position` (every adjacent pair matches
/// exactly one rule), or nullopt when position+2 > |w|.
std::optional<ReductionRule> rule_at(const Word& w, std::size_t position);

/// Applies the rule; requires rule_at(w, rule.position) == rule.
Word apply_rule(const Word& w, const ReductionRule& rule);

/// All words reachable from w by exactly one reduction (no tail formation).
/// Members have length |w|-1 or |w|-2.
PatternSet one_step_reductions(const Word& w);

/// All words reachable from w, w included, by reductions only. Finite:
/// every step strictly shrinks the word.
PatternSet reduction_closure(const Word& w);

/// Everything derivable from w by reductions and tail formation in any
/// order. Computed in normal form: reduce first, take tails last (one step
/// of each commutes, so nothing is missed).
PatternSet derivable_set(const Word& w);

bool is_derivable(const Word& w, const Word& u);

/// A witness derivation in normal form: reduction steps in order, then at
/// most one tail step.
struct Derivation {
  struct Step {
    ReductionRule rule;
    Word result;  // word after applying `rule`
  };

  Word start;
  std::vector<Step> reductions;
  Word target;

  /// The word the reductions end at (start when there are none).
  const Word& reduced() const {
    return reductions.empty() ? start : reductions.back().result;
  }

  /// True when target is a proper tail of reduced().
  bool has_tail_step() const { return target != reduced(); }
};

/// A shortest-by-reduction-count witness that u is derivable from w, or
/// nullopt when it is not.
std::optional<Derivation> find_derivation(const Word& w, const Word& u);

}  // namespace orbitforce
