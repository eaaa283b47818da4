#include "orbitforce/rewrite.hpp"

#include <cassert>
#include <deque>
#include <map>

namespace orbitforce {

std::string_view rule_name(RuleKind kind) noexcept {
  switch (kind) {
    case RuleKind::LLtoL:     return "LL->L";
    case RuleKind::RRtoR:     return "RR->R";
    case RuleKind::LRtoEmpty: return "LR->e";
    case RuleKind::RLtoEmpty: return "RL->e";
  }
  return "?";
}

std::optional<ReductionRule> rule_at(const Word& w, std::size_t position) {
  if (position + 2 > w.size()) return std::nullopt;
  Letter a = w.at(position);
  Letter b = w.at(position + 1);
  RuleKind kind;
  if (a == b) {
    kind = (a == Letter::L) ? RuleKind::LLtoL : RuleKind::RRtoR;
  } else {
    kind = (a == Letter::L) ? RuleKind::LRtoEmpty : RuleKind::RLtoEmpty;
  }
  return ReductionRule{kind, position};
}

Word apply_rule(const Word& w, const ReductionRule& rule) {
  auto expected = rule_at(w, rule.position);
  if (!expected || expected->kind != rule.kind) {
    throw std::invalid_argument("apply_rule: rule does not match the window");
  }
  std::string s(w.raw());
  bool doubled = rule.kind == RuleKind::LLtoL || rule.kind == RuleKind::RRtoR;
  s.erase(rule.position, doubled ? 1 : 2);
  return parse_word(s);
}

PatternSet one_step_reductions(const Word& w) {
  PatternSet out;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    out.insert(apply_rule(w, *rule_at(w, i)));
  }
  return out;
}

PatternSet reduction_closure(const Word& w) {
  PatternSet seen{w};
  std::deque<Word> queue{w};
  while (!queue.empty()) {
    Word v = std::move(queue.front());
    queue.pop_front();
    for (const Word& u : one_step_reductions(v)) {
      if (seen.insert(u).second) queue.push_back(u);
    }
  }
  return seen;
}

PatternSet derivable_set(const Word& w) {
  PatternSet out;
  for (const Word& u : reduction_closure(w)) {
    for (const Word& t : tails(u)) out.insert(t);
  }
  return out;
}

bool is_derivable(const Word& w, const Word& u) {
  return derivable_set(w).contains(u);
}

namespace {

bool is_tail_of(const Word& u, const Word& w) {
  if (u.size() > w.size()) return false;
  return w.suffix(w.size() - u.size()) == u;
}

}  // namespace

std::optional<Derivation> find_derivation(const Word& w, const Word& u) {
  // Breadth-first over the reduction closure, remembering one parent per
  // word; the first word whose tails contain u ends the search, so the
  // witness uses as few reductions as possible.
  std::map<Word, std::pair<Word, ReductionRule>> parent;
  std::deque<Word> queue{w};
  PatternSet seen{w};

  auto build = [&](const Word& end) {
    Derivation d;
    d.start = w;
    d.target = u;
    std::vector<Derivation::Step> steps;
    for (Word v = end; v != w;) {
      auto it = parent.find(v);
      assert(it != parent.end());
      steps.push_back({it->second.second, v});
      v = it->second.first;
    }
    d.reductions.assign(steps.rbegin(), steps.rend());
    return d;
  };

  while (!queue.empty()) {
    Word v = std::move(queue.front());
    queue.pop_front();
    if (is_tail_of(u, v)) return build(v);
    // Scan windows right to left so reductions near the tail are found
    // first; any deterministic order would do.
    for (std::size_t i = v.size(); i >= 2; --i) {
      ReductionRule rule = *rule_at(v, i - 2);
      Word next = apply_rule(v, rule);
      if (seen.insert(next).second) {
        parent.emplace(next, std::make_pair(v, rule));
        queue.push_back(next);
      }
    }
  }
  return std::nullopt;
}

}  // namespace orbitforce
