#include "rkit/semantics.hpp"

#include <algorithm>

namespace rkit {

Completion completion_from_index(std::size_t num_vars, std::uint64_t index) {
  Completion c{Bits(num_vars)};
  for (std::size_t v = 0; v < num_vars && v < 64; ++v)
    if ((index >> v) & 1u) c.values.set(v);
  return c;
}

EffectiveAction effective_action(const GroundAction& action, const Completion& completion) {
  EffectiveAction out{action.pre, action.add, action.del};
  auto extend = [&](std::vector<int>& into, const std::vector<PossibleItem>& items) {
    for (const auto& item : items)
      if (completion.realized(item.var)) into.push_back(item.fluent);
    std::sort(into.begin(), into.end());
    into.erase(std::unique(into.begin(), into.end()), into.end());
  };
  extend(out.pre, action.poss_pre);
  extend(out.add, action.poss_add);
  extend(out.del, action.poss_del);
  return out;
}

State apply(const GroundAction& action, const State& state, const Completion& completion) {
  auto holds = [&](int f) { return state.test(static_cast<std::size_t>(f)); };
  if (!std::all_of(action.pre.begin(), action.pre.end(), holds)) return state;
  for (const auto& item : action.poss_pre)
    if (completion.realized(item.var) && !holds(item.fluent)) return state;

  State next = state;
  for (int f : action.add) next.set(static_cast<std::size_t>(f));
  for (const auto& item : action.poss_add)
    if (completion.realized(item.var)) next.set(static_cast<std::size_t>(item.fluent));
  for (int f : action.del) next.reset(static_cast<std::size_t>(f));
  for (const auto& item : action.poss_del)
    if (completion.realized(item.var)) next.reset(static_cast<std::size_t>(item.fluent));
  return next;
}

std::vector<State> project(const GroundModel& model, const ResolvedPlan& plan, const State& init,
                           const Completion& completion) {
  std::vector<State> trajectory;
  trajectory.reserve(plan.steps.size() + 1);
  trajectory.push_back(init);
  for (int step : plan.steps)
    trajectory.push_back(apply(model.actions.at(static_cast<std::size_t>(step)), trajectory.back(), completion));
  return trajectory;
}

bool satisfies(const State& state, const std::vector<int>& goal) {
  return std::all_of(goal.begin(), goal.end(), [&](int f) { return state.test(static_cast<std::size_t>(f)); });
}

Rational completion_probability(const GroundModel& model, const Completion& completion) {
  Rational p = 1;
  for (const auto& v : model.vars) p *= completion.realized(v.id) ? v.weight : Rational(1 - v.weight);
  return p;
}

CompletionRange::iterator::iterator(const GroundModel* model, std::uint64_t index, std::uint64_t end)
    : model_(model), end_(end) {
  item_.index = index;
  load();
}

void CompletionRange::iterator::load() {
  if (!model_ || item_.index >= end_) return;
  item_.completion = completion_from_index(model_->num_vars(), item_.index);
  item_.probability = completion_probability(*model_, item_.completion);
}

CompletionRange::iterator& CompletionRange::iterator::operator++() {
  ++item_.index;
  load();
  return *this;
}

CompletionRange::CompletionRange(const GroundModel& model, int cap) : model_(&model) {
  if (model.num_vars() > static_cast<std::size_t>(cap) || model.num_vars() >= 63)
    throw EnumerationCapExceeded(model.num_vars(), cap);
  count_ = std::uint64_t{1} << model.num_vars();
}

CompletionRange enumerate_completions(const GroundModel& model, int cap) { return CompletionRange(model, cap); }

}  // namespace rkit
