#pragma once

// Brute-force reference semantics over named fluents. Shares nothing with
// the library beyond the ground model's action lists.

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "rkit/grounding.hpp"

namespace rkit::oracle {

using NamedState = std::set<std::string>;

inline bool bit(std::uint64_t completion, int var) { return (completion >> var) & 1u; }

inline Rational probability(const GroundModel& model, std::uint64_t completion) {
  Rational p = 1;
  for (std::size_t v = 0; v < model.vars.size(); ++v)
    p *= bit(completion, static_cast<int>(v)) ? model.vars[v].weight : Rational(1 - model.vars[v].weight);
  return p;
}

inline NamedState step(const GroundModel& model, const GroundAction& a, const NamedState& s, std::uint64_t completion) {
  std::vector<std::string> pre, add, del;
  for (int f : a.pre) pre.push_back(model.fluent_name(f));
  for (const auto& i : a.poss_pre)
    if (bit(completion, i.var)) pre.push_back(model.fluent_name(i.fluent));
  for (const auto& p : pre)
    if (!s.contains(p)) return s;
  for (int f : a.add) add.push_back(model.fluent_name(f));
  for (const auto& i : a.poss_add)
    if (bit(completion, i.var)) add.push_back(model.fluent_name(i.fluent));
  for (int f : a.del) del.push_back(model.fluent_name(f));
  for (const auto& i : a.poss_del)
    if (bit(completion, i.var)) del.push_back(model.fluent_name(i.fluent));
  NamedState next = s;
  next.insert(add.begin(), add.end());
  for (const auto& d : del) next.erase(d);
  return next;
}

inline NamedState initial(const GroundModel& model) {
  NamedState s;
  for (int f : model.init) s.insert(model.fluent_name(f));
  return s;
}

inline bool goal_holds(const GroundModel& model, const NamedState& s) {
  return std::all_of(model.goal.begin(), model.goal.end(), [&](int g) { return s.contains(model.fluent_name(g)); });
}

inline NamedState run(const GroundModel& model, const std::vector<int>& steps, std::uint64_t completion) {
  NamedState s = initial(model);
  for (int a : steps) s = step(model, model.actions[static_cast<std::size_t>(a)], s, completion);
  return s;
}

inline Rational robustness(const GroundModel& model, const std::vector<int>& steps) {
  Rational total = 0;
  const std::uint64_t count = std::uint64_t{1} << model.vars.size();
  for (std::uint64_t c = 0; c < count; ++c)
    if (goal_holds(model, run(model, steps, c))) total += probability(model, c);
  return total;
}

/// Highest robustness over every plan of length <= max_length.
inline Rational best_robustness(const GroundModel& model, int max_length) {
  Rational best = robustness(model, {});
  std::vector<int> plan;
  const int n = static_cast<int>(model.actions.size());
  if (n == 0) return best;
  for (int len = 1; len <= max_length; ++len) {
    plan.assign(static_cast<std::size_t>(len), 0);
    while (true) {
      best = std::max(best, robustness(model, plan));
      std::size_t i = 0;
      for (; i < plan.size(); ++i) {
        if (++plan[i] < n) break;
        plan[i] = 0;
      }
      if (i == plan.size()) break;
    }
  }
  return best;
}

}  // namespace rkit::oracle
