#include "rkit/cpp.hpp"

#include <algorithm>
#include <unordered_map>

#include "rkit/robustness.hpp"

namespace rkit {

namespace {

void sort_unique(std::vector<int>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

bool contains_all(const Bits& state, const std::vector<int>& fluents) {
  return std::all_of(fluents.begin(), fluents.end(), [&](int f) { return state.test(static_cast<std::size_t>(f)); });
}

}  // namespace

Rational Belief::mass() const {
  Rational total = 0;
  for (const auto& e : entries) total += e.probability;
  return total;
}

Belief CppProblem::initial_belief(int cap) const {
  const std::size_t k = hidden.size();
  if (k > static_cast<std::size_t>(cap) || k >= 63) throw EnumerationCapExceeded(k, cap);
  Belief belief;
  const std::uint64_t count = std::uint64_t{1} << k;
  belief.entries.reserve(count);
  Bits base = bits_from(fluents.size(), init);
  for (std::uint64_t c = 0; c < count; ++c) {
    BeliefEntry entry{base, Rational(1), c};
    for (std::size_t v = 0; v < k; ++v) {
      bool on = (c >> v) & 1u;
      entry.state.set(static_cast<std::size_t>(on ? hidden[v].realized : hidden[v].unrealized));
      entry.probability *= on ? hidden_weights[v] : Rational(1 - hidden_weights[v]);
    }
    belief.entries.push_back(std::move(entry));
  }
  return belief;
}

CppProblem compile(const GroundModel& model, const Rational& rho, const CompileOptions& options) {
  if (model.num_vars() > static_cast<std::size_t>(options.cap))
    throw CompileError("model has K=" + std::to_string(model.num_vars()) + " realization variables, above the cap of " +
                       std::to_string(options.cap));
  CppProblem out;
  out.domain_name = model.domain_name;
  out.problem_name = model.problem_name;
  out.objects = model.objects;
  out.predicate_arities = model.predicate_arities;
  out.rho = rho;
  out.base_fluents = model.num_fluents();
  for (const auto& atom : model.fluents) out.fluents.push_back(to_string(atom));
  for (const auto& v : model.vars) {
    HiddenPair pair;
    pair.realized = static_cast<int>(out.fluents.size());
    out.fluents.push_back("(" + v.symbol + ")");
    pair.unrealized = static_cast<int>(out.fluents.size());
    out.fluents.push_back("(n" + v.symbol + ")");
    out.hidden.push_back(pair);
    out.hidden_weights.push_back(v.weight);
  }
  out.init = model.init;
  out.goal = model.goal;

  for (std::size_t i = 0; i < model.actions.size(); ++i) {
    const GroundAction& a = model.actions[i];
    const std::vector<int> vars = a.vars();
    if (vars.size() > static_cast<std::size_t>(options.per_action_cap))
      throw CompileError("action " + a.label() + " has n_a=" + std::to_string(vars.size()) +
                         " realization variables; the per-action cap is " + std::to_string(options.per_action_cap) +
                         " (2^n_a conditional effects)");
    CppAction compiled;
    compiled.name = a.name;
    for (const auto& arg : a.args) compiled.name += "_" + arg;
    compiled.source = static_cast<int>(i);

    const std::uint64_t realizations = std::uint64_t{1} << vars.size();
    for (std::uint64_t r = 0; r < realizations; ++r) {
      auto realized = [&](int var) {
        auto pos = std::lower_bound(vars.begin(), vars.end(), var) - vars.begin();
        return ((r >> pos) & 1u) != 0;
      };
      ConditionalEffect effect;
      Outcome outcome;
      effect.condition = a.pre;
      for (const auto& item : a.poss_pre)
        if (realized(item.var)) effect.condition.push_back(item.fluent);
      for (std::size_t j = 0; j < vars.size(); ++j) {
        const HiddenPair& h = out.hidden[static_cast<std::size_t>(vars[j])];
        effect.condition.push_back(((r >> j) & 1u) ? h.realized : h.unrealized);
      }
      outcome.add = a.add;
      for (const auto& item : a.poss_add)
        if (realized(item.var)) outcome.add.push_back(item.fluent);
      outcome.del = a.del;
      for (const auto& item : a.poss_del)
        if (realized(item.var)) outcome.del.push_back(item.fluent);
      sort_unique(effect.condition);
      sort_unique(outcome.add);
      sort_unique(outcome.del);
      effect.outcomes.push_back(std::move(outcome));
      compiled.effects.push_back(std::move(effect));
    }
    out.actions.push_back(std::move(compiled));
  }
  return out;
}

Belief apply_cpp(const CppAction& action, const Belief& belief) {
  for (const auto& e : belief.entries)
    if (!contains_all(e.state, action.pre))
      throw InapplicableAction("action " + action.name + " is not applicable in every state of the belief");

  Belief out;
  std::unordered_map<Bits, std::size_t> index;
  auto emit = [&](Bits state, const Rational& p, std::uint64_t tag) {
    auto [it, inserted] = index.try_emplace(state, out.entries.size());
    if (inserted)
      out.entries.push_back({std::move(state), p, tag});
    else
      out.entries[it->second].probability += p;
  };

  for (const auto& e : belief.entries) {
    const ConditionalEffect* fired = nullptr;
    for (const auto& effect : action.effects) {
      if (!contains_all(e.state, effect.condition)) continue;
      if (fired) throw InapplicableAction("conditional effects of " + action.name + " are not mutually exclusive");
      fired = &effect;
    }
    if (!fired) {
      emit(e.state, e.probability, e.tag);
      continue;
    }
    for (const auto& o : fired->outcomes) {
      if (o.probability == 0) continue;
      Bits next = e.state;
      for (int f : o.add) next.set(static_cast<std::size_t>(f));
      for (int f : o.del) next.reset(static_cast<std::size_t>(f));
      emit(std::move(next), e.probability * o.probability, e.tag);
    }
  }
  return out;
}

Rational goal_probability(const Belief& belief, const std::vector<int>& goal) {
  Rational total = 0;
  for (const auto& e : belief.entries)
    if (contains_all(e.state, goal)) total += e.probability;
  return total;
}

std::vector<Belief> execute_cpp(const CppProblem& problem, const ResolvedPlan& plan) {
  std::vector<Belief> trajectory;
  trajectory.push_back(problem.initial_belief());
  for (int step : plan.steps)
    trajectory.push_back(apply_cpp(problem.actions.at(static_cast<std::size_t>(step)), trajectory.back()));
  return trajectory;
}

Theorem1Report check_theorem1(const GroundModel& model, const ResolvedPlan& plan, const Rational& rho) {
  Theorem1Report report;
  report.lhs = assess_exact(model, plan).value;
  CppProblem compiled = compile(model, rho);
  report.rhs = goal_probability(execute_cpp(compiled, plan).back(), compiled.goal);
  report.equal = report.lhs == report.rhs;
  report.meets_threshold = report.lhs >= rho;
  return report;
}

std::optional<TrajectoryMismatch> compare_trajectories(const GroundModel& model, const CppProblem& problem,
                                                       const ResolvedPlan& plan) {
  auto beliefs = execute_cpp(problem, plan);
  State init = model.initial_state();
  for (const auto& item : enumerate_completions(model)) {
    auto states = project(model, plan, init, item.completion);
    for (std::size_t step = 0; step < beliefs.size(); ++step) {
      const auto& entries = beliefs[step].entries;
      auto it = std::find_if(entries.begin(), entries.end(), [&](const auto& e) { return e.tag == item.index; });
      if (it == entries.end()) return TrajectoryMismatch{item.index, step, "completion missing from belief support"};
      if (it->probability != item.probability)
        return TrajectoryMismatch{item.index, step, "support state probability differs from Pr(D_i)"};
      for (std::size_t f = 0; f < model.num_fluents(); ++f)
        if (it->state.test(f) != states[step].test(f))
          return TrajectoryMismatch{item.index, step, "fluent " + model.fluent_name(static_cast<int>(f)) + " differs"};
    }
  }
  return std::nullopt;
}

}  // namespace rkit
