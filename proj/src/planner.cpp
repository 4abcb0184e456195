#include "rkit/planner.hpp"

#include <algorithm>
#include <chrono>
#include <cstring>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <unordered_map>

#include "rkit/robustness.hpp"

namespace rkit {

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Plan:
      return "plan";
    case Verdict::Infeasible:
      return "infeasible";
    case Verdict::BudgetExhausted:
      return "budget-exhausted";
  }
  return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

std::vector<EffectiveAction> effective_actions(const GroundModel& model, const Completion& completion) {
  std::vector<EffectiveAction> out;
  out.reserve(model.actions.size());
  for (const auto& a : model.actions) out.push_back(effective_action(a, completion));
  return out;
}

int ff_length(const std::vector<EffectiveAction>& actions, std::size_t num_fluents, const State& state,
              const std::vector<int>& goal) {
  constexpr int kUnreached = std::numeric_limits<int>::max();
  std::vector<int> level(num_fluents, kUnreached);
  std::vector<int> achiever(num_fluents, -1);
  for (std::size_t f = 0; f < num_fluents; ++f)
    if (state.test(f)) level[f] = 0;

  auto goal_reached = [&] {
    return std::all_of(goal.begin(), goal.end(), [&](int g) { return level[static_cast<std::size_t>(g)] != kUnreached; });
  };
  std::vector<char> used(actions.size(), 0);
  int depth = 0;
  while (!goal_reached()) {
    std::vector<std::pair<int, int>> fresh;  // (fluent, action)
    for (std::size_t i = 0; i < actions.size(); ++i) {
      if (used[i]) continue;
      const auto& a = actions[i];
      bool ok = std::all_of(a.pre.begin(), a.pre.end(), [&](int p) { return level[static_cast<std::size_t>(p)] <= depth; });
      if (!ok) continue;
      used[i] = 1;
      for (int f : a.add)
        if (level[static_cast<std::size_t>(f)] == kUnreached) fresh.emplace_back(f, static_cast<int>(i));
    }
    if (fresh.empty()) return kInfiniteHeuristic;
    ++depth;
    for (auto [f, a] : fresh) {
      auto& l = level[static_cast<std::size_t>(f)];
      if (l == kUnreached) {
        l = depth;
        achiever[static_cast<std::size_t>(f)] = a;
      }
    }
  }

  std::vector<std::vector<int>> agenda(static_cast<std::size_t>(depth) + 1);
  std::vector<char> queued(num_fluents, 0);
  auto push = [&](int f) {
    int l = level[static_cast<std::size_t>(f)];
    if (l > 0 && !queued[static_cast<std::size_t>(f)]) {
      queued[static_cast<std::size_t>(f)] = 1;
      agenda[static_cast<std::size_t>(l)].push_back(f);
    }
  };
  for (int g : goal) push(g);
  std::vector<char> selected(actions.size(), 0);
  int count = 0;
  for (int l = depth; l > 0; --l) {
    for (std::size_t j = 0; j < agenda[static_cast<std::size_t>(l)].size(); ++j) {
      int a = achiever[static_cast<std::size_t>(agenda[static_cast<std::size_t>(l)][j])];
      if (selected[static_cast<std::size_t>(a)]) continue;
      selected[static_cast<std::size_t>(a)] = 1;
      ++count;
      for (int p : actions[static_cast<std::size_t>(a)].pre) push(p);
    }
  }
  return count;
}

/// Shared state of one search: the single block spanning all completions,
/// its measure, and per-completion caches used by the heuristic.
class SearchContext {
 public:
  SearchContext(const GroundModel& model)
      : model_(model),
        block_(model.num_vars(), static_cast<int>(model.num_vars()), 0),
        measure_(model, static_cast<int>(model.num_vars())) {
    const std::size_t lanes = block_.lanes();
    std::vector<Rational> prob(lanes);
    for (const auto& item : enumerate_completions(model, 63)) prob[item.index] = item.probability;
    order_.resize(lanes);
    std::iota(order_.begin(), order_.end(), 0u);
    std::stable_sort(order_.begin(), order_.end(), [&](std::uint32_t a, std::uint32_t b) { return prob[a] > prob[b]; });
    bits_per_fluent_ = std::min<std::size_t>(lanes, 64);
  }

  const CompletionBlock& block() const { return block_; }

  SearchNode evaluate(SlicedState states) const {
    SearchNode node;
    node.states = std::move(states);
    node.goal_mask = goal_mask(model_, node.states, block_);
    node.potential_mask = relaxed_goal_mask(model_, node.states, block_);
    node.achieved = measure_.measure(node.goal_mask, block_);
    node.potential = measure_.measure(node.potential_mask, block_);
    return node;
  }

  int heuristic(const SearchNode& node) {
    bool any_potential = false;
    for (Word w : node.potential_mask) any_potential |= w != 0;
    if (!any_potential) return kInfiniteHeuristic;
    for (std::uint32_t lane : order_) {
      const std::size_t w = lane / 64;
      const Word bit = Word{1} << (lane % 64);
      if (!(node.potential_mask[w] & bit) || (node.goal_mask[w] & bit)) continue;
      State s(model_.num_fluents());
      for (std::size_t f = 0; f < model_.num_fluents(); ++f)
        if (node.states.fluent(static_cast<int>(f))[w] & bit) s.set(f);
      return ff_length(effective(lane), model_.num_fluents(), s, model_.goal);
    }
    return 0;
  }

  /// Compact byte string identifying a state vector.
  std::string pack(const SlicedState& states) const {
    if (bits_per_fluent_ == 64) {
      auto raw = states.raw();
      return std::string(reinterpret_cast<const char*>(raw.data()), raw.size() * sizeof(Word));
    }
    const std::size_t total = states.num_fluents() * bits_per_fluent_;
    std::string out((total + 7) / 8, '\0');
    std::size_t pos = 0;
    for (std::size_t f = 0; f < states.num_fluents(); ++f) {
      Word w = states.fluent(static_cast<int>(f))[0];
      for (std::size_t b = 0; b < bits_per_fluent_; ++b, ++pos)
        if ((w >> b) & 1u) out[pos / 8] = static_cast<char>(out[pos / 8] | (1 << (pos % 8)));
    }
    return out;
  }

  SlicedState unpack(const std::string& key) const {
    SlicedState states(model_.num_fluents(), block_.words());
    if (bits_per_fluent_ == 64) {
      std::memcpy(states.raw().data(), key.data(), key.size());
      return states;
    }
    std::size_t pos = 0;
    for (std::size_t f = 0; f < model_.num_fluents(); ++f) {
      Word w = 0;
      for (std::size_t b = 0; b < bits_per_fluent_; ++b, ++pos)
        if ((static_cast<unsigned char>(key[pos / 8]) >> (pos % 8)) & 1u) w |= Word{1} << b;
      states.fluent(static_cast<int>(f))[0] = w;
    }
    return states;
  }

 private:
  const std::vector<EffectiveAction>& effective(std::uint32_t lane) {
    auto it = effective_.find(lane);
    if (it == effective_.end())
      it = effective_.emplace(lane, effective_actions(model_, completion_from_index(model_.num_vars(), lane))).first;
    return it->second;
  }

  const GroundModel& model_;
  CompletionBlock block_;
  CompletionMeasure measure_;
  std::vector<std::uint32_t> order_;  // lanes by descending probability
  std::size_t bits_per_fluent_ = 64;
  std::unordered_map<std::uint32_t, std::vector<EffectiveAction>> effective_;
};

struct Record {
  std::string key;
  std::int64_t parent = -1;
  int action = -1;
  std::uint32_t g = 0;
};

struct OpenEntry {
  Rational achieved;
  int h = 0;
  std::uint32_t g = 0;
  std::uint64_t seq = 0;
  std::size_t record = 0;
};

/// Pops the highest achieved robustness first, then lowest h, lowest g,
/// earliest insertion.
struct OpenOrder {
  bool operator()(const OpenEntry& a, const OpenEntry& b) const {
    if (a.achieved != b.achieved) return a.achieved < b.achieved;
    if (a.h != b.h) return a.h > b.h;
    if (a.g != b.g) return a.g > b.g;
    return a.seq > b.seq;
  }
};

ResolvedPlan reconstruct(const std::vector<Record>& records, std::size_t id) {
  ResolvedPlan plan;
  for (std::int64_t r = static_cast<std::int64_t>(id); records[static_cast<std::size_t>(r)].parent >= 0;
       r = records[static_cast<std::size_t>(r)].parent)
    plan.steps.push_back(records[static_cast<std::size_t>(r)].action);
  std::reverse(plan.steps.begin(), plan.steps.end());
  return plan;
}

void check_cap(const GroundModel& model, const PlannerOptions& options) {
  if (model.num_vars() > static_cast<std::size_t>(options.cap) || model.num_vars() >= 32)
    throw EnumerationCapExceeded(model.num_vars(), options.cap);
}

}  // namespace

int relaxed_plan_length(const GroundModel& model, const State& state, const Completion& completion) {
  return ff_length(effective_actions(model, completion), model.num_fluents(), state, model.goal);
}

SearchNode make_node(const GroundModel& model, const ResolvedPlan& prefix) {
  check_cap(model, {});
  SearchContext ctx(model);
  SlicedState states = sliced_initial(model, ctx.block());
  SliceScratch scratch;
  for (int step : prefix.steps) apply_sliced(model.actions.at(static_cast<std::size_t>(step)), states, ctx.block(), scratch);
  return ctx.evaluate(std::move(states));
}

int heuristic(const GroundModel& model, const SearchNode& node) {
  check_cap(model, {});
  SearchContext ctx(model);
  return ctx.heuristic(node);
}

SynthesisResult synthesize(const GroundModel& model, const Threshold& threshold, const Budget& budget,
                           const PlannerOptions& options) {
  const auto start = Clock::now();
  SynthesisResult result;
  auto finish = [&](Verdict v) {
    result.verdict = v;
    result.seconds = since(start);
    return result;
  };
  if (budget.seconds <= 0 || budget.node_cap == 0) return finish(Verdict::BudgetExhausted);
  check_cap(model, options);

  SearchContext ctx(model);
  SearchNode root = ctx.evaluate(sliced_initial(model, ctx.block()));
  result.upper_bound = root.potential;
  if (!threshold.met_by(root.potential)) {
    result.certificate = InfeasibilityCertificate{InfeasibilityCertificate::Kind::UpperBound, root.potential};
    return finish(Verdict::Infeasible);
  }

  auto accept = [&](const ResolvedPlan& plan) {
    result.plan = plan;
    result.robustness = assess_exact(model, plan).value;
    if (!threshold.met_by(result.robustness))
      throw std::logic_error("synthesized plan fails re-verification: R=" + to_compact_string(result.robustness));
    return finish(Verdict::Plan);
  };

  Rational best = root.achieved;
  result.incumbents.push_back({best, 0});
  if (threshold.met_by(root.achieved)) return accept({});

  std::vector<Record> records;
  std::unordered_map<std::string, std::size_t> seen;
  std::priority_queue<OpenEntry, std::vector<OpenEntry>, OpenOrder> open;
  std::uint64_t seq = 0;

  records.push_back({ctx.pack(root.states), -1, -1, 0});
  seen.emplace(records.back().key, 0);
  open.push({root.achieved, ctx.heuristic(root), 0, seq++, 0});

  SliceScratch scratch;
  while (!open.empty()) {
    if (result.expanded >= budget.node_cap) return finish(Verdict::BudgetExhausted);
    if ((result.expanded & 63u) == 0 && since(start) >= budget.seconds) return finish(Verdict::BudgetExhausted);

    OpenEntry entry = open.top();
    open.pop();
    ++result.expanded;
    const SlicedState parent = ctx.unpack(records[entry.record].key);
    const std::uint32_t g = records[entry.record].g + 1;

    for (std::size_t a = 0; a < model.actions.size(); ++a) {
      SlicedState child = parent;
      apply_sliced(model.actions[a], child, ctx.block(), scratch);
      std::string key = ctx.pack(child);
      if (seen.contains(key)) continue;
      ++result.generated;

      SearchNode node = ctx.evaluate(std::move(child));
      const std::size_t id = records.size();
      records.push_back({std::move(key), static_cast<std::int64_t>(entry.record), static_cast<int>(a), g});
      seen.emplace(records.back().key, id);

      if (node.achieved > best) {
        best = node.achieved;
        result.incumbents.push_back({best, g});
      }
      if (threshold.met_by(node.achieved)) return accept(reconstruct(records, id));
      if (!threshold.met_by(node.potential)) continue;
      int h = ctx.heuristic(node);
      if (h == kInfiniteHeuristic) continue;
      open.push({node.achieved, h, g, seq++, id});
    }
  }
  result.certificate = InfeasibilityCertificate{InfeasibilityCertificate::Kind::ExhaustedSearch, result.upper_bound};
  return finish(Verdict::Infeasible);
}

MaxResult synthesize_max(const GroundModel& model, const Budget& budget, const PlannerOptions& options) {
  const auto start = Clock::now();
  MaxResult out;
  check_cap(model, options);
  out.upper_bound = robustness_upper_bound(model);
  Threshold threshold{Rational(0), true};
  while (true) {
    Budget remaining;
    remaining.seconds = budget.seconds - since(start);
    remaining.node_cap = budget.node_cap > out.expanded ? budget.node_cap - out.expanded : 0;
    SynthesisResult r = synthesize(model, threshold, remaining, options);
    ++out.rounds;
    out.expanded += r.expanded;
    if (r.verdict == Verdict::Plan) {
      out.plan = r.plan;
      out.robustness = r.robustness;
      out.sweep.push_back(r.robustness);
      if (r.robustness >= out.upper_bound) {
        out.optimal = true;
        break;
      }
      threshold.value = r.robustness;
      continue;
    }
    out.optimal = r.verdict == Verdict::Infeasible;
    break;
  }
  out.seconds = since(start);
  return out;
}

}  // namespace rkit
