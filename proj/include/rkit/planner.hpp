#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "rkit/grounding.hpp"
#include "rkit/semantics.hpp"
#include "rkit/slice.hpp"

namespace rkit {

/// Robustness requirement: R >= value, or R > value when strict.
struct Threshold {
  Rational value;
  bool strict = false;

  bool met_by(const Rational& r) const { return strict ? r > value : r >= value; }
};

struct Budget {
  double seconds = 60.0;
  std::uint64_t node_cap = 1'000'000;
};

struct PlannerOptions {
  /// Largest K the planner accepts; every node stores 2^K states.
  int cap = 20;
};

enum class Verdict { Plan, Infeasible, BudgetExhausted };

std::string_view to_string(Verdict verdict);

struct InfeasibilityCertificate {
  enum class Kind {
    /// Threshold exceeds robustness_upper_bound.
    UpperBound,
    /// Every reachable state vector with enough potential was expanded.
    ExhaustedSearch,
  };
  Kind kind = Kind::UpperBound;
  Rational bound;
};

struct Incumbent {
  Rational robustness;
  std::size_t length = 0;
};

struct SynthesisResult {
  Verdict verdict = Verdict::BudgetExhausted;
  ResolvedPlan plan;
  /// Re-verified with assess_exact when a plan is returned.
  Rational robustness;
  Rational upper_bound;
  std::optional<InfeasibilityCertificate> certificate;
  /// Strictly increasing robustness of the best prefixes seen during search.
  std::vector<Incumbent> incumbents;
  std::uint64_t expanded = 0;
  std::uint64_t generated = 0;
  double seconds = 0;
};

/// Searches for a plan whose robustness meets `threshold` by best-first
/// search over per-completion state vectors.
SynthesisResult synthesize(const GroundModel& model, const Threshold& threshold, const Budget& budget,
                           const PlannerOptions& options = {});

struct MaxResult {
  std::optional<ResolvedPlan> plan;
  Rational robustness;
  Rational upper_bound;
  /// True when no more robust plan exists (bound reached or search exhausted).
  bool optimal = false;
  int rounds = 0;
  std::vector<Rational> sweep;  // robustness after each successful round
  std::uint64_t expanded = 0;
  double seconds = 0;
};

/// Repeats synthesize with a threshold strictly above the incumbent until it
/// fails, the upper bound is met, or the budget runs out.
MaxResult synthesize_max(const GroundModel& model, const Budget& budget, const PlannerOptions& options = {});

inline constexpr int kInfiniteHeuristic = std::numeric_limits<int>::max();

/// FF relaxed-plan length from `state` under the delete relaxation of the
/// given completion. kInfiniteHeuristic if the goal is unreachable.
int relaxed_plan_length(const GroundModel& model, const State& state, const Completion& completion);

/// State vector of a search node over all 2^K completions.
struct SearchNode {
  SlicedState states;
  Rational achieved;   // mass of completions whose state satisfies the goal
  Rational potential;  // mass of completions where the goal is still relaxed-reachable
  std::vector<Word> goal_mask;
  std::vector<Word> potential_mask;
};

/// Evaluates the vector reached by `prefix` from the initial state.
SearchNode make_node(const GroundModel& model, const ResolvedPlan& prefix);

/// Relaxed-plan length for the most probable completion that has not yet
/// reached the goal but still can (ties to the lowest index). 0 when no
/// such completion remains; kInfiniteHeuristic when none can reach the goal.
int heuristic(const GroundModel& model, const SearchNode& node);

}  // namespace rkit
