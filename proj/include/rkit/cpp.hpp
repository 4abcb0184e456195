#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rkit/grounding.hpp"
#include "rkit/semantics.hpp"

// Conformant probabilistic planning target: actions with conditional,
// possibly stochastic effects executed over belief states. compile() turns
// an incomplete-domain problem into one, with every realization variable
// carried by a pair of static hidden fluents (v, not-v).

namespace rkit {

struct Outcome {
  Rational probability{1};
  std::vector<int> add, del;
};

struct ConditionalEffect {
  std::vector<int> condition;
  std::vector<Outcome> outcomes;
};

struct CppAction {
  std::string name;
  std::vector<int> pre;
  std::vector<ConditionalEffect> effects;
  /// Index of the ground action this was compiled from, -1 otherwise.
  int source = -1;
};

/// One support state. `tag` identifies the completion the state descends
/// from (its hidden fluents never change under compiled actions).
struct BeliefEntry {
  Bits state;
  Rational probability;
  std::uint64_t tag = 0;
};

struct Belief {
  std::vector<BeliefEntry> entries;

  Rational mass() const;
};

struct HiddenPair {
  int realized = 0;
  int unrealized = 0;
};

struct CppProblem {
  std::string domain_name;
  std::string problem_name;
  /// F' = F followed by F_new; names are PDDL atoms ("(at b1 room1)", "(pre-pick-up-light-b)").
  std::vector<std::string> fluents;
  std::size_t base_fluents = 0;
  /// Hidden fluent pair per realization variable, indexed by variable id.
  std::vector<HiddenPair> hidden;
  std::vector<Rational> hidden_weights;
  std::vector<CppAction> actions;
  std::vector<int> init;  // base fluents true in every initial state
  std::vector<int> goal;
  Rational rho{1};
  /// Objects and predicate arities, for export.
  std::vector<TypedName> objects;
  std::vector<std::pair<std::string, int>> predicate_arities;

  /// b_I: one support state per completion with probability Pr(D_i).
  Belief initial_belief(int cap = kDefaultEnumerationCap) const;
};

struct CompileOptions {
  int cap = kDefaultEnumerationCap;
  /// Maximum realization variables attached to one ground action.
  int per_action_cap = 12;
};

class CompileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InapplicableAction : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One compiled action per ground action with 2^{n_a} single-outcome
/// conditional effects, one per realization of its n_a variables.
CppProblem compile(const GroundModel& model, const Rational& rho, const CompileOptions& options = {});

/// Pushes every support state through its matching conditional effect
/// (identity if none matches). Throws InapplicableAction if Pre(a') fails
/// in some support state, or if two effects fire in one state.
Belief apply_cpp(const CppAction& action, const Belief& belief);

/// Sum of b(s) over s containing every goal fluent.
Rational goal_probability(const Belief& belief, const std::vector<int>& goal);

/// Beliefs b_0 = b_I, ..., b_n after each compiled step.
std::vector<Belief> execute_cpp(const CppProblem& problem, const ResolvedPlan& plan);

struct Theorem1Report {
  Rational lhs;  // R(pi) from completion enumeration
  Rational rhs;  // goal probability of the compiled plan
  bool equal = false;
  bool meets_threshold = false;  // lhs >= rho, which equals rhs >= rho when equal
};

/// Computes robustness and the compiled plan's goal probability along
/// independent code paths and compares them exactly.
Theorem1Report check_theorem1(const GroundModel& model, const ResolvedPlan& plan, const Rational& rho);

struct TrajectoryMismatch {
  std::uint64_t completion = 0;
  std::size_t step = 0;
  std::string detail;
};

/// For every completion, compares the base-fluent part of the compiled
/// execution with project() after each step. nullopt when all agree.
std::optional<TrajectoryMismatch> compare_trajectories(const GroundModel& model, const CppProblem& problem,
                                                       const ResolvedPlan& plan);

struct PpddlText {
  std::string domain;
  std::string problem;

  std::string combined() const { return domain + "\n" + problem; }
};

/// PPDDL export of a compiled problem: hidden fluents are initialized by
/// `(probabilistic w (v) 1-w (nv))`, compiled effects become `(when ...)`.
PpddlText serialize_ppddl(const CppProblem& problem);

}  // namespace rkit
