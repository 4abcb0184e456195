#pragma once

#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "rkit/bits.hpp"
#include "rkit/model.hpp"

namespace rkit {

/// Boolean variable deciding whether one annotation is realized. Ground
/// annotation instances share a variable iff they share the origin
/// (schema, literal template, kind) and the binding class.
struct RealizationVariable {
  int id = 0;
  std::string schema;
  Atom literal;  // lifted template
  AnnotationKind kind = AnnotationKind::Pre;
  Rational weight{1, 2};
  /// "" for schema scope, "when:<constraint>" for :when, "depends:<c1,c2>" for :depends.
  std::string binding_class;
  /// Canonical identity; variable ids follow the lexicographic order of keys.
  std::string key;
  /// Identifier usable as a PDDL predicate name.
  std::string symbol;
};

/// Ground proposition attached to a realization variable.
struct PossibleItem {
  int fluent = 0;
  int var = 0;

  bool operator==(const PossibleItem&) const = default;
};

struct GroundAction {
  std::string name;
  std::vector<std::string> args;
  int schema = 0;
  std::vector<int> pre, add, del;
  std::vector<PossibleItem> poss_pre, poss_add, poss_del;

  /// "(pick-up b1 room1)"
  std::string label() const;
  /// Distinct realization variables this action depends on, ascending.
  std::vector<int> vars() const;
};

struct GroundModel {
  std::string domain_name;
  std::string problem_name;
  std::vector<Atom> fluents;  // sorted by text
  std::vector<GroundAction> actions;
  std::vector<RealizationVariable> vars;
  std::vector<int> init;  // ascending fluent ids
  std::vector<int> goal;  // ascending fluent ids
  std::vector<TypedName> objects;
  std::vector<std::pair<std::string, int>> predicate_arities;
  std::vector<std::string> warnings;

  std::size_t num_fluents() const { return fluents.size(); }
  std::size_t num_vars() const { return vars.size(); }
  Bits initial_state() const;
  /// -1 if the atom is not a fluent of the model.
  int fluent_id(const Atom& atom) const;
  std::string fluent_name(int id) const { return to_string(fluents.at(static_cast<std::size_t>(id))); }

  std::unordered_map<std::string, int> fluent_index;
};

class GroundingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GroundOptions {
  /// Drop actions whose certain preconditions are unreachable even in the
  /// generous completion (every possible add realized, no possible
  /// precondition realized). Sound for every completion.
  bool prune_unreachable = false;
};

GroundModel ground(const IncompleteDomain& domain, const ProblemSpec& problem, const GroundOptions& options = {});

/// Plan with every step bound to a ground action index.
struct ResolvedPlan {
  std::vector<int> steps;

  bool operator==(const ResolvedPlan&) const = default;
};

class ResolutionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Binds each step to a ground action. Unknown names, arities or argument
/// tuples raise ResolutionError naming the nearest candidates.
ResolvedPlan resolve_plan(const Plan& plan, const GroundModel& model);

Plan to_plan(const ResolvedPlan& plan, const GroundModel& model);

}  // namespace rkit
