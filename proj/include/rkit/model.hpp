#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rkit/rational.hpp"

namespace rkit {

/// Atom over a predicate. Arguments are either variables ("?b") or
/// constants ("b1"); all symbols are lower case.
struct Atom {
  std::string predicate;
  std::vector<std::string> args;

  bool operator==(const Atom&) const = default;
  auto operator<=>(const Atom&) const = default;
};

/// "(pick-up ?b ?r)"
std::string to_string(const Atom& atom);

inline bool is_variable(const std::string& symbol) { return !symbol.empty() && symbol.front() == '?'; }

/// A name with its declared type ("?b - ball", "room1 - room", "ball - object").
struct TypedName {
  std::string name;
  std::string type = "object";

  bool operator==(const TypedName&) const = default;
};

enum class AnnotationKind { Pre, Add, Del };

std::string_view to_string(AnnotationKind kind);

/// One conjunct of a `:when` restriction on a schema parameter.
struct ConstraintTerm {
  enum class Op { Eq, Neq, In };
  Op op = Op::Eq;
  std::string var;
  std::vector<std::string> constants;  // one entry for Eq/Neq

  bool operator==(const ConstraintTerm&) const = default;
};

/// Conjunction of parameter restrictions.
struct WhenConstraint {
  std::vector<ConstraintTerm> terms;

  bool operator==(const WhenConstraint&) const = default;
};

/// Canonical text form, e.g. "(and (= ?b b1) (not (= ?r room2)))".
std::string to_string(const WhenConstraint& constraint);

struct SchemaScope {
  bool operator==(const SchemaScope&) const = default;
};
struct WhenScope {
  WhenConstraint constraint;
  bool operator==(const WhenScope&) const = default;
};
struct DependsScope {
  std::vector<std::string> vars;
  bool operator==(const DependsScope&) const = default;
};

using AnnotationScope = std::variant<SchemaScope, WhenScope, DependsScope>;

/// A possible precondition, add or delete effect of a schema.
struct Annotation {
  Atom literal;
  AnnotationKind kind = AnnotationKind::Pre;
  Rational weight{1, 2};
  AnnotationScope scope = SchemaScope{};

  bool operator==(const Annotation&) const = default;
};

struct ActionSchema {
  std::string name;
  std::vector<TypedName> params;
  std::vector<Atom> pre;
  std::vector<Atom> add;
  std::vector<Atom> del;
  /// Possible preconditions and effects in declaration order.
  std::vector<Annotation> annotations;

  bool operator==(const ActionSchema&) const = default;

  std::vector<const Annotation*> annotations_of(AnnotationKind kind) const;
};

struct PredicateDecl {
  std::string name;
  std::vector<TypedName> params;

  bool operator==(const PredicateDecl&) const = default;
};

struct IncompleteDomain {
  std::string name;
  std::vector<std::string> requirements;
  /// Declared types with their parent ("object" for roots).
  std::vector<TypedName> types;
  std::vector<TypedName> constants;
  std::vector<PredicateDecl> predicates;
  std::vector<ActionSchema> actions;

  bool operator==(const IncompleteDomain&) const = default;

  const PredicateDecl* find_predicate(const std::string& name) const;
  const ActionSchema* find_action(const std::string& name) const;
  /// True if `type` equals `ancestor` or inherits from it.
  bool is_subtype(const std::string& type, const std::string& ancestor) const;
};

struct ProblemSpec {
  std::string name;
  std::string domain_name;
  std::vector<TypedName> objects;
  std::vector<Atom> init;
  std::vector<Atom> goal;
  std::optional<Rational> rho;

  bool operator==(const ProblemSpec&) const = default;
};

struct PlanStep {
  std::string action;
  std::vector<std::string> args;
  int line = 0;

  bool operator==(const PlanStep& o) const { return action == o.action && args == o.args; }
};

/// "(pick-up b1 room1)"
std::string to_string(const PlanStep& step);

struct Plan {
  std::vector<PlanStep> steps;

  bool operator==(const Plan&) const = default;
};

struct Diagnostic {
  enum class Severity { Error, Warning };
  Severity severity = Severity::Error;
  std::string code;
  std::string message;

  bool is_error() const { return severity == Severity::Error; }
};

/// Checks the structural invariants of a domain. Errors mean the domain
/// must not be used; warnings are lints (e.g. the same literal both a
/// possible add and a possible delete of one schema).
std::vector<Diagnostic> validate_domain(const IncompleteDomain& domain);

bool has_errors(const std::vector<Diagnostic>& diagnostics);

}  // namespace rkit
