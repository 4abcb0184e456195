#include <sstream>

#include "rkit/cpp.hpp"

namespace rkit {

namespace {

std::string conjunction(const std::vector<std::string>& parts) {
  if (parts.empty()) return "(and)";
  if (parts.size() == 1) return parts.front();
  std::string out = "(and";
  for (const auto& p : parts) out += " " + p;
  return out + ")";
}

std::string effect_body(const CppProblem& problem, const Outcome& o) {
  std::vector<std::string> parts;
  for (int f : o.add) parts.push_back(problem.fluents[static_cast<std::size_t>(f)]);
  for (int f : o.del) parts.push_back("(not " + problem.fluents[static_cast<std::size_t>(f)] + ")");
  return conjunction(parts);
}

std::vector<std::string> names(const CppProblem& problem, const std::vector<int>& ids) {
  std::vector<std::string> out;
  for (int f : ids) out.push_back(problem.fluents[static_cast<std::size_t>(f)]);
  return out;
}

}  // namespace

PpddlText serialize_ppddl(const CppProblem& problem) {
  const std::string domain_name = problem.domain_name + "-cpp";
  std::ostringstream d;
  d << "(define (domain " << domain_name << ")\n";
  d << "  (:requirements :strips :conditional-effects :probabilistic-effects)\n";
  if (!problem.objects.empty()) {
    d << "  (:constants";
    for (const auto& o : problem.objects) d << " " << o.name;
    d << ")\n";
  }
  d << "  (:predicates";
  for (const auto& [name, arity] : problem.predicate_arities) {
    d << "\n    (" << name;
    for (int i = 0; i < arity; ++i) d << " ?x" << i;
    d << ")";
  }
  for (const auto& h : problem.hidden) {
    d << "\n    " << problem.fluents[static_cast<std::size_t>(h.realized)];
    d << "\n    " << problem.fluents[static_cast<std::size_t>(h.unrealized)];
  }
  d << ")\n";
  for (const auto& a : problem.actions) {
    d << "  (:action " << a.name << "\n";
    d << "    :parameters ()\n";
    if (!a.pre.empty()) d << "    :precondition " << conjunction(names(problem, a.pre)) << "\n";
    d << "    :effect (and";
    for (const auto& e : a.effects) {
      std::string body;
      if (e.outcomes.size() == 1 && e.outcomes.front().probability == 1) {
        body = effect_body(problem, e.outcomes.front());
      } else {
        body = "(probabilistic";
        for (const auto& o : e.outcomes) body += " " + to_compact_string(o.probability) + " " + effect_body(problem, o);
        body += ")";
      }
      d << "\n      (when " << conjunction(names(problem, e.condition)) << "\n            " << body << ")";
    }
    d << "))\n";
  }
  d << ")\n";

  std::ostringstream p;
  p << "(define (problem " << problem.problem_name << "-cpp)\n";
  p << "  (:domain " << domain_name << ")\n";
  p << "  (:init";
  for (int f : problem.init) p << "\n    " << problem.fluents[static_cast<std::size_t>(f)];
  for (std::size_t v = 0; v < problem.hidden.size(); ++v) {
    const Rational& w = problem.hidden_weights[v];
    p << "\n    (probabilistic " << to_compact_string(w) << " "
      << problem.fluents[static_cast<std::size_t>(problem.hidden[v].realized)] << " "
      << to_compact_string(Rational(1 - w)) << " "
      << problem.fluents[static_cast<std::size_t>(problem.hidden[v].unrealized)] << ")";
  }
  p << ")\n";
  p << "  (:goal " << conjunction(names(problem, problem.goal)) << ")\n";
  p << "  (:goal-probability " << to_compact_string(problem.rho) << "))\n";
  return {d.str(), p.str()};
}

}  // namespace rkit
