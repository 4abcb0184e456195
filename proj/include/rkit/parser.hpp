#pragma once

#include <string>
#include <string_view>

#include "rkit/model.hpp"
#include "rkit/sexpr.hpp"

namespace rkit {

/// Reads an `.ipddl` domain: a STRIPS/typing PDDL domain whose actions may
/// carry `:poss-precondition` and `:poss-effect` lists. Throws ParseError.
IncompleteDomain parse_domain(std::string_view text, const std::string& file = "<domain>");

/// Reads an `.ipprob` problem against its domain (predicates, constants
/// and types are resolved there). Throws ParseError.
ProblemSpec parse_problem(std::string_view text, const IncompleteDomain& domain,
                          const std::string& file = "<problem>");

/// Reads a `.plan` file: one `(action arg...)` per step. Action names are
/// resolved later against the ground model.
Plan parse_plan(std::string_view text, const std::string& file = "<plan>");

std::string serialize_domain(const IncompleteDomain& domain);
std::string serialize_problem(const ProblemSpec& problem);
std::string serialize_plan(const Plan& plan);

}  // namespace rkit
