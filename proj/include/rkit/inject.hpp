#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "rkit/model.hpp"

namespace rkit {

class InjectionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Injection {
  IncompleteDomain domain;
  /// Fresh 0-ary predicates, in declaration order; all belong in the initial state.
  std::vector<std::string> propositions;
};

/// Adds M fresh 0-ary propositions and scatters them over the action
/// schemas as possible preconditions, possible add/delete effects or certain
/// add/delete effects, with weights in {0.1, ..., 0.9}. Certain
/// preconditions are never added, so a plan valid in the original domain
/// stays valid. Deterministic in (domain, M, seed).
Injection inject_incompleteness(const IncompleteDomain& domain, int m, std::uint64_t seed);

/// Copy of `problem` with every injected proposition added to the initial state.
ProblemSpec with_injected_init(const ProblemSpec& problem, const std::vector<std::string>& propositions);

}  // namespace rkit
