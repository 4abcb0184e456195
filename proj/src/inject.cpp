#include "rkit/inject.hpp"

#include <algorithm>
#include <random>

namespace rkit {

namespace {

enum class Role { PossPre, PossAdd, PossDel, Add, Del, None };

std::string fresh_name(const IncompleteDomain& domain, int i) {
  std::string base = "inj-p" + std::to_string(i);
  std::string name = base;
  for (int k = 2; domain.find_predicate(name); ++k) name = base + "-" + std::to_string(k);
  return name;
}

}  // namespace

Injection inject_incompleteness(const IncompleteDomain& domain, int m, std::uint64_t seed) {
  if (m < 1) throw InjectionError("M must be at least 1, got " + std::to_string(m));
  Injection out{domain, {}};
  for (int i = 1; i <= m; ++i) {
    std::string name = fresh_name(out.domain, i);
    out.domain.predicates.push_back({name, {}});
    out.propositions.push_back(name);
  }

  std::mt19937_64 rng(seed);
  for (auto& schema : out.domain.actions) {
    for (const auto& name : out.propositions) {
      const Atom atom{name, {}};
      const auto role = static_cast<Role>(rng() % 6);
      const Rational weight(static_cast<long>(1 + rng() % 9), 10);
      auto annotate = [&](AnnotationKind kind) { schema.annotations.push_back({atom, kind, weight, SchemaScope{}}); };
      switch (role) {
        case Role::PossPre:
          annotate(AnnotationKind::Pre);
          break;
        case Role::PossAdd:
          annotate(AnnotationKind::Add);
          break;
        case Role::PossDel:
          annotate(AnnotationKind::Del);
          break;
        case Role::Add:
          schema.add.push_back(atom);
          break;
        case Role::Del:
          schema.del.push_back(atom);
          break;
        case Role::None:
          break;
      }
    }
    // Keep preconditions ahead of effects, as the parser produces them.
    std::stable_partition(schema.annotations.begin(), schema.annotations.end(),
                          [](const Annotation& a) { return a.kind == AnnotationKind::Pre; });
  }
  return out;
}

ProblemSpec with_injected_init(const ProblemSpec& problem, const std::vector<std::string>& propositions) {
  ProblemSpec out = problem;
  for (const auto& name : propositions) out.init.push_back({name, {}});
  return out;
}

}  // namespace rkit
