#pragma once

#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "rkit/grounding.hpp"
#include "rkit/parser.hpp"

#ifndef RKIT_FIXTURE_DIR
#error "RKIT_FIXTURE_DIR must be defined"
#endif

namespace rkit::test {

inline std::string fixture_path(const std::string& name) { return std::string(RKIT_FIXTURE_DIR) + "/" + name; }

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct Loaded {
  IncompleteDomain domain;
  ProblemSpec problem;
  GroundModel model;
  ResolvedPlan plan;
};

inline Loaded load_texts(const std::string& domain, const std::string& problem, const std::string& plan = "",
                         GroundOptions options = {}) {
  Loaded l;
  l.domain = parse_domain(domain);
  l.problem = parse_problem(problem, l.domain);
  l.model = ground(l.domain, l.problem, options);
  if (!plan.empty()) l.plan = resolve_plan(parse_plan(plan), l.model);
  return l;
}

/// Loads <stem>.ipddl, <stem>.ipprob and, if given, a plan file from fixtures/.
inline Loaded load_fixture(const std::string& stem, const std::string& plan = "", GroundOptions options = {}) {
  return load_texts(read_text(fixture_path(stem + ".ipddl")), read_text(fixture_path(stem + ".ipprob")),
                    plan.empty() ? "" : read_text(fixture_path(plan)), options);
}

struct RandomSpec {
  int max_vars = 6;
  int max_plan = 5;
  int max_props = 5;
  int max_actions = 4;
  /// Unary predicates over two constants with one-parameter schemas, so
  /// that schema-level variables are shared between ground actions.
  bool lifted = false;
};

struct RandomText {
  std::string domain, problem, plan;
};

/// Random small incomplete domain, problem and plan as source text.
inline RandomText random_instance(std::mt19937_64& rng, const RandomSpec& spec) {
  auto pick = [&](int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); };
  auto chance = [&](int percent) { return pick(100) < percent; };
  static const char* weights[] = {"0.25", "0.5", "0.75", "0.9"};

  const int props = 2 + pick(spec.max_props - 1);
  const int actions = 1 + pick(spec.max_actions);
  const char* args[] = {"?x", "o1", "o2"};
  auto literal = [&](int p, int arg) {
    return spec.lifted ? "(p" + std::to_string(p) + " " + args[arg] + ")" : "(p" + std::to_string(p) + ")";
  };
  const int arg_choices = spec.lifted ? 3 : 1;

  std::ostringstream d;
  d << "(define (domain rnd)\n  (:requirements :strips)\n";
  if (spec.lifted) d << "  (:constants o1 o2)\n";
  d << "  (:predicates";
  for (int p = 0; p < props; ++p) d << (spec.lifted ? " (p" + std::to_string(p) + " ?x)" : " (p" + std::to_string(p) + ")");
  d << ")\n";
  int vars_left = spec.max_vars;
  for (int a = 0; a < actions; ++a) {
    std::vector<std::string> pre, eff, poss_pre, poss_eff;
    std::set<std::string> certain_pre, certain_add, certain_del, used;
    for (int p = 0; p < props; ++p)
      for (int g = 0; g < arg_choices; ++g) {
        std::string lit = literal(p, g);
        if (chance(spec.lifted ? 12 : 30)) {
          pre.push_back(lit);
          certain_pre.insert(lit);
        }
        if (chance(spec.lifted ? 12 : 30)) {
          eff.push_back(lit);
          certain_add.insert(lit);
        } else if (chance(spec.lifted ? 8 : 20)) {
          eff.push_back("(not " + lit + ")");
          certain_del.insert(lit);
        }
      }
    const int annotations = vars_left > 0 ? pick(std::min(vars_left, 3) + 1) : 0;
    for (int k = 0; k < annotations; ++k) {
      const int kind = pick(3);
      std::string lit = literal(pick(props), pick(arg_choices));
      const auto& certain = kind == 0 ? certain_pre : kind == 1 ? certain_add : certain_del;
      std::string tag = std::to_string(kind) + lit;
      if (certain.contains(lit) || !used.insert(tag).second) continue;
      std::string body = kind == 2 ? "(not " + lit + ")" : lit;
      if (!chance(25)) body = std::string("(:weight ") + weights[pick(4)] + " " + body + ")";
      (kind == 0 ? poss_pre : poss_eff).push_back(body);
      --vars_left;
    }
    auto conj = [](const std::vector<std::string>& v) {
      std::string s = "(and";
      for (const auto& x : v) s += " " + x;
      return s + ")";
    };
    d << "  (:action a" << a << "\n    :parameters (" << (spec.lifted ? "?x" : "") << ")\n";
    d << "    :precondition " << conj(pre) << "\n";
    if (!poss_pre.empty()) d << "    :poss-precondition " << conj(poss_pre) << "\n";
    d << "    :effect " << conj(eff);
    if (!poss_eff.empty()) d << "\n    :poss-effect " << conj(poss_eff);
    d << ")\n";
  }
  d << ")\n";

  auto ground_literal = [&](int p) {
    return spec.lifted ? "(p" + std::to_string(p) + (pick(2) ? " o1)" : " o2)") : "(p" + std::to_string(p) + ")";
  };
  std::ostringstream pr;
  pr << "(define (problem rnd-p)\n  (:domain rnd)\n  (:init";
  std::set<std::string> init;
  for (int i = 0; i < props; ++i)
    if (chance(40)) init.insert(ground_literal(i));
  for (const auto& s : init) pr << " " << s;
  pr << ")\n  (:goal (and";
  std::set<std::string> goal;
  const int goals = 1 + pick(2);
  for (int i = 0; i < goals; ++i) goal.insert(ground_literal(pick(props)));
  for (const auto& s : goal) pr << " " << s;
  pr << ")))\n";

  std::ostringstream pl;
  const int length = pick(spec.max_plan + 1);
  for (int i = 0; i < length; ++i) {
    pl << "(a" << pick(actions);
    if (spec.lifted) pl << (pick(2) ? " o1" : " o2");
    pl << ")\n";
  }
  return {d.str(), pr.str(), pl.str()};
}

inline Loaded random_loaded(std::mt19937_64& rng, const RandomSpec& spec) {
  RandomText t = random_instance(rng, spec);
  return load_texts(t.domain, t.problem, t.plan);
}

}  // namespace rkit::test
