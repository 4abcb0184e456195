#include <doctest.h>

#include <random>

#include "rkit/parser.hpp"
#include "support.hpp"

using namespace rkit;
using rkit::test::fixture_path;
using rkit::test::read_text;

namespace {

ParseError parse_failure(const std::string& text) {
  try {
    parse_domain(text, "t.ipddl");
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a parse error");
  throw;
}

}  // namespace

TEST_SUITE("parser") {
  TEST_CASE("gripper fixture") {
    auto d = parse_domain(read_text(fixture_path("gripper.ipddl")));
    CHECK(d.name == "gripper");
    const auto* pick = d.find_action("pick-up");
    REQUIRE(pick);
    REQUIRE(pick->annotations.size() == 2);
    CHECK(pick->annotations[0].kind == AnnotationKind::Pre);
    CHECK(to_string(pick->annotations[0].literal) == "(light ?b)");
    CHECK(pick->annotations[0].weight == Rational(1, 2));
    CHECK(pick->annotations[1].kind == AnnotationKind::Add);
    CHECK(to_string(pick->annotations[1].literal) == "(dirty ?b)");
    CHECK(pick->del.size() == 2);
  }

  TEST_CASE("weights, scopes and possible deletes") {
    auto d = parse_domain(R"(
      (define (domain w) (:types ball) (:constants b1 b2 - ball)
        (:predicates (p ?b - ball) (q))
        (:action a :parameters (?b - ball)
          :poss-precondition (and (:weight 0.9 (p ?b)) (:when (= ?b b1) (q)))
          :effect (and)
          :poss-effect (and (:depends (?b) (:weight 1/4 (not (q)))) (:when (in ?b (b1 b2)) (p ?b)))))
    )");
    const auto& anns = d.actions[0].annotations;
    REQUIRE(anns.size() == 4);
    CHECK(anns[0].weight == Rational(9, 10));
    CHECK(std::holds_alternative<WhenScope>(anns[1].scope));
    CHECK(anns[2].kind == AnnotationKind::Del);
    CHECK(anns[2].weight == Rational(1, 4));
    CHECK(std::get<DependsScope>(anns[2].scope).vars == std::vector<std::string>{"?b"});
    CHECK(std::get<WhenScope>(anns[3].scope).constraint.terms[0].op == ConstraintTerm::Op::In);
  }

  TEST_CASE("syntax errors carry a location") {
    auto e = parse_failure("(define (domain x)\n  (:predicates (p)\n");
    CHECK(e.kind() == ParseError::Kind::Syntax);
    CHECK(e.span().file == "t.ipddl");
    auto e2 = parse_failure("(define (domain x)\n (:predicates (p))\n (:action a :parameters () :precondition (p) :bogus (p)))");
    CHECK(e2.kind() == ParseError::Kind::Syntax);
    CHECK(e2.span().line == 3);
  }

  TEST_CASE("unknown predicates and correlated annotations are semantic errors") {
    auto e = parse_failure("(define (domain x) (:predicates (p)) (:action a :parameters () :precondition (r) :effect (p)))");
    CHECK(e.kind() == ParseError::Kind::Semantic);
    auto e2 = parse_failure(
        "(define (domain x) (:predicates (p)) (:action a :parameters () :effect (p) :poss-effect (:tandem b (p))))");
    CHECK(e2.kind() == ParseError::Kind::Semantic);
  }

  TEST_CASE("problem and plan") {
    auto d = parse_domain(read_text(fixture_path("gripper.ipddl")));
    auto p = parse_problem(read_text(fixture_path("gripper.ipprob")), d);
    CHECK(p.objects.size() == 3);
    CHECK(p.init.size() == 3);
    CHECK(p.goal.size() == 1);
    CHECK_FALSE(p.rho);
    auto plan = parse_plan(read_text(fixture_path("gripper.plan")));
    REQUIRE(plan.steps.size() == 3);
    CHECK(plan.steps[1].action == "move");
    CHECK(plan.steps[1].line == 2);
    CHECK_THROWS_AS(parse_plan("(pick-up ?b)"), ParseError);
    auto with_rho = parse_problem("(define (problem q) (:domain gripper) (:init) (:goal (free)) (:rho 0.8))", d);
    CHECK(*with_rho.rho == Rational(4, 5));
    CHECK_THROWS_AS(parse_problem("(define (problem q) (:domain gripper) (:init) (:goal (free)) (:rho 0))", d),
                    ParseError);
  }

  TEST_CASE("serialization round-trips every fixture") {
    for (const char* stem : {"micro", "micro-w09", "gripper", "logistics-m1", "logistics-m2", "logistics-m3",
                             "injection/blocks", "injection/rooms"}) {
      CAPTURE(stem);
      auto d = parse_domain(read_text(fixture_path(std::string(stem) + ".ipddl")));
      auto p = parse_problem(read_text(fixture_path(std::string(stem) + ".ipprob")), d);
      auto d2 = parse_domain(serialize_domain(d));
      CHECK(d2 == d);
      CHECK(serialize_domain(d2) == serialize_domain(d));
      CHECK(parse_problem(serialize_problem(p), d2) == p);
    }
  }

  TEST_CASE("round-trip property on generated domains") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
      test::RandomSpec spec;
      spec.lifted = i % 2;
      auto t = test::random_instance(rng, spec);
      auto d = parse_domain(t.domain);
      CHECK(parse_domain(serialize_domain(d)) == d);
      auto plan = parse_plan(t.plan);
      CHECK(parse_plan(serialize_plan(plan)) == plan);
    }
  }

  TEST_CASE("mutated input never escapes as anything but ParseError") {
    const std::string base = read_text(fixture_path("gripper.ipddl"));
    const std::string alphabet = "()?-; \n:abcpw0.9";
    std::mt19937_64 rng(5);
    int accepted = 0;
    for (int i = 0; i < 2000; ++i) {
      std::string text = base;
      const int edits = 1 + static_cast<int>(rng() % 4);
      for (int k = 0; k < edits; ++k) {
        std::size_t pos = rng() % text.size();
        switch (rng() % 3) {
          case 0:
            text.erase(pos, 1);
            break;
          case 1:
            text.insert(pos, 1, alphabet[rng() % alphabet.size()]);
            break;
          default:
            text[pos] = alphabet[rng() % alphabet.size()];
        }
      }
      try {
        parse_domain(text);
        ++accepted;
      } catch (const ParseError&) {
      }
    }
    CHECK(accepted < 2000);
  }

  TEST_CASE("deep nesting is rejected rather than overflowing the stack") {
    std::string text(100000, '(');
    CHECK_THROWS_AS(read_sexprs(text), ParseError);
  }
}
