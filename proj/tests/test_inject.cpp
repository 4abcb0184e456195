#include <doctest.h>

#include "rkit/inject.hpp"
#include "rkit/robustness.hpp"
#include "support.hpp"

using namespace rkit;

TEST_SUITE("inject") {
  TEST_CASE("M must be positive") {
    auto d = test::load_fixture("injection/blocks").domain;
    CHECK_THROWS_AS(inject_incompleteness(d, 0, 1), InjectionError);
    CHECK_THROWS_AS(inject_incompleteness(d, -3, 1), InjectionError);
  }

  TEST_CASE("output is deterministic in the seed") {
    auto d = test::load_fixture("injection/rooms").domain;
    CHECK(serialize_domain(inject_incompleteness(d, 3, 9).domain) ==
          serialize_domain(inject_incompleteness(d, 3, 9).domain));
    CHECK(serialize_domain(inject_incompleteness(d, 3, 9).domain) !=
          serialize_domain(inject_incompleteness(d, 3, 10).domain));
  }

  TEST_CASE("original plans stay valid after injection") {
    for (const char* stem : {"injection/blocks", "injection/rooms"}) {
      auto l = test::load_fixture(stem, std::string(stem) + ".plan");
      REQUIRE(assess_exact(l.model, l.plan).value == 1);
      for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        for (int m : {1, 2, 4}) {
          CAPTURE(seed);
          CAPTURE(m);
          auto inj = inject_incompleteness(l.domain, m, seed);
          CHECK(inj.propositions.size() == static_cast<std::size_t>(m));
          const std::string text = serialize_domain(inj.domain);
          auto reparsed = parse_domain(text);
          CHECK_FALSE(has_errors(validate_domain(reparsed)));
          auto problem = with_injected_init(l.problem, inj.propositions);
          auto model = ground(reparsed, parse_problem(serialize_problem(problem), reparsed));
          auto plan = resolve_plan(to_plan(l.plan, l.model), model);
          CHECK(assess_exact(model, plan).value > 0);
          for (const auto& schema : inj.domain.actions)
            for (const auto& p : schema.pre) CHECK(p.predicate.rfind("inj-", 0) != 0);
        }
      }
    }
  }

  TEST_CASE("fresh names avoid existing predicates") {
    auto d = parse_domain("(define (domain c) (:predicates (inj-p1)) (:action a :parameters () :effect (inj-p1)))");
    auto inj = inject_incompleteness(d, 1, 0);
    CHECK(inj.propositions[0] != "inj-p1");
    CHECK(inj.domain.find_predicate(inj.propositions[0]));
  }
}
