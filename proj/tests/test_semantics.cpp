#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "rkit/semantics.hpp"
#include "support.hpp"

using namespace rkit;

namespace {

State named(const GroundModel& m, std::initializer_list<const char*> names) {
  State s(m.num_fluents());
  for (const char* n : names) s.set(static_cast<std::size_t>(m.fluent_index.at(n)));
  return s;
}

int var_of(const GroundModel& m, const std::string& symbol) {
  for (const auto& v : m.vars)
    if (v.symbol == symbol) return v.id;
  FAIL("no variable " << symbol);
  return -1;
}

Completion with(const GroundModel& m, std::initializer_list<const char*> realized) {
  Completion c{Bits(m.num_vars())};
  for (const char* s : realized) c.values.set(static_cast<std::size_t>(var_of(m, s)));
  return c;
}

}  // namespace

TEST_SUITE("semantics") {
  TEST_CASE("effective action of micro-domain a1") {
    auto m = test::load_fixture("micro").model;
    const auto& a1 = m.actions[0];
    REQUIRE(a1.label() == "(a1)");
    auto eff = effective_action(a1, with(m, {}));
    CHECK(eff.pre.empty());
    CHECK(eff.add == std::vector<int>{m.fluent_index.at("(p2)"), m.fluent_index.at("(p3)")});
    CHECK(eff.del.empty());
    auto eff2 = effective_action(a1, with(m, {"pre-a1-p1"}));
    CHECK(eff2.pre == std::vector<int>{m.fluent_index.at("(p1)")});
  }

  TEST_CASE("effective pick-up with both variables realized") {
    auto m = test::load_fixture("gripper").model;
    auto c = with(m, {"pre-pick-up-light-b", "add-pick-up-dirty-b"});
    for (const auto& a : m.actions) {
      if (a.name != "pick-up") continue;
      auto eff = effective_action(a, c);
      CHECK(eff.pre.size() == 4);
      CHECK(eff.add.size() == 2);
      auto core = effective_action(a, with(m, {}));
      CHECK(core.pre == a.pre);
      CHECK(core.add == a.add);
      CHECK(core.del == a.del);
    }
  }

  TEST_CASE("unmet preconditions leave the state unchanged") {
    auto m = test::load_fixture("micro").model;
    State s = named(m, {"(p2)"});
    CHECK(apply(m.actions[0], s, with(m, {"pre-a1-p1"})) == s);
    CHECK(apply(m.actions[0], s, with(m, {})) == named(m, {"(p2)", "(p3)"}));
    State full = named(m, {"(p2)", "(p3)"});
    CHECK(apply(m.actions[0], full, with(m, {})) == full);
  }

  TEST_CASE("projection has one state per step plus the initial state") {
    auto l = test::load_fixture("gripper", "gripper.plan");
    auto states = project(l.model, l.plan, l.model.initial_state(), with(l.model, {}));
    CHECK(states.size() == 4);
    CHECK(satisfies(states.back(), l.model.goal));
    auto blocked = project(l.model, l.plan, l.model.initial_state(), with(l.model, {"pre-pick-up-light-b"}));
    CHECK_FALSE(satisfies(blocked.back(), l.model.goal));
    CHECK(blocked[1] == blocked[0]);
  }

  TEST_CASE("completion probabilities sum to one exactly") {
    for (const char* stem : {"micro", "micro-w09", "gripper", "logistics-m3"}) {
      auto m = test::load_fixture(stem).model;
      Rational total = 0;
      std::uint64_t n = 0;
      for (const auto& item : enumerate_completions(m)) {
        CHECK(item.probability == completion_probability(m, item.completion));
        CHECK(item.completion == completion_from_index(m.num_vars(), item.index));
        total += item.probability;
        ++n;
      }
      CHECK(total == 1);
      CHECK(n == (std::uint64_t{1} << m.num_vars()));
    }
  }

  TEST_CASE("enumeration cap") {
    auto m = test::load_fixture("micro").model;
    CHECK_THROWS_AS(enumerate_completions(m, 2), EnumerationCapExceeded);
  }

  TEST_CASE("apply agrees with the named-set oracle on random states") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 300; ++i) {
      test::RandomSpec spec;
      spec.lifted = i % 2;
      auto m = test::random_loaded(rng, spec).model;
      for (int trial = 0; trial < 10; ++trial) {
        State s(m.num_fluents());
        oracle::NamedState named_s;
        for (std::size_t f = 0; f < m.num_fluents(); ++f)
          if (rng() & 1u) {
            s.set(f);
            named_s.insert(m.fluent_name(static_cast<int>(f)));
          }
        const std::uint64_t c = m.num_vars() ? rng() % (std::uint64_t{1} << m.num_vars()) : 0;
        const auto comp = completion_from_index(m.num_vars(), c);
        for (const auto& a : m.actions) {
          State next = apply(a, s, comp);
          CHECK(next.size() == m.num_fluents());
          oracle::NamedState expect = oracle::step(m, a, named_s, c);
          oracle::NamedState got;
          for (int f : next.ones()) got.insert(m.fluent_name(f));
          CHECK(got == expect);
          auto eff = effective_action(a, comp);
          bool enabled = true;
          for (int p : eff.pre) enabled = enabled && s.test(static_cast<std::size_t>(p));
          if (!enabled) CHECK(next == s);
        }
      }
    }
  }
}
