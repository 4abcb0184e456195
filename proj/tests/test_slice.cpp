#include <doctest.h>

#include <random>

#include "rkit/semantics.hpp"
#include "rkit/slice.hpp"
#include "support.hpp"

using namespace rkit;

namespace {

bool lane(std::span<const Word> mask, std::size_t i) { return (mask[i / 64] >> (i % 64)) & 1u; }

/// Sliced execution lane by lane against project() for every block size.
void check_model(const GroundModel& m, const ResolvedPlan& plan, const simd::Kernels& k) {
  const State init = m.initial_state();
  for (int block_vars : {0, 1, 3, 6, 7, 16}) {
    CompletionMeasure measure(m, block_vars);
    Rational total = 0, mass = 0;
    for (std::uint64_t b = 0; b < block_count(m.num_vars(), block_vars); ++b) {
      CompletionBlock block(m.num_vars(), block_vars, b);
      SlicedState s = sliced_initial(m, block);
      SliceScratch scratch;
      for (int step : plan.steps) apply_sliced(m.actions[static_cast<std::size_t>(step)], s, block, scratch, k);
      auto goals = goal_mask(m, s, block, k);
      auto reach = relaxed_goal_mask(m, sliced_initial(m, block), block, k);
      Rational expected = 0;
      for (std::size_t i = 0; i < block.count(); ++i) {
        auto c = completion_from_index(m.num_vars(), block.first() + i);
        State end = project(m, plan, init, c).back();
        for (std::size_t f = 0; f < m.num_fluents(); ++f) CHECK(lane(s.fluent(static_cast<int>(f)), i) == end.test(f));
        CHECK(lane(goals, i) == satisfies(end, m.goal));
        if (satisfies(end, m.goal)) {
          expected += completion_probability(m, c);
          CHECK(lane(reach, i));
        }
      }
      CHECK(measure.measure(goals, block) == expected);
      total += expected;
      std::vector<Word> all(block.valid().begin(), block.valid().end());
      mass += measure.measure(all, block);
    }
    CHECK(mass == 1);
  }
}

}  // namespace

TEST_SUITE("slice") {
  TEST_CASE("block layout") {
    CompletionBlock b(10, 7, 5);
    CHECK(b.lanes() == 128);
    CHECK(b.words() == 2);
    CHECK(b.first() == 5u << 7);
    CHECK(block_count(10, 7) == 8);
    CompletionBlock small(3, 16, 0);
    CHECK(small.count() == 8);
    CHECK(small.valid()[0] == 0xFF);
    // variable 8 = bit 1 of the block index 5 -> realized across the block
    CHECK(b.realized(8)[0] == 0);
    CHECK(b.realized(7)[1] == ~Word{0});
    CHECK(b.realized(0)[0] == 0xAAAAAAAAAAAAAAAAull);
  }

  TEST_CASE("sliced execution equals per-completion projection on fixtures") {
    for (auto [stem, plan] : {std::pair{"micro", "micro.plan"}, {"micro-w09", "micro-w09.plan"}, {"gripper", "gripper.plan"},
                              {"logistics-m2", "logistics-m2-two-loaders.plan"}}) {
      CAPTURE(stem);
      auto l = test::load_fixture(stem, plan);
      check_model(l.model, l.plan, simd::active_kernels());
      check_model(l.model, l.plan, simd::scalar_kernels());
    }
  }

  TEST_CASE("sliced execution equals projection on random models") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 120; ++i) {
      test::RandomSpec spec;
      spec.max_vars = 9;
      spec.lifted = i % 2;
      auto l = test::random_loaded(rng, spec);
      check_model(l.model, l.plan, simd::active_kernels());
    }
  }
}
