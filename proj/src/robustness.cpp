#include "rkit/robustness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <thread>

#include "rkit/slice.hpp"

namespace rkit {

namespace {

constexpr int kBlockVars = 16;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

/// floor(w * 2^64), for 0 < w < 1.
std::uint64_t threshold64(const Rational& w) {
  mpz_class scaled = w.get_num();
  scaled <<= 64;
  scaled /= w.get_den();
  if (scaled >= (mpz_class(1) << 64)) return ~std::uint64_t{0};
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, scaled.get_mpz_t());
  return out;
}

struct BlockResult {
  mpz_class numerator;
  std::uint64_t successes = 0;
};

BlockResult run_block(const GroundModel& model, const ResolvedPlan& plan, const CompletionMeasure& measure,
                      std::uint64_t index) {
  CompletionBlock block(model.num_vars(), kBlockVars, index);
  SlicedState state = sliced_initial(model, block);
  SliceScratch scratch;
  for (int step : plan.steps) apply_sliced(model.actions[static_cast<std::size_t>(step)], state, block, scratch);
  auto mask = goal_mask(model, state, block);
  const auto& k = simd::active_kernels();
  return {measure.numerator(mask, block), k.popcount(mask.data(), mask.size())};
}

}  // namespace

unsigned worker_count(unsigned requested) {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  unsigned n = requested ? requested : hw;
  if (const char* env = std::getenv("RKIT_THREADS")) {
    char* end = nullptr;
    long cap = std::strtol(env, &end, 10);
    if (end != env && cap > 0) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
  }
  return std::max(1u, n);
}

RobustnessReport assess_exact(const GroundModel& model, const ResolvedPlan& plan, const ExactOptions& options) {
  if (model.num_vars() > static_cast<std::size_t>(options.cap) || model.num_vars() >= 63)
    throw EnumerationCapExceeded(model.num_vars(), options.cap);

  CompletionMeasure measure(model, kBlockVars);
  const std::uint64_t blocks = block_count(model.num_vars(), kBlockVars);
  std::vector<BlockResult> results(blocks);

  unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(worker_count(options.threads), blocks));
  if (workers <= 1) {
    for (std::uint64_t b = 0; b < blocks; ++b) results[b] = run_block(model, plan, measure, b);
  } else {
    // Static interleaved partition; every block writes only its own slot.
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (std::uint64_t b = w; b < blocks; b += workers) results[b] = run_block(model, plan, measure, b);
      });
    for (auto& t : pool) t.join();
  }

  RobustnessReport report;
  report.mode = RobustnessReport::Mode::Exact;
  report.total = std::uint64_t{1} << model.num_vars();
  mpz_class numerator = 0;
  for (const auto& r : results) {
    numerator += r.numerator;
    report.successes += r.successes;
  }
  report.value = Rational(numerator, measure.denominator());
  report.value.canonicalize();

  if (options.ledger && model.num_vars() <= static_cast<std::size_t>(kLedgerCap)) {
    State init = model.initial_state();
    for (const auto& item : enumerate_completions(model, options.cap)) {
      LedgerEntry entry{item.index, item.probability, false, -1};
      State s = init;
      for (std::size_t k = 0; k < plan.steps.size(); ++k) {
        State next = apply(model.actions[static_cast<std::size_t>(plan.steps[k])], s, item.completion);
        const auto eff = effective_action(model.actions[static_cast<std::size_t>(plan.steps[k])], item.completion);
        bool enabled = std::all_of(eff.pre.begin(), eff.pre.end(), [&](int f) { return s.test(static_cast<std::size_t>(f)); });
        if (!enabled && entry.first_failed_step < 0) entry.first_failed_step = static_cast<int>(k);
        s = std::move(next);
      }
      entry.success = satisfies(s, model.goal);
      report.ledger.push_back(std::move(entry));
    }
  }
  return report;
}

std::uint64_t hoeffding_samples(double epsilon, double delta) {
  if (!(epsilon > 0 && epsilon < 1 && delta > 0 && delta < 1))
    throw std::invalid_argument("epsilon and delta must lie in (0,1)");
  return static_cast<std::uint64_t>(std::ceil(std::log(2.0 / delta) / (2.0 * epsilon * epsilon)));
}

Completion sample_completion(const GroundModel& model, std::uint64_t seed, std::uint64_t sample) {
  Completion c{Bits(model.num_vars())};
  std::uint64_t stream = splitmix64(seed ^ splitmix64(sample));
  for (std::size_t v = 0; v < model.num_vars(); ++v) {
    std::uint64_t u = splitmix64(stream + v * 0xD1B54A32D192ED03ull);
    if (u < threshold64(model.vars[v].weight)) c.values.set(v);
  }
  return c;
}

RobustnessReport assess_sampled(const GroundModel& model, const ResolvedPlan& plan, double epsilon, double delta,
                                std::uint64_t seed) {
  const std::uint64_t n = hoeffding_samples(epsilon, delta);
  std::vector<std::uint64_t> thresholds;
  for (const auto& v : model.vars) thresholds.push_back(threshold64(v.weight));

  State init = model.initial_state();
  std::uint64_t successes = 0;
  Completion c{Bits(model.num_vars())};
  for (std::uint64_t i = 0; i < n; ++i) {
    std::uint64_t stream = splitmix64(seed ^ splitmix64(i));
    for (std::size_t v = 0; v < model.num_vars(); ++v)
      c.values.set(v, splitmix64(stream + v * 0xD1B54A32D192ED03ull) < thresholds[v]);
    State s = init;
    for (int step : plan.steps) s = apply(model.actions[static_cast<std::size_t>(step)], s, c);
    if (satisfies(s, model.goal)) ++successes;
  }

  RobustnessReport report;
  report.mode = RobustnessReport::Mode::Sampled;
  report.successes = successes;
  report.total = n;
  report.sampled = {static_cast<double>(successes) / static_cast<double>(n), epsilon, 1.0 - delta};
  return report;
}

bool is_valid(const GroundModel& model, const ResolvedPlan& plan, int cap) {
  ExactOptions options;
  options.cap = cap;
  return assess_exact(model, plan, options).successes > 0;
}

Rational robustness_upper_bound(const GroundModel& model, int cap) {
  if (model.num_vars() > static_cast<std::size_t>(cap) || model.num_vars() >= 63) return Rational(1);
  CompletionMeasure measure(model, kBlockVars);
  mpz_class numerator = 0;
  const std::uint64_t blocks = block_count(model.num_vars(), kBlockVars);
  for (std::uint64_t b = 0; b < blocks; ++b) {
    CompletionBlock block(model.num_vars(), kBlockVars, b);
    auto mask = relaxed_goal_mask(model, sliced_initial(model, block), block);
    numerator += measure.numerator(mask, block);
  }
  Rational r(numerator, measure.denominator());
  r.canonicalize();
  return r;
}

}  // namespace rkit
