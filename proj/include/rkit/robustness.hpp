#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rkit/grounding.hpp"
#include "rkit/semantics.hpp"

namespace rkit {

/// Per-completion outcome of a plan.
struct LedgerEntry {
  std::uint64_t completion = 0;
  Rational probability;
  bool success = false;
  /// First step whose effective preconditions were unmet (0-based), -1 if none.
  int first_failed_step = -1;
};

struct SampledValue {
  double estimate = 0;
  double half_width = 0;
  double confidence = 0;
};

struct RobustnessReport {
  enum class Mode { Exact, Sampled };
  Mode mode = Mode::Exact;
  /// Exact robustness (exact mode only).
  Rational value;
  /// Estimate with its Hoeffding half-width (sampled mode only).
  SampledValue sampled;
  std::uint64_t successes = 0;
  std::uint64_t total = 0;
  std::vector<LedgerEntry> ledger;

  double point_value() const { return mode == Mode::Exact ? to_double(value) : sampled.estimate; }
};

struct ExactOptions {
  int cap = kDefaultEnumerationCap;
  bool ledger = false;
  /// 0 = RKIT_THREADS or hardware concurrency.
  unsigned threads = 0;
};

/// Largest K for which a ledger is materialized.
inline constexpr int kLedgerCap = 16;

/// R(pi) = sum of Pr(D_i) over completions in which the plan reaches the
/// goal. Evaluated bit-sliced over blocks of completions. Throws
/// EnumerationCapExceeded above the cap.
RobustnessReport assess_exact(const GroundModel& model, const ResolvedPlan& plan, const ExactOptions& options = {});

/// Hoeffding sample size: ceil(ln(2/delta) / (2 epsilon^2)).
std::uint64_t hoeffding_samples(double epsilon, double delta);

/// Monte-Carlo estimate from i.i.d. completions drawn from the product
/// distribution. Deterministic in `seed`: sample i depends only on (seed, i).
RobustnessReport assess_sampled(const GroundModel& model, const ResolvedPlan& plan, double epsilon, double delta,
                                std::uint64_t seed);

/// Draws completion number `sample` of the stream keyed by `seed`.
Completion sample_completion(const GroundModel& model, std::uint64_t seed, std::uint64_t sample);

/// True iff the plan reaches the goal in at least one completion.
bool is_valid(const GroundModel& model, const ResolvedPlan& plan, int cap = kDefaultEnumerationCap);

/// Sum of Pr(D_i) over completions where the goal is delete-relaxed
/// reachable from the initial state in D_i. No plan is more robust than
/// this. Falls back to 1 when K exceeds the cap.
Rational robustness_upper_bound(const GroundModel& model, int cap = kDefaultEnumerationCap);

/// Worker count from RKIT_THREADS (if set) capped by hardware concurrency.
unsigned worker_count(unsigned requested = 0);

}  // namespace rkit
