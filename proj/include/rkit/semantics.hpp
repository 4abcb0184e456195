#pragma once

#include <cstdint>
#include <iterator>
#include <stdexcept>
#include <vector>

#include "rkit/bits.hpp"
#include "rkit/grounding.hpp"

namespace rkit {

/// Closed-world state: one bit per fluent of the ground model.
using State = Bits;

/// Total assignment of the model's realization variables; identifies one
/// complete domain model.
struct Completion {
  Bits values;

  bool realized(int var) const { return values.test(static_cast<std::size_t>(var)); }
  bool operator==(const Completion&) const = default;
};

/// Completion number `index` in enumeration order: bit i of the index is
/// the value of variable i.
Completion completion_from_index(std::size_t num_vars, std::uint64_t index);

struct EffectiveAction {
  std::vector<int> pre, add, del;
};

/// Certain core plus the possible items whose variable is realized.
EffectiveAction effective_action(const GroundAction& action, const Completion& completion);

/// (s ∪ add) \ del when the effective preconditions hold; otherwise s.
State apply(const GroundAction& action, const State& state, const Completion& completion);

/// States s_0 = init, s_{k+1} = apply(step_k, s_k); length |plan| + 1.
std::vector<State> project(const GroundModel& model, const ResolvedPlan& plan, const State& init,
                           const Completion& completion);

bool satisfies(const State& state, const std::vector<int>& goal);

/// Product of w (realized) or 1 - w (unrealized) over all variables.
Rational completion_probability(const GroundModel& model, const Completion& completion);

inline constexpr int kDefaultEnumerationCap = 24;

class EnumerationCapExceeded : public std::runtime_error {
 public:
  EnumerationCapExceeded(std::size_t k, int cap)
      : std::runtime_error("model has K=" + std::to_string(k) + " realization variables, above the exact cap of " +
                           std::to_string(cap) + "; use sampling instead"),
        k_(k),
        cap_(cap) {}
  std::size_t k() const { return k_; }
  int cap() const { return cap_; }

 private:
  std::size_t k_;
  int cap_;
};

/// Lazily enumerates all 2^K completions in binary-counting order together
/// with their probabilities.
class CompletionRange {
 public:
  struct Item {
    std::uint64_t index;
    Completion completion;
    Rational probability;
  };

  class iterator {
   public:
    using value_type = Item;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    iterator(const GroundModel* model, std::uint64_t index, std::uint64_t end);
    const Item& operator*() const { return item_; }
    const Item* operator->() const { return &item_; }
    iterator& operator++();
    iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    bool operator==(const iterator& o) const { return item_.index == o.item_.index; }

   private:
    void load();
    const GroundModel* model_ = nullptr;
    std::uint64_t end_ = 0;
    Item item_{};
  };

  CompletionRange(const GroundModel& model, int cap = kDefaultEnumerationCap);
  iterator begin() const { return {model_, 0, count_}; }
  iterator end() const { return {model_, count_, count_}; }
  std::uint64_t size() const { return count_; }

 private:
  const GroundModel* model_;
  std::uint64_t count_;
};

/// Throws EnumerationCapExceeded when K exceeds `cap`.
CompletionRange enumerate_completions(const GroundModel& model, int cap = kDefaultEnumerationCap);

}  // namespace rkit
