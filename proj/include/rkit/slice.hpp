#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rkit/grounding.hpp"
#include "rkit/kernels.hpp"

// Bit-sliced execution: a block of 2^L completions is evaluated at once by
// storing, for every fluent, one bit per completion. Applying an action is
// then a handful of bulk AND/OR passes over those masks.

namespace rkit {

using simd::Word;

/// Completions [block_index * 2^L, (block_index + 1) * 2^L) of a model with
/// K variables, L = min(K, block_vars). Lane i of the block is completion
/// first() + i, so variable v < L is bit v of the lane index and variables
/// v >= L are constant over the block.
class CompletionBlock {
 public:
  CompletionBlock(std::size_t num_vars, int block_vars, std::uint64_t block_index);

  std::size_t lanes() const { return lanes_; }
  std::size_t words() const { return words_; }
  int low_vars() const { return low_vars_; }
  std::uint64_t index() const { return index_; }
  std::uint64_t first() const { return index_ << low_vars_; }
  std::uint64_t count() const;

  std::span<const Word> valid() const { return {valid_.data(), words_}; }
  std::span<const Word> realized(int var) const {
    return {masks_.data() + static_cast<std::size_t>(var) * words_, words_};
  }

 private:
  std::size_t num_vars_;
  int low_vars_;
  std::uint64_t index_;
  std::size_t lanes_;
  std::size_t words_;
  std::vector<Word> valid_;
  std::vector<Word> masks_;
};

/// Number of blocks needed to cover all 2^K completions.
std::uint64_t block_count(std::size_t num_vars, int block_vars);

/// Per-fluent completion masks for one block.
class SlicedState {
 public:
  SlicedState() = default;
  SlicedState(std::size_t num_fluents, std::size_t words) : words_(words), data_(num_fluents * words, 0) {}

  std::size_t words() const { return words_; }
  std::size_t num_fluents() const { return words_ ? data_.size() / words_ : 0; }
  std::span<Word> fluent(int f) { return {data_.data() + static_cast<std::size_t>(f) * words_, words_}; }
  std::span<const Word> fluent(int f) const {
    return {data_.data() + static_cast<std::size_t>(f) * words_, words_};
  }
  std::span<const Word> raw() const { return data_; }
  std::span<Word> raw() { return data_; }

  bool operator==(const SlicedState&) const = default;

 private:
  std::size_t words_ = 0;
  std::vector<Word> data_;
};

SlicedState sliced_initial(const GroundModel& model, const CompletionBlock& block);

/// Reusable buffer for apply_sliced.
struct SliceScratch {
  std::vector<Word> applicable;
};

void apply_sliced(const GroundAction& action, SlicedState& state, const CompletionBlock& block,
                  SliceScratch& scratch, const simd::Kernels& k = simd::active_kernels());

/// Completions of the block whose state satisfies every goal fluent.
std::vector<Word> goal_mask(const GroundModel& model, const SlicedState& state, const CompletionBlock& block,
                            const simd::Kernels& k = simd::active_kernels());

/// Completions of the block in which the goal is reachable from `state`
/// under delete relaxation of that completion's own model. Over-approximates
/// the completions any continuation can still make succeed.
std::vector<Word> relaxed_goal_mask(const GroundModel& model, const SlicedState& state, const CompletionBlock& block,
                                    const simd::Kernels& k = simd::active_kernels());

/// Exact probability mass of a set of completions given as a block mask.
class CompletionMeasure {
 public:
  CompletionMeasure(const GroundModel& model, int block_vars);

  /// Numerator over denominator(); sums exactly.
  mpz_class numerator(std::span<const Word> mask, const CompletionBlock& block) const;
  const mpz_class& denominator() const { return denominator_; }
  Rational measure(std::span<const Word> mask, const CompletionBlock& block) const;

 private:
  int low_vars_;
  int word_vars_;
  std::vector<mpz_class> realized_num_;    // n_v
  std::vector<mpz_class> unrealized_num_;  // d_v - n_v
  std::vector<mpz_class> word_table_;      // per in-word lane
  std::vector<std::uint64_t> small_table_; // same, when it fits in 64 bits
  bool small_ = false;
  mpz_class full_word_;
  mpz_class denominator_;
};

}  // namespace rkit
