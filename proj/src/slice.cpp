#include "rkit/slice.hpp"

#include <algorithm>
#include <bit>
#include <limits>

namespace rkit {

namespace {

// Lane patterns for the six variables that vary inside one 64-bit word.
constexpr Word kLanePattern[6] = {0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
                                  0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull};

}  // namespace

CompletionBlock::CompletionBlock(std::size_t num_vars, int block_vars, std::uint64_t block_index)
    : num_vars_(num_vars),
      low_vars_(static_cast<int>(std::min<std::size_t>(num_vars, static_cast<std::size_t>(block_vars)))),
      index_(block_index),
      lanes_(std::size_t{1} << low_vars_),
      words_(std::max<std::size_t>(1, lanes_ / 64)) {
  valid_.assign(words_, ~Word{0});
  if (lanes_ < 64) valid_[0] = (Word{1} << lanes_) - 1;

  masks_.assign(num_vars_ * words_, 0);
  for (std::size_t v = 0; v < num_vars_; ++v) {
    Word* m = masks_.data() + v * words_;
    if (v < 6 && static_cast<int>(v) < low_vars_) {
      for (std::size_t w = 0; w < words_; ++w) m[w] = kLanePattern[v] & valid_[w];
    } else if (static_cast<int>(v) < low_vars_) {
      for (std::size_t w = 0; w < words_; ++w) m[w] = ((w >> (v - 6)) & 1u) ? ~Word{0} : 0;
    } else {
      bool on = ((block_index >> (v - static_cast<std::size_t>(low_vars_))) & 1u) != 0;
      for (std::size_t w = 0; w < words_; ++w) m[w] = on ? valid_[w] : 0;
    }
  }
}

std::uint64_t CompletionBlock::count() const { return lanes_; }

std::uint64_t block_count(std::size_t num_vars, int block_vars) {
  std::size_t low = std::min<std::size_t>(num_vars, static_cast<std::size_t>(block_vars));
  return std::uint64_t{1} << (num_vars - low);
}

SlicedState sliced_initial(const GroundModel& model, const CompletionBlock& block) {
  SlicedState state(model.num_fluents(), block.words());
  auto valid = block.valid();
  for (int f : model.init) std::copy(valid.begin(), valid.end(), state.fluent(f).begin());
  return state;
}

void apply_sliced(const GroundAction& action, SlicedState& state, const CompletionBlock& block,
                  SliceScratch& scratch, const simd::Kernels& k) {
  const std::size_t n = block.words();
  auto valid = block.valid();
  scratch.applicable.assign(valid.begin(), valid.end());
  Word* app = scratch.applicable.data();

  for (int f : action.pre) k.and_into(app, state.fluent(f).data(), n);
  for (const auto& item : action.poss_pre) k.and_implied(app, state.fluent(item.fluent).data(), block.realized(item.var).data(), n);
  if (!k.any(app, n)) return;

  for (int f : action.add) k.or_into(state.fluent(f).data(), app, n);
  for (const auto& item : action.poss_add) k.or_and(state.fluent(item.fluent).data(), app, block.realized(item.var).data(), n);
  for (int f : action.del) k.andnot_into(state.fluent(f).data(), app, n);
  for (const auto& item : action.poss_del)
    k.andnot_and(state.fluent(item.fluent).data(), app, block.realized(item.var).data(), n);
}

std::vector<Word> goal_mask(const GroundModel& model, const SlicedState& state, const CompletionBlock& block,
                            const simd::Kernels& k) {
  auto valid = block.valid();
  std::vector<Word> mask(valid.begin(), valid.end());
  for (int g : model.goal) k.and_into(mask.data(), state.fluent(g).data(), mask.size());
  return mask;
}

std::vector<Word> relaxed_goal_mask(const GroundModel& model, const SlicedState& state, const CompletionBlock& block,
                                    const simd::Kernels& k) {
  const std::size_t n = block.words();
  SlicedState reach = state;
  std::vector<Word> app(n);
  std::vector<char> done(model.actions.size(), 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < model.actions.size(); ++i) {
      if (done[i]) continue;
      const GroundAction& a = model.actions[i];
      auto valid = block.valid();
      std::copy(valid.begin(), valid.end(), app.begin());
      for (int f : a.pre) k.and_into(app.data(), reach.fluent(f).data(), n);
      for (const auto& item : a.poss_pre)
        k.and_implied(app.data(), reach.fluent(item.fluent).data(), block.realized(item.var).data(), n);
      if (!k.any(app.data(), n)) continue;
      // Once applicable in every valid lane the action can add nothing new
      // on a later pass.
      if (k.equal(app.data(), valid.data(), n)) done[i] = 1;
      auto grow = [&](int f, const Word* gate) {
        auto dst = reach.fluent(f);
        for (std::size_t w = 0; w < n; ++w) {
          Word add = app[w] & (gate ? gate[w] : ~Word{0});
          if (add & ~dst[w]) {
            dst[w] |= add;
            changed = true;
          }
        }
      };
      for (int f : a.add) grow(f, nullptr);
      for (const auto& item : a.poss_add) grow(item.fluent, block.realized(item.var).data());
    }
  }
  return goal_mask(model, reach, block, k);
}

CompletionMeasure::CompletionMeasure(const GroundModel& model, int block_vars)
    : low_vars_(static_cast<int>(std::min<std::size_t>(model.num_vars(), static_cast<std::size_t>(block_vars)))),
      word_vars_(std::min(low_vars_, 6)),
      denominator_(1) {
  for (const auto& v : model.vars) {
    mpz_class n = v.weight.get_num();
    mpz_class d = v.weight.get_den();
    realized_num_.push_back(n);
    unrealized_num_.push_back(d - n);
    denominator_ *= d;
  }
  std::size_t lanes = std::size_t{1} << word_vars_;
  word_table_.assign(lanes, 1);
  full_word_ = 0;
  for (std::size_t lane = 0; lane < lanes; ++lane) {
    for (int v = 0; v < word_vars_; ++v)
      word_table_[lane] *= ((lane >> v) & 1u) ? realized_num_[static_cast<std::size_t>(v)]
                                               : unrealized_num_[static_cast<std::size_t>(v)];
    full_word_ += word_table_[lane];
  }
  small_ = full_word_.fits_ulong_p() && sizeof(unsigned long) == sizeof(std::uint64_t);
  if (small_)
    for (const auto& entry : word_table_) small_table_.push_back(entry.get_ui());
}

mpz_class CompletionMeasure::numerator(std::span<const Word> mask, const CompletionBlock& block) const {
  const std::size_t words = mask.size();
  const Word full = words == 1 && block.lanes() < 64 ? (Word{1} << block.lanes()) - 1 : ~Word{0};

  std::vector<mpz_class> level(words);
  for (std::size_t w = 0; w < words; ++w) {
    Word bits = mask[w];
    if (bits == 0) continue;
    if (bits == full) {
      level[w] = full_word_;
      continue;
    }
    if (small_) {
      std::uint64_t sum = 0;
      while (bits) {
        sum += small_table_[static_cast<std::size_t>(std::countr_zero(bits))];
        bits &= bits - 1;
      }
      level[w] = static_cast<unsigned long>(sum);
    } else {
      while (bits) {
        level[w] += word_table_[static_cast<std::size_t>(std::countr_zero(bits))];
        bits &= bits - 1;
      }
    }
  }
  // Fold the word-level variables: pair (unrealized, realized) halves.
  for (int v = word_vars_; v < low_vars_; ++v) {
    std::size_t half = level.size() / 2;
    std::vector<mpz_class> next(half);
    for (std::size_t i = 0; i < half; ++i)
      next[i] = unrealized_num_[static_cast<std::size_t>(v)] * level[2 * i] +
                realized_num_[static_cast<std::size_t>(v)] * level[2 * i + 1];
    level = std::move(next);
  }
  mpz_class total = level.empty() ? mpz_class(0) : level.front();
  if (total == 0) return total;
  for (std::size_t v = static_cast<std::size_t>(low_vars_); v < realized_num_.size(); ++v)
    total *= ((block.index() >> (v - static_cast<std::size_t>(low_vars_))) & 1u) ? realized_num_[v] : unrealized_num_[v];
  return total;
}

Rational CompletionMeasure::measure(std::span<const Word> mask, const CompletionBlock& block) const {
  Rational r(numerator(mask, block), denominator_);
  r.canonicalize();
  return r;
}

}  // namespace rkit
