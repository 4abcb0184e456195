#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace rkit {

/// Fixed-size dynamic bitset. Used for states (one bit per ground fluent)
/// and completions (one bit per realization variable).
class Bits {
 public:
  using Word = std::uint64_t;

  Bits() = default;
  explicit Bits(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const { return size_; }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool value = true) {
    Word mask = Word{1} << (i & 63);
    if (value)
      words_[i >> 6] |= mask;
    else
      words_[i >> 6] &= ~mask;
  }
  void reset(std::size_t i) { set(i, false); }
  bool operator[](std::size_t i) const { return test(i); }

  std::size_t count() const;
  bool none() const;
  bool is_subset_of(const Bits& other) const;
  /// Indices of set bits, ascending.
  std::vector<int> ones() const;

  std::span<const Word> words() const { return words_; }
  std::span<Word> words() { return words_; }

  bool operator==(const Bits&) const = default;
  auto operator<=>(const Bits&) const = default;

  std::size_t hash() const;

 private:
  std::size_t size_ = 0;
  std::vector<Word> words_;
};

/// Builds a bitset of the given size with the listed indices set.
Bits bits_from(std::size_t size, std::span<const int> indices);

}  // namespace rkit

template <>
struct std::hash<rkit::Bits> {
  std::size_t operator()(const rkit::Bits& b) const noexcept { return b.hash(); }
};
