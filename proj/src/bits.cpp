#include "rkit/bits.hpp"

#include <bit>

namespace rkit {

std::size_t Bits::count() const {
  std::size_t n = 0;
  for (Word w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool Bits::none() const {
  for (Word w : words_)
    if (w) return false;
  return true;
}

bool Bits::is_subset_of(const Bits& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

std::vector<int> Bits::ones() const {
  std::vector<int> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    Word word = words_[w];
    while (word) {
      int b = std::countr_zero(word);
      out.push_back(static_cast<int>(w * 64 + b));
      word &= word - 1;
    }
  }
  return out;
}

std::size_t Bits::hash() const {
  // FNV-1a over the words, folded with the size.
  std::uint64_t h = 1469598103934665603ull ^ size_;
  for (Word w : words_) {
    h ^= w;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

Bits bits_from(std::size_t size, std::span<const int> indices) {
  Bits b(size);
  for (int i : indices) b.set(static_cast<std::size_t>(i));
  return b;
}

}  // namespace rkit
