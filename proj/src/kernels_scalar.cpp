#include <bit>

#include "rkit/kernels.hpp"

namespace rkit::simd {

namespace {

void and_into(Word* dst, const Word* a, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] &= a[i];
}

void or_into(Word* dst, const Word* a, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] |= a[i];
}

void andnot_into(Word* dst, const Word* a, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] &= ~a[i];
}

void and_implied(Word* dst, const Word* a, const Word* m, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] &= a[i] | ~m[i];
}

void or_and(Word* dst, const Word* a, const Word* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] |= a[i] & b[i];
}

void andnot_and(Word* dst, const Word* a, const Word* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] &= ~(a[i] & b[i]);
}

std::size_t popcount(const Word* a, std::size_t n) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < n; ++i) total += static_cast<std::size_t>(std::popcount(a[i]));
  return total;
}

bool any(const Word* a, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (a[i]) return true;
  return false;
}

bool equal(const Word* a, const Word* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

}  // namespace

const Kernels& scalar_kernels() {
  static const Kernels table{"scalar", and_into, or_into,  andnot_into, and_implied,
                             or_and,   andnot_and, popcount, any,         equal};
  return table;
}

}  // namespace rkit::simd
