#include "rkit/kernels.hpp"

#if defined(__AVX2__)

#include <immintrin.h>

#include <bit>

namespace rkit::simd {

namespace {

inline __m256i load(const Word* p) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p)); }
inline void store(Word* p, __m256i v) { _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v); }

void and_into(Word* dst, const Word* a, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) store(dst + i, _mm256_and_si256(load(dst + i), load(a + i)));
  for (; i < n; ++i) dst[i] &= a[i];
}

void or_into(Word* dst, const Word* a, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) store(dst + i, _mm256_or_si256(load(dst + i), load(a + i)));
  for (; i < n; ++i) dst[i] |= a[i];
}

void andnot_into(Word* dst, const Word* a, std::size_t n) {
  std::size_t i = 0;
  // _mm256_andnot_si256(x, y) = ~x & y
  for (; i + 4 <= n; i += 4) store(dst + i, _mm256_andnot_si256(load(a + i), load(dst + i)));
  for (; i < n; ++i) dst[i] &= ~a[i];
}

void and_implied(Word* dst, const Word* a, const Word* m, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    // a | ~m  ==  ~(m & ~a)
    __m256i blocked = _mm256_andnot_si256(load(a + i), load(m + i));
    store(dst + i, _mm256_andnot_si256(blocked, load(dst + i)));
  }
  for (; i < n; ++i) dst[i] &= a[i] | ~m[i];
}

void or_and(Word* dst, const Word* a, const Word* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    store(dst + i, _mm256_or_si256(load(dst + i), _mm256_and_si256(load(a + i), load(b + i))));
  for (; i < n; ++i) dst[i] |= a[i] & b[i];
}

void andnot_and(Word* dst, const Word* a, const Word* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    store(dst + i, _mm256_andnot_si256(_mm256_and_si256(load(a + i), load(b + i)), load(dst + i)));
  for (; i < n; ++i) dst[i] &= ~(a[i] & b[i]);
}

// Nibble lookup popcount (Mula et al.), summed with SAD against zero.
std::size_t popcount(const Word* a, std::size_t n) {
  const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                          0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i v = load(a + i);
    __m256i lo = _mm256_and_si256(v, low_mask);
    __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
    __m256i counts = _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo), _mm256_shuffle_epi8(lookup, hi));
    acc = _mm256_add_epi64(acc, _mm256_sad_epu8(counts, _mm256_setzero_si256()));
  }
  alignas(32) Word lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  std::size_t total = static_cast<std::size_t>(lanes[0] + lanes[1] + lanes[2] + lanes[3]);
  for (; i < n; ++i) total += static_cast<std::size_t>(std::popcount(a[i]));
  return total;
}

bool any(const Word* a, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i v = load(a + i);
    if (!_mm256_testz_si256(v, v)) return true;
  }
  for (; i < n; ++i)
    if (a[i]) return true;
  return false;
}

bool equal(const Word* a, const Word* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i diff = _mm256_xor_si256(load(a + i), load(b + i));
    if (!_mm256_testz_si256(diff, diff)) return false;
  }
  for (; i < n; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

}  // namespace

const Kernels* avx2_kernels_unchecked() {
  static const Kernels table{"avx2", and_into, or_into,  andnot_into, and_implied,
                             or_and, andnot_and, popcount, any,         equal};
  return &table;
}

}  // namespace rkit::simd

#else

namespace rkit::simd {
const Kernels* avx2_kernels_unchecked() { return nullptr; }
}  // namespace rkit::simd

#endif
