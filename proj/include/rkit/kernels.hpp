#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

// Bulk bitwise kernels over word arrays. Every kernel has a portable scalar
// reference in kernels_scalar.cpp and an AVX2 variant in kernels_avx2.cpp;
// active_kernels() picks one at runtime from CPUID (override with
// RKIT_SIMD=scalar|avx2). Both variants must agree bit for bit.

namespace rkit::simd {

using Word = std::uint64_t;

struct Kernels {
  const char* name;
  /// dst &= a
  void (*and_into)(Word* dst, const Word* a, std::size_t n);
  /// dst |= a
  void (*or_into)(Word* dst, const Word* a, std::size_t n);
  /// dst &= ~a
  void (*andnot_into)(Word* dst, const Word* a, std::size_t n);
  /// dst &= a | ~m   (a holds wherever m is set)
  void (*and_implied)(Word* dst, const Word* a, const Word* m, std::size_t n);
  /// dst |= a & b
  void (*or_and)(Word* dst, const Word* a, const Word* b, std::size_t n);
  /// dst &= ~(a & b)
  void (*andnot_and)(Word* dst, const Word* a, const Word* b, std::size_t n);
  std::size_t (*popcount)(const Word* a, std::size_t n);
  bool (*any)(const Word* a, std::size_t n);
  bool (*equal)(const Word* a, const Word* b, std::size_t n);
};

const Kernels& scalar_kernels();

/// nullptr when the build has no AVX2 unit or the CPU lacks AVX2.
const Kernels* avx2_kernels();

/// Kernel table selected for this process.
const Kernels& active_kernels();

}  // namespace rkit::simd
