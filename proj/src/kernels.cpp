#include "rkit/kernels.hpp"

#include <cstdlib>
#include <string_view>

namespace rkit::simd {

const Kernels* avx2_kernels_unchecked();

namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
  return false;
#endif
}

const Kernels& select() {
  const Kernels* avx2 = avx2_kernels();
  const char* env = std::getenv("RKIT_SIMD");
  std::string_view choice = env ? env : "auto";
  if (choice == "scalar") return scalar_kernels();
  if (avx2) return *avx2;
  return scalar_kernels();
}

}  // namespace

const Kernels* avx2_kernels() {
  static const Kernels* table = cpu_has_avx2() ? avx2_kernels_unchecked() : nullptr;
  return table;
}

const Kernels& active_kernels() {
  static const Kernels& table = select();
  return table;
}

}  // namespace rkit::simd
