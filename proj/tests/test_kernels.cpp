#include <doctest.h>

#include <random>
#include <vector>

#include "rkit/kernels.hpp"

using namespace rkit::simd;

namespace {

std::vector<Word> random_words(std::mt19937_64& rng, std::size_t n) {
  std::vector<Word> v(n);
  for (auto& w : v) {
    // Mix dense, sparse and all-ones words so early exits get exercised.
    switch (rng() % 4) {
      case 0:
        w = 0;
        break;
      case 1:
        w = ~Word{0};
        break;
      default:
        w = rng();
    }
  }
  return v;
}

void check_equivalent(const Kernels& ref, const Kernels& other) {
  std::mt19937_64 rng(99);
  for (std::size_t n : {0, 1, 2, 3, 4, 5, 7, 8, 9, 15, 16, 17, 31, 64, 100, 1024, 1031}) {
    for (int trial = 0; trial < 20; ++trial) {
      auto a = random_words(rng, n), b = random_words(rng, n), d = random_words(rng, n);
      CAPTURE(n);
      auto run = [&](auto binary) {
        auto x = d, y = d;
        binary(ref, x);
        binary(other, y);
        CHECK(x == y);
      };
      run([&](const Kernels& k, std::vector<Word>& dst) { k.and_into(dst.data(), a.data(), n); });
      run([&](const Kernels& k, std::vector<Word>& dst) { k.or_into(dst.data(), a.data(), n); });
      run([&](const Kernels& k, std::vector<Word>& dst) { k.andnot_into(dst.data(), a.data(), n); });
      run([&](const Kernels& k, std::vector<Word>& dst) { k.and_implied(dst.data(), a.data(), b.data(), n); });
      run([&](const Kernels& k, std::vector<Word>& dst) { k.or_and(dst.data(), a.data(), b.data(), n); });
      run([&](const Kernels& k, std::vector<Word>& dst) { k.andnot_and(dst.data(), a.data(), b.data(), n); });
      CHECK(ref.popcount(a.data(), n) == other.popcount(a.data(), n));
      CHECK(ref.any(a.data(), n) == other.any(a.data(), n));
      CHECK(ref.equal(a.data(), b.data(), n) == other.equal(a.data(), b.data(), n));
      CHECK(other.equal(a.data(), a.data(), n));
    }
  }
}

}  // namespace

TEST_SUITE("kernels") {
  TEST_CASE("scalar reference semantics") {
    const Kernels& k = scalar_kernels();
    Word d[2] = {0b1100, 0b1010}, a[2] = {0b1010, 0b0110}, m[2] = {0b0011, 0b1111};
    k.and_implied(d, a, m, 2);
    CHECK(d[0] == 0b1100);  // bits 2,3 lie outside m; bits 0,1 need a
    CHECK(d[1] == 0b0010);
    Word z[3] = {0, 0, 0};
    CHECK_FALSE(k.any(z, 3));
    z[2] = 1;
    CHECK(k.any(z, 3));
    Word p[2] = {~Word{0}, 5};
    CHECK(k.popcount(p, 2) == 66);
  }

  TEST_CASE("active kernels match the scalar reference") { check_equivalent(scalar_kernels(), active_kernels()); }

  TEST_CASE("AVX2 kernels match the scalar reference") {
    const Kernels* avx = avx2_kernels();
    if (!avx) {
      MESSAGE("AVX2 not available on this machine; skipped");
      return;
    }
    check_equivalent(scalar_kernels(), *avx);
  }
}
