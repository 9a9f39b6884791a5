// AVX2 variants. This file is compiled with -mavx2 on x86-64 builds; the
// registry exposes the table only when the CPU reports AVX2 at runtime.

#include "akr/kernels.hpp"

#if defined(__AVX2__)

#include <immintrin.h>

namespace akr::kernels {
namespace {

// One 256-bit register holds one location's [a0 a1 a2 a3].
//   t = v + swap_within_lanes(v)  -> [a0+a1, a1+a0, a2+a3, a3+a2]
//   s = t + swap_lanes(t)         -> (a0+a1) + (a2+a3) in every lane
// Each lane performs exactly the scalar kernel's additions (IEEE addition
// commutes), so results are bit-identical to the scalar path.
inline __m256d group_sum(__m256d v) {
  const __m256d t = _mm256_add_pd(v, _mm256_permute_pd(v, 0x5));
  return _mm256_add_pd(t, _mm256_permute2f128_pd(t, t, 0x01));
}

void coin_avx2(double* amps, std::size_t cells) {
  const __m256d half = _mm256_set1_pd(0.5);
  std::size_t c = 0;
  for (; c + 2 <= cells; c += 2) {
    double* p = amps + 4 * c;
    const __m256d v0 = _mm256_loadu_pd(p);
    const __m256d v1 = _mm256_loadu_pd(p + 4);
    const __m256d h0 = _mm256_mul_pd(group_sum(v0), half);
    const __m256d h1 = _mm256_mul_pd(group_sum(v1), half);
    _mm256_storeu_pd(p, _mm256_sub_pd(h0, v0));
    _mm256_storeu_pd(p + 4, _mm256_sub_pd(h1, v1));
  }
  if (c < cells) {
    double* p = amps + 4 * c;
    const __m256d v = _mm256_loadu_pd(p);
    const __m256d h = _mm256_mul_pd(group_sum(v), half);
    _mm256_storeu_pd(p, _mm256_sub_pd(h, v));
  }
}

void negate_avx2(double* amps, const std::uint32_t* cells, std::size_t count) {
  const __m256d sign = _mm256_set1_pd(-0.0);
  for (std::size_t i = 0; i < count; ++i) {
    double* p = amps + 4 * std::size_t(cells[i]);
    _mm256_storeu_pd(p, _mm256_xor_pd(_mm256_loadu_pd(p), sign));
  }
}

}  // namespace

const KernelTable* avx2_table() {
  static constexpr KernelTable table{"avx2", &coin_avx2, &negate_avx2};
  return &table;
}

}  // namespace akr::kernels

#else

namespace akr::kernels {
const KernelTable* avx2_table() { return nullptr; }
}  // namespace akr::kernels

#endif
