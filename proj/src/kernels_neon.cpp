// NEON variants for aarch64 builds.

#include "akr/kernels.hpp"

#if defined(__aarch64__) && defined(__ARM_NEON)

#include <arm_neon.h>

namespace akr::kernels {
namespace {

void coin_neon(double* amps, std::size_t cells) {
  const float64x2_t half = vdupq_n_f64(0.5);
  for (std::size_t c = 0; c < cells; ++c) {
    double* p = amps + 4 * c;
    const float64x2_t v01 = vld1q_f64(p);
    const float64x2_t v23 = vld1q_f64(p + 2);
    // [a0+a1, a2+a3], then (a0+a1)+(a2+a3) in both lanes: the scalar tree.
    const float64x2_t pairs = vpaddq_f64(v01, v23);
    const float64x2_t s = vpaddq_f64(pairs, pairs);
    const float64x2_t h = vmulq_f64(s, half);
    vst1q_f64(p, vsubq_f64(h, v01));
    vst1q_f64(p + 2, vsubq_f64(h, v23));
  }
}

void negate_neon(double* amps, const std::uint32_t* cells, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) {
    double* p = amps + 4 * std::size_t(cells[i]);
    vst1q_f64(p, vnegq_f64(vld1q_f64(p)));
    vst1q_f64(p + 2, vnegq_f64(vld1q_f64(p + 2)));
  }
}

}  // namespace

const KernelTable* neon_table() {
  static constexpr KernelTable table{"neon", &coin_neon, &negate_neon};
  return &table;
}

}  // namespace akr::kernels

#else

namespace akr::kernels {
const KernelTable* neon_table() { return nullptr; }
}  // namespace akr::kernels

#endif
