// Reference kernels. The coin's summation tree s = (a0+a1) + (a2+a3) is the
// contract every vector variant reproduces bit-for-bit.

#include "akr/kernels.hpp"

namespace akr::kernels {
namespace {

void coin_scalar(double* amps, std::size_t cells) {
  for (std::size_t c = 0; c < cells; ++c) {
    double* a = amps + 4 * c;
    const double s = (a[0] + a[1]) + (a[2] + a[3]);
    const double h = s * 0.5;
    a[0] = h - a[0];
    a[1] = h - a[1];
    a[2] = h - a[2];
    a[3] = h - a[3];
  }
}

void negate_scalar(double* amps, const std::uint32_t* cells, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) {
    double* a = amps + 4 * std::size_t(cells[i]);
    a[0] = -a[0];
    a[1] = -a[1];
    a[2] = -a[2];
    a[3] = -a[3];
  }
}

}  // namespace

const KernelTable& scalar_table() {
  static constexpr KernelTable table{"scalar", &coin_scalar, &negate_scalar};
  return table;
}

}  // namespace akr::kernels
