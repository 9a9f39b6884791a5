#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace akr::kernels {

// One kernel variant. All variants are bit-identical by construction: the
// coin fixes the operation order to
//   s = (a0 + a1) + (a2 + a3);  h = s * 0.5;  a_d = h - a_d
// (the vector forms reproduce that tree lane-for-lane, exchanging only
// commutative additions), and the query is an exact sign flip.
struct KernelTable {
  const char* name;
  // Grover diffusion applied to every contiguous 4-amplitude group.
  void (*grover_coin)(double* amps, std::size_t cells);
  // Sign flip of the 4-amplitude groups at the listed cell indices.
  void (*negate_cells)(double* amps, const std::uint32_t* cells, std::size_t count);
};

const KernelTable& scalar_table();

// Variant hooks; each returns nullptr when the build target lacks the ISA.
const KernelTable* avx2_table();
const KernelTable* neon_table();

// Variants usable on this machine, scalar first.
std::vector<const KernelTable*> available_tables();

const KernelTable* table_by_name(std::string_view name);

// Widest usable variant, or the one named by AKRWALK_KERNEL when set.
const KernelTable& active_table();

}  // namespace akr::kernels
