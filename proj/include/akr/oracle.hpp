#pragma once

#include <cstddef>
#include <vector>

#include "akr/marked_set.hpp"
#include "akr/state.hpp"

namespace akr {

// Slow, obviously-correct dense evolution for small grids. The matrix is
// assembled from the operator definitions themselves (diffusion blocks,
// -I blocks, shift permutation entries), sharing no code with the fast
// kernels, so agreement between the two paths is evidence.
struct DenseOperator {
  std::size_t dim = 0;
  std::vector<double> entries;  // row-major dim x dim

  double& at(std::size_t row, std::size_t col) { return entries[row * dim + col]; }
  double at(std::size_t row, std::size_t col) const { return entries[row * dim + col]; }

  double max_orthogonality_error() const;  // max |(U^T U - I)_{ij}|
};

inline constexpr std::size_t kDenseLimit = 4096;  // largest allowed 4N

// One full step as an explicit matrix: shift times the conditional coin
// (diffusion at unmarked cells, -I at marked cells).
DenseOperator build_step_matrix(const GridGeometry& g, const MarkedSet& marked);

// States 0..steps obtained by repeated matrix-vector products from the
// uniform state.
std::vector<WalkState> evolve_dense(const GridGeometry& g, const MarkedSet& marked, int steps);

}  // namespace akr
