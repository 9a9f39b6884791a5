#include "akr/oracle.hpp"

#include <cmath>

#include "akr/errors.hpp"

namespace akr {

double DenseOperator::max_orthogonality_error() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      double dot = 0.0;
      for (std::size_t row = 0; row < dim; ++row) dot += at(row, i) * at(row, j);
      const double err = std::abs(dot - (i == j ? 1.0 : 0.0));
      if (err > worst) worst = err;
    }
  }
  return worst;
}

DenseOperator build_step_matrix(const GridGeometry& g, const MarkedSet& marked) {
  if (!(g == marked.geometry())) {
    throw ConfigError("grid side mismatch between geometry and marked set");
  }
  const std::size_t dim = g.basis_size();
  if (dim > kDenseLimit) {
    throw ConfigError("grid too large for the dense oracle: 4N=" + std::to_string(dim) +
                      " exceeds " + std::to_string(kDenseLimit));
  }

  // Conditional coin combined with the query: the diffusion block
  // (1/2 off-diagonal, -1/2 diagonal) at unmarked cells, -I at marked cells.
  std::vector<double> coin(dim * dim, 0.0);
  const int n = g.side();
  for (int y = 0; y < n; ++y) {
    for (int x = 0; x < n; ++x) {
      const std::size_t base = 4 * g.cell_index({x, y});
      if (marked.contains({x, y})) {
        for (std::size_t d = 0; d < 4; ++d) coin[(base + d) * dim + (base + d)] = -1.0;
      } else {
        for (std::size_t row = 0; row < 4; ++row) {
          for (std::size_t col = 0; col < 4; ++col) {
            coin[(base + row) * dim + (base + col)] = (row == col) ? -0.5 : 0.5;
          }
        }
      }
    }
  }

  // Shift permutation: (x,y,d) goes to the neighbouring cell with the
  // direction reversed.
  std::vector<double> shift(dim * dim, 0.0);
  for (int y = 0; y < n; ++y) {
    for (int x = 0; x < n; ++x) {
      for (Direction d : kDirections) {
        const std::size_t from = g.basis_index({x, y}, d);
        const std::size_t to = g.basis_index(g.neighbor({x, y}, d), opposite(d));
        shift[to * dim + from] = 1.0;
      }
    }
  }

  DenseOperator u;
  u.dim = dim;
  u.entries.assign(dim * dim, 0.0);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t k = 0; k < dim; ++k) {
      const double s = shift[i * dim + k];
      if (s == 0.0) continue;
      for (std::size_t j = 0; j < dim; ++j) {
        u.entries[i * dim + j] += s * coin[k * dim + j];
      }
    }
  }
  return u;
}

std::vector<WalkState> evolve_dense(const GridGeometry& g, const MarkedSet& marked, int steps) {
  if (steps < 0) throw ConfigError("steps must be non-negative");
  const DenseOperator u = build_step_matrix(g, marked);
  std::vector<WalkState> trajectory;
  trajectory.reserve(static_cast<std::size_t>(steps) + 1);
  trajectory.push_back(uniform_state(g));
  for (int s = 1; s <= steps; ++s) {
    const WalkState& prev = trajectory.back();
    WalkState next(g);
    for (std::size_t i = 0; i < u.dim; ++i) {
      double sum = 0.0;
      const double* row = &u.entries[i * u.dim];
      const double* v = prev.data();
      for (std::size_t j = 0; j < u.dim; ++j) sum += row[j] * v[j];
      next.data()[i] = sum;
    }
    trajectory.push_back(std::move(next));
  }
  return trajectory;
}

}  // namespace akr
