#include "akr/walk.hpp"

#include <cstring>
#include <utility>

#include "akr/errors.hpp"

namespace akr {
namespace {

void check_same_geometry(const GridGeometry& a, const GridGeometry& b) {
  if (!(a == b)) {
    throw ConfigError("grid side mismatch: " + std::to_string(a.side()) + " vs " +
                      std::to_string(b.side()));
  }
}

}  // namespace

Walker::Walker(const GridGeometry& geometry, MarkedSet marked,
               const kernels::KernelTable* table)
    : geom_(geometry),
      marked_(std::move(marked)),
      table_(table != nullptr ? table : &kernels::active_table()),
      saved_(4 * marked_.size()) {
  check_same_geometry(geom_, marked_.geometry());
}

void Walker::apply_query(WalkState& s) {
  check_same_geometry(geom_, s.geometry());
  table_->negate_cells(s.data(), marked_.cell_indices().data(), marked_.size());
}

void Walker::apply_coin(WalkState& s) {
  check_same_geometry(geom_, s.geometry());
  double* a = s.data();
  const auto& cells = marked_.cell_indices();
  // Park the marked cells, diffuse everywhere, restore: the coin is identity
  // at marked locations and the hot loop stays branch-free.
  for (std::size_t i = 0; i < cells.size(); ++i) {
    std::memcpy(&saved_[4 * i], a + 4 * std::size_t(cells[i]), 4 * sizeof(double));
  }
  table_->grover_coin(a, geom_.locations());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    std::memcpy(a + 4 * std::size_t(cells[i]), &saved_[4 * i], 4 * sizeof(double));
  }
}

void Walker::apply_shift(WalkState& s) const {
  check_same_geometry(geom_, s.geometry());
  const int n = geom_.side();
  double* a = s.data();
  // Flip-flop pairs: (x,y,up) <-> (x,y-1,down) and (x,y,left) <-> (x-1,y,right).
  // Each unordered pair is visited exactly once, so the permutation is an
  // exact in-place involution.
  for (int y = 0; y < n; ++y) {
    const std::size_t row = std::size_t(y) * n;
    const std::size_t row_up = std::size_t((y + n - 1) % n) * n;
    for (int x = 0; x < n; ++x) {
      const int xl = (x + n - 1) % n;
      std::swap(a[4 * (row + x) + ordinal(Direction::Up)],
                a[4 * (row_up + x) + ordinal(Direction::Down)]);
      std::swap(a[4 * (row + x) + ordinal(Direction::Left)],
                a[4 * (row + xl) + ordinal(Direction::Right)]);
    }
  }
}

void Walker::step(WalkState& s) {
  apply_query(s);
  apply_coin(s);
  apply_shift(s);
}

WalkState apply_query(const WalkState& s, const MarkedSet& marked) {
  WalkState out = s;
  Walker w(s.geometry(), marked);
  w.apply_query(out);
  return out;
}

WalkState apply_coin(const WalkState& s, const MarkedSet& marked) {
  WalkState out = s;
  Walker w(s.geometry(), marked);
  w.apply_coin(out);
  return out;
}

WalkState apply_shift(const WalkState& s) {
  WalkState out = s;
  Walker w(s.geometry(), MarkedSet::none(s.geometry()));
  w.apply_shift(out);
  return out;
}

WalkState step(const WalkState& s, const MarkedSet& marked) {
  WalkState out = s;
  Walker w(s.geometry(), marked);
  w.step(out);
  return out;
}

}  // namespace akr
