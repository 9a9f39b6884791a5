#pragma once

#include <cstdint>
#include <vector>

#include "akr/geometry.hpp"

namespace akr {

// Set of marked grid locations with O(1) membership and a deterministic
// cell-index-sorted iteration order (the order all probability reductions use).
class MarkedSet {
 public:
  MarkedSet(const GridGeometry& geometry, std::vector<Coord> locations);

  static MarkedSet none(const GridGeometry& geometry) { return MarkedSet(geometry, {}); }

  const GridGeometry& geometry() const { return geom_; }
  std::size_t size() const { return locs_.size(); }
  bool empty() const { return locs_.empty(); }
  bool contains(Coord c) const { return mask_[geom_.cell_index(c)] != 0; }

  const std::vector<Coord>& locations() const { return locs_; }
  const std::vector<std::uint32_t>& cell_indices() const { return cells_; }

  std::uint64_t hash() const;

 private:
  GridGeometry geom_;
  std::vector<Coord> locs_;
  std::vector<std::uint32_t> cells_;
  std::vector<std::uint8_t> mask_;
};

}  // namespace akr
