#include "akr/marked_set.hpp"

#include <algorithm>

#include "akr/errors.hpp"
#include "akr/hash.hpp"

namespace akr {

MarkedSet::MarkedSet(const GridGeometry& geometry, std::vector<Coord> locations)
    : geom_(geometry) {
  for (const Coord& c : locations) {
    if (!geom_.in_range(c)) {
      throw ConfigError("marked location " + to_string(c) + " outside the " +
                        std::to_string(geom_.side()) + "x" + std::to_string(geom_.side()) +
                        " grid");
    }
  }
  std::sort(locations.begin(), locations.end(), [&](const Coord& a, const Coord& b) {
    return geom_.cell_index(a) < geom_.cell_index(b);
  });
  locations.erase(std::unique(locations.begin(), locations.end()), locations.end());
  locs_ = std::move(locations);

  cells_.reserve(locs_.size());
  mask_.assign(geom_.locations(), 0);
  for (const Coord& c : locs_) {
    cells_.push_back(static_cast<std::uint32_t>(geom_.cell_index(c)));
    mask_[geom_.cell_index(c)] = 1;
  }
}

std::uint64_t MarkedSet::hash() const {
  std::string bytes;
  bytes.reserve(8 * locs_.size() + 8);
  bytes += std::to_string(geom_.side());
  bytes += ':';
  for (const Coord& c : locs_) {
    bytes += to_string(c);
    bytes += ';';
  }
  return fnv1a64(bytes);
}

}  // namespace akr
