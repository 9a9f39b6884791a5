#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "akr/marked_set.hpp"
#include "akr/state.hpp"

namespace support {

// mt19937_64 raw draws only; the mapping to values is spelled out here so the
// sequences are identical on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // uniform in [0, 1)
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // uniform in [-1, 1)
  double symmetric() { return 2.0 * uniform() - 1.0; }

  // uniform in [0, bound)
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

 private:
  std::mt19937_64 engine_;
};

inline akr::WalkState random_state(const akr::GridGeometry& g, Rng& rng) {
  akr::WalkState s(g);
  for (std::size_t i = 0; i < s.size(); ++i) s.data()[i] = rng.symmetric();
  return s;
}

// count distinct cells via a partial Fisher-Yates shuffle
inline akr::MarkedSet random_marked(const akr::GridGeometry& g, Rng& rng, std::size_t count) {
  const int n = g.side();
  std::vector<akr::Coord> cells;
  cells.reserve(g.locations());
  for (int y = 0; y < n; ++y) {
    for (int x = 0; x < n; ++x) cells.push_back({x, y});
  }
  std::vector<akr::Coord> picked;
  picked.reserve(count);
  for (std::size_t i = 0; i < count && i < cells.size(); ++i) {
    const std::size_t j = i + rng.below(cells.size() - i);
    std::swap(cells[i], cells[j]);
    picked.push_back(cells[i]);
  }
  return akr::MarkedSet(g, std::move(picked));
}

}  // namespace support
