#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "akr/geometry.hpp"

namespace akr {

// Dense real amplitude vector over the (location x direction) basis.
// Every step operator is real orthogonal, so amplitudes stay real for all t
// and the representation stores plain doubles.
class WalkState {
 public:
  explicit WalkState(const GridGeometry& geometry);  // all amplitudes zero

  const GridGeometry& geometry() const { return geom_; }
  std::size_t size() const { return amps_.size(); }  // 4N

  double* data() { return amps_.data(); }
  const double* data() const { return amps_.data(); }
  std::span<const double> amplitudes() const { return amps_; }

  double& at(Coord c, Direction d) { return amps_[geom_.basis_index(c, d)]; }
  double at(Coord c, Direction d) const { return amps_[geom_.basis_index(c, d)]; }

  double squared_norm() const;  // index-ascending summation order
  double norm_error() const;    // |squared_norm - 1|

  friend bool operator==(const WalkState& a, const WalkState& b);  // bit-exact

 private:
  GridGeometry geom_;
  std::vector<double> amps_;
};

// Every amplitude 1/sqrt(4N).
WalkState uniform_state(const GridGeometry& geometry);

double max_abs_difference(const WalkState& a, const WalkState& b);

// Snapshot format: a short text header (side length, step index, marked-set
// hash) followed by the 4N amplitudes in basis-index order at full precision.
void write_snapshot(std::ostream& out, const WalkState& state, long long t,
                    std::uint64_t marked_hash);

struct Snapshot {
  WalkState state;
  long long t = 0;
  std::uint64_t marked_hash = 0;
};

Snapshot read_snapshot(std::istream& in);

}  // namespace akr
